#ifndef HILBCERT_GRADING_HPP
#define HILBCERT_GRADING_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hilbcert/arith.hpp"

namespace hilbcert {

/// A point of the Z^s grading lattice; entries are non-negative.
struct Multidegree {
    std::vector<std::uint64_t> entries;

    Multidegree() = default;
    explicit Multidegree(std::vector<std::uint64_t> e) : entries(std::move(e)) {}
    static Multidegree zeros(std::size_t s) {
        return Multidegree(std::vector<std::uint64_t>(s, 0));
    }

    std::size_t size() const { return entries.size(); }
    std::uint64_t operator[](std::size_t i) const { return entries[i]; }
    std::uint64_t& operator[](std::size_t i) { return entries[i]; }
    bool operator==(const Multidegree&) const = default;
};

bool lex_less(const Multidegree& a, const Multidegree& b);
bool leq_componentwise(const Multidegree& a, const Multidegree& b);
Multidegree operator+(const Multidegree& a, const Multidegree& b);
Multidegree componentwise_max(const Multidegree& a, const Multidegree& b);
std::string to_string(const Multidegree& d);

/// Exponent vector over the flattened variable list, block-major order.
struct Monomial {
    std::vector<std::uint32_t> exps;

    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}
    bool operator==(const Monomial&) const = default;
};

bool divides(const Monomial& a, const Monomial& b);
Monomial monomial_mul(const Monomial& a, const Monomial& b);

/// Canonical order: the position a monomial takes in enumerate_monomials.
/// Within a multidegree, exponent weight on earlier variables comes first
/// (x[1][0]-major), i.e. a precedes b iff a's exponent vector is
/// lexicographically greater.
bool monomial_precedes(const Monomial& a, const Monomial& b);

struct Term {
    Rat coeff;
    std::vector<std::uint32_t> exps;
};

/// A polynomial as a normalized term list: canonical term order, no zero
/// coefficients, no duplicate exponent vectors.
class RingElement {
public:
    RingElement() = default;  // zero
    static RingElement monomial(std::vector<std::uint32_t> exps, Rat coeff = 1);
    static RingElement from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Single term with coefficient exactly 1.
    bool is_unit_monomial() const;
    bool operator==(const RingElement&) const = default;

private:
    std::vector<Term> terms_;
};

/// Block structure of Cox(P^{n_1} x ... x P^{n_s}): block i has n_i + 1
/// variables of multidegree e_i. Optional homogeneous relations present the
/// ring as a quotient of the free block ring.
class RingSpec {
public:
    explicit RingSpec(std::vector<std::uint32_t> blocks,
                      std::vector<RingElement> relations = {});

    std::size_t factor_count() const { return blocks_.size(); }
    const std::vector<std::uint32_t>& blocks() const { return blocks_; }
    const std::vector<RingElement>& relations() const { return relations_; }
    bool has_relations() const { return !relations_.empty(); }
    /// The same block structure with relations dropped (the role of R).
    RingSpec ambient() const { return RingSpec(blocks_); }

    std::size_t var_count() const { return var_count_; }
    std::size_t var_offset(std::size_t block) const { return offsets_[block]; }
    std::size_t block_of(std::size_t var) const;

    Multidegree multidegree_of(std::span<const std::uint32_t> exps) const;
    /// Degree shared by all terms, or nullopt if the element is zero or
    /// inhomogeneous.
    std::optional<Multidegree> homogeneous_degree(const RingElement& f) const;

    bool operator==(const RingSpec&) const = default;

private:
    std::vector<std::uint32_t> blocks_;
    std::vector<RingElement> relations_;
    std::vector<std::size_t> offsets_;
    std::size_t var_count_ = 0;
};

/// dim_k of the degree-e piece of the free block ring: prod C(n_i + e_i, n_i).
/// The ring must carry no relations.
Int graded_piece_dimension(const RingSpec& ring, const Multidegree& e);

/// All monomials of multidegree e in canonical order. Throws budget_error if
/// the count exceeds `budget`; never truncates.
std::vector<Monomial> enumerate_monomials(const RingSpec& ring,
                                          const Multidegree& e,
                                          std::uint64_t budget);

/// Canonical text form: x[i][j]^k factors joined by '*', blocks ascending,
/// variables ascending within a block, exponent omitted when 1, "1" for the
/// empty monomial.
std::string monomial_to_string(const RingSpec& ring, const Monomial& m);
Monomial parse_monomial(const RingSpec& ring, std::string_view text);

/// Block permutation: result block i is source block perm[i]. Exponent
/// segments and degrees move with their blocks.
RingSpec permute_blocks(const RingSpec& ring, std::span<const std::size_t> perm);
Multidegree permute_entries(const Multidegree& d, std::span<const std::size_t> perm);
Monomial permute_monomial(const RingSpec& src, const Monomial& m,
                          std::span<const std::size_t> perm);
RingElement permute_element(const RingSpec& src, const RingElement& f,
                            std::span<const std::size_t> perm);

}  // namespace hilbcert

#endif
