#ifndef HILBCERT_IDEAL_HPP
#define HILBCERT_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "hilbcert/grading.hpp"

namespace hilbcert {

struct EvalOptions {
    /// Caps materialized monomials and counting-recursion nodes.
    std::uint64_t budget = 10'000'000;
    /// Permit the prime-field rank fast path; results are then marked
    /// unverified and never cached. Exploration only.
    bool allow_probabilistic = false;
    /// Worker cap for operations that parallelize (0 = hardware default).
    unsigned threads = 0;
};

struct HilbertValue {
    Multidegree degree;
    Int value;
    bool probabilistic = false;
};

/// Homogeneous ideal given by generators over a RingSpec. When the ring has
/// relations, all Hilbert data is that of the lifted ideal
/// (relations adjoined to generators) in the free block ring.
class MultigradedIdeal {
public:
    MultigradedIdeal(RingSpec ring, std::vector<RingElement> generators);

    const RingSpec& ring() const { return ring_; }
    const std::vector<RingElement>& generators() const { return generators_; }
    const std::vector<Multidegree>& generator_degrees() const {
        return generator_degrees_;
    }
    bool is_zero_ideal() const { return generators_.empty(); }
    /// Every generator is a single term with coefficient 1.
    bool is_monomial() const { return is_monomial_; }

    /// Monomial ideals only: true iff some generator divides m.
    bool is_member(const Monomial& m) const;

    /// dim_k (S/I)_e, exact. Values are cached per ideal; safe to call
    /// concurrently at distinct (or equal) degrees.
    Int hilbert_function(const Multidegree& e, const EvalOptions& opts = {}) const;

    /// Like hilbert_function, but honours opts.allow_probabilistic on the
    /// rank path and reports whether the value is unverified.
    HilbertValue hilbert_value(const Multidegree& e,
                               const EvalOptions& opts = {}) const;

    /// Componentwise max of generator multidegrees; zero vector for the zero
    /// ideal. Uses the given generating set as-is.
    Multidegree generation_degree_bound() const;

    /// Componentwise max over generators and ring relations: the generation
    /// bound of the lifted ideal, which is what certificates must respect.
    Multidegree lifted_generation_bound() const;

private:
    RingSpec ring_;
    std::vector<RingElement> generators_;
    std::vector<Multidegree> generator_degrees_;
    bool is_monomial_ = false;
    bool lifted_set_is_monomial_ = false;

    struct Cache {
        std::mutex mutex;
        std::map<std::vector<std::uint64_t>, Int> values;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();

    Int evaluate(const Multidegree& e, const EvalOptions& opts) const;
};

/// The generators-plus-relations set the engine actually evaluates.
std::vector<RingElement> lifted_generators(const MultigradedIdeal& ideal);

/// Exact-linear-algebra evaluation of dim_k (S/I)_e: graded dimension minus
/// the rank of the generator-multiple matrix over Q (fraction-free sparse
/// elimination). Valid for any ideal; the monomial counting path must agree
/// with it.
Int hilbert_function_via_rank(const MultigradedIdeal& ideal, const Multidegree& e,
                              const EvalOptions& opts = {});

/// Rank over a random prime field of size > 2^30; lower-bounds the rational
/// rank, so the returned dimension upper-bounds the exact one.
Int hilbert_function_via_rank_modp(const MultigradedIdeal& ideal,
                                   const Multidegree& e,
                                   const EvalOptions& opts = {});

MultigradedIdeal permute_ideal(const MultigradedIdeal& ideal,
                               std::span<const std::size_t> perm);

}  // namespace hilbcert

#endif
