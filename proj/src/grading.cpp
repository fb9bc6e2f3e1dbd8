#include "hilbcert/grading.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace hilbcert {

bool lex_less(const Multidegree& a, const Multidegree& b) {
    return std::lexicographical_compare(a.entries.begin(), a.entries.end(),
                                        b.entries.begin(), b.entries.end());
}

bool leq_componentwise(const Multidegree& a, const Multidegree& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Multidegree operator+(const Multidegree& a, const Multidegree& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("multidegree length mismatch");
    Multidegree r = a;
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

Multidegree componentwise_max(const Multidegree& a, const Multidegree& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("multidegree length mismatch");
    Multidegree r = a;
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = std::max(r[i], b[i]);
    return r;
}

std::string to_string(const Multidegree& d) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out << ',';
        out << d[i];
    }
    out << ')';
    return out.str();
}

bool divides(const Monomial& a, const Monomial& b) {
    if (a.exps.size() != b.exps.size()) return false;
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] > b.exps[i]) return false;
    return true;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    if (a.exps.size() != b.exps.size())
        throw std::invalid_argument("monomial length mismatch");
    Monomial r = a;
    for (std::size_t i = 0; i < b.exps.size(); ++i) r.exps[i] += b.exps[i];
    return r;
}

bool monomial_precedes(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare(b.exps.begin(), b.exps.end(),
                                        a.exps.begin(), a.exps.end());
}

RingElement RingElement::monomial(std::vector<std::uint32_t> exps, Rat coeff) {
    return from_terms({Term{std::move(coeff), std::move(exps)}});
}

RingElement RingElement::from_terms(std::vector<Term> terms) {
    for (const Term& t : terms)
        if (!terms.empty() && t.exps.size() != terms.front().exps.size())
            throw std::invalid_argument("ring element terms of unequal length");
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return monomial_precedes(Monomial(a.exps), Monomial(b.exps));
    });
    RingElement f;
    for (Term& t : terms) {
        if (!f.terms_.empty() && f.terms_.back().exps == t.exps)
            f.terms_.back().coeff += t.coeff;
        else
            f.terms_.push_back(std::move(t));
    }
    std::erase_if(f.terms_, [](const Term& t) { return sgn(t.coeff) == 0; });
    return f;
}

bool RingElement::is_unit_monomial() const {
    return terms_.size() == 1 && terms_.front().coeff == 1;
}

RingSpec::RingSpec(std::vector<std::uint32_t> blocks,
                   std::vector<RingElement> relations)
    : blocks_(std::move(blocks)), relations_(std::move(relations)) {
    if (blocks_.empty())
        throw std::invalid_argument("ring needs at least one factor");
    offsets_.reserve(blocks_.size());
    for (std::uint32_t n : blocks_) {
        offsets_.push_back(var_count_);
        var_count_ += static_cast<std::size_t>(n) + 1;
    }
    for (std::size_t i = 0; i < relations_.size(); ++i) {
        const RingElement& r = relations_[i];
        if (r.is_zero())
            throw std::invalid_argument("relation " + std::to_string(i) +
                                        " is zero");
        if (!homogeneous_degree(r))
            throw std::invalid_argument("relation " + std::to_string(i) +
                                        " is not homogeneous");
    }
}

std::size_t RingSpec::block_of(std::size_t var) const {
    for (std::size_t i = blocks_.size(); i-- > 0;)
        if (var >= offsets_[i]) return i;
    throw std::out_of_range("variable index");
}

Multidegree RingSpec::multidegree_of(std::span<const std::uint32_t> exps) const {
    if (exps.size() != var_count_)
        throw std::invalid_argument("exponent vector length " +
                                    std::to_string(exps.size()) +
                                    " does not match variable count " +
                                    std::to_string(var_count_));
    Multidegree d = Multidegree::zeros(blocks_.size());
    std::size_t v = 0;
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        for (std::uint32_t j = 0; j <= blocks_[i]; ++j, ++v)
            d[i] += exps[v];
    return d;
}

std::optional<Multidegree> RingSpec::homogeneous_degree(
    const RingElement& f) const {
    if (f.is_zero()) return std::nullopt;
    Multidegree d = multidegree_of(f.terms().front().exps);
    for (std::size_t t = 1; t < f.terms().size(); ++t)
        if (multidegree_of(f.terms()[t].exps) != d) return std::nullopt;
    return d;
}

Int graded_piece_dimension(const RingSpec& ring, const Multidegree& e) {
    if (ring.has_relations())
        throw std::invalid_argument(
            "graded_piece_dimension takes a ring without relations");
    if (e.size() != ring.factor_count())
        throw std::invalid_argument("degree " + to_string(e) +
                                    " does not match factor count " +
                                    std::to_string(ring.factor_count()));
    Int dim = 1;
    for (std::size_t i = 0; i < e.size(); ++i)
        dim *= binomial(ring.blocks()[i] + Int(static_cast<unsigned long>(e[i])),
                        ring.blocks()[i]);
    return dim;
}

namespace {

// Exponent vectors of total degree `total` over `vars` variables, descending
// lexicographic.
void block_compositions(std::uint32_t vars, std::uint64_t total,
                        std::vector<std::vector<std::uint32_t>>& out) {
    if (total > std::numeric_limits<std::uint32_t>::max())
        throw budget_error("per-variable exponent exceeds 2^32");
    std::vector<std::uint32_t> cur(vars, 0);
    auto rec = [&](auto&& self, std::size_t pos, std::uint64_t left) -> void {
        if (pos + 1 == vars) {
            cur[pos] = static_cast<std::uint32_t>(left);
            out.push_back(cur);
            return;
        }
        for (std::uint64_t a = left + 1; a-- > 0;) {
            cur[pos] = static_cast<std::uint32_t>(a);
            self(self, pos + 1, left - a);
        }
    };
    rec(rec, 0, total);
}

}  // namespace

std::vector<Monomial> enumerate_monomials(const RingSpec& ring,
                                          const Multidegree& e,
                                          std::uint64_t budget) {
    Int dim = graded_piece_dimension(ring, e);
    if (dim > Int(static_cast<unsigned long>(budget)))
        throw budget_error("enumeration of " + dim.get_str() +
                           " monomials at degree " + to_string(e) +
                           " exceeds budget " + std::to_string(budget));
    const std::size_t count = static_cast<std::size_t>(dim.get_ui());

    std::vector<std::vector<std::vector<std::uint32_t>>> per_block(
        ring.factor_count());
    for (std::size_t i = 0; i < ring.factor_count(); ++i)
        block_compositions(ring.blocks()[i] + 1, e[i], per_block[i]);

    std::vector<Monomial> out;
    out.reserve(count);
    std::vector<std::size_t> idx(ring.factor_count(), 0);
    Monomial m(std::vector<std::uint32_t>(ring.var_count(), 0));
    for (;;) {
        std::size_t v = 0;
        for (std::size_t i = 0; i < per_block.size(); ++i)
            for (std::uint32_t x : per_block[i][idx[i]]) m.exps[v++] = x;
        out.push_back(m);
        std::size_t axis = per_block.size();
        while (axis-- > 0) {
            if (++idx[axis] < per_block[axis].size()) break;
            idx[axis] = 0;
            if (axis == 0) return out;
        }
    }
}

std::string monomial_to_string(const RingSpec& ring, const Monomial& m) {
    if (m.exps.size() != ring.var_count())
        throw std::invalid_argument("monomial length mismatch");
    std::ostringstream out;
    bool first = true;
    std::size_t v = 0;
    for (std::size_t i = 0; i < ring.factor_count(); ++i) {
        for (std::uint32_t j = 0; j <= ring.blocks()[i]; ++j, ++v) {
            if (m.exps[v] == 0) continue;
            if (!first) out << '*';
            first = false;
            out << "x[" << (i + 1) << "][" << j << ']';
            if (m.exps[v] > 1) out << '^' << m.exps[v];
        }
    }
    return first ? "1" : out.str();
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::uint64_t number(const char* what) {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start)
            throw parse_error(std::string("expected ") + what + " in monomial '" +
                              std::string(s) + "'");
        std::uint64_t v = 0;
        for (std::size_t i = start; i < pos; ++i) {
            v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
            if (v > std::numeric_limits<std::uint32_t>::max())
                throw parse_error("number out of range in monomial '" +
                                  std::string(s) + "'");
        }
        return v;
    }
    bool done() {
        skip_ws();
        return pos == s.size();
    }
};

}  // namespace

Monomial parse_monomial(const RingSpec& ring, std::string_view text) {
    Cursor c{text};
    Monomial m(std::vector<std::uint32_t>(ring.var_count(), 0));
    c.skip_ws();
    if (c.eat('1')) {
        if (!c.done())
            throw parse_error("trailing input after '1' in monomial '" +
                              std::string(text) + "'");
        return m;
    }
    do {
        if (!c.eat('x'))
            throw parse_error("expected 'x[i][j]' factor in monomial '" +
                              std::string(text) + "'");
        if (!c.eat('[')) throw parse_error("expected '[' after 'x'");
        std::uint64_t block = c.number("block index");
        if (!c.eat(']')) throw parse_error("expected ']' after block index");
        if (block < 1 || block > ring.factor_count())
            throw parse_error("block index " + std::to_string(block) +
                              " out of range 1.." +
                              std::to_string(ring.factor_count()));
        if (!c.eat('[')) throw parse_error("expected '[' before variable index");
        std::uint64_t var = c.number("variable index");
        if (!c.eat(']')) throw parse_error("expected ']' after variable index");
        if (var > ring.blocks()[block - 1])
            throw parse_error("variable index " + std::to_string(var) +
                              " out of range 0.." +
                              std::to_string(ring.blocks()[block - 1]) +
                              " in block " + std::to_string(block));
        std::uint64_t exp = 1;
        if (c.eat('^')) {
            exp = c.number("exponent");
            if (exp == 0)
                throw parse_error("zero exponent in monomial '" +
                                  std::string(text) + "'");
        }
        std::size_t v = ring.var_offset(block - 1) + var;
        std::uint64_t total = m.exps[v] + exp;
        if (total > std::numeric_limits<std::uint32_t>::max())
            throw parse_error("exponent overflow in monomial '" +
                              std::string(text) + "'");
        m.exps[v] = static_cast<std::uint32_t>(total);
    } while (c.eat('*'));
    if (!c.done())
        throw parse_error("trailing input in monomial '" + std::string(text) +
                          "'");
    return m;
}

namespace {

void check_permutation(std::size_t s, std::span<const std::size_t> perm) {
    if (perm.size() != s) throw std::invalid_argument("permutation length");
    std::vector<bool> seen(s, false);
    for (std::size_t p : perm) {
        if (p >= s || seen[p]) throw std::invalid_argument("not a permutation");
        seen[p] = true;
    }
}

}  // namespace

Multidegree permute_entries(const Multidegree& d,
                            std::span<const std::size_t> perm) {
    check_permutation(d.size(), perm);
    Multidegree r = Multidegree::zeros(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) r[i] = d[perm[i]];
    return r;
}

Monomial permute_monomial(const RingSpec& src, const Monomial& m,
                          std::span<const std::size_t> perm) {
    check_permutation(src.factor_count(), perm);
    if (m.exps.size() != src.var_count())
        throw std::invalid_argument("monomial length mismatch");
    Monomial r(std::vector<std::uint32_t>(src.var_count(), 0));
    std::size_t v = 0;
    for (std::size_t i = 0; i < src.factor_count(); ++i) {
        std::size_t from = src.var_offset(perm[i]);
        for (std::uint32_t j = 0; j <= src.blocks()[perm[i]]; ++j, ++v)
            r.exps[v] = m.exps[from + j];
    }
    return r;
}

RingElement permute_element(const RingSpec& src, const RingElement& f,
                            std::span<const std::size_t> perm) {
    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const Term& t : f.terms())
        terms.push_back(
            Term{t.coeff, permute_monomial(src, Monomial(t.exps), perm).exps});
    return RingElement::from_terms(std::move(terms));
}

RingSpec permute_blocks(const RingSpec& ring,
                        std::span<const std::size_t> perm) {
    check_permutation(ring.factor_count(), perm);
    std::vector<std::uint32_t> blocks(ring.factor_count());
    for (std::size_t i = 0; i < blocks.size(); ++i)
        blocks[i] = ring.blocks()[perm[i]];
    std::vector<RingElement> relations;
    relations.reserve(ring.relations().size());
    for (const RingElement& r : ring.relations())
        relations.push_back(permute_element(ring, r, perm));
    return RingSpec(std::move(blocks), std::move(relations));
}

}  // namespace hilbcert
