#include "hilbcert/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace hilbcert {

NumericalPolynomial NumericalPolynomial::constant(unsigned vars, Rat c) {
    NumericalPolynomial p(vars);
    if (sgn(c) != 0) p.terms_.emplace(std::vector<std::uint32_t>(vars, 0), c);
    return p;
}

NumericalPolynomial NumericalPolynomial::variable(unsigned vars,
                                                  unsigned index) {
    if (index >= vars) throw std::invalid_argument("variable index");
    NumericalPolynomial p(vars);
    std::vector<std::uint32_t> e(vars, 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Rat(1));
    return p;
}

NumericalPolynomial NumericalPolynomial::from_terms(unsigned vars,
                                                    TermMap terms) {
    NumericalPolynomial p(vars);
    for (auto& [e, c] : terms) {
        if (e.size() != vars)
            throw std::invalid_argument("term exponent length mismatch");
        if (sgn(c) != 0) p.terms_.emplace(e, c);
    }
    return p;
}

NumericalPolynomial NumericalPolynomial::from_coeffs(
    std::span<const Rat> coeffs) {
    TermMap terms;
    for (std::uint32_t i = 0; i < coeffs.size(); ++i)
        terms.emplace(std::vector<std::uint32_t>{i}, coeffs[i]);
    return from_terms(1, std::move(terms));
}

std::vector<std::uint32_t> NumericalPolynomial::degree_bounds() const {
    std::vector<std::uint32_t> b(vars_, 0);
    for (const auto& [e, c] : terms_)
        for (unsigned i = 0; i < vars_; ++i) b[i] = std::max(b[i], e[i]);
    return b;
}

Rat NumericalPolynomial::evaluate(std::span<const Int> point) const {
    if (point.size() != vars_)
        throw std::invalid_argument("evaluation point length mismatch");
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
        Int m = 1;
        for (unsigned i = 0; i < vars_; ++i) {
            if (e[i] == 0) continue;
            Int p;
            mpz_pow_ui(p.get_mpz_t(), point[i].get_mpz_t(), e[i]);
            m *= p;
        }
        total += c * Rat(m);
    }
    return total;
}

Rat NumericalPolynomial::evaluate(const Multidegree& point) const {
    std::vector<Int> p;
    p.reserve(point.size());
    for (std::uint64_t x : point.entries)
        p.emplace_back(static_cast<unsigned long>(x));
    return evaluate(p);
}

NumericalPolynomial NumericalPolynomial::substitute_axis(
    unsigned axis, const Int& value) const {
    if (axis >= vars_) throw std::invalid_argument("axis out of range");
    NumericalPolynomial out(vars_ - 1);
    TermMap terms;
    for (const auto& [e, c] : terms_) {
        Int p;
        mpz_pow_ui(p.get_mpz_t(), value.get_mpz_t(), e[axis]);
        std::vector<std::uint32_t> rest;
        rest.reserve(vars_ - 1);
        for (unsigned i = 0; i < vars_; ++i)
            if (i != axis) rest.push_back(e[i]);
        terms[rest] += c * Rat(p);
    }
    return from_terms(vars_ - 1, std::move(terms));
}

std::uint32_t NumericalPolynomial::degree1() const {
    if (vars_ != 1) throw std::invalid_argument("univariate view on " +
                                                std::to_string(vars_) +
                                                "-variable polynomial");
    return terms_.empty() ? 0 : terms_.rbegin()->first[0];
}

Rat NumericalPolynomial::leading_coeff1() const {
    if (vars_ != 1) throw std::invalid_argument("univariate view");
    return terms_.empty() ? Rat(0) : terms_.rbegin()->second;
}

NumericalPolynomial NumericalPolynomial::operator+(
    const NumericalPolynomial& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("variable count mismatch");
    TermMap terms = terms_;
    for (const auto& [e, c] : o.terms_) terms[e] += c;
    return from_terms(vars_, std::move(terms));
}

NumericalPolynomial NumericalPolynomial::operator-(
    const NumericalPolynomial& o) const {
    return *this + o * Rat(-1);
}

NumericalPolynomial NumericalPolynomial::operator*(
    const NumericalPolynomial& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("variable count mismatch");
    TermMap terms;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<std::uint32_t> e = e1;
            for (unsigned i = 0; i < vars_; ++i) e[i] += e2[i];
            terms[e] += c1 * c2;
        }
    return from_terms(vars_, std::move(terms));
}

NumericalPolynomial NumericalPolynomial::operator*(const Rat& c) const {
    TermMap terms;
    for (const auto& [e, v] : terms_) terms.emplace(e, v * c);
    return from_terms(vars_, std::move(terms));
}

bool NumericalPolynomial::integer_valued_on_grid(std::size_t sample_cap) const {
    std::vector<std::uint32_t> bounds = degree_bounds();
    std::vector<std::uint64_t> shape(vars_);
    std::uint64_t grid = 1;
    bool overflow = false;
    for (unsigned i = 0; i < vars_; ++i) {
        shape[i] = static_cast<std::uint64_t>(bounds[i]) + 2;  // [0, deg+1]
        if (grid > (1ull << 62) / shape[i]) overflow = true;
        grid *= overflow ? 1 : shape[i];
    }
    auto point_at = [&](std::uint64_t flat) {
        std::vector<Int> p(vars_);
        for (unsigned i = vars_; i-- > 0;) {
            p[i] = Int(static_cast<unsigned long>(flat % shape[i]));
            flat /= shape[i];
        }
        return p;
    };
    if (!overflow && grid <= sample_cap) {
        for (std::uint64_t f = 0; f < grid; ++f)
            if (!is_integer(evaluate(point_at(f)))) return false;
        return true;
    }
    // Deterministic sample of the grid.
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    for (std::size_t k = 0; k < sample_cap; ++k) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        std::vector<Int> p(vars_);
        std::uint64_t r = state;
        for (unsigned i = 0; i < vars_; ++i) {
            p[i] = Int(static_cast<unsigned long>(r % shape[i]));
            r = r / shape[i] + (r & 0xffff) * 2654435761ull;
        }
        if (!is_integer(evaluate(p))) return false;
    }
    return true;
}

namespace {

Int factorial_of(std::uint32_t n) {
    Int f = 1;
    for (std::uint32_t m = 2; m <= n; ++m) f *= m;
    return f;
}

// Display order: total degree descending, then exponent tuple descending.
bool display_before(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) {
    std::uint64_t ta = 0, tb = 0;
    for (std::uint32_t x : a) ta += x;
    for (std::uint32_t x : b) tb += x;
    if (ta != tb) return ta > tb;
    return a > b;
}

std::string monomial_part(const std::vector<std::uint32_t>& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += "t" + std::to_string(i + 1);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

}  // namespace

std::string NumericalPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
        return display_before(a->first, b->first);
    });
    std::string out;
    for (const auto* t : order) {
        Rat c = t->second;
        bool negative = sgn(c) < 0;
        if (negative) c = -c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? "-" : "+";
        std::string mono = monomial_part(t->first);
        if (mono.empty())
            out += rational_to_string(c);
        else if (c == 1)
            out += mono;
        else
            out += rational_to_string(c) + "*" + mono;
    }
    return out;
}

std::vector<std::pair<std::vector<std::uint32_t>, Rat>>
NumericalPolynomial::binomial_basis() const {
    std::vector<std::pair<std::vector<std::uint32_t>, Rat>> out;
    NumericalPolynomial rem = *this;
    while (!rem.is_zero()) {
        // Leading term in display order.
        auto lead = rem.terms_.begin();
        for (auto it = rem.terms_.begin(); it != rem.terms_.end(); ++it)
            if (display_before(it->first, lead->first)) lead = it;
        std::vector<std::uint32_t> a = lead->first;
        Rat c = lead->second;
        NumericalPolynomial basis = NumericalPolynomial::constant(vars_, 1);
        for (unsigned i = 0; i < vars_; ++i) {
            if (a[i] == 0) continue;
            NumericalPolynomial uni = binomial_in_t(Int(a[i]), a[i]);
            // Lift the univariate factor C(t_i + a_i, a_i) into variable i.
            TermMap lifted;
            for (const auto& [e, v] : uni.terms()) {
                std::vector<std::uint32_t> exps(vars_, 0);
                exps[i] = e[0];
                lifted.emplace(std::move(exps), v);
            }
            basis = basis * NumericalPolynomial::from_terms(vars_, lifted);
            c *= Rat(factorial_of(a[i]));
        }
        out.emplace_back(a, c);
        rem = rem - basis * c;
    }
    return out;
}

std::string NumericalPolynomial::binomial_basis_string() const {
    auto basis = binomial_basis();
    if (basis.empty()) return "0";
    std::string out;
    for (const auto& [a, c] : basis) {
        Rat coeff = c;
        bool negative = sgn(coeff) < 0;
        if (negative) coeff = -coeff;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string factors;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            if (!factors.empty()) factors += '*';
            factors += "C(t" + std::to_string(i + 1) + "+" +
                       std::to_string(a[i]) + "," + std::to_string(a[i]) + ")";
        }
        if (factors.empty())
            out += rational_to_string(coeff);
        else if (coeff == 1)
            out += factors;
        else
            out += rational_to_string(coeff) + "*" + factors;
    }
    return out;
}

NumericalPolynomial binomial_in_t(const Int& shift, std::uint32_t k) {
    // C(t + shift, k) = (t + shift)(t + shift - 1)...(t + shift - k + 1) / k!
    NumericalPolynomial p = NumericalPolynomial::constant(1, 1);
    NumericalPolynomial t = NumericalPolynomial::variable(1, 0);
    for (std::uint32_t m = 0; m < k; ++m)
        p = p * (t + NumericalPolynomial::constant(1, Rat(shift - Int(m))));
    Int fact = 1;
    for (std::uint32_t m = 2; m <= k; ++m) fact *= m;
    return p * Rat(Int(1), fact);
}

// ---------------------------------------------------------------------------
// Grid interpolation (tensor-product Newton form, exact).
// ---------------------------------------------------------------------------

NumericalPolynomial interpolate_on_grid(
    const std::map<std::vector<std::uint64_t>, Int>& values,
    const std::vector<std::uint32_t>& bounds) {
    if (bounds.empty()) throw std::invalid_argument("empty bounds");
    const unsigned s = static_cast<unsigned>(bounds.size());

    std::vector<std::vector<std::uint64_t>> coords(s);
    for (const auto& [pt, v] : values) {
        if (pt.size() != s)
            throw std::invalid_argument("grid point length mismatch");
        for (unsigned i = 0; i < s; ++i) coords[i].push_back(pt[i]);
    }
    std::uint64_t expected = 1;
    for (unsigned i = 0; i < s; ++i) {
        auto& c = coords[i];
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        if (c.size() < static_cast<std::size_t>(bounds[i]) + 1)
            throw std::invalid_argument(
                "grid too small for the requested degree bounds");
        if (expected > (1ull << 62) / c.size())
            throw budget_error("interpolation grid too large");
        expected *= c.size();
    }
    if (values.size() != expected)
        throw std::invalid_argument("values do not form a full product grid");

    // Newton nodes: the first bounds[i]+1 coordinates per axis.
    std::vector<std::size_t> shape(s);
    std::size_t cells = 1;
    for (unsigned i = 0; i < s; ++i) {
        shape[i] = bounds[i] + 1;
        cells *= shape[i];
    }
    std::vector<Rat> tensor(cells);
    std::vector<std::uint64_t> pt(s);
    for (std::size_t flat = 0; flat < cells; ++flat) {
        std::size_t rest = flat;
        for (unsigned i = s; i-- > 0;) {
            pt[i] = coords[i][rest % shape[i]];
            rest /= shape[i];
        }
        auto it = values.find(pt);
        if (it == values.end())
            throw std::invalid_argument("values do not form a full product grid");
        tensor[flat] = Rat(it->second);
    }

    // In-place divided differences along each axis.
    for (unsigned axis = 0; axis < s; ++axis) {
        std::size_t stride = 1;
        for (unsigned i = axis + 1; i < s; ++i) stride *= shape[i];
        // Highest index first so lower-order differences survive in place.
        for (std::size_t order = 1; order < shape[axis]; ++order) {
            for (std::size_t j = shape[axis] - 1; j >= order; --j) {
                Rat dx(Int(static_cast<unsigned long>(coords[axis][j])) -
                       Int(static_cast<unsigned long>(coords[axis][j - order])));
                for (std::size_t flat = 0; flat < cells; ++flat) {
                    if (flat / stride % shape[axis] != j) continue;
                    std::size_t prev = flat - stride;
                    tensor[flat] = (tensor[flat] - tensor[prev]) / dx;
                }
            }
        }
    }

    // Expand the Newton form into the monomial basis.
    std::vector<std::vector<NumericalPolynomial>> newton_basis(s);
    for (unsigned i = 0; i < s; ++i) {
        newton_basis[i].reserve(shape[i]);
        NumericalPolynomial acc = NumericalPolynomial::constant(1, 1);
        newton_basis[i].push_back(acc);
        NumericalPolynomial t = NumericalPolynomial::variable(1, 0);
        for (std::size_t j = 1; j < shape[i]; ++j) {
            acc = acc *
                  (t - NumericalPolynomial::constant(
                           1, Rat(Int(static_cast<unsigned long>(
                                  coords[i][j - 1])))));
            newton_basis[i].push_back(acc);
        }
    }

    NumericalPolynomial::TermMap terms;
    std::vector<std::size_t> idx(s);
    for (std::size_t flat = 0; flat < cells; ++flat) {
        if (sgn(tensor[flat]) == 0) continue;
        std::size_t rest = flat;
        for (unsigned i = s; i-- > 0;) {
            idx[i] = rest % shape[i];
            rest /= shape[i];
        }
        // Tensor product of the univariate Newton basis polynomials.
        std::vector<std::pair<std::vector<std::uint32_t>, Rat>> partial{
            {std::vector<std::uint32_t>(s, 0), tensor[flat]}};
        for (unsigned i = 0; i < s; ++i) {
            std::vector<std::pair<std::vector<std::uint32_t>, Rat>> next;
            for (const auto& [e, c] : partial)
                for (const auto& [ue, uc] : newton_basis[i][idx[i]].terms()) {
                    std::vector<std::uint32_t> exps = e;
                    exps[i] = ue[0];
                    next.emplace_back(std::move(exps), c * uc);
                }
            partial.swap(next);
        }
        for (auto& [e, c] : partial) terms[e] += c;
    }
    NumericalPolynomial result =
        NumericalPolynomial::from_terms(s, std::move(terms));

    // Every supplied value must match, including layers beyond the bounds.
    for (const auto& [p, v] : values) {
        std::vector<Int> point;
        point.reserve(s);
        for (std::uint64_t x : p) point.emplace_back(static_cast<unsigned long>(x));
        if (result.evaluate(point) != Rat(v))
            throw std::invalid_argument(
                "values not polynomial of claimed degree");
    }
    return result;
}

// ---------------------------------------------------------------------------
// Hilbert polynomial recovery.
// ---------------------------------------------------------------------------

namespace {

bool box_matches(const MultigradedIdeal& ideal, const NumericalPolynomial& P,
                 const std::vector<std::uint64_t>& lo,
                 const std::vector<std::uint64_t>& hi, const EvalOptions& opts) {
    const std::size_t s = lo.size();
    std::vector<std::uint64_t> pt = lo;
    for (;;) {
        Multidegree e{pt};
        if (P.evaluate(e) != Rat(ideal.hilbert_function(e, opts))) return false;
        std::size_t axis = s;
        while (axis-- > 0) {
            if (++pt[axis] <= hi[axis]) break;
            pt[axis] = lo[axis];
            if (axis == 0) return true;
        }
    }
}

}  // namespace

HilbertPolynomial hilbert_polynomial(const MultigradedIdeal& ideal,
                                     const EvalOptions& opts) {
    bool monomial_data =
        ideal.is_monomial() &&
        std::all_of(ideal.ring().relations().begin(),
                    ideal.ring().relations().end(),
                    [](const RingElement& r) { return r.terms().size() == 1; });
    if (!monomial_data)
        throw std::invalid_argument(
            "hilbert_polynomial requires a monomial ideal (and monomial "
            "relations, if any)");

    const std::size_t s = ideal.ring().factor_count();
    const std::vector<std::uint32_t>& bounds = ideal.ring().blocks();
    Multidegree gen_bound = ideal.lifted_generation_bound();

    std::vector<std::uint64_t> offset(s);
    for (std::size_t i = 0; i < s; ++i) offset[i] = gen_bound[i] + bounds[i];

    constexpr int kMaxRetries = 6;
    for (int attempt = 0;; ++attempt) {
        std::map<std::vector<std::uint64_t>, Int> values;
        std::vector<std::uint64_t> pt(s);
        std::vector<std::uint64_t> hi(s);
        for (std::size_t i = 0; i < s; ++i) hi[i] = offset[i] + bounds[i];
        pt = offset;
        for (;;) {
            values[pt] = ideal.hilbert_function(Multidegree{pt}, opts);
            std::size_t axis = s;
            bool done = false;
            while (axis-- > 0) {
                if (++pt[axis] <= hi[axis]) break;
                pt[axis] = offset[axis];
                if (axis == 0) done = true;
            }
            if (done) break;
        }
        NumericalPolynomial P = interpolate_on_grid(values, bounds);

        // Verify on the box [offset, offset + n + 1]; the top layers are the
        // shifted re-check grid.
        std::vector<std::uint64_t> top(s);
        for (std::size_t i = 0; i < s; ++i) top[i] = offset[i] + bounds[i] + 1;
        if (box_matches(ideal, P, offset, top, opts)) {
            // Greedily walk the verified corner down.
            std::vector<std::uint64_t> cur = offset;
            bool changed = true;
            while (changed) {
                changed = false;
                for (std::size_t axis = 0; axis < s; ++axis) {
                    while (cur[axis] > 0) {
                        std::vector<std::uint64_t> lo = cur, hi2 = top;
                        lo[axis] = cur[axis] - 1;
                        hi2[axis] = cur[axis] - 1;
                        if (!box_matches(ideal, P, lo, hi2, opts)) break;
                        cur[axis] -= 1;
                        changed = true;
                    }
                }
            }
            return HilbertPolynomial{std::move(P), Multidegree{cur}};
        }
        if (attempt + 1 >= kMaxRetries)
            throw budget_error("stabilization not detected within budget");
        for (std::size_t i = 0; i < s; ++i)
            offset[i] = std::max<std::uint64_t>(2 * offset[i], offset[i] + 1);
    }
}

}  // namespace hilbcert
