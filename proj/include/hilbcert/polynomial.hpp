#ifndef HILBCERT_POLYNOMIAL_HPP
#define HILBCERT_POLYNOMIAL_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "hilbcert/ideal.hpp"

namespace hilbcert {

/// Multivariate polynomial with exact rational coefficients, intended to take
/// integer values at integer points (Hilbert polynomials). Stored in the
/// monomial basis; no zero coefficients are kept.
class NumericalPolynomial {
public:
    using TermMap = std::map<std::vector<std::uint32_t>, Rat>;

    explicit NumericalPolynomial(unsigned vars) : vars_(vars) {}
    static NumericalPolynomial constant(unsigned vars, Rat c);
    static NumericalPolynomial variable(unsigned vars, unsigned index);
    static NumericalPolynomial from_terms(unsigned vars, TermMap terms);
    /// Univariate from ascending coefficient list [c0, c1, ...].
    static NumericalPolynomial from_coeffs(std::span<const Rat> coeffs);

    unsigned vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::vector<std::uint32_t> degree_bounds() const;

    Rat evaluate(std::span<const Int> point) const;
    Rat evaluate(const Multidegree& point) const;
    /// Fixes variable `axis` to `value`; result has one variable fewer.
    NumericalPolynomial substitute_axis(unsigned axis, const Int& value) const;

    /// Univariate views; require vars() == 1.
    std::uint32_t degree1() const;
    Rat leading_coeff1() const;

    NumericalPolynomial operator+(const NumericalPolynomial& o) const;
    NumericalPolynomial operator-(const NumericalPolynomial& o) const;
    NumericalPolynomial operator*(const NumericalPolynomial& o) const;
    NumericalPolynomial operator*(const Rat& c) const;
    bool operator==(const NumericalPolynomial&) const = default;

    /// Exact check on the integer grid [0, deg+1]^s, sampled (deterministic)
    /// when the grid is large.
    bool integer_valued_on_grid(std::size_t sample_cap = 256) const;

    /// "t1*t2+2*t1+2*t2+4"
    std::string to_string() const;

    /// Coefficients in the basis prod_i C(t_i + a_i, a_i); integer for
    /// integer-valued polynomials. Display aid.
    std::vector<std::pair<std::vector<std::uint32_t>, Rat>> binomial_basis()
        const;
    std::string binomial_basis_string() const;

private:
    unsigned vars_;
    TermMap terms_;
};

/// C(t + shift, k) as a univariate polynomial in t.
NumericalPolynomial binomial_in_t(const Int& shift, std::uint32_t k);

/// Unique polynomial with per-variable degrees <= bounds matching every value
/// of a full product grid. Extra grid layers beyond the bounds must match the
/// result exactly or the values are rejected as non-polynomial.
NumericalPolynomial interpolate_on_grid(
    const std::map<std::vector<std::uint64_t>, Int>& values,
    const std::vector<std::uint32_t>& bounds);

struct HilbertPolynomial {
    NumericalPolynomial polynomial;
    /// Corner from which H = P was verified (greedily minimized).
    Multidegree validated_offset;
};

/// Recovers the Hilbert polynomial of a monomial ideal by grid interpolation
/// at a stabilization offset, verified on a shifted grid and re-tried with a
/// doubled offset on mismatch.
HilbertPolynomial hilbert_polynomial(const MultigradedIdeal& ideal,
                                     const EvalOptions& opts = {});

}  // namespace hilbcert

#endif
