#ifndef HILBCERT_MACAULAY_HPP
#define HILBCERT_MACAULAY_HPP

#include "hilbcert/polynomial.hpp"

namespace hilbcert {

/// The unique representation alpha = C(k(d),d) + C(k(d-1),d-1) + ... + C(k(1),1)
/// with k(d) > k(d-1) > ... > k(1) >= 0. kappas holds k(d) down to k(1).
struct MacaulayRep {
    std::uint64_t d = 1;
    std::vector<Int> kappas;
};

MacaulayRep macaulay_rep(const Int& alpha, std::uint64_t d);

/// Sum of C(k(j), j) over the representation; equals the represented alpha.
Int macaulay_reconstruct(const MacaulayRep& rep);

/// alpha^<d>: every binomial of the representation shifted up by one in both
/// arguments. 0^<d> = 0.
Int macaulay_growth(const Int& alpha, std::uint64_t d);

/// The representation P(t) = sum_{i=1..r} C(t + a_i - i + 1, a_i) with
/// a_1 >= ... >= a_r >= 0; r is the Gotzmann number.
struct GotzmannRep {
    std::vector<std::uint64_t> degrees;
};

struct GotzmannResult {
    GotzmannRep rep;
    std::uint64_t number = 0;
};

/// Sum of C(t + a_i - i + 1, a_i), for verifying a representation.
NumericalPolynomial gotzmann_rep_polynomial(const GotzmannRep& rep);

/// Greedy extraction of the representation of a univariate Hilbert
/// polynomial; rejects polynomials admitting none. Errors past term_cap terms.
GotzmannResult gotzmann_number(const NumericalPolynomial& P,
                               std::uint64_t term_cap = 1'000'000);

/// (d1, gotzmann_number(P(d1, .))) for a bivariate P; d1 is caller-supplied.
Multidegree min_certificate_point_2d(const NumericalPolynomial& P,
                                     std::uint64_t d1,
                                     std::uint64_t term_cap = 1'000'000);

}  // namespace hilbcert

#endif
