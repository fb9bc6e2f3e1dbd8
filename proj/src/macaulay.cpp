#include "hilbcert/macaulay.hpp"

namespace hilbcert {

namespace {

constexpr std::uint64_t kMaxRepLength = 1'000'000;

// Largest kappa with C(kappa, j) <= rem; requires rem >= 1.
Int greedy_kappa(const Int& rem, std::uint64_t j) {
    if (j == 1) return rem;  // C(k,1) = k
    Int lo(static_cast<unsigned long>(j));  // C(j,j) = 1 <= rem
    Int hi = lo + 1;
    while (binomial(hi, j) <= rem) {
        lo = hi;
        hi *= 2;
    }
    // Invariant: C(lo,j) <= rem < C(hi,j).
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (binomial(mid, j) <= rem)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

MacaulayRep macaulay_rep(const Int& alpha, std::uint64_t d) {
    if (d == 0) throw std::invalid_argument("macaulay_rep: d must be positive");
    if (alpha < 0) throw std::invalid_argument("macaulay_rep: negative alpha");
    if (d > kMaxRepLength)
        throw budget_error("macaulay_rep: d exceeds cap " +
                           std::to_string(kMaxRepLength));
    MacaulayRep rep{d, {}};
    rep.kappas.reserve(d);
    Int rem = alpha;
    for (std::uint64_t j = d; j >= 1; --j) {
        Int kappa;
        if (rem == 0) {
            kappa = Int(static_cast<unsigned long>(j - 1));  // C(j-1, j) = 0
        } else {
            kappa = greedy_kappa(rem, j);
            rem -= binomial(kappa, j);
        }
        if (!rep.kappas.empty() && kappa >= rep.kappas.back())
            throw std::logic_error("macaulay_rep lost strict decrease");
        rep.kappas.push_back(std::move(kappa));
    }
    return rep;
}

Int macaulay_reconstruct(const MacaulayRep& rep) {
    Int total = 0;
    for (std::uint64_t j = rep.d; j >= 1; --j)
        total += binomial(rep.kappas[rep.d - j], j);
    return total;
}

Int macaulay_growth(const Int& alpha, std::uint64_t d) {
    if (alpha == 0) return 0;
    MacaulayRep rep = macaulay_rep(alpha, d);
    Int total = 0;
    for (std::uint64_t j = rep.d; j >= 1; --j)
        total += binomial(rep.kappas[rep.d - j] + 1, j + 1);
    return total;
}

NumericalPolynomial gotzmann_rep_polynomial(const GotzmannRep& rep) {
    NumericalPolynomial P(1);
    for (std::size_t i = 0; i < rep.degrees.size(); ++i) {
        std::uint64_t a = rep.degrees[i];
        // C(t + a - i, a) with the 1-based index i+1: shift = a - (i+1) + 1.
        Int shift = Int(static_cast<unsigned long>(a)) -
                    Int(static_cast<unsigned long>(i));
        P = P + binomial_in_t(shift, static_cast<std::uint32_t>(a));
    }
    return P;
}

GotzmannResult gotzmann_number(const NumericalPolynomial& P,
                               std::uint64_t term_cap) {
    if (P.vars() != 1)
        throw std::invalid_argument("gotzmann_number takes a univariate "
                                    "polynomial");
    // Integer-valuedness at deg+2 consecutive points implies it everywhere.
    {
        std::uint32_t deg = P.degree1();
        for (std::uint32_t t = 0; t <= deg + 1; ++t) {
            Int pt(static_cast<unsigned long>(t));
            if (!is_integer(P.evaluate(std::span<const Int>(&pt, 1))))
                throw std::invalid_argument(
                    "not a Hilbert polynomial: non-integer value at t=" +
                    std::to_string(t));
        }
    }
    GotzmannResult result;
    NumericalPolynomial rem = P;
    std::uint64_t i = 1;
    while (!rem.is_zero()) {
        if (sgn(rem.leading_coeff1()) < 0)
            throw std::invalid_argument(
                "not a Hilbert polynomial: representation leaves a negative "
                "remainder");
        std::uint32_t q = rem.degree1();
        if (q == 0) {
            Rat c = rem.leading_coeff1();
            if (!is_integer(c) || sgn(c) < 0)
                throw std::invalid_argument(
                    "not a Hilbert polynomial: non-integer constant remainder");
            Int count = to_integer(c);
            if (count + Int(static_cast<unsigned long>(i - 1)) >
                Int(static_cast<unsigned long>(term_cap)))
                throw budget_error("gotzmann representation exceeds cap " +
                                   std::to_string(term_cap));
            std::uint64_t n = count.get_ui();
            result.rep.degrees.insert(result.rep.degrees.end(), n, 0);
            break;
        }
        if (i > term_cap)
            throw budget_error("gotzmann representation exceeds cap " +
                               std::to_string(term_cap));
        // Subtract C(t + q - i + 1, q).
        Int shift = Int(static_cast<unsigned long>(q)) -
                    Int(static_cast<unsigned long>(i)) + 1;
        rem = rem - binomial_in_t(shift, q);
        result.rep.degrees.push_back(q);
        ++i;
    }
    result.number = result.rep.degrees.size();
    return result;
}

Multidegree min_certificate_point_2d(const NumericalPolynomial& P,
                                     std::uint64_t d1,
                                     std::uint64_t term_cap) {
    if (P.vars() != 2)
        throw std::invalid_argument(
            "min_certificate_point_2d takes a bivariate polynomial");
    NumericalPolynomial Q =
        P.substitute_axis(0, Int(static_cast<unsigned long>(d1)));
    GotzmannResult g = gotzmann_number(Q, term_cap);
    return Multidegree{{d1, g.number}};
}

}  // namespace hilbcert
