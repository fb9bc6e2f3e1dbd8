#include <doctest.h>

#include "hilbcert/macaulay.hpp"

using namespace hilbcert;

namespace {

NumericalPolynomial univariate(std::initializer_list<long> ascending) {
    std::vector<Rat> coeffs;
    for (long c : ascending) coeffs.emplace_back(c);
    return NumericalPolynomial::from_coeffs(coeffs);
}

}  // namespace

TEST_CASE("macaulay representation of 5 in degree 2") {
    MacaulayRep rep = macaulay_rep(5, 2);
    REQUIRE(rep.kappas.size() == 2);
    CHECK(rep.kappas[0] == 3);
    CHECK(rep.kappas[1] == 2);
    // Brute-force uniqueness over all strictly decreasing pairs.
    int hits = 0;
    for (std::uint64_t k2 = 0; k2 < 12; ++k2)
        for (std::uint64_t k1 = 0; k1 < k2; ++k1)
            if (binomial(k2, 2) + binomial(k1, 1) == 5) {
                ++hits;
                CHECK(k2 == 3);
                CHECK(k1 == 2);
            }
    CHECK(hits == 1);
}

TEST_CASE("macaulay representation of zero") {
    MacaulayRep rep = macaulay_rep(0, 3);
    REQUIRE(rep.kappas.size() == 3);
    CHECK(rep.kappas[0] == 2);
    CHECK(rep.kappas[1] == 1);
    CHECK(rep.kappas[2] == 0);
    CHECK(macaulay_reconstruct(rep) == 0);
}

TEST_CASE("macaulay representation of small alpha in high degree") {
    // alpha = m <= d: m leading terms C(j,j), zeros below.
    for (std::uint64_t m = 0; m <= 5; ++m) {
        MacaulayRep rep = macaulay_rep(Int(static_cast<unsigned long>(m)), 7);
        CHECK(macaulay_reconstruct(rep) == Int(static_cast<unsigned long>(m)));
        for (std::uint64_t j = 7; j >= 1; --j) {
            const Int& kappa = rep.kappas[7 - j];
            if (j > 7 - m)
                CHECK(kappa == Int(static_cast<unsigned long>(j)));
            else
                CHECK(kappa == Int(static_cast<unsigned long>(j - 1)));
        }
    }
}

TEST_CASE("reconstruction identity and strict decrease") {
    for (std::uint64_t d = 1; d <= 10; ++d)
        for (std::uint64_t alpha = 0; alpha <= 400; ++alpha) {
            MacaulayRep rep =
                macaulay_rep(Int(static_cast<unsigned long>(alpha)), d);
            REQUIRE(rep.kappas.size() == d);
            CHECK(macaulay_reconstruct(rep) ==
                  Int(static_cast<unsigned long>(alpha)));
            for (std::size_t i = 0; i + 1 < rep.kappas.size(); ++i)
                CHECK(rep.kappas[i] > rep.kappas[i + 1]);
            CHECK(rep.kappas.back() >= 0);
        }
}

TEST_CASE("macaulay growth basics") {
    for (std::uint64_t d = 1; d <= 6; ++d) CHECK(macaulay_growth(0, d) == 0);
    CHECK(macaulay_growth(5, 2) == 7);  // C(4,3) + C(3,2)
    for (std::uint64_t d = 1; d <= 50; ++d)
        for (std::uint64_t m = 0; m <= d; ++m)
            CHECK(macaulay_growth(Int(static_cast<unsigned long>(m)), d) ==
                  Int(static_cast<unsigned long>(m)));
}

TEST_CASE("growth dominates alpha, equal exactly up to d") {
    for (std::uint64_t d = 1; d <= 8; ++d)
        for (std::uint64_t alpha = 0; alpha <= 200; ++alpha) {
            Int grown = macaulay_growth(Int(static_cast<unsigned long>(alpha)), d);
            CHECK(grown >= Int(static_cast<unsigned long>(alpha)));
            if (alpha <= d)
                CHECK(grown == Int(static_cast<unsigned long>(alpha)));
            else
                CHECK(grown > Int(static_cast<unsigned long>(alpha)));
        }
}

TEST_CASE("macaulay argument validation") {
    CHECK_THROWS_AS(macaulay_rep(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(macaulay_rep(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(macaulay_rep(5, 2'000'000), budget_error);
    CHECK_THROWS_AS(macaulay_growth(5, 0), std::invalid_argument);
}

TEST_CASE("gotzmann numbers from the worked example") {
    CHECK(gotzmann_number(univariate({2, 1})).number == 2);    // t + 2
    CHECK(gotzmann_number(univariate({4, 3})).number == 7);    // 3t + 4
    CHECK(gotzmann_number(univariate({18, 9})).number == 54);  // 9t + 18
    CHECK(gotzmann_number(univariate({1})).number == 1);
    CHECK(gotzmann_number(univariate({0})).number == 0);
    // Constant m: the lex ideal of m points has Gotzmann number m.
    for (long m = 0; m <= 20; ++m)
        CHECK(gotzmann_number(univariate({m})).number ==
              static_cast<std::uint64_t>(m));
}

TEST_CASE("gotzmann representations reconstruct the polynomial") {
    for (auto coeffs : {std::initializer_list<long>{2, 1},
                        std::initializer_list<long>{4, 3},
                        std::initializer_list<long>{18, 9},
                        std::initializer_list<long>{7},
                        std::initializer_list<long>{0, 0, 1, 1},
                        std::initializer_list<long>{3, 1, 2}}) {
        NumericalPolynomial P = univariate(coeffs);
        if (!P.integer_valued_on_grid()) continue;
        GotzmannResult r = gotzmann_number(P);
        for (std::size_t i = 0; i + 1 < r.rep.degrees.size(); ++i)
            CHECK(r.rep.degrees[i] >= r.rep.degrees[i + 1]);
        // Evaluate both sides at r+1 points.
        NumericalPolynomial back = gotzmann_rep_polynomial(r.rep);
        for (std::uint64_t t = 0; t <= r.number; ++t) {
            Int pt(static_cast<unsigned long>(t));
            std::span<const Int> point(&pt, 1);
            CHECK(P.evaluate(point) == back.evaluate(point));
        }
        CHECK(P == back);
    }
}

TEST_CASE("polynomials that are not Hilbert polynomials are rejected") {
    CHECK_THROWS_AS(gotzmann_number(univariate({0, -1})),
                    std::invalid_argument);  // -t
    CHECK_THROWS_AS(gotzmann_number(univariate({-3})), std::invalid_argument);
    CHECK_THROWS_AS(gotzmann_number(univariate({0, -100, 1})),
                    std::invalid_argument);  // t^2 - 100t goes negative
    NumericalPolynomial half =
        NumericalPolynomial::from_coeffs(std::vector<Rat>{Rat(0), Rat(1, 2)});
    CHECK_THROWS_AS(gotzmann_number(half), std::invalid_argument);  // t/2
    CHECK_THROWS_AS(gotzmann_number(NumericalPolynomial::constant(2, Rat(1))),
                    std::invalid_argument);  // bivariate input
}

TEST_CASE("gotzmann term cap") {
    CHECK_THROWS_AS(gotzmann_number(univariate({2'000'000})), budget_error);
    CHECK(gotzmann_number(univariate({2'000'000}), 3'000'000).number ==
          2'000'000);
    CHECK_THROWS_AS(gotzmann_number(univariate({0, 20}), 10), budget_error);
}

TEST_CASE("minimum certificate point for the worked example") {
    NumericalPolynomial P = NumericalPolynomial::from_terms(
        2, {{{1, 1}, Rat(1)}, {{1, 0}, Rat(2)}, {{0, 1}, Rat(2)},
            {{0, 0}, Rat(4)}});
    // P(7, t) = 9t + 18.
    NumericalPolynomial sub = P.substitute_axis(0, 7);
    CHECK(sub == univariate({18, 9}));
    CHECK(min_certificate_point_2d(P, 7) == Multidegree{{7, 54}});

    NumericalPolynomial constant = NumericalPolynomial::constant(2, Rat(5));
    CHECK(min_certificate_point_2d(constant, 0) == Multidegree{{0, 5}});
    CHECK(min_certificate_point_2d(constant, 9) == Multidegree{{9, 5}});

    NumericalPolynomial linear = NumericalPolynomial::from_terms(
        2, {{{1, 0}, Rat(1)}, {{0, 1}, Rat(1)}, {{0, 0}, Rat(1)}});
    CHECK(min_certificate_point_2d(linear, 0) == Multidegree{{0, 1}});

    CHECK_THROWS_AS(min_certificate_point_2d(univariate({1, 1}), 3),
                    std::invalid_argument);
}
