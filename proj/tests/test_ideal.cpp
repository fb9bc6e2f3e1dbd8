#include <doctest.h>

#include <random>

#include "hilbcert/ideal.hpp"
#include "naive_oracle.hpp"
#include "random_ideals.hpp"

using namespace hilbcert;

namespace {

MultigradedIdeal bilex_ideal() {
    RingSpec ring({5, 5});
    std::vector<RingElement> gens;
    for (const char* text :
         {"x[1][0]", "x[1][2]", "x[1][3]", "x[2][0]", "x[2][2]", "x[2][3]",
          "x[1][1]^2", "x[1][1]*x[1][4]", "x[2][1]^2", "x[2][1]*x[2][4]"})
        gens.push_back(RingElement::monomial(parse_monomial(ring, text).exps));
    return MultigradedIdeal(std::move(ring), std::move(gens));
}

// x0*x5 - x1*x4 + x2*x3 in a single block of six variables.
RingElement quadric6() {
    return RingElement::from_terms({Term{Rat(1), {1, 0, 0, 0, 0, 1}},
                                    Term{Rat(-1), {0, 1, 0, 0, 1, 0}},
                                    Term{Rat(1), {0, 0, 1, 1, 0, 0}}});
}

RingElement pluecker_x() {
    return RingElement::from_terms(
        {Term{Rat(1), {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
         Term{Rat(-1), {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0}},
         Term{Rat(1), {0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0}}});
}

RingElement pluecker_y() {
    return RingElement::from_terms(
        {Term{Rat(1), {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
         Term{Rat(-1), {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0}},
         Term{Rat(1), {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0}}});
}

}  // namespace

TEST_CASE("monomial membership by componentwise divisibility") {
    RingSpec line({1});
    MultigradedIdeal ideal(line, {RingElement::monomial({2, 0}),
                                  RingElement::monomial({1, 1})});
    CHECK(ideal.is_member(Monomial({2, 1})));   // x0^2 divides x0^2*x1
    CHECK(!ideal.is_member(Monomial({0, 3})));  // x1^3

    MultigradedIdeal big = bilex_ideal();
    Monomial probe =
        parse_monomial(big.ring(), "x[1][1]*x[1][5]*x[2][4]*x[2][5]");
    CHECK(!big.is_member(probe));
    // Re-derive by exhaustive divisibility.
    bool any = false;
    for (const auto& g : testgen::generator_exponents(big))
        any = any || naive::divides(g, probe.exps);
    CHECK(!any);
}

TEST_CASE("is_member rejects non-monomial ideals") {
    RingSpec ring({5});
    MultigradedIdeal ideal(ring, {quadric6()});
    CHECK_THROWS_AS(ideal.is_member(Monomial({1, 0, 0, 0, 0, 1})),
                    std::invalid_argument);
    // Coefficient 1 is part of the monomial-ideal contract.
    MultigradedIdeal scaled(ring,
                            {RingElement::monomial({2, 0, 0, 0, 0, 0}, Rat(3))});
    CHECK(!scaled.is_monomial());
    CHECK_THROWS_AS(scaled.is_member(Monomial({2, 0, 0, 0, 0, 0})),
                    std::invalid_argument);
}

TEST_CASE("hilbert function on the worked monomial examples") {
    MultigradedIdeal zero(RingSpec({5, 5}), {});
    CHECK(zero.hilbert_function(Multidegree{{2, 0}}) == 21);

    MultigradedIdeal bilex = bilex_ideal();
    CHECK(bilex.hilbert_function(Multidegree{{2, 3}}) == 20);
    CHECK(Int(naive::count_standard(bilex.ring().blocks(),
                                    testgen::generator_exponents(bilex),
                                    {2, 3})) == 20);
}

TEST_CASE("hilbert function through a quotient presentation") {
    // One quadric relation kills one dimension in degree 2 of P^5.
    RingSpec gr({5}, {quadric6()});
    MultigradedIdeal zero(gr, {});
    CHECK(zero.hilbert_function(Multidegree{{2}}) == 20);

    RingSpec ring({5, 5}, {pluecker_x(), pluecker_y()});
    std::vector<RingElement> gens;
    for (const char* text : {"x[1][0]", "x[1][2]", "x[1][3]", "x[2][0]",
                             "x[2][2]", "x[2][3]", "x[1][1]^2", "x[2][1]^2"})
        gens.push_back(RingElement::monomial(parse_monomial(ring, text).exps));
    MultigradedIdeal J(ring, gens);
    CHECK(J.hilbert_function(Multidegree{{1, 1}}) == 9);

    // Independent dense-rank oracle over Q on the lifted generator set.
    std::vector<naive::NaiveElement> lifted;
    for (const RingElement& g : lifted_generators(J)) {
        naive::NaiveElement e;
        for (const Term& t : g.terms()) e.terms.emplace_back(t.coeff, t.exps);
        lifted.push_back(std::move(e));
    }
    CHECK(naive::hilbert_by_rank(ring.blocks(), lifted, {1, 1}) == 9);
    CHECK(naive::hilbert_by_rank(ring.blocks(), lifted, {2, 1}) ==
          J.hilbert_function(Multidegree{{2, 1}}));
}

TEST_CASE("generation degree bound uses the given generators") {
    CHECK(bilex_ideal().generation_degree_bound() == Multidegree{{2, 2}});
    CHECK(MultigradedIdeal(RingSpec({5, 5}), {}).generation_degree_bound() ==
          Multidegree{{0, 0}});
    RingSpec ring({1, 1});
    MultigradedIdeal mixed(
        ring, {RingElement::monomial(
                   parse_monomial(ring, "x[1][0]*x[2][0]^2").exps),
               RingElement::monomial(parse_monomial(ring, "x[1][1]^3").exps)});
    CHECK(mixed.generation_degree_bound() == Multidegree{{3, 2}});
    // A redundant generator still counts toward the bound.
    MultigradedIdeal redundant(
        ring, {RingElement::monomial(parse_monomial(ring, "x[1][0]").exps),
               RingElement::monomial(parse_monomial(ring, "x[1][0]^4").exps)});
    CHECK(redundant.generation_degree_bound() == Multidegree{{4, 0}});
}

TEST_CASE("lifted bound adjoins relation degrees") {
    RingSpec gr({5}, {quadric6()});
    MultigradedIdeal zero(gr, {});
    CHECK(zero.generation_degree_bound() == Multidegree{{0}});
    CHECK(zero.lifted_generation_bound() == Multidegree{{2}});
}

TEST_CASE("counting path agrees with rank path and the naive oracle") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<std::uint64_t> e_dist(0, 4);
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        MultigradedIdeal ideal = testgen::random_monomial_ideal(rng, 3, 6);
        Multidegree e = Multidegree::zeros(ideal.ring().factor_count());
        for (auto& x : e.entries) x = e_dist(rng);
        if (graded_piece_dimension(ideal.ring().ambient(), e) > 3000) continue;
        Int counted = ideal.hilbert_function(e);
        CHECK(counted == hilbert_function_via_rank(ideal, e));
        CHECK(counted == Int(naive::count_standard(
                             ideal.ring().blocks(),
                             testgen::generator_exponents(ideal), e.entries)));
        CHECK(counted >= 0);
        CHECK(counted <= graded_piece_dimension(ideal.ring().ambient(), e));
        ++checked;
    }
    CHECK(checked > 60);
}

TEST_CASE("monotonicity under ideal inclusion") {
    std::mt19937_64 rng(7177);
    std::uniform_int_distribution<std::uint64_t> e_dist(0, 5);
    for (int trial = 0; trial < 60; ++trial) {
        MultigradedIdeal small = testgen::random_monomial_ideal(rng);
        std::vector<RingElement> more = small.generators();
        more.push_back(RingElement::monomial(
            testgen::random_monomial(small.ring(), rng, 3).exps));
        MultigradedIdeal large(small.ring(), more);
        for (const RingElement& g : small.generators())
            CHECK(large.is_member(Monomial(g.terms().front().exps)));
        Multidegree e = Multidegree::zeros(small.ring().factor_count());
        for (auto& x : e.entries) x = e_dist(rng);
        CHECK(small.hilbert_function(e) >= large.hilbert_function(e));
    }
}

TEST_CASE("quotient path with empty relations equals the plain path") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 30; ++trial) {
        MultigradedIdeal plain = testgen::random_monomial_ideal(rng);
        MultigradedIdeal quotient(RingSpec(plain.ring().blocks(), {}),
                                  plain.generators());
        std::uniform_int_distribution<std::uint64_t> e_dist(0, 4);
        Multidegree e = Multidegree::zeros(plain.ring().factor_count());
        for (auto& x : e.entries) x = e_dist(rng);
        CHECK(plain.hilbert_function(e) == quotient.hilbert_function(e));
    }
}

TEST_CASE("construction rejects bad generators") {
    RingSpec ring({1, 1});
    CHECK_THROWS_AS(MultigradedIdeal(ring, {RingElement::from_terms({})}),
                    std::invalid_argument);
    RingElement inhomogeneous = RingElement::from_terms(
        {Term{Rat(1), {1, 0, 0, 0}}, Term{Rat(1), {0, 0, 1, 0}}});
    CHECK_THROWS_AS(MultigradedIdeal(ring, {inhomogeneous}),
                    std::invalid_argument);
}

TEST_CASE("budgets fail loudly") {
    MultigradedIdeal zero(RingSpec({5, 5}), {});
    EvalOptions tiny;
    tiny.budget = 4;
    CHECK_THROWS_AS(hilbert_function_via_rank(zero, Multidegree{{3, 3}}, tiny),
                    budget_error);
    EvalOptions two;
    two.budget = 2;
    CHECK_THROWS_AS(bilex_ideal().hilbert_function(Multidegree{{40, 40}}, two),
                    budget_error);
}

TEST_CASE("probabilistic path is flagged and plausible") {
    RingSpec ring({5, 5}, {pluecker_x(), pluecker_y()});
    MultigradedIdeal J(ring, {RingElement::monomial(
                                 parse_monomial(ring, "x[1][0]").exps)});
    EvalOptions opts;
    opts.allow_probabilistic = true;
    HilbertValue fast = J.hilbert_value(Multidegree{{1, 1}}, opts);
    CHECK(fast.probabilistic);
    Int exact = J.hilbert_function(Multidegree{{1, 1}});
    // Prime-field rank lower-bounds the rational rank.
    CHECK(fast.value >= exact);
    CHECK(fast.value == exact);  // no collision at these sizes

    MultigradedIdeal monomial(RingSpec({1}), {RingElement::monomial({1, 0})});
    CHECK(!monomial.hilbert_value(Multidegree{{2}}, opts).probabilistic);
}

TEST_CASE("concurrent evaluations agree with serial ones") {
    MultigradedIdeal bilex = bilex_ideal();
    std::vector<Multidegree> points;
    for (std::uint64_t a = 0; a <= 4; ++a)
        for (std::uint64_t b = 0; b <= 4; ++b) points.push_back({{a, b}});
    std::vector<Int> serial(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        serial[i] = bilex_ideal().hilbert_function(points[i]);  // fresh cache
    std::vector<Int> parallel(points.size());
    parallel_for(points.size(), 8, [&](std::size_t i) {
        parallel[i] = bilex.hilbert_function(points[i]);
    });
    CHECK(serial == parallel);
}

TEST_CASE("block permutation commutes with the hilbert function") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<std::uint64_t> e_dist(0, 4);
    for (int trial = 0; trial < 30; ++trial) {
        MultigradedIdeal ideal = testgen::random_monomial_ideal(rng);
        std::size_t s = ideal.ring().factor_count();
        std::vector<std::size_t> perm(s);
        for (std::size_t i = 0; i < s; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        MultigradedIdeal moved = permute_ideal(ideal, perm);
        Multidegree e = Multidegree::zeros(s);
        for (auto& x : e.entries) x = e_dist(rng);
        CHECK(moved.hilbert_function(permute_entries(e, perm)) ==
              ideal.hilbert_function(e));
    }
}
