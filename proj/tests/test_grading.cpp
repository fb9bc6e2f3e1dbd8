#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hilbcert/grading.hpp"
#include "naive_oracle.hpp"

using namespace hilbcert;

TEST_CASE("graded piece dimensions, closed form") {
    CHECK(graded_piece_dimension(RingSpec({1}), Multidegree{{3}}) == 4);
    CHECK(graded_piece_dimension(RingSpec({5, 5}), Multidegree{{1, 0}}) == 6);
    CHECK(graded_piece_dimension(RingSpec({2, 1}), Multidegree{{2, 3}}) == 24);
    // Degree zero piece is the constants.
    CHECK(graded_piece_dimension(RingSpec({3, 0, 2}), Multidegree::zeros(3)) ==
          1);
}

TEST_CASE("graded piece dimension rejects shape mismatches") {
    CHECK_THROWS_AS(
        graded_piece_dimension(RingSpec({1, 1}), Multidegree{{1}}),
        std::invalid_argument);
    RingSpec quotient({1}, {RingElement::monomial({2, 0})});
    CHECK_THROWS_AS(graded_piece_dimension(quotient, Multidegree{{2}}),
                    std::invalid_argument);
}

TEST_CASE("monomial enumeration matches the spec examples") {
    RingSpec ring({1, 1});
    auto monos = enumerate_monomials(ring, Multidegree{{1, 1}}, 1000);
    REQUIRE(monos.size() == 4);
    CHECK(monomial_to_string(ring, monos[0]) == "x[1][0]*x[2][0]");
    CHECK(monomial_to_string(ring, monos[1]) == "x[1][0]*x[2][1]");
    CHECK(monomial_to_string(ring, monos[2]) == "x[1][1]*x[2][0]");
    CHECK(monomial_to_string(ring, monos[3]) == "x[1][1]*x[2][1]");

    RingSpec line({1});
    auto ones = enumerate_monomials(line, Multidegree{{0}}, 10);
    REQUIRE(ones.size() == 1);
    CHECK(monomial_to_string(line, ones[0]) == "1");

    CHECK(enumerate_monomials(RingSpec({5, 5}), Multidegree{{2, 0}}, 1000)
              .size() == 21);
}

TEST_CASE("enumeration budget is a hard error, not truncation") {
    CHECK_THROWS_AS(
        enumerate_monomials(RingSpec({5, 5}), Multidegree{{3, 3}}, 10),
        budget_error);
}

namespace {

std::vector<std::uint32_t> random_blocks(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> s_dist(1, 3);
    std::uniform_int_distribution<std::uint32_t> n_dist(0, 3);
    std::vector<std::uint32_t> blocks(s_dist(rng));
    for (auto& n : blocks) n = n_dist(rng);
    return blocks;
}

}  // namespace

TEST_CASE("enumeration count, order, and content on random rings") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<std::uint64_t> e_dist(0, 5);
    for (int trial = 0; trial < 60; ++trial) {
        RingSpec ring(random_blocks(rng));
        Multidegree e = Multidegree::zeros(ring.factor_count());
        for (auto& x : e.entries) x = e_dist(rng);

        auto monos = enumerate_monomials(ring, e, 1000000);
        CHECK(Int(monos.size()) == graded_piece_dimension(ring, e));
        for (std::size_t i = 0; i + 1 < monos.size(); ++i)
            CHECK(monomial_precedes(monos[i], monos[i + 1]));
        for (const Monomial& m : monos)
            CHECK(ring.multidegree_of(m.exps) == e);

        std::set<std::vector<std::uint32_t>> got, expected;
        for (const Monomial& m : monos) got.insert(m.exps);
        for (const auto& m : naive::enumerate(ring.blocks(), e.entries))
            expected.insert(m);
        CHECK(got == expected);
    }
}

TEST_CASE("block symmetry of dimensions") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> e_dist(0, 6);
    for (int trial = 0; trial < 40; ++trial) {
        RingSpec ring(random_blocks(rng));
        std::size_t s = ring.factor_count();
        Multidegree e = Multidegree::zeros(s);
        for (auto& x : e.entries) x = e_dist(rng);
        std::vector<std::size_t> perm(s);
        for (std::size_t i = 0; i < s; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(graded_piece_dimension(permute_blocks(ring, perm),
                                     permute_entries(e, perm)) ==
              graded_piece_dimension(ring, e));
    }
}

TEST_CASE("canonical monomial text round-trips") {
    RingSpec ring({2, 0, 3});
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::uint32_t> exp_dist(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
        Monomial m(std::vector<std::uint32_t>(ring.var_count(), 0));
        for (auto& x : m.exps) x = exp_dist(rng);
        CHECK(parse_monomial(ring, monomial_to_string(ring, m)) == m);
    }
    CHECK(parse_monomial(ring, "x[1][0]^2*x[3][1]").exps ==
          std::vector<std::uint32_t>{2, 0, 0, 0, 0, 1, 0, 0});
    CHECK(parse_monomial(ring, " x[1][2] * x[1][2] ").exps ==
          std::vector<std::uint32_t>{0, 0, 2, 0, 0, 0, 0, 0});
}

TEST_CASE("monomial parse errors") {
    RingSpec ring({1, 1});
    CHECK_THROWS_AS(parse_monomial(ring, "x[0][0]"), parse_error);
    CHECK_THROWS_AS(parse_monomial(ring, "x[3][0]"), parse_error);
    CHECK_THROWS_AS(parse_monomial(ring, "x[1][2]"), parse_error);
    CHECK_THROWS_AS(parse_monomial(ring, "x[1][0]^0"), parse_error);
    CHECK_THROWS_AS(parse_monomial(ring, "x[1][0]*"), parse_error);
    CHECK_THROWS_AS(parse_monomial(ring, "1*x[1][0]"), parse_error);
    CHECK_THROWS_AS(parse_monomial(ring, "y[1][0]"), parse_error);
}

TEST_CASE("ring element normalization") {
    RingElement f = RingElement::from_terms({
        Term{Rat(2), {1, 0}},
        Term{Rat(-2), {1, 0}},
        Term{Rat(1), {0, 1}},
    });
    REQUIRE(f.terms().size() == 1);
    CHECK(f.terms().front().exps == std::vector<std::uint32_t>{0, 1});

    RingElement sum = RingElement::from_terms({
        Term{Rat(1, 2), {2, 0}},
        Term{Rat(1, 2), {2, 0}},
    });
    REQUIRE(sum.terms().size() == 1);
    CHECK(sum.terms().front().coeff == 1);
    CHECK(sum.is_unit_monomial());

    CHECK(RingElement::from_terms({}).is_zero());
}

TEST_CASE("ring spec validation") {
    CHECK_THROWS_AS(RingSpec({}), std::invalid_argument);
    // Inhomogeneous relation: degrees (1,0) and (0,1) mixed.
    RingElement bad = RingElement::from_terms(
        {Term{Rat(1), {1, 0, 0, 0}}, Term{Rat(1), {0, 0, 1, 0}}});
    CHECK_THROWS_AS(RingSpec({1, 1}, {bad}), std::invalid_argument);
    RingElement ok = RingElement::from_terms(
        {Term{Rat(1), {1, 0, 1, 0}}, Term{Rat(-1), {0, 1, 0, 1}}});
    CHECK(RingSpec({1, 1}, {ok}).has_relations());
}

TEST_CASE("block permutation moves exponent segments with their blocks") {
    RingSpec ring({1, 2});
    std::vector<std::size_t> perm{1, 0};
    RingSpec swapped = permute_blocks(ring, perm);
    CHECK(swapped.blocks() == std::vector<std::uint32_t>{2, 1});
    Monomial m({1, 0, 2, 0, 1});  // x[1][0] * x[2][0]^2 * x[2][2]
    Monomial moved = permute_monomial(ring, m, perm);
    CHECK(moved.exps == std::vector<std::uint32_t>{2, 0, 1, 1, 0});
    CHECK(ring.multidegree_of(m.exps) ==
          permute_entries(swapped.multidegree_of(moved.exps), perm));
}
