// Randomized monomial-ideal corpus shared by property tests.
#ifndef HILBCERT_TESTS_RANDOM_IDEALS_HPP
#define HILBCERT_TESTS_RANDOM_IDEALS_HPP

#include <random>

#include "hilbcert/ideal.hpp"

namespace testgen {

using namespace hilbcert;

inline Monomial random_monomial(const RingSpec& ring, std::mt19937_64& rng,
                                std::uint32_t max_block_degree) {
    std::uniform_int_distribution<std::uint32_t> deg_dist(0, max_block_degree);
    Monomial m(std::vector<std::uint32_t>(ring.var_count(), 0));
    bool nonzero = false;
    for (std::size_t b = 0; b < ring.factor_count(); ++b) {
        std::uint32_t budget = deg_dist(rng);
        std::uniform_int_distribution<std::size_t> var_dist(
            0, ring.blocks()[b]);
        for (std::uint32_t k = 0; k < budget; ++k) {
            m.exps[ring.var_offset(b) + var_dist(rng)] += 1;
            nonzero = true;
        }
    }
    if (!nonzero) m.exps[0] = 1;  // keep generators of positive degree
    return m;
}

/// Random monomial ideal: s <= 3, n_i <= max_n, per-block generator degrees
/// <= max_block_degree. With `bounded_blocks`, all but one variable of each
/// block also receives a small pure power, which forces eventually-constant
/// Hilbert functions.
inline MultigradedIdeal random_monomial_ideal(std::mt19937_64& rng,
                                              std::uint32_t max_n = 2,
                                              std::uint32_t max_block_degree = 4,
                                              bool bounded_blocks = false) {
    std::uniform_int_distribution<std::size_t> s_dist(1, 3);
    std::uniform_int_distribution<std::uint32_t> n_dist(0, max_n);
    std::vector<std::uint32_t> blocks(s_dist(rng));
    for (auto& n : blocks) n = n_dist(rng);
    RingSpec ring(blocks);

    std::uniform_int_distribution<std::size_t> count_dist(0, 5);
    std::vector<RingElement> gens;
    std::size_t count = count_dist(rng);
    for (std::size_t k = 0; k < count; ++k)
        gens.push_back(RingElement::monomial(
            random_monomial(ring, rng, max_block_degree).exps));

    if (bounded_blocks) {
        std::uniform_int_distribution<std::uint32_t> pow_dist(1, 2);
        for (std::size_t b = 0; b < ring.factor_count(); ++b)
            for (std::uint32_t j = 0; j < ring.blocks()[b]; ++j) {
                std::vector<std::uint32_t> exps(ring.var_count(), 0);
                exps[ring.var_offset(b) + j] = pow_dist(rng);
                gens.push_back(RingElement::monomial(std::move(exps)));
            }
    }
    return MultigradedIdeal(std::move(ring), std::move(gens));
}

inline std::vector<std::vector<std::uint32_t>> generator_exponents(
    const MultigradedIdeal& ideal) {
    std::vector<std::vector<std::uint32_t>> out;
    for (const RingElement& g : ideal.generators())
        out.push_back(g.terms().front().exps);
    return out;
}

}  // namespace testgen

#endif
