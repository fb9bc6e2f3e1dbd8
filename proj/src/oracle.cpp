#include "hilbcert/oracle.hpp"

#include <ostream>

namespace hilbcert {

std::vector<std::uint64_t> HilbertGrid::shape() const {
    std::vector<std::uint64_t> out(lower.size());
    for (std::size_t i = 0; i < lower.size(); ++i)
        out[i] = upper[i] - lower[i] + 1;
    return out;
}

std::size_t HilbertGrid::flat_index(const Multidegree& e) const {
    std::size_t flat = 0;
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (e[i] < lower[i] || e[i] > upper[i])
            throw std::out_of_range("point outside grid box");
        flat = flat * (upper[i] - lower[i] + 1) + (e[i] - lower[i]);
    }
    return flat;
}

const Int& HilbertGrid::value_at(const Multidegree& e) const {
    return values[flat_index(e)];
}

Multidegree HilbertGrid::point_at(std::size_t flat) const {
    Multidegree e = lower;
    for (std::size_t i = lower.size(); i-- > 0;) {
        std::uint64_t extent = upper[i] - lower[i] + 1;
        e[i] = lower[i] + flat % extent;
        flat /= extent;
    }
    return e;
}

HilbertGrid compute_grid(const MultigradedIdeal& ideal, const Multidegree& lower,
                         const Multidegree& upper, const EvalOptions& opts) {
    const std::size_t s = ideal.ring().factor_count();
    if (lower.size() != s || upper.size() != s)
        throw std::invalid_argument("grid box length mismatch");
    if (!leq_componentwise(lower, upper))
        throw std::invalid_argument("grid box is empty (lower > upper)");
    Int volume = 1;
    for (std::size_t i = 0; i < s; ++i)
        volume *= Int(static_cast<unsigned long>(upper[i] - lower[i] + 1));
    if (volume > Int(static_cast<unsigned long>(opts.budget)))
        throw budget_error("grid volume " + volume.get_str() +
                           " exceeds budget " + std::to_string(opts.budget));

    HilbertGrid grid{lower, upper, {}};
    grid.values.resize(static_cast<std::size_t>(volume.get_ui()));
    parallel_for(grid.values.size(), opts.threads, [&](std::size_t flat) {
        grid.values[flat] = ideal.hilbert_function(grid.point_at(flat), opts);
    });
    return grid;
}

PersistenceReport verify_persistence(const MultigradedIdeal& ideal,
                                     const Multidegree& d,
                                     const NumericalPolynomial& P,
                                     std::uint64_t horizon,
                                     const EvalOptions& opts) {
    const std::size_t s = ideal.ring().factor_count();
    if (d.size() != s) throw std::invalid_argument("corner length mismatch");
    if (P.vars() != s)
        throw std::invalid_argument("polynomial variable count mismatch");
    Int volume = 1;
    for (std::size_t i = 0; i < s; ++i)
        volume *= Int(static_cast<unsigned long>(horizon + 1));
    if (volume > Int(static_cast<unsigned long>(opts.budget)))
        throw budget_error("persistence box exceeds budget");

    Multidegree e = d;
    for (;;) {
        Int h = ideal.hilbert_function(e, opts);
        Rat p = P.evaluate(e);
        if (Rat(h) != p)
            return PersistenceReport{false, e, h, p};
        std::size_t axis = s;
        while (axis-- > 0) {
            if (++e[axis] <= d[axis] + horizon) break;
            e[axis] = d[axis];
            if (axis == 0) return PersistenceReport{true, {}, {}, {}};
        }
    }
}

void write_grid_csv(std::ostream& out, const HilbertGrid& grid) {
    for (std::size_t i = 0; i < grid.lower.size(); ++i) out << 't' << (i + 1) << ',';
    out << "H\n";
    for (std::size_t flat = 0; flat < grid.values.size(); ++flat) {
        Multidegree e = grid.point_at(flat);
        for (std::size_t i = 0; i < e.size(); ++i) out << e[i] << ',';
        out << grid.values[flat].get_str() << '\n';
    }
}

}  // namespace hilbcert
