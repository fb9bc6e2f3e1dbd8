#ifndef HILBCERT_ORACLE_HPP
#define HILBCERT_ORACLE_HPP

#include <iosfwd>
#include <optional>

#include "hilbcert/polynomial.hpp"

namespace hilbcert {

/// Exhaustively evaluated Hilbert values over an inclusive integer box,
/// stored densely in lexicographic point order.
struct HilbertGrid {
    Multidegree lower;
    Multidegree upper;
    std::vector<Int> values;

    std::vector<std::uint64_t> shape() const;
    std::size_t flat_index(const Multidegree& e) const;
    const Int& value_at(const Multidegree& e) const;
    Multidegree point_at(std::size_t flat) const;
};

HilbertGrid compute_grid(const MultigradedIdeal& ideal, const Multidegree& lower,
                         const Multidegree& upper, const EvalOptions& opts = {});

struct PersistenceReport {
    bool ok = false;
    // First failure, lexicographically smallest.
    std::optional<Multidegree> witness;
    std::optional<Int> observed;
    std::optional<Rat> expected;
};

/// Checks H_I(u) = P(u) on the finite box [d, d+horizon]^s. A finite box can
/// refute persistence but never proves it; that is the certificate's job.
PersistenceReport verify_persistence(const MultigradedIdeal& ideal,
                                     const Multidegree& d,
                                     const NumericalPolynomial& P,
                                     std::uint64_t horizon,
                                     const EvalOptions& opts = {});

/// CSV with header t1,...,ts,H and rows in lexicographic order.
void write_grid_csv(std::ostream& out, const HilbertGrid& grid);

}  // namespace hilbcert

#endif
