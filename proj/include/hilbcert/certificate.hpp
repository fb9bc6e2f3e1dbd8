#ifndef HILBCERT_CERTIFICATE_HPP
#define HILBCERT_CERTIFICATE_HPP

#include <optional>

#include "hilbcert/ideal.hpp"

namespace hilbcert {

enum class CertStatus { Certified, FailedAtVertex, PreconditionViolated };

enum class PreconditionReason { DegreeBoundTooLow, GeneratorDegreeExceedsBound };

struct CertificateVerdict {
    CertStatus status;
    // FailedAtVertex: the lexicographically smallest failing vertex.
    std::optional<Multidegree> vertex;
    std::optional<Int> observed;
    std::optional<Int> expected;
    // PreconditionViolated
    std::optional<PreconditionReason> reason;

    bool certified() const { return status == CertStatus::Certified; }
};

/// The 2^s unit-hypercube vertices {d_i, d_i+1}^s in lexicographic order.
std::vector<Multidegree> hypercube_vertices(const Multidegree& d);

/// Constant-Hilbert-polynomial persistence certificate: checks d_i >= max(m,1),
/// generation degrees <= d (relations included on quotient presentations), and
/// H = m at every hypercube vertex. Certified implies P_I = m.
CertificateVerdict certify_constant(const MultigradedIdeal& ideal,
                                    const Multidegree& d, const Int& m,
                                    const EvalOptions& opts = {});

/// Degrees (prefix, u) of S/I viewed as a module over the last block's
/// polynomial ring: F/N with F free of rank v on the degree-(prefix, 0)
/// monomial basis, N generated in last-coordinate degrees <= the bound.
struct ModuleSlice {
    std::vector<std::uint64_t> prefix;  // length s-1
    Int v;
    std::uint64_t generator_degree_bound = 0;  // a_s
    std::uint64_t l = 0;                       // basis degree; 0 for slices here
    std::vector<Int> hf;                       // hf[u], u = 0..u_max
    bool engine_produced = false;
};

ModuleSlice module_slice(const MultigradedIdeal& ideal,
                         std::span<const std::uint64_t> prefix,
                         std::uint64_t u_max, const EvalOptions& opts = {});

enum class GasharovOutcome { BoundViolated, GrowthStrict, MaximalGrowthPersists };

struct GasharovResult {
    GasharovOutcome outcome;
    Int bound;  // hf(d)^<d-l>
    /// 1 when the growth bound itself fails, 2 when the persistence
    /// conclusion fails on re-verification; 0 otherwise.
    int violated_clause = 0;
    /// Set when the persistence conclusion was re-verified at d+2.
    std::optional<bool> persistence_rechecked;
};

/// Macaulay-type growth check at degree d: compares hf(d+1) against
/// hf(d)^<d-l>. On equality the persistence conclusion is re-verified at d+2
/// when the slice's generator bound allows and the data is available.
GasharovResult gasharov_check(const ModuleSlice& slice, std::uint64_t d);

struct ReplayStep {
    std::size_t axis;  // 0-based axis the slice runs along
    Multidegree point; // fixed coordinates, with the running axis at d_axis
    GasharovOutcome outcome;
};

/// Replays the certificate's induction axis by axis: every step of a genuinely
/// certified instance must report MaximalGrowthPersists.
std::vector<ReplayStep> replay_induction(const MultigradedIdeal& ideal,
                                         const Multidegree& d, const Int& m,
                                         const EvalOptions& opts = {});

}  // namespace hilbcert

#endif
