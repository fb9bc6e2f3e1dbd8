#include "hilbcert/certificate.hpp"

#include <algorithm>

#include "hilbcert/macaulay.hpp"

namespace hilbcert {

std::vector<Multidegree> hypercube_vertices(const Multidegree& d) {
    const std::size_t s = d.size();
    if (s == 0 || s > 30)
        throw std::invalid_argument("hypercube dimension out of range");
    std::vector<Multidegree> out;
    out.reserve(std::size_t{1} << s);
    for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
        Multidegree v = d;
        for (std::size_t i = 0; i < s; ++i)
            v[i] += (mask >> (s - 1 - i)) & 1;  // axis 0 most significant
        out.push_back(std::move(v));
    }
    return out;
}

CertificateVerdict certify_constant(const MultigradedIdeal& ideal,
                                    const Multidegree& d, const Int& m,
                                    const EvalOptions& opts) {
    const std::size_t s = ideal.ring().factor_count();
    if (d.size() != s)
        throw std::invalid_argument("degree bound length mismatch");
    if (m < 0) throw std::invalid_argument("negative target value");

    CertificateVerdict verdict{CertStatus::Certified, {}, {}, {}, {}};
    for (std::size_t i = 0; i < s; ++i) {
        if (Int(static_cast<unsigned long>(d[i])) < m || d[i] < 1) {
            verdict.status = CertStatus::PreconditionViolated;
            verdict.reason = PreconditionReason::DegreeBoundTooLow;
            return verdict;
        }
    }
    if (!leq_componentwise(ideal.lifted_generation_bound(), d)) {
        verdict.status = CertStatus::PreconditionViolated;
        verdict.reason = PreconditionReason::GeneratorDegreeExceedsBound;
        return verdict;
    }

    std::vector<Multidegree> vertices = hypercube_vertices(d);
    std::vector<Int> values(vertices.size());
    parallel_for(vertices.size(), opts.threads, [&](std::size_t i) {
        values[i] = ideal.hilbert_function(vertices[i], opts);
    });
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (values[i] != m) {
            verdict.status = CertStatus::FailedAtVertex;
            verdict.vertex = vertices[i];
            verdict.observed = values[i];
            verdict.expected = m;
            return verdict;
        }
    }
    return verdict;
}

ModuleSlice module_slice(const MultigradedIdeal& ideal,
                         std::span<const std::uint64_t> prefix,
                         std::uint64_t u_max, const EvalOptions& opts) {
    const std::size_t s = ideal.ring().factor_count();
    if (prefix.size() + 1 != s)
        throw std::invalid_argument("slice prefix must fix all but the last "
                                    "factor");
    Multidegree bound = ideal.lifted_generation_bound();
    std::uint64_t a_last = bound[s - 1];
    if (u_max < a_last)
        throw std::invalid_argument(
            "u_max " + std::to_string(u_max) +
            " below the last-coordinate generation bound " +
            std::to_string(a_last));

    ModuleSlice slice;
    slice.prefix.assign(prefix.begin(), prefix.end());
    slice.generator_degree_bound = a_last;
    slice.l = 0;
    slice.engine_produced = true;

    Multidegree base = Multidegree::zeros(s);
    for (std::size_t i = 0; i + 1 < s; ++i) base[i] = prefix[i];
    slice.v = graded_piece_dimension(ideal.ring().ambient(), base);

    slice.hf.resize(u_max + 1);
    parallel_for(u_max + 1, opts.threads, [&](std::size_t u) {
        Multidegree e = base;
        e[s - 1] = u;
        slice.hf[u] = ideal.hilbert_function(e, opts);
    });
    return slice;
}

GasharovResult gasharov_check(const ModuleSlice& slice, std::uint64_t d) {
    if (d < slice.l + 1)
        throw std::invalid_argument("gasharov_check requires d >= l+1");
    if (slice.hf.size() <= d + 1)
        throw std::invalid_argument("slice stores no value at degree " +
                                    std::to_string(d + 1));
    GasharovResult result{GasharovOutcome::MaximalGrowthPersists, 0, 0, {}};
    result.bound = macaulay_growth(slice.hf[d], d - slice.l);
    if (slice.hf[d + 1] > result.bound) {
        result.outcome = GasharovOutcome::BoundViolated;
        result.violated_clause = 1;
        return result;
    }
    if (slice.hf[d + 1] < result.bound) {
        result.outcome = GasharovOutcome::GrowthStrict;
        return result;
    }
    // Maximal growth: re-verify the persistence conclusion at d+2 when the
    // hypothesis (module relations generated in degrees <= d) holds and the
    // data is stored.
    if (slice.generator_degree_bound <= d && slice.hf.size() > d + 2) {
        Int expected = macaulay_growth(slice.hf[d + 1], d - slice.l + 1);
        bool ok = slice.hf[d + 2] == expected;
        result.persistence_rechecked = ok;
        if (!ok) {
            result.outcome = GasharovOutcome::BoundViolated;
            result.violated_clause = 2;
        }
    }
    return result;
}

std::vector<ReplayStep> replay_induction(const MultigradedIdeal& ideal,
                                         const Multidegree& d, const Int& m,
                                         const EvalOptions& opts) {
    const std::size_t s = ideal.ring().factor_count();
    if (d.size() != s)
        throw std::invalid_argument("degree bound length mismatch");
    (void)m;

    std::vector<ReplayStep> steps;
    for (std::size_t axis = s; axis-- > 0;) {
        // Vertex choices before the running axis, orthant samples after it.
        const std::size_t n_before = axis;
        const std::size_t n_after = s - 1 - axis;
        std::size_t before_combos = std::size_t{1} << n_before;
        std::size_t after_combos = 1;
        for (std::size_t i = 0; i < n_after; ++i) after_combos *= 3;

        std::vector<std::size_t> perm;
        for (std::size_t i = 0; i < s; ++i)
            if (i != axis) perm.push_back(i);
        perm.push_back(axis);
        MultigradedIdeal rotated = permute_ideal(ideal, perm);

        for (std::size_t bmask = 0; bmask < before_combos; ++bmask) {
            for (std::size_t tsel = 0; tsel < after_combos; ++tsel) {
                Multidegree point = d;
                for (std::size_t i = 0; i < n_before; ++i)
                    point[i] += (bmask >> (n_before - 1 - i)) & 1;
                std::size_t rest = tsel;
                for (std::size_t i = 0; i < n_after; ++i) {
                    point[axis + 1 + i] += rest % 3;
                    rest /= 3;
                }
                std::vector<std::uint64_t> prefix;
                prefix.reserve(s - 1);
                for (std::size_t i = 0; i < s; ++i)
                    if (i != axis) prefix.push_back(point[i]);
                std::uint64_t u_max = d[axis] + 2;
                u_max = std::max(
                    u_max, rotated.lifted_generation_bound()[s - 1]);
                ModuleSlice slice = module_slice(rotated, prefix, u_max, opts);
                GasharovResult res = gasharov_check(slice, d[axis]);
                steps.push_back(ReplayStep{axis, point, res.outcome});
            }
        }
    }
    return steps;
}

}  // namespace hilbcert
