#include "hilbcert/io.hpp"

#include <fstream>
#include <limits>

namespace hilbcert {

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
    if (v >= 0 && v.fits_ulong_p())
        return json(static_cast<std::uint64_t>(v.get_ui()));
    return json(v.get_str());
}

Int int_from_json(const json& j, const char* what) {
    try {
        if (j.is_number_unsigned())
            return Int(static_cast<unsigned long>(j.get<std::uint64_t>()));
        if (j.is_number_integer())
            return Int(static_cast<long>(j.get<std::int64_t>()));
        if (j.is_string()) return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
    throw parse_error(std::string("expected integer for ") + what + ", got " +
                      j.dump());
}

std::uint64_t uint_from_json(const json& j, const char* what) {
    Int v = int_from_json(j, what);
    if (v < 0 || !v.fits_ulong_p())
        throw parse_error(std::string("expected non-negative 64-bit value for ") +
                          what + ", got " + v.get_str());
    return static_cast<std::uint64_t>(v.get_ui());
}

namespace {

std::vector<std::uint32_t> exps_from_json(const RingSpec& ring, const json& j) {
    if (!j.is_array())
        throw parse_error("'exps' must be an array, got " + j.dump());
    std::vector<std::uint32_t> exps;
    exps.reserve(j.size());
    for (const json& x : j) {
        std::uint64_t v = uint_from_json(x, "exponent");
        if (v > std::numeric_limits<std::uint32_t>::max())
            throw parse_error("exponent out of range: " + std::to_string(v));
        exps.push_back(static_cast<std::uint32_t>(v));
    }
    if (exps.size() != ring.var_count())
        throw parse_error("exponent vector length " +
                          std::to_string(exps.size()) + " does not match " +
                          std::to_string(ring.var_count()) + " variables");
    return exps;
}

}  // namespace

RingElement element_from_json(const RingSpec& ring, const json& j) {
    if (j.is_string())
        return RingElement::monomial(
            parse_monomial(ring, j.get<std::string>()).exps);
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw parse_error(
            "element must be a monomial string or {\"terms\":[...]}, got " +
            j.dump());
    std::vector<Term> terms;
    for (const json& t : j["terms"]) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("exps"))
            throw parse_error("term needs 'coeff' and 'exps', got " + t.dump());
        Rat coeff = t["coeff"].is_string()
                        ? parse_rational(t["coeff"].get<std::string>())
                        : Rat(int_from_json(t["coeff"], "coeff"));
        terms.push_back(Term{std::move(coeff), exps_from_json(ring, t["exps"])});
    }
    return RingElement::from_terms(std::move(terms));
}

json element_to_json(const RingElement& f) {
    json terms = json::array();
    for (const Term& t : f.terms()) {
        json exps = json::array();
        for (std::uint32_t e : t.exps) exps.push_back(e);
        terms.push_back(
            {{"coeff", rational_to_string(t.coeff)}, {"exps", exps}});
    }
    return {{"terms", terms}};
}

MultigradedIdeal ideal_from_json(const json& j) {
    if (!j.is_object() || !j.contains("blocks"))
        throw parse_error("ideal file needs a 'blocks' array");
    if (!j["blocks"].is_array() || j["blocks"].empty())
        throw parse_error("'blocks' must be a non-empty array");
    std::vector<std::uint32_t> blocks;
    for (const json& b : j["blocks"]) {
        std::uint64_t n = uint_from_json(b, "block size");
        if (n > std::numeric_limits<std::uint32_t>::max())
            throw parse_error("block size out of range");
        blocks.push_back(static_cast<std::uint32_t>(n));
    }
    RingSpec ambient(blocks);
    std::vector<RingElement> relations;
    if (j.contains("relations")) {
        if (!j["relations"].is_array())
            throw parse_error("'relations' must be an array");
        for (const json& r : j["relations"])
            relations.push_back(element_from_json(ambient, r));
    }
    RingSpec ring(blocks, std::move(relations));
    std::vector<RingElement> generators;
    if (j.contains("generators")) {
        if (!j["generators"].is_array())
            throw parse_error("'generators' must be an array");
        for (const json& g : j["generators"])
            generators.push_back(element_from_json(ring, g));
    }
    try {
        return MultigradedIdeal(std::move(ring), std::move(generators));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

json ideal_to_json(const MultigradedIdeal& ideal) {
    json blocks = json::array();
    for (std::uint32_t n : ideal.ring().blocks()) blocks.push_back(n);
    json relations = json::array();
    for (const RingElement& r : ideal.ring().relations())
        relations.push_back(element_to_json(r));
    json generators = json::array();
    for (const RingElement& g : ideal.generators())
        generators.push_back(element_to_json(g));
    return {{"blocks", blocks},
            {"relations", relations},
            {"generators", generators}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw parse_error("invalid JSON in " + path + ": " + e.what());
    }
}

MultigradedIdeal load_ideal_file(const std::string& path) {
    return ideal_from_json(load_json_file(path));
}

NumericalPolynomial polynomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw parse_error("polynomial needs 'vars' and 'terms'");
    std::uint64_t vars = uint_from_json(j["vars"], "vars");
    if (vars == 0 || vars > 64) throw parse_error("'vars' out of range 1..64");
    NumericalPolynomial::TermMap terms;
    for (const json& t : j["terms"]) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("exps"))
            throw parse_error("term needs 'coeff' and 'exps'");
        std::vector<std::uint32_t> exps;
        for (const json& x : t["exps"]) {
            std::uint64_t v = uint_from_json(x, "exponent");
            if (v > std::numeric_limits<std::uint32_t>::max())
                throw parse_error("exponent out of range");
            exps.push_back(static_cast<std::uint32_t>(v));
        }
        if (exps.size() != vars)
            throw parse_error("term exponent length does not match 'vars'");
        Rat coeff = t["coeff"].is_string()
                        ? parse_rational(t["coeff"].get<std::string>())
                        : Rat(int_from_json(t["coeff"], "coeff"));
        terms[exps] += coeff;
    }
    NumericalPolynomial P = NumericalPolynomial::from_terms(
        static_cast<unsigned>(vars), std::move(terms));
    if (!P.integer_valued_on_grid())
        throw parse_error("polynomial is not integer-valued on integer points");
    return P;
}

json polynomial_to_json(const NumericalPolynomial& P) {
    json terms = json::array();
    for (const auto& [e, c] : P.terms()) {
        json exps = json::array();
        for (std::uint32_t x : e) exps.push_back(x);
        terms.push_back({{"exps", exps}, {"coeff", rational_to_string(c)}});
    }
    return {{"vars", P.vars()}, {"terms", terms}};
}

NumericalPolynomial polynomial_from_coeff_strings(
    const std::vector<std::string>& coeffs) {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (const std::string& s : coeffs) c.push_back(parse_rational(s));
    NumericalPolynomial P = NumericalPolynomial::from_coeffs(c);
    if (!P.integer_valued_on_grid())
        throw parse_error("polynomial is not integer-valued on integer points");
    return P;
}

namespace {

json degree_to_json(const Multidegree& d) {
    json out = json::array();
    for (std::uint64_t x : d.entries) out.push_back(x);
    return out;
}

}  // namespace

json verdict_to_json(const CertificateVerdict& verdict) {
    switch (verdict.status) {
        case CertStatus::Certified:
            return {{"status", "certified"}};
        case CertStatus::FailedAtVertex:
            return {{"status", "failed_at_vertex"},
                    {"vertex", degree_to_json(*verdict.vertex)},
                    {"observed", int_to_json(*verdict.observed)},
                    {"expected", int_to_json(*verdict.expected)}};
        case CertStatus::PreconditionViolated:
            return {{"status", "precondition_violated"},
                    {"reason",
                     *verdict.reason == PreconditionReason::DegreeBoundTooLow
                         ? "DegreeBoundTooLow"
                         : "GeneratorDegreeExceedsBound"}};
    }
    throw std::logic_error("unreachable verdict status");
}

json slice_to_json(const ModuleSlice& slice) {
    json prefix = json::array();
    for (std::uint64_t x : slice.prefix) prefix.push_back(x);
    json hf = json::array();
    for (const Int& v : slice.hf) hf.push_back(int_to_json(v));
    return {{"prefix", prefix},
            {"v", int_to_json(slice.v)},
            {"generator_degree_bound", slice.generator_degree_bound},
            {"l", slice.l},
            {"hf", hf},
            {"source", slice.engine_produced ? "engine" : "user"}};
}

ModuleSlice slice_from_json(const json& j) {
    if (!j.is_object() || !j.contains("v") || !j.contains("hf"))
        throw parse_error("slice needs 'v' and 'hf'");
    ModuleSlice slice;
    if (j.contains("prefix"))
        for (const json& x : j["prefix"])
            slice.prefix.push_back(uint_from_json(x, "prefix entry"));
    slice.v = int_from_json(j["v"], "v");
    if (j.contains("generator_degree_bound"))
        slice.generator_degree_bound =
            uint_from_json(j["generator_degree_bound"], "generator bound");
    if (j.contains("l")) slice.l = uint_from_json(j["l"], "l");
    if (!j["hf"].is_array() || j["hf"].empty())
        throw parse_error("'hf' must be a non-empty array");
    for (const json& x : j["hf"]) {
        Int v = int_from_json(x, "hf value");
        if (v < 0) throw parse_error("negative Hilbert value in slice");
        slice.hf.push_back(std::move(v));
    }
    slice.engine_produced =
        j.contains("source") && j["source"].is_string() &&
        j["source"].get<std::string>() == "engine";
    return slice;
}

ModuleSlice load_slice_file(const std::string& path) {
    return slice_from_json(load_json_file(path));
}

json hilbert_value_to_json(const HilbertValue& value) {
    json out = {{"degree", degree_to_json(value.degree)},
                {"value", int_to_json(value.value)}};
    if (value.probabilistic) out["unverified"] = true;
    return out;
}

json persistence_to_json(const PersistenceReport& report) {
    json out = {{"ok", report.ok}};
    if (!report.ok) {
        out["witness"] = degree_to_json(*report.witness);
        out["observed"] = int_to_json(*report.observed);
        out["expected"] = rational_to_string(*report.expected);
    }
    return out;
}

json gasharov_to_json(const GasharovResult& result) {
    const char* outcome = nullptr;
    switch (result.outcome) {
        case GasharovOutcome::BoundViolated: outcome = "BoundViolated"; break;
        case GasharovOutcome::GrowthStrict: outcome = "GrowthStrict"; break;
        case GasharovOutcome::MaximalGrowthPersists:
            outcome = "MaximalGrowthPersists";
            break;
    }
    json out = {{"outcome", outcome}, {"bound", int_to_json(result.bound)}};
    if (result.violated_clause) out["violated_clause"] = result.violated_clause;
    if (result.persistence_rechecked)
        out["persistence_rechecked"] = *result.persistence_rechecked;
    return out;
}

}  // namespace hilbcert
