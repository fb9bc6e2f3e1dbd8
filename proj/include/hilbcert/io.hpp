#ifndef HILBCERT_IO_HPP
#define HILBCERT_IO_HPP

#include <string>

#include <json.hpp>

#include "hilbcert/certificate.hpp"
#include "hilbcert/oracle.hpp"
#include "hilbcert/polynomial.hpp"

namespace hilbcert {

using json = nlohmann::json;

/// Numbers are emitted as JSON integers when they fit, decimal strings
/// otherwise; both forms are accepted on input.
json int_to_json(const Int& v);
Int int_from_json(const json& j, const char* what);
std::uint64_t uint_from_json(const json& j, const char* what);

/// Element: {"terms":[{"coeff":"p/q","exps":[...]}]} or a canonical monomial
/// string like "x[1][0]^2*x[2][1]".
RingElement element_from_json(const RingSpec& ring, const json& j);
json element_to_json(const RingElement& f);

/// Ideal file: {"blocks":[n1,...,ns], "relations":[Element...],
/// "generators":[Element...]}; "relations" may be absent.
MultigradedIdeal ideal_from_json(const json& j);
json ideal_to_json(const MultigradedIdeal& ideal);
MultigradedIdeal load_ideal_file(const std::string& path);

/// Polynomial: {"vars":s,"terms":[{"exps":[...],"coeff":"p/q"}]}.
NumericalPolynomial polynomial_from_json(const json& j);
json polynomial_to_json(const NumericalPolynomial& P);
/// Univariate coefficient list, ascending powers, exact rationals.
NumericalPolynomial polynomial_from_coeff_strings(
    const std::vector<std::string>& coeffs);

json verdict_to_json(const CertificateVerdict& verdict);

json slice_to_json(const ModuleSlice& slice);
ModuleSlice slice_from_json(const json& j);
ModuleSlice load_slice_file(const std::string& path);

json hilbert_value_to_json(const HilbertValue& value);
json persistence_to_json(const PersistenceReport& report);
json gasharov_to_json(const GasharovResult& result);

json load_json_file(const std::string& path);

}  // namespace hilbcert

#endif
