#pragma once

#include <json.hpp>

#include "dgas/criterion.hpp"
#include "dgas/oracle.hpp"

namespace dgas {

using Json = nlohmann::ordered_json;

/// Version stamped into every top-level object as "schema".
inline constexpr int kJsonSchemaVersion = 1;

// Big integers are emitted as decimal strings and rationals as "num/den";
// nothing is ever written as a float.
std::string to_decimal(const Rational& q);

Json to_json(const CriterionReport& r);
Json to_json(const Factorization& f);
Json to_json(const SpectrumKey& key);
Json to_json(const RationalMatrix& u);
Json to_json(const OrthogonalCertificate& cert);
Json to_json(const CertificateCheck& check);
Json to_json(const std::vector<MateClass>& classes);
Json to_json(const VerificationReport& rep);
Json snf_json(const SNFDecomposition& snf, const SnfShape& shape);

}  // namespace dgas
