#pragma once

#include "json.hpp"

#include "mi/family.hpp"
#include "mi/ideal.hpp"
#include "mi/multiplier.hpp"
#include "mi/verify.hpp"
#include "mi/volume.hpp"

namespace mi {

using Json = nlohmann::ordered_json;

// Wire conventions: rationals are strings "p/q", exponents are integer
// arrays, ideals are {"vars": n, "gens": [[...], ...]} always minimized and
// lexicographically sorted.

Json ideal_json(const MonomialIdeal& a);
MonomialIdeal ideal_from_json(const Json& j);

Json divisor_json(const SncDivisor& d);
SncDivisor divisor_from_json(const Json& j);

Json family_json(const GradedFamily& f);
GradedFamily family_from_json(const Json& j);

Json report_json(const VerificationReport& r);

Json asymptotic_json(const AsymptoticResult& r);
Json volume_json(const VolumeEstimate& v);
Json fujita_json(const FujitaCertificate& c);

std::string ext_json_value(const ExtRat& e); // "p/q" or "inf"

} // namespace mi
