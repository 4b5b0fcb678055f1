#pragma once

#include <json.hpp>

#include "hfold/sets.hpp"
#include "hfold/structure.hpp"

namespace hfold::io {

using Json = nlohmann::ordered_json;

/// FringeStructure schema:
///   {"set", "t", "h_t", "c_t", "d_t", "C_t", "D_t", "c_prime_t", "d_prime_t", "verified_h": [lo, hi]}
/// When (hA)^(t) is empty for every h, c_t and d_t are null and "empty_for_all_h": true is appended.
Json to_json(const StructureCertificate& certificate);
StructureCertificate certificate_from_json(const Json& j);

Json to_json(const NormalizationRecord& record);
Json to_json(const WitnessSet& witnesses);
Json to_json(const StructureMismatch& mismatch);

} // namespace hfold::io
