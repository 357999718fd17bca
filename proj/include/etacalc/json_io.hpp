// JSON encodings of the algebra and model types.  Characters serialize as
// sorted ascending lists of integers in [1, q]; everything else mirrors the
// in-memory structure.
#pragma once

#include "etacalc/cobordism.hpp"

#include <json.hpp>

#include <string>

namespace etacalc {

nlohmann::json character_to_json(const Character& c);
Character character_from_json(const nlohmann::json& j, GroupRank rank,
                              const std::string& path);

nlohmann::json monomial_to_json(const Monomial& m);
Monomial monomial_from_json(const nlohmann::json& j, GroupRank rank,
                            const std::string& path);

nlohmann::json element_to_json(const RepRingElement& e);
RepRingElement element_from_json(const nlohmann::json& j, const std::string& path = "$");

nlohmann::json model_to_json(const FixedPointModel& m);
nlohmann::json witness_to_json(const PairingWitness& w);

} // namespace etacalc
