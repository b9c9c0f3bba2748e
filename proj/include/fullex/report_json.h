#pragma once

#include <json.hpp>

#include "fullex/antikekule.h"
#include "fullex/extendability.h"
#include "fullex/families.h"
#include "fullex/matching.h"
#include "fullex/plane_graph.h"

namespace fullex {

// Library version stamp; cached analysis digests from other versions are
// ignored.
inline constexpr const char* kLibraryVersion = "fullex-1.0.0";

nlohmann::json edges_json(std::span<const Edge> edges);
nlohmann::json to_json(const FaceInventory& inv);
nlohmann::json to_json(const DeficiencyCertificate& cert);
nlohmann::json to_json(const ExtendabilityReport& report);
nlohmann::json to_json(const AntiKekuleResult& result);
nlohmann::json to_json(const TubeDescriptor& desc);
nlohmann::json to_json(const TubePmReport& report);

}  // namespace fullex
