#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fullex/enumerator.h"

namespace fullex {

// Per-graph analysis stored in a catalogue's JSON sidecar, keyed by the hex
// canonical code.
struct GraphDigest {
  std::string code;
  FaceCounts counts;
  std::optional<int> anti_kekule;
  std::vector<Edge> anti_kekule_witness;
  std::optional<int> extendability;
};

// "fullerenes_n{N}"
std::string catalogue_stem(int n);

nlohmann::json sidecar_json(const Catalogue& cat,
                            const std::vector<GraphDigest>& digests);

// Writes <dir>/fullerenes_n{N}.plc and the matching .json sidecar.
void write_catalogue(const std::filesystem::path& dir, const Catalogue& cat,
                     const std::vector<GraphDigest>& digests);

// Reads a .plc catalogue back (validated and re-sorted).
Catalogue read_catalogue(const std::filesystem::path& plc, int n);

// Digests from a sidecar written by this library version; empty if the file
// is missing, unreadable or stamped by another version.
std::map<std::string, GraphDigest> load_digests(
    const std::filesystem::path& sidecar);

}  // namespace fullex
