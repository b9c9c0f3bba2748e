#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fullex/plane_graph.h"

namespace fullex {

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

// planar_code: the header, then per graph one byte n followed by, for each
// vertex 1..n, its neighbours in clockwise order as 1-based bytes and a 0
// terminator.
std::string write_planar_code(std::span<const PlaneCubicGraph> graphs);

// Throws Error(kMalformedInput) on a missing header, truncated record or out
// of range neighbour; rotation systems that are not cubic plane graphs raise
// the corresponding construction error.
std::vector<PlaneCubicGraph> read_planar_code(std::string_view bytes);

}  // namespace fullex
