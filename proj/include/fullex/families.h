#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "fullex/enumerator.h"
#include "fullex/matching.h"
#include "fullex/plane_graph.h"

namespace fullex {

// Layer structure of a tube: two caps of three quadrilaterals around a
// centre, joined through concentric non-facial 6-cycles. Gap g (0-based)
// holds the traversed edges between concentric_cycles[g] and [g + 1].
struct TubeDescriptor {
  int n_layers = 0;
  std::array<int, 2> cap_centers{};
  std::vector<std::vector<int>> concentric_cycles;
  std::vector<std::vector<Edge>> traversed_edges;
};

struct Tube {
  PlaneCubicGraph graph;
  TubeDescriptor descriptor;
};

// Tube with the given number of hexagon layers (>= 1); 6 * layers + 8
// vertices. Throws Error(kBadLayerCount) for layers < 1.
Tube build_tube(int layers);

// Descriptor of g in g's vertex ids if g is isomorphic to some tube.
std::optional<TubeDescriptor> recognize_tube(const PlaneCubicGraph& g);

struct TubePmReport {
  int layers = 0;
  std::uint64_t perfect_matchings = 0;
  std::uint64_t traversed_product = 0;
  // Every perfect matching uses exactly one traversed edge per gap.
  bool one_traversed_per_gap = false;
  std::uint64_t selections = 0;
  std::uint64_t min_extensions = 0;
  std::uint64_t max_extensions = 0;
  // Every one-per-gap selection lies in exactly one perfect matching.
  bool unique_extension = false;
  bool count_is_product = false;
};

// Enumerates all perfect matchings of the tube with 1 <= layers <= 6.
TubePmReport verify_tube_pm_structure(int layers);

struct SporadicCandidate {
  PlaneCubicGraph graph;
  int n = 0;
  Matching witness_pair;
  int ak = 0;
};

inline constexpr std::array<int, 4> kSporadicSizes = {12, 14, 18, 20};

// Fullerenes on n vertices that are non-2-extendable, have anti-Kekule
// number 3 and are not tubes. n must be one of kSporadicSizes; throws
// Error(kEnumerationUnavailable) when n exceeds the enumeration bound.
std::vector<SporadicCandidate> sporadic_candidates(int n);
std::vector<SporadicCandidate> sporadic_candidates(const Catalogue& catalogue);

}  // namespace fullex
