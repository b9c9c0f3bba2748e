#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fullex/plane_graph.h"

namespace fullex {

struct FaceCounts {
  int p4 = 0;
  int p5 = 0;
  int p6 = 0;
  auto operator<=>(const FaceCounts&) const = default;
};

// Pairwise non-isomorphic (4,5,6)-fullerenes on n vertices, sorted by
// canonical code.
struct Catalogue {
  int n = 0;
  std::vector<PlaneCubicGraph> graphs;
  std::vector<std::string> codes;
  std::map<FaceCounts, int> counts;
};

inline constexpr int kDefaultEnumerationBound = 20;
inline constexpr int kNaiveEnumerationBound = 14;

// kDefaultEnumerationBound unless FULLEX_NMAX holds a positive integer.
int enumeration_bound();

// Isomorph-free generation by edge insertion across faces, starting from
// K4. This is vertex splitting on the dual triangulations, and every
// triangulation arises that way from a smaller one, so all 3-connected
// cubic plane graphs appear. Branches that cannot shed their triangles or
// faces larger than six in the remaining steps are cut.
// Throws kOddVertexCount, kBoundExceeded (n > bound) or kInvalidArgument
// (n < 8).
Catalogue enumerate_fullerenes(int n, int bound);
Catalogue enumerate_fullerenes(int n);
// Catalogues for every even n in [8, nmax] from a single generation run.
std::vector<Catalogue> enumerate_fullerenes_up_to(int nmax, int bound);

// Independent completeness oracle: backtracking over breadth-first
// rotation-system codes with partial face tracing, for n <= 14.
Catalogue naive_enumerate(int n);

// Deduplicates by canonical code, sorts, and counts face types. Every graph
// must pass validate_fullerene.
Catalogue make_catalogue(int n, const std::vector<PlaneCubicGraph>& graphs);

std::string to_hex(std::string_view bytes);

}  // namespace fullex
