#pragma once

#include <span>
#include <vector>

#include "fullex/graph.h"
#include "fullex/plane_graph.h"

namespace fullex {

inline constexpr int kMaxAntiKekuleSize = 4;

struct AntiKekuleResult {
  int number = 0;
  std::vector<Edge> witness;  // lexicographically first minimum set
};

// g - edges is connected and has no perfect matching. Throws
// Error(kEdgeNotInGraph) for a foreign edge.
bool is_anti_kekule_set(const SimpleGraph& g, std::span<const Edge> edges);

// Exhaustive search by increasing size up to max_size. Throws
// Error(kInternal) if no anti-Kekule set that small exists.
AntiKekuleResult anti_kekule_number(const SimpleGraph& g,
                                    int max_size = kMaxAntiKekuleSize);
AntiKekuleResult anti_kekule_number(const PlaneCubicGraph& g);

// Every anti-Kekule set of exactly `size` edges, lexicographic.
std::vector<std::vector<Edge>> min_anti_kekule_sets(const SimpleGraph& g,
                                                    int size);

}  // namespace fullex
