#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "fullex/graph.h"
#include "fullex/plane_graph.h"

namespace fullex::testing {

// Plane cubic graph from consistently oriented face boundaries.
PlaneCubicGraph from_faces(int n, const std::vector<std::vector<int>>& faces);

PlaneCubicGraph cube();
PlaneCubicGraph tetrahedron();
PlaneCubicGraph triangular_prism();
// The unique fullerene on 20 vertices with twelve pentagons.
PlaneCubicGraph dodecahedron();

SimpleGraph path(int n);
SimpleGraph cycle(int n);
SimpleGraph complete(int n);
SimpleGraph random_graph(int n, double p, std::mt19937& rng);

// Random relabelling of a plane graph.
PlaneCubicGraph shuffled(const PlaneCubicGraph& g, std::mt19937& rng);

// Exhaustive oracles, independent of the library's matching code.
int brute_max_matching(const SimpleGraph& g);
std::uint64_t brute_count_perfect_matchings(const SimpleGraph& g);
bool brute_has_perfect_matching(const SimpleGraph& g);
bool brute_extends(const SimpleGraph& g, const std::vector<Edge>& matching);
bool brute_is_k_extendable(const SimpleGraph& g, int k);
// Smallest anti-Kekule set size, searched up to max_size.
std::optional<int> brute_anti_kekule(const SimpleGraph& g, int max_size);
// Vertex bijection preserving adjacency, by backtracking.
bool brute_isomorphic(const SimpleGraph& a, const SimpleGraph& b);
bool brute_connected(const SimpleGraph& g);

}  // namespace fullex::testing
