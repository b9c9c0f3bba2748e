#pragma once

#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fullex {

// Undirected edge with the smaller endpoint first.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(int w) const { return u == w || v == w; }
  int other(int w) const { return w == u ? v : u; }

  auto operator<=>(const Edge&) const = default;
};

// Finite simple undirected graph on vertices 0..order()-1. Immutable once
// built; adjacency lists and the edge list are kept sorted.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int order) : adjacency_(order) {}
  // Throws Error(kSelfLoopOrMultiEdge) on loops or repeated edges and
  // Error(kInvalidArgument) on out-of-range endpoints.
  SimpleGraph(int order, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int a, int b) const;
  // Position of the edge in edges(), if present.
  std::optional<int> edge_index(Edge e) const;

  // G - E'. Edges absent from the graph are ignored.
  SimpleGraph without_edges(std::span<const Edge> removed) const;

  // Result of deleting vertices: the remaining graph, relabelled
  // contiguously, plus the map from new ids back to the original ones.
  struct Induced;
  Induced without_vertices(std::span<const int> removed) const;
  Induced induced(std::span<const int> kept) const;

  bool is_connected() const;
  // Connected components, each sorted, ordered by smallest vertex.
  std::vector<std::vector<int>> components() const;

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<Edge> edges_;
};

struct SimpleGraph::Induced {
  SimpleGraph graph;
  std::vector<int> original;
};

}  // namespace fullex
