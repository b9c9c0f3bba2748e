#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fullex/graph.h"

namespace fullex {

// Neighbours of one vertex in clockwise order as seen from outside the
// sphere.
using Rotation = std::array<int, 3>;

struct DirectedEdge {
  int tail = 0;
  int head = 0;
  auto operator<=>(const DirectedEdge&) const = default;
};

// A facial walk. vertices[i] -> vertices[i+1] (cyclically) are the directed
// edges of the boundary.
struct Face {
  std::vector<int> vertices;

  int size() const { return static_cast<int>(vertices.size()); }
  std::vector<Edge> edges() const;
  bool contains(Edge e) const;
};

struct FaceInventory {
  std::vector<Face> faces;
  int p4 = 0;
  int p5 = 0;
  int p6 = 0;
};

struct EdgeCut {
  std::vector<Edge> edges;
  std::vector<int> side;   // contains the smallest vertex
  std::vector<int> other;
  bool trivial = false;    // one side is a single vertex
};

// Cubic plane graph given by a rotation system. Construction checks that the
// graph is simple, symmetric and spherical (n - m + f = 2); face sizes are
// not restricted here.
class PlaneCubicGraph {
 public:
  static PlaneCubicGraph from_rotation(std::vector<Rotation> rotation);
  // Accepts ragged input (as read from files); a vertex without exactly
  // three neighbours is rejected with kNotCubic.
  static PlaneCubicGraph from_rotation(
      const std::vector<std::vector<int>>& rotation);

  int order() const { return static_cast<int>(rotation_.size()); }
  int size() const { return graph_.size(); }

  const Rotation& rotation(int v) const { return rotation_[v]; }
  const std::vector<Rotation>& rotations() const { return rotation_; }
  const SimpleGraph& graph() const { return graph_; }
  const std::vector<Edge>& edges() const { return graph_.edges(); }

  // Position of w in the rotation at v; w must be a neighbour.
  int slot(int v, int w) const;
  // Face-tracing successor: after arriving at head along (tail, head),
  // leave along the neighbour that follows tail in head's rotation.
  DirectedEdge face_successor(DirectedEdge d) const;

  // Same abstract graph with every rotation reversed.
  PlaneCubicGraph mirror() const;
  // Vertex v becomes perm[v].
  PlaneCubicGraph relabel(std::span<const int> perm) const;

  bool operator==(const PlaneCubicGraph& other) const {
    return rotation_ == other.rotation_;
  }

 private:
  explicit PlaneCubicGraph(std::vector<Rotation> rotation, SimpleGraph graph)
      : rotation_(std::move(rotation)), graph_(std::move(graph)) {}

  std::vector<Rotation> rotation_;
  SimpleGraph graph_;
};

FaceInventory faces(const PlaneCubicGraph& g);

// Throws Error(kBadFaceSize) naming the first face whose size is not 4, 5
// or 6.
FaceInventory validate_fullerene(const PlaneCubicGraph& g);

// Isomorphism-invariant code: first byte is the order, then three neighbour
// labels per vertex under the lexicographically least breadth-first
// labelling over every start dart and both orientations. Mirror images get
// equal codes. Requires order() <= 255.
std::string canonical_code(const PlaneCubicGraph& g);

// Code under one orientation only; differs from the mirror's iff chiral.
std::string oriented_code(const PlaneCubicGraph& g);
bool is_chiral(const PlaneCubicGraph& g);

bool is_isomorphic(const PlaneCubicGraph& a, const PlaneCubicGraph& b);
// map[v] is the vertex of b corresponding to vertex v of a.
std::optional<std::vector<int>> find_isomorphism(const PlaneCubicGraph& a,
                                                 const PlaneCubicGraph& b);

// Vertex connectivity by exhaustive separator search below the minimum
// degree.
int connectivity(const SimpleGraph& g);
int connectivity(const PlaneCubicGraph& g);

// Length of a shortest cycle, 0 for a forest.
int girth(const SimpleGraph& g);
int girth(const PlaneCubicGraph& g);

// True iff every 4-cycle and 5-cycle is the boundary of a face.
bool short_cycles_facial(const PlaneCubicGraph& g);

// All minimal edge cuts with at most k <= 4 edges, by increasing size then
// lexicographic edge order.
std::vector<EdgeCut> edge_cuts_up_to(const PlaneCubicGraph& g, int k);

// True iff deleting at most three edges leaves two components that each
// contain a cycle.
bool has_cyclic_cut_leq3(const PlaneCubicGraph& g);

}  // namespace fullex
