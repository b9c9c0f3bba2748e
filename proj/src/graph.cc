#include "fullex/graph.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "fullex/error.h"

namespace fullex {

SimpleGraph::SimpleGraph(int order, std::span<const Edge> edges)
    : adjacency_(order) {
  edges_.assign(edges.begin(), edges.end());
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v >= order) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge endpoint out of range: " + std::to_string(e.u) + "-" +
                      std::to_string(e.v));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kSelfLoopOrMultiEdge,
                  "loop at vertex " + std::to_string(e.u));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end());
      dup != edges_.end()) {
    throw Error(ErrorCode::kSelfLoopOrMultiEdge,
                "repeated edge " + std::to_string(dup->u) + "-" +
                    std::to_string(dup->v));
  }
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool SimpleGraph::has_edge(int a, int b) const {
  if (a < 0 || b < 0 || a >= order() || b >= order()) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::optional<int> SimpleGraph::edge_index(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

SimpleGraph SimpleGraph::without_edges(std::span<const Edge> removed) const {
  std::vector<Edge> gone(removed.begin(), removed.end());
  std::sort(gone.begin(), gone.end());
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  std::set_difference(edges_.begin(), edges_.end(), gone.begin(), gone.end(),
                      std::back_inserter(kept));
  return SimpleGraph(order(), kept);
}

SimpleGraph::Induced SimpleGraph::without_vertices(
    std::span<const int> removed) const {
  std::vector<char> drop(order(), 0);
  for (int v : removed) drop[v] = 1;
  std::vector<int> kept;
  for (int v = 0; v < order(); ++v) {
    if (!drop[v]) kept.push_back(v);
  }
  return induced(kept);
}

SimpleGraph::Induced SimpleGraph::induced(std::span<const int> kept) const {
  std::vector<int> original(kept.begin(), kept.end());
  std::sort(original.begin(), original.end());
  std::vector<int> relabel(order(), -1);
  for (int i = 0; i < static_cast<int>(original.size()); ++i) {
    relabel[original[i]] = i;
  }
  std::vector<Edge> sub;
  for (const Edge& e : edges_) {
    if (relabel[e.u] >= 0 && relabel[e.v] >= 0) {
      sub.emplace_back(relabel[e.u], relabel[e.v]);
    }
  }
  return {SimpleGraph(static_cast<int>(original.size()), sub),
          std::move(original)};
}

bool SimpleGraph::is_connected() const { return components().size() <= 1; }

std::vector<std::vector<int>> SimpleGraph::components() const {
  std::vector<std::vector<int>> result;
  std::vector<char> seen(order(), 0);
  std::vector<int> stack;
  for (int root = 0; root < order(); ++root) {
    if (seen[root]) continue;
    std::vector<int> comp;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : adjacency_[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    result.push_back(std::move(comp));
  }
  return result;
}

}  // namespace fullex
