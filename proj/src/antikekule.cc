#include "fullex/antikekule.h"

#include <cstdint>
#include <string>

#include "combinations.h"
#include "fullex/error.h"
#include "fullex/matching.h"

namespace fullex {

namespace {

// Subset search over edge indices. g - E' has a perfect matching iff some
// perfect matching of g avoids E', so small graphs test candidates against
// the precomputed list of perfect matchings as bitmasks.
class AntiKekuleSearch {
 public:
  explicit AntiKekuleSearch(const SimpleGraph& g)
      : g_(g), words_((g.size() + 63) / 64) {
    if (g.order() <= kMaxEnumerationOrder) {
      use_masks_ = true;
      for_each_perfect_matching(g, [&](const Matching& m) {
        std::vector<std::uint64_t> mask(words_, 0);
        for (const Edge& e : m.edges) {
          const int i = *g.edge_index(e);
          mask[i / 64] |= std::uint64_t{1} << (i % 64);
        }
        masks_.push_back(std::move(mask));
        return false;
      });
    }
  }

  bool connected_without(std::span<const int> removed) const {
    internal::DisjointSets sets(g_.order());
    int count = g_.order();
    size_t r = 0;
    const auto& edges = g_.edges();
    for (int i = 0; i < g_.size(); ++i) {
      if (r < removed.size() && removed[r] == i) {
        ++r;
        continue;
      }
      if (sets.unite(edges[i].u, edges[i].v)) --count;
    }
    return count <= 1;
  }

  bool perfect_matching_avoids(std::span<const int> removed) const {
    if (use_masks_) {
      for (const auto& mask : masks_) {
        bool clear = true;
        for (int i : removed) {
          if (mask[i / 64] >> (i % 64) & 1) {
            clear = false;
            break;
          }
        }
        if (clear) return true;
      }
      return false;
    }
    std::vector<Edge> gone;
    for (int i : removed) gone.push_back(g_.edges()[i]);
    return has_perfect_matching(g_.without_edges(gone));
  }

  // Calls visit on anti-Kekule sets of exactly `size` edges in lexicographic
  // order; prefixes whose removal disconnects are pruned since supersets
  // stay disconnected. visit returns true to stop.
  template <class Visit>
  bool search(int size, Visit&& visit) {
    chosen_.clear();
    if (!connected_without(chosen_)) return false;
    return extend(0, size, visit);
  }

 private:
  template <class Visit>
  bool extend(int start, int size, Visit& visit) {
    if (static_cast<int>(chosen_.size()) == size) {
      if (!perfect_matching_avoids(chosen_)) return visit(chosen_);
      return false;
    }
    for (int i = start; i < g_.size(); ++i) {
      chosen_.push_back(i);
      const bool stop =
          connected_without(chosen_) && extend(i + 1, size, visit);
      chosen_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const SimpleGraph& g_;
  int words_;
  bool use_masks_ = false;
  std::vector<std::vector<std::uint64_t>> masks_;
  std::vector<int> chosen_;
};

std::vector<Edge> to_edges(const SimpleGraph& g, std::span<const int> idx) {
  std::vector<Edge> out;
  for (int i : idx) out.push_back(g.edges()[i]);
  return out;
}

}  // namespace

bool is_anti_kekule_set(const SimpleGraph& g, std::span<const Edge> edges) {
  for (const Edge& e : edges) {
    if (!g.has_edge(e.u, e.v)) {
      throw Error(ErrorCode::kEdgeNotInGraph,
                  std::to_string(e.u) + "-" + std::to_string(e.v));
    }
  }
  const SimpleGraph rest = g.without_edges(edges);
  return rest.is_connected() && !has_perfect_matching(rest);
}

AntiKekuleResult anti_kekule_number(const SimpleGraph& g, int max_size) {
  AntiKekuleSearch search(g);
  for (int size = 0; size <= max_size; ++size) {
    AntiKekuleResult result;
    const bool found = search.search(size, [&](std::span<const int> idx) {
      result.number = size;
      result.witness = to_edges(g, idx);
      return true;
    });
    if (found) return result;
  }
  throw Error(ErrorCode::kInternal,
              "no anti-Kekule set with at most " + std::to_string(max_size) +
                  " edges exists");
}

AntiKekuleResult anti_kekule_number(const PlaneCubicGraph& g) {
  return anti_kekule_number(g.graph(), kMaxAntiKekuleSize);
}

std::vector<std::vector<Edge>> min_anti_kekule_sets(const SimpleGraph& g,
                                                    int size) {
  if (size < 0 || size > kMaxAntiKekuleSize) {
    throw Error(ErrorCode::kInvalidArgument, "size must lie in [0, 4]");
  }
  std::vector<std::vector<Edge>> out;
  AntiKekuleSearch search(g);
  search.search(size, [&](std::span<const int> idx) {
    out.push_back(to_edges(g, idx));
    return false;
  });
  return out;
}

}  // namespace fullex
