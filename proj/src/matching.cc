#include "fullex/matching.h"

#include <algorithm>
#include <deque>
#include <string>

#include "fullex/error.h"

namespace fullex {

Matching::Matching(std::vector<Edge> e) : edges(std::move(e)) {
  std::sort(edges.begin(), edges.end());
}

std::vector<int> Matching::vertices() const {
  std::vector<int> out;
  for (const Edge& e : edges) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_matching(const SimpleGraph& g, std::span<const Edge> edges) {
  std::vector<char> used(g.order(), 0);
  for (const Edge& e : edges) {
    if (!g.has_edge(e.u, e.v)) return false;
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

namespace {

// Edmonds' algorithm with explicit blossom contraction through base labels.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const SimpleGraph& g)
      : g_(g),
        n_(g.order()),
        match_(n_, -1),
        parent_(n_),
        base_(n_),
        used_(n_),
        blossom_(n_) {}

  std::vector<int> run() {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (int w : g_.neighbors(v)) {
        if (match_[w] == -1) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int end = find_augmenting_path(v);
      while (end != -1) {
        const int pv = parent_[end];
        const int next = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = next;
      }
    }
    return match_;
  }

 private:
  int lowest_common_base(int a, int b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int b = lowest_common_base(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  const SimpleGraph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
};

int matching_size(const SimpleGraph& g) {
  const std::vector<int> mate = BlossomMatcher(g).run();
  return static_cast<int>(
             std::count_if(mate.begin(), mate.end(), [](int m) { return m >= 0; })) /
         2;
}

}  // namespace

Matching maximum_matching(const SimpleGraph& g) {
  const std::vector<int> mate = BlossomMatcher(g).run();
  std::vector<Edge> edges;
  for (int v = 0; v < g.order(); ++v) {
    if (mate[v] > v) edges.emplace_back(v, mate[v]);
  }
  return Matching(std::move(edges));
}

bool has_perfect_matching(const SimpleGraph& g) {
  if (g.order() % 2 != 0) return false;
  return 2 * matching_size(g) == g.order();
}

bool extends_to_perfect(const SimpleGraph& g, const Matching& m) {
  if (!is_matching(g, m.edges)) {
    throw Error(ErrorCode::kNotAMatching,
                "edges share an endpoint or are not in the graph");
  }
  return has_perfect_matching(g.without_vertices(m.vertices()).graph);
}

namespace {

class PerfectMatchingWalker {
 public:
  explicit PerfectMatchingWalker(const SimpleGraph& g)
      : g_(g), mate_(g.order(), -1) {
    if (g.order() > kMaxEnumerationOrder) {
      throw Error(ErrorCode::kTooLarge,
                  "perfect matching enumeration supports at most " +
                      std::to_string(kMaxEnumerationOrder) + " vertices");
    }
  }

  // visit(mate) returns true to stop. Returns whether stopped.
  template <class Visit>
  bool walk(Visit&& visit) {
    if (g_.order() % 2 != 0) return false;
    return step(0, visit);
  }

  const std::vector<int>& mate() const { return mate_; }

 private:
  bool stranded(int v) const {
    if (mate_[v] != -1) return false;
    for (int w : g_.neighbors(v)) {
      if (mate_[w] == -1) return false;
    }
    return true;
  }

  template <class Visit>
  bool step(int from, Visit& visit) {
    int v = from;
    while (v < g_.order() && mate_[v] != -1) ++v;
    if (v == g_.order()) return visit(mate_);
    for (int w : g_.neighbors(v)) {
      if (mate_[w] != -1) continue;
      mate_[v] = w;
      mate_[w] = v;
      bool dead = false;
      for (int x : g_.neighbors(v)) dead = dead || stranded(x);
      for (int x : g_.neighbors(w)) dead = dead || stranded(x);
      const bool stop = !dead && step(v + 1, visit);
      mate_[v] = mate_[w] = -1;
      if (stop) return true;
    }
    return false;
  }

  const SimpleGraph& g_;
  std::vector<int> mate_;
};

}  // namespace

std::uint64_t count_perfect_matchings(const SimpleGraph& g) {
  PerfectMatchingWalker walker(g);
  std::uint64_t count = 0;
  walker.walk([&](const std::vector<int>&) {
    ++count;
    return false;
  });
  return count;
}

void for_each_perfect_matching(
    const SimpleGraph& g, const std::function<bool(const Matching&)>& visit) {
  PerfectMatchingWalker walker(g);
  walker.walk([&](const std::vector<int>& mate) {
    std::vector<Edge> edges;
    for (int v = 0; v < g.order(); ++v) {
      if (mate[v] > v) edges.emplace_back(v, mate[v]);
    }
    return visit(Matching(std::move(edges)));
  });
}

std::vector<Matching> perfect_matchings(const SimpleGraph& g) {
  std::vector<Matching> out;
  for_each_perfect_matching(g, [&](const Matching& m) {
    out.push_back(m);
    return false;
  });
  return out;
}

bool is_factor_critical(const SimpleGraph& g) {
  if (g.order() % 2 == 0) return false;
  for (int v = 0; v < g.order(); ++v) {
    const int removed[] = {v};
    if (!has_perfect_matching(g.without_vertices(removed).graph)) return false;
  }
  return true;
}

GallaiEdmonds gallai_edmonds(const SimpleGraph& g) {
  const int nu = matching_size(g);
  std::vector<char> in_d(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) {
    const int removed[] = {v};
    in_d[v] = matching_size(g.without_vertices(removed).graph) == nu;
  }
  GallaiEdmonds ge;
  for (int v = 0; v < g.order(); ++v) {
    if (in_d[v]) {
      ge.d.push_back(v);
      continue;
    }
    const auto& nbrs = g.neighbors(v);
    const bool next_to_d =
        std::any_of(nbrs.begin(), nbrs.end(), [&](int w) { return in_d[w]; });
    (next_to_d ? ge.a : ge.c).push_back(v);
  }
  return ge;
}

namespace {

// Kuhn's augmenting paths between barrier vertices and components.
bool barrier_matchable(const SimpleGraph& g, const std::vector<int>& barrier,
                       const std::vector<std::vector<int>>& components) {
  std::vector<int> owner(g.order(), -1);
  for (int c = 0; c < static_cast<int>(components.size()); ++c) {
    for (int v : components[c]) owner[v] = c;
  }
  std::vector<std::vector<int>> adj(barrier.size());
  for (size_t i = 0; i < barrier.size(); ++i) {
    for (int w : g.neighbors(barrier[i])) {
      if (owner[w] >= 0) adj[i].push_back(owner[w]);
    }
    std::sort(adj[i].begin(), adj[i].end());
    adj[i].erase(std::unique(adj[i].begin(), adj[i].end()), adj[i].end());
  }
  std::vector<int> comp_mate(components.size(), -1);
  std::vector<char> seen;
  auto augment = [&](auto&& self, int s) -> bool {
    for (int c : adj[s]) {
      if (seen[c]) continue;
      seen[c] = 1;
      if (comp_mate[c] == -1 || self(self, comp_mate[c])) {
        comp_mate[c] = s;
        return true;
      }
    }
    return false;
  };
  for (size_t s = 0; s < barrier.size(); ++s) {
    seen.assign(components.size(), 0);
    if (!augment(augment, static_cast<int>(s))) return false;
  }
  return true;
}

std::vector<std::vector<int>> components_without(const SimpleGraph& g,
                                                 const std::vector<int>& s) {
  const auto rest = g.without_vertices(s);
  std::vector<std::vector<int>> comps = rest.graph.components();
  for (auto& comp : comps) {
    for (int& v : comp) v = rest.original[v];
  }
  return comps;
}

}  // namespace

DeficiencyCertificate deficiency_certificate(const SimpleGraph& g) {
  std::vector<int> barrier = gallai_edmonds(g).a;
  // Grow A until every component is odd and factor-critical: inside an
  // offending component K pick u with K - u unmatchable and add u together
  // with the Gallai-Edmonds A-set of K - u. Each step keeps S a barrier.
  while (true) {
    const auto comps = components_without(g, barrier);
    std::vector<int> offending;
    for (const auto& comp : comps) {
      if (comp.size() % 2 == 0 || !is_factor_critical(g.induced(comp).graph)) {
        offending = comp;
        break;
      }
    }
    if (offending.empty()) break;
    const auto piece = g.induced(offending);
    int pick = -1;
    for (int u = 0; u < piece.graph.order(); ++u) {
      const int removed[] = {u};
      if (!has_perfect_matching(piece.graph.without_vertices(removed).graph)) {
        pick = u;
        break;
      }
    }
    if (pick < 0) {
      throw Error(ErrorCode::kInternal,
                  "component is factor-critical yet flagged as offending");
    }
    const int removed[] = {pick};
    const auto rest = piece.graph.without_vertices(removed);
    barrier.push_back(piece.original[pick]);
    for (int a : gallai_edmonds(rest.graph).a) {
      barrier.push_back(piece.original[rest.original[a]]);
    }
    std::sort(barrier.begin(), barrier.end());
  }

  DeficiencyCertificate cert;
  cert.barrier = barrier;
  cert.components = components_without(g, barrier);
  for (const auto& comp : cert.components) {
    cert.factor_critical.push_back(is_factor_critical(g.induced(comp).graph));
  }
  cert.matchable = barrier_matchable(g, cert.barrier, cert.components);
  return cert;
}

bool verify_certificate(const SimpleGraph& g, const DeficiencyCertificate& c) {
  std::vector<int> s = c.barrier;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  for (int v : s) {
    if (v < 0 || v >= g.order()) return false;
  }
  std::vector<std::vector<int>> claimed = c.components;
  for (auto& comp : claimed) std::sort(comp.begin(), comp.end());
  std::sort(claimed.begin(), claimed.end());
  std::vector<std::vector<int>> actual = components_without(g, s);
  std::sort(actual.begin(), actual.end());
  if (claimed != actual) return false;
  for (const auto& comp : actual) {
    if (!is_factor_critical(g.induced(comp).graph)) return false;
  }
  return barrier_matchable(g, s, actual);
}

DeficiencyCertificate certificate_after_removal(const SimpleGraph& g,
                                                std::span<const int> removed) {
  const auto rest = g.without_vertices(removed);
  DeficiencyCertificate cert = deficiency_certificate(rest.graph);
  for (int& v : cert.barrier) v = rest.original[v];
  for (auto& comp : cert.components) {
    for (int& v : comp) v = rest.original[v];
  }
  return cert;
}

bool verify_certificate_after_removal(const SimpleGraph& g,
                                      std::span<const int> removed,
                                      const DeficiencyCertificate& c) {
  const auto rest = g.without_vertices(removed);
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < static_cast<int>(rest.original.size()); ++i) {
    local[rest.original[i]] = i;
  }
  auto to_local = [&](int v) {
    return v >= 0 && v < g.order() ? local[v] : -1;
  };
  DeficiencyCertificate mapped = c;
  for (int& v : mapped.barrier) {
    v = to_local(v);
    if (v < 0) return false;
  }
  for (auto& comp : mapped.components) {
    for (int& v : comp) {
      v = to_local(v);
      if (v < 0) return false;
    }
  }
  return verify_certificate(rest.graph, mapped);
}

}  // namespace fullex
