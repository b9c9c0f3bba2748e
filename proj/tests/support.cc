#include "support.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "fullex/enumerator.h"

namespace fullex::testing {

PlaneCubicGraph from_faces(int n, const std::vector<std::vector<int>>& faces) {
  std::vector<std::map<int, int>> after(n);
  for (const auto& f : faces) {
    const int d = static_cast<int>(f.size());
    for (int i = 0; i < d; ++i) after[f[(i + 1) % d]][f[i]] = f[(i + 2) % d];
  }
  std::vector<Rotation> rot(n);
  for (int v = 0; v < n; ++v) {
    int w = after[v].begin()->first;
    for (int i = 0; i < 3; ++i) {
      rot[v][i] = w;
      w = after[v].at(w);
    }
  }
  return PlaneCubicGraph::from_rotation(rot);
}

PlaneCubicGraph cube() {
  return from_faces(8, {{0, 1, 2, 3},
                        {4, 7, 6, 5},
                        {0, 4, 5, 1},
                        {1, 5, 6, 2},
                        {2, 6, 7, 3},
                        {3, 7, 4, 0}});
}

PlaneCubicGraph tetrahedron() {
  return from_faces(4, {{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {0, 2, 3}});
}

PlaneCubicGraph triangular_prism() {
  return from_faces(6, {{0, 1, 2},
                        {3, 5, 4},
                        {0, 3, 4, 1},
                        {1, 4, 5, 2},
                        {2, 5, 3, 0}});
}

PlaneCubicGraph dodecahedron() {
  for (const PlaneCubicGraph& g : enumerate_fullerenes(20, 20).graphs) {
    if (faces(g).p5 == 12) return g;
  }
  throw std::runtime_error("no dodecahedron in the n=20 catalogue");
}

SimpleGraph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return SimpleGraph(n, e);
}

SimpleGraph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return SimpleGraph(n, e);
}

SimpleGraph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return SimpleGraph(n, e);
}

SimpleGraph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) e.emplace_back(i, j);
    }
  }
  return SimpleGraph(n, e);
}

PlaneCubicGraph shuffled(const PlaneCubicGraph& g, std::mt19937& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabel(perm);
}

namespace {

bool adjacent(const SimpleGraph& g, int u, int v) { return g.has_edge(u, v); }

// Maximum number of matched pairs among vertices >= v not in `used`.
int max_matching_from(const SimpleGraph& g, int v, std::vector<char>& used) {
  const int n = g.order();
  while (v < n && used[v]) ++v;
  if (v >= n) return 0;
  used[v] = 1;
  int best = max_matching_from(g, v + 1, used);  // v stays unmatched
  for (int w = v + 1; w < n; ++w) {
    if (!used[w] && adjacent(g, v, w)) {
      used[w] = 1;
      best = std::max(best, 1 + max_matching_from(g, v + 1, used));
      used[w] = 0;
    }
  }
  used[v] = 0;
  return best;
}

std::uint64_t count_from(const SimpleGraph& g, int v, std::vector<char>& used,
                         bool stop_at_one) {
  const int n = g.order();
  while (v < n && used[v]) ++v;
  if (v >= n) return 1;
  std::uint64_t total = 0;
  used[v] = 1;
  for (int w = v + 1; w < n; ++w) {
    if (!used[w] && adjacent(g, v, w)) {
      used[w] = 1;
      total += count_from(g, v + 1, used, stop_at_one);
      used[w] = 0;
      if (stop_at_one && total > 0) break;
    }
  }
  used[v] = 0;
  return total;
}

}  // namespace

int brute_max_matching(const SimpleGraph& g) {
  std::vector<char> used(g.order(), 0);
  return max_matching_from(g, 0, used);
}

std::uint64_t brute_count_perfect_matchings(const SimpleGraph& g) {
  if (g.order() % 2 != 0) return 0;
  std::vector<char> used(g.order(), 0);
  return count_from(g, 0, used, false);
}

bool brute_has_perfect_matching(const SimpleGraph& g) {
  if (g.order() % 2 != 0) return false;
  std::vector<char> used(g.order(), 0);
  return count_from(g, 0, used, true) > 0;
}

bool brute_extends(const SimpleGraph& g, const std::vector<Edge>& matching) {
  std::vector<char> used(g.order(), 0);
  for (const Edge& e : matching) {
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return count_from(g, 0, used, true) > 0;
}

bool brute_is_k_extendable(const SimpleGraph& g, int k) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<Edge> chosen;
  std::function<bool(int)> rec = [&](int start) {
    if (static_cast<int>(chosen.size()) == k) return brute_extends(g, chosen);
    for (int i = start; i < m; ++i) {
      bool disjoint = true;
      for (const Edge& e : chosen) {
        if (e.u == edges[i].u || e.u == edges[i].v || e.v == edges[i].u ||
            e.v == edges[i].v) {
          disjoint = false;
        }
      }
      if (!disjoint) continue;
      chosen.push_back(edges[i]);
      const bool ok = rec(i + 1);
      chosen.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return rec(0);
}

bool brute_connected(const SimpleGraph& g) {
  const int n = g.order();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w) {
      if (!seen[w] && g.has_edge(v, w)) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

std::optional<int> brute_anti_kekule(const SimpleGraph& g, int max_size) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  for (int size = 0; size <= max_size; ++size) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<Edge> removed;
      for (int i : idx) removed.push_back(edges[i]);
      const SimpleGraph rest = g.without_edges(removed);
      if (brute_connected(rest) && !brute_has_perfect_matching(rest)) {
        return size;
      }
      int pos = size - 1;
      while (pos >= 0 && idx[pos] == m - size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int j = pos + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

bool brute_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  const int n = a.order();
  if (n != b.order() || a.size() != b.size()) return false;
  std::vector<int> map(n, -1);
  std::vector<char> taken(n, 0);
  std::function<bool(int)> rec = [&](int v) {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (taken[w] || a.degree(v) != b.degree(w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        ok = a.has_edge(u, v) == b.has_edge(map[u], w);
      }
      if (!ok) continue;
      map[v] = w;
      taken[w] = 1;
      if (rec(v + 1)) return true;
      taken[w] = 0;
    }
    map[v] = -1;
    return false;
  };
  return rec(0);
}

}  // namespace fullex::testing
