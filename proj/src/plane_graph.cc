#include "fullex/plane_graph.h"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "combinations.h"
#include "fullex/error.h"

namespace fullex {

std::vector<Edge> Face::edges() const {
  std::vector<Edge> out;
  out.reserve(vertices.size());
  for (size_t i = 0; i < vertices.size(); ++i) {
    out.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Face::contains(Edge e) const {
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (Edge(vertices[i], vertices[(i + 1) % vertices.size()]) == e) {
      return true;
    }
  }
  return false;
}

namespace {

int count_faces(const std::vector<Rotation>& rot) {
  const int n = static_cast<int>(rot.size());
  std::vector<char> used(3 * n, 0);
  int count = 0;
  for (int start = 0; start < 3 * n; ++start) {
    if (used[start]) continue;
    ++count;
    int dart = start;
    while (!used[dart]) {
      used[dart] = 1;
      const int tail = dart / 3;
      const int head = rot[tail][dart % 3];
      const auto& hr = rot[head];
      const int back = hr[0] == tail ? 0 : hr[1] == tail ? 1 : 2;
      dart = 3 * head + (back + 1) % 3;
    }
  }
  return count;
}

}  // namespace

PlaneCubicGraph PlaneCubicGraph::from_rotation(std::vector<Rotation> rotation) {
  const int n = static_cast<int>(rotation.size());
  if (n < 4 || n % 2 != 0) {
    throw Error(ErrorCode::kNotCubic,
                "a cubic graph needs an even order of at least 4, got " +
                    std::to_string(n));
  }
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    const Rotation& r = rotation[v];
    for (int w : r) {
      if (w < 0 || w >= n) {
        throw Error(ErrorCode::kInvalidArgument,
                    "neighbour " + std::to_string(w) + " of vertex " +
                        std::to_string(v) + " out of range");
      }
      if (w == v || std::count(r.begin(), r.end(), w) > 1) {
        throw Error(ErrorCode::kSelfLoopOrMultiEdge,
                    "vertex " + std::to_string(v) +
                        " has a loop or repeated neighbour " +
                        std::to_string(w));
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    for (int w : rotation[v]) {
      const Rotation& back = rotation[w];
      if (std::find(back.begin(), back.end(), v) == back.end()) {
        throw Error(ErrorCode::kNotSymmetric,
                    std::to_string(v) + " lists " + std::to_string(w) +
                        " but not conversely");
      }
      if (v < w) edges.emplace_back(v, w);
    }
  }
  SimpleGraph graph(n, edges);
  if (!graph.is_connected()) {
    throw Error(ErrorCode::kNotSpherical, "graph is disconnected");
  }
  const int f = count_faces(rotation);
  if (n - graph.size() + f != 2) {
    throw Error(ErrorCode::kNotSpherical,
                "Euler characteristic " + std::to_string(n - graph.size() + f) +
                    " instead of 2");
  }
  return PlaneCubicGraph(std::move(rotation), std::move(graph));
}

PlaneCubicGraph PlaneCubicGraph::from_rotation(
    const std::vector<std::vector<int>>& rotation) {
  std::vector<Rotation> fixed(rotation.size());
  for (size_t v = 0; v < rotation.size(); ++v) {
    if (rotation[v].size() != 3) {
      throw Error(ErrorCode::kNotCubic,
                  "vertex " + std::to_string(v) + " has degree " +
                      std::to_string(rotation[v].size()));
    }
    std::copy(rotation[v].begin(), rotation[v].end(), fixed[v].begin());
  }
  return from_rotation(std::move(fixed));
}

int PlaneCubicGraph::slot(int v, int w) const {
  const Rotation& r = rotation_[v];
  return r[0] == w ? 0 : r[1] == w ? 1 : 2;
}

DirectedEdge PlaneCubicGraph::face_successor(DirectedEdge d) const {
  const int s = slot(d.head, d.tail);
  return {d.head, rotation_[d.head][(s + 1) % 3]};
}

PlaneCubicGraph PlaneCubicGraph::mirror() const {
  std::vector<Rotation> rot = rotation_;
  for (Rotation& r : rot) std::swap(r[1], r[2]);
  return PlaneCubicGraph(std::move(rot), graph_);
}

PlaneCubicGraph PlaneCubicGraph::relabel(std::span<const int> perm) const {
  std::vector<Rotation> rot(rotation_.size());
  for (int v = 0; v < order(); ++v) {
    for (int i = 0; i < 3; ++i) rot[perm[v]][i] = perm[rotation_[v][i]];
  }
  return from_rotation(std::move(rot));
}

FaceInventory faces(const PlaneCubicGraph& g) {
  FaceInventory inv;
  const int n = g.order();
  std::vector<char> used(3 * n, 0);
  for (int start = 0; start < 3 * n; ++start) {
    if (used[start]) continue;
    Face face;
    DirectedEdge d{start / 3, g.rotation(start / 3)[start % 3]};
    int dart = start;
    while (!used[dart]) {
      used[dart] = 1;
      face.vertices.push_back(d.tail);
      d = g.face_successor(d);
      dart = 3 * d.tail + g.slot(d.tail, d.head);
    }
    switch (face.size()) {
      case 4: ++inv.p4; break;
      case 5: ++inv.p5; break;
      case 6: ++inv.p6; break;
      default: break;
    }
    inv.faces.push_back(std::move(face));
  }
  return inv;
}

FaceInventory validate_fullerene(const PlaneCubicGraph& g) {
  FaceInventory inv = faces(g);
  for (size_t i = 0; i < inv.faces.size(); ++i) {
    const int s = inv.faces[i].size();
    if (s < 4 || s > 6) {
      throw Error(ErrorCode::kBadFaceSize,
                  "face " + std::to_string(i) + " has size " +
                      std::to_string(s));
    }
  }
  return inv;
}

namespace {

// Breadth-first code from one start dart. Returns false as soon as the code
// is known to exceed `best`; otherwise writes the complete code.
bool bfs_code(const PlaneCubicGraph& g, int start, int first, bool clockwise,
              const std::string& best, std::string& code,
              std::vector<int>& label) {
  const int n = g.order();
  std::fill(label.begin(), label.end(), -1);
  std::vector<int> queue;
  std::vector<int> ref(n, -1);
  queue.reserve(n);
  label[start] = 0;
  ref[start] = first;
  queue.push_back(start);
  code.assign(1 + 3 * n, '\0');
  code[0] = static_cast<char>(n);
  bool smaller = best.empty();
  size_t pos = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    const int v = queue[qi];
    const int s = g.slot(v, ref[v]);
    for (int j = 0; j < 3; ++j) {
      const int w = g.rotation(v)[clockwise ? (s + j) % 3 : (s + 3 - j) % 3];
      if (label[w] < 0) {
        label[w] = static_cast<int>(queue.size());
        ref[w] = v;
        queue.push_back(w);
      }
      const auto byte = static_cast<unsigned char>(label[w] + 1);
      if (!smaller) {
        const auto cmp = static_cast<unsigned char>(best[pos]);
        if (byte > cmp) return false;
        if (byte < cmp) smaller = true;
      }
      code[pos++] = static_cast<char>(byte);
    }
  }
  return smaller;
}

struct CanonicalForm {
  std::string code;
  std::vector<int> label;
};

CanonicalForm canonical_form(const PlaneCubicGraph& g, bool both_orientations) {
  if (g.order() > 255) {
    throw Error(ErrorCode::kTooLarge, "canonical codes support order <= 255");
  }
  CanonicalForm best;
  std::string code;
  std::vector<int> label(g.order());
  for (int v = 0; v < g.order(); ++v) {
    for (int first : g.rotation(v)) {
      for (int o = 0; o < (both_orientations ? 2 : 1); ++o) {
        if (bfs_code(g, v, first, o == 0, best.code, code, label)) {
          best.code = code;
          best.label = label;
        }
      }
    }
  }
  return best;
}

}  // namespace

std::string canonical_code(const PlaneCubicGraph& g) {
  return canonical_form(g, true).code;
}

std::string oriented_code(const PlaneCubicGraph& g) {
  return canonical_form(g, false).code;
}

bool is_chiral(const PlaneCubicGraph& g) {
  return oriented_code(g) != oriented_code(g.mirror());
}

bool is_isomorphic(const PlaneCubicGraph& a, const PlaneCubicGraph& b) {
  return a.order() == b.order() && canonical_code(a) == canonical_code(b);
}

std::optional<std::vector<int>> find_isomorphism(const PlaneCubicGraph& a,
                                                 const PlaneCubicGraph& b) {
  if (a.order() != b.order()) return std::nullopt;
  CanonicalForm fa = canonical_form(a, true);
  CanonicalForm fb = canonical_form(b, true);
  if (fa.code != fb.code) return std::nullopt;
  std::vector<int> by_label(b.order());
  for (int v = 0; v < b.order(); ++v) by_label[fb.label[v]] = v;
  std::vector<int> map(a.order());
  for (int v = 0; v < a.order(); ++v) map[v] = by_label[fa.label[v]];
  return map;
}

int connectivity(const SimpleGraph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (!g.is_connected()) return 0;
  int min_degree = n - 1;
  for (int v = 0; v < n; ++v) min_degree = std::min(min_degree, g.degree(v));
  for (int k = 1; k < min_degree; ++k) {
    const bool found =
        internal::for_each_combination(n, k, [&](std::span<const int> cut) {
          return !g.without_vertices(cut).graph.is_connected();
        });
    if (found) return k;
  }
  // No separator below the minimum degree; a minimum-degree neighbourhood
  // separates unless the graph is complete.
  return min_degree;
}

int connectivity(const PlaneCubicGraph& g) { return connectivity(g.graph()); }

int girth(const SimpleGraph& g) {
  const int n = g.order();
  int best = 0;
  std::vector<int> dist(n), parent(n);
  std::deque<int> queue;
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    queue.assign(1, root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (w != parent[v]) {
          const int len = dist[v] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

int girth(const PlaneCubicGraph& g) { return girth(g.graph()); }

bool short_cycles_facial(const PlaneCubicGraph& g) {
  std::set<std::vector<Edge>> facial;
  for (const Face& f : faces(g).faces) {
    if (f.size() == 4 || f.size() == 5) facial.insert(f.edges());
  }
  const SimpleGraph& sg = g.graph();
  std::vector<int> path;
  std::vector<char> on_path(sg.order(), 0);
  bool ok = true;

  auto check_cycle = [&]() {
    std::vector<Edge> cyc;
    for (size_t i = 0; i < path.size(); ++i) {
      cyc.emplace_back(path[i], path[(i + 1) % path.size()]);
    }
    std::sort(cyc.begin(), cyc.end());
    if (!facial.contains(cyc)) ok = false;
  };

  // Paths from the smallest vertex of the cycle through larger vertices.
  auto extend = [&](auto&& self, int root) -> void {
    const int v = path.back();
    for (int w : sg.neighbors(v)) {
      if (!ok) return;
      if (w == root && path.size() >= 4) {
        check_cycle();
      } else if (w > root && !on_path[w] && path.size() < 5) {
        on_path[w] = 1;
        path.push_back(w);
        self(self, root);
        path.pop_back();
        on_path[w] = 0;
      }
    }
  };

  for (int root = 0; root < sg.order() && ok; ++root) {
    path.assign(1, root);
    on_path[root] = 1;
    extend(extend, root);
    on_path[root] = 0;
  }
  return ok;
}

namespace {

// Component id per vertex after removing the chosen edges.
std::vector<int> components_without(const SimpleGraph& g,
                                    std::span<const int> removed,
                                    int& count) {
  internal::DisjointSets sets(g.order());
  const auto& edges = g.edges();
  size_t r = 0;
  count = g.order();
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (r < removed.size() && removed[r] == i) {
      ++r;
      continue;
    }
    if (sets.unite(edges[i].u, edges[i].v)) --count;
  }
  std::vector<int> comp(g.order());
  for (int v = 0; v < g.order(); ++v) comp[v] = sets.find(v);
  return comp;
}

}  // namespace

std::vector<EdgeCut> edge_cuts_up_to(const PlaneCubicGraph& g, int k) {
  if (k < 0 || k > 4) {
    throw Error(ErrorCode::kInvalidArgument,
                "edge cut enumeration supports k <= 4");
  }
  const SimpleGraph& sg = g.graph();
  const auto& edges = sg.edges();
  std::vector<EdgeCut> cuts;
  for (int size = 1; size <= k; ++size) {
    internal::for_each_combination(
        sg.size(), size, [&](std::span<const int> chosen) {
          int count = 0;
          const std::vector<int> comp = components_without(sg, chosen, count);
          if (count != 2) return false;
          for (int i : chosen) {
            if (comp[edges[i].u] == comp[edges[i].v]) return false;
          }
          EdgeCut cut;
          for (int i : chosen) cut.edges.push_back(edges[i]);
          for (int v = 0; v < sg.order(); ++v) {
            (comp[v] == comp[0] ? cut.side : cut.other).push_back(v);
          }
          cut.trivial = cut.side.size() == 1 || cut.other.size() == 1;
          cuts.push_back(std::move(cut));
          return false;
        });
  }
  return cuts;
}

bool has_cyclic_cut_leq3(const PlaneCubicGraph& g) {
  const SimpleGraph& sg = g.graph();
  const auto& edges = sg.edges();
  for (int size = 1; size <= 3; ++size) {
    const bool found = internal::for_each_combination(
        sg.size(), size, [&](std::span<const int> chosen) {
          int count = 0;
          const std::vector<int> comp = components_without(sg, chosen, count);
          if (count < 2) return false;
          std::vector<int> vertices(sg.order(), 0), inside(sg.order(), 0);
          for (int v = 0; v < sg.order(); ++v) ++vertices[comp[v]];
          size_t r = 0;
          for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
            if (r < chosen.size() && chosen[r] == i) {
              ++r;
              continue;
            }
            ++inside[comp[edges[i].u]];
          }
          int cyclic = 0;
          for (int c = 0; c < sg.order(); ++c) {
            if (vertices[c] > 0 && inside[c] >= vertices[c]) ++cyclic;
          }
          return cyclic >= 2;
        });
    if (found) return true;
  }
  return false;
}

}  // namespace fullex
