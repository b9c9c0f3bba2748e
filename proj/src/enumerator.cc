#include "fullex/enumerator.h"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>

#include "fullex/error.h"

namespace fullex {

int enumeration_bound() {
  if (const char* env = std::getenv("FULLEX_NMAX")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0 && value <= 255) {
      return static_cast<int>(value);
    }
  }
  return kDefaultEnumerationBound;
}

std::string to_hex(std::string_view bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (char c : bytes) {
    const auto b = static_cast<unsigned char>(c);
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

Catalogue make_catalogue(int n, const std::vector<PlaneCubicGraph>& graphs) {
  std::map<std::string, const PlaneCubicGraph*> by_code;
  for (const PlaneCubicGraph& g : graphs) {
    if (g.order() != n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "catalogue for n=" + std::to_string(n) +
                      " given a graph of order " + std::to_string(g.order()));
    }
    validate_fullerene(g);
    by_code.emplace(canonical_code(g), &g);
  }
  Catalogue cat;
  cat.n = n;
  for (const auto& [code, g] : by_code) {
    const FaceInventory inv = faces(*g);
    ++cat.counts[FaceCounts{inv.p4, inv.p5, inv.p6}];
    cat.graphs.push_back(*g);
    cat.codes.push_back(code);
  }
  return cat;
}

namespace {

void check_request(int n, int bound) {
  if (n % 2 != 0) {
    throw Error(ErrorCode::kOddVertexCount,
                "cubic graphs have even order, got " + std::to_string(n));
  }
  if (n < 8) {
    throw Error(ErrorCode::kInvalidArgument,
                "no (4,5,6)-fullerene has fewer than 8 vertices");
  }
  if (n > bound) {
    throw Error(ErrorCode::kBoundExceeded,
                "n=" + std::to_string(n) + " exceeds the enumeration bound " +
                    std::to_string(bound));
  }
}

PlaneCubicGraph tetrahedron() {
  return PlaneCubicGraph::from_rotation(
      std::vector<Rotation>{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
}

// Triangles and the total excess of faces over six both drop by at most two
// per insertion, and must both reach zero.
bool can_still_finish(const FaceInventory& inv, int steps_left) {
  int triangles = 0;
  int excess = 0;
  for (const Face& f : inv.faces) {
    if (f.size() == 3) ++triangles;
    if (f.size() > 6) excess += f.size() - 6;
  }
  return triangles <= 2 * steps_left && excess <= 2 * steps_left;
}

bool all_faces_fullerene(const FaceInventory& inv) {
  return std::all_of(inv.faces.begin(), inv.faces.end(), [](const Face& f) {
    return f.size() >= 4 && f.size() <= 6;
  });
}

void replace_neighbour(std::vector<Rotation>& rot, int v, int from, int to) {
  for (int& w : rot[v]) {
    if (w == from) {
      w = to;
      return;
    }
  }
}

// Subdivides face edges (f[i], f[i+1]) and (f[j], f[j+1]) with new vertices
// x and y and joins them across the face.
PlaneCubicGraph insert_edge(const PlaneCubicGraph& g, const Face& face, int i,
                            int j) {
  const auto& f = face.vertices;
  const int d = face.size();
  const int fi = f[i], fi1 = f[(i + 1) % d];
  const int fj = f[j], fj1 = f[(j + 1) % d];
  std::vector<Rotation> rot = g.rotations();
  const int x = g.order();
  const int y = g.order() + 1;
  replace_neighbour(rot, fi, fi1, x);
  replace_neighbour(rot, fi1, fi, x);
  replace_neighbour(rot, fj, fj1, y);
  replace_neighbour(rot, fj1, fj, y);
  rot.push_back({y, fi1, fi});
  rot.push_back({fj, x, fj1});
  return PlaneCubicGraph::from_rotation(std::move(rot));
}

std::vector<Catalogue> generate(int nmax) {
  std::vector<Catalogue> result;
  std::map<std::string, PlaneCubicGraph> level;
  level.emplace(canonical_code(tetrahedron()), tetrahedron());
  for (int n = 4; n < nmax; n += 2) {
    const int child_order = n + 2;
    const int steps_left = (nmax - child_order) / 2;
    std::map<std::string, PlaneCubicGraph> next;
    for (const auto& [code, g] : level) {
      const FaceInventory inv = faces(g);
      for (const Face& face : inv.faces) {
        for (int i = 0; i < face.size(); ++i) {
          for (int j = i + 1; j < face.size(); ++j) {
            PlaneCubicGraph child = insert_edge(g, face, i, j);
            if (!can_still_finish(faces(child), steps_left)) continue;
            std::string child_code = canonical_code(child);
            next.try_emplace(std::move(child_code), std::move(child));
          }
        }
      }
    }
    level = std::move(next);
    if (child_order >= 8) {
      Catalogue cat;
      cat.n = child_order;
      for (const auto& [code, g] : level) {
        const FaceInventory inv = faces(g);
        if (!all_faces_fullerene(inv)) continue;
        ++cat.counts[FaceCounts{inv.p4, inv.p5, inv.p6}];
        cat.graphs.push_back(g);
        cat.codes.push_back(code);
      }
      result.push_back(std::move(cat));
    }
  }
  return result;
}

}  // namespace

std::vector<Catalogue> enumerate_fullerenes_up_to(int nmax, int bound) {
  check_request(nmax, bound);
  return generate(nmax);
}

Catalogue enumerate_fullerenes(int n, int bound) {
  check_request(n, bound);
  return std::move(generate(n).back());
}

Catalogue enumerate_fullerenes(int n) {
  return enumerate_fullerenes(n, enumeration_bound());
}

namespace {

// Builds rotation systems in breadth-first order. Vertex 0 starts with the
// dart 0 -> 1; each later vertex lists its discoverer first, and every other
// slot holds an already processed neighbour, a discovered but unprocessed
// vertex, or the next fresh label. Processing vertex v completes the
// rotation at v, which lets faces through processed vertices be traced and
// pruned early.
class RotationSearch {
 public:
  explicit RotationSearch(int n)
      : n_(n),
        rot_(n, Rotation{-1, -1, -1}),
        adjacent_(n * n, 0),
        degree_(n, 0) {}

  std::vector<PlaneCubicGraph> run() {
    next_ = 1;
    process(0);
    std::vector<PlaneCubicGraph> out;
    for (auto& [code, g] : found_) out.push_back(std::move(g));
    return out;
  }

 private:
  void link(int a, int b) {
    adjacent_[a * n_ + b] = adjacent_[b * n_ + a] = 1;
    ++degree_[a];
    ++degree_[b];
  }
  void unlink(int a, int b) {
    adjacent_[a * n_ + b] = adjacent_[b * n_ + a] = 0;
    --degree_[a];
    --degree_[b];
  }
  bool linked(int a, int b) const { return adjacent_[a * n_ + b] != 0; }

  int slot(int v, int w) const {
    const Rotation& r = rot_[v];
    return r[0] == w ? 0 : r[1] == w ? 1 : 2;
  }

  // Length of the maximal traced face segment through dart (x -> v); sets
  // closed when it is a whole face. Gives up past 7 darts.
  int segment(int x, int v, int processed, bool& closed) const {
    closed = false;
    int a = x, b = v, len = 1;
    while (b <= processed) {
      const int c = rot_[b][(slot(b, a) + 1) % 3];
      a = b;
      b = c;
      if (a == x && b == v) {
        closed = true;
        return len;
      }
      if (++len > 6) return len;
    }
    a = x;
    b = v;
    while (a <= processed) {
      const int p = rot_[a][(slot(a, b) + 2) % 3];
      b = a;
      a = p;
      if (++len > 6) return len;
    }
    return len;
  }

  bool faces_ok(int v) const {
    for (int x : rot_[v]) {
      bool closed = false;
      const int len = segment(x, v, v, closed);
      if (len > 6) return false;
      if (closed && len < 4) return false;
    }
    return true;
  }

  void process(int v) {
    if (v == n_) {
      accept();
      return;
    }
    if (v >= next_) return;  // disconnected
    std::vector<int> known;
    for (int u = 0; u < v; ++u) {
      if (linked(u, v) && u != rot_[v][0]) known.push_back(u);
    }
    if (v == 0) {
      rot_[0][0] = next_++;
      link(0, 1);
      rot_[1][0] = 0;
      fill(0, 1, known);
      rot_[1][0] = -1;
      unlink(0, 1);
      --next_;
      rot_[0][0] = -1;
    } else {
      fill(v, 1, known);
    }
  }

  void fill(int v, int s, std::vector<int>& known) {
    if (s == 3) {
      if (!known.empty()) return;
      if (faces_ok(v)) process(v + 1);
      return;
    }
    const int free_after = 2 - s;
    for (size_t i = 0; i < known.size(); ++i) {
      const int k = known[i];
      rot_[v][s] = k;
      known.erase(known.begin() + i);
      fill(v, s + 1, known);
      known.insert(known.begin() + i, k);
    }
    rot_[v][s] = -1;
    if (static_cast<int>(known.size()) > free_after) return;
    for (int w = v + 1; w < next_; ++w) {
      if (linked(v, w) || degree_[w] >= 3) continue;
      link(v, w);
      rot_[v][s] = w;
      fill(v, s + 1, known);
      unlink(v, w);
    }
    if (next_ < n_) {
      const int w = next_++;
      link(v, w);
      rot_[w][0] = v;
      rot_[v][s] = w;
      fill(v, s + 1, known);
      rot_[w][0] = -1;
      unlink(v, w);
      --next_;
    }
    rot_[v][s] = -1;
  }

  void accept() {
    std::optional<PlaneCubicGraph> built;
    try {
      built = PlaneCubicGraph::from_rotation(rot_);
    } catch (const Error&) {
      return;
    }
    const PlaneCubicGraph& g = *built;
    const FaceInventory inv = faces(g);
    if (!all_faces_fullerene(inv)) return;
    // Only codes rooted on a smallest face.
    int smallest = 7;
    for (const Face& f : inv.faces) smallest = std::min(smallest, f.size());
    int root_face = 0;
    {
      DirectedEdge d{0, 1};
      do {
        ++root_face;
        d = g.face_successor(d);
      } while (!(d.tail == 0 && d.head == 1));
    }
    if (root_face != smallest) return;
    std::string code = canonical_code(g);
    found_.try_emplace(std::move(code), g);
  }

  int n_;
  std::vector<Rotation> rot_;
  std::vector<char> adjacent_;
  std::vector<int> degree_;
  int next_ = 0;
  std::map<std::string, PlaneCubicGraph> found_;
};

}  // namespace

Catalogue naive_enumerate(int n) {
  check_request(n, kNaiveEnumerationBound);
  return make_catalogue(n, RotationSearch(n).run());
}

}  // namespace fullex
