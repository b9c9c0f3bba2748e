#include "fullex/families.h"

#include <algorithm>
#include <map>
#include <string>

#include "fullex/antikekule.h"
#include "fullex/error.h"
#include "fullex/extendability.h"

namespace fullex {

namespace {

// Rotation system from consistently oriented facial walks: within a face
// (u, v, w) the neighbour after u around v is w.
std::vector<Rotation> rotation_from_faces(
    int n, const std::vector<std::vector<int>>& face_list) {
  std::vector<std::map<int, int>> after(n);
  for (const auto& f : face_list) {
    const int d = static_cast<int>(f.size());
    for (int i = 0; i < d; ++i) {
      after[f[(i + 1) % d]][f[i]] = f[(i + 2) % d];
    }
  }
  std::vector<Rotation> rot(n);
  for (int v = 0; v < n; ++v) {
    if (after[v].size() != 3) {
      throw Error(ErrorCode::kInternal,
                  "tube face list leaves vertex " + std::to_string(v) +
                      " without three neighbours");
    }
    int w = after[v].begin()->first;
    for (int i = 0; i < 3; ++i) {
      rot[v][i] = w;
      w = after[v].at(w);
    }
  }
  return rot;
}

}  // namespace

Tube build_tube(int layers) {
  if (layers < 1) {
    throw Error(ErrorCode::kBadLayerCount,
                "a tube needs at least one layer, got " +
                    std::to_string(layers));
  }
  const int cap1 = 0;
  const int cap2 = 6 * layers + 7;
  const int n = 6 * layers + 8;
  auto z = [](int cycle, int p) { return 1 + 6 * cycle + ((p % 6) + 6) % 6; };
  // Cycle j sends spokes outward from positions of this parity.
  auto outward = [](int cycle) { return cycle % 2 == 0 ? 1 : 0; };

  // Faces listed counterclockwise in a drawing with cap1 at the centre and
  // cap2 outermost.
  std::vector<std::vector<int>> face_list;
  for (int a = 0; a < 6; a += 2) {
    face_list.push_back({cap1, z(0, a), z(0, a + 1), z(0, a + 2)});
  }
  for (int j = 0; j < layers; ++j) {
    for (int p = outward(j); p < 6; p += 2) {
      face_list.push_back({z(j, p), z(j + 1, p), z(j + 1, p + 1),
                           z(j + 1, p + 2), z(j, p + 2), z(j, p + 1)});
    }
  }
  for (int a = 1 - outward(layers - 1); a < 6; a += 2) {
    face_list.push_back(
        {cap2, z(layers, a + 2), z(layers, a + 1), z(layers, a)});
  }

  TubeDescriptor desc;
  desc.n_layers = layers;
  desc.cap_centers = {cap1, cap2};
  for (int j = 0; j <= layers; ++j) {
    std::vector<int> cycle;
    for (int p = 0; p < 6; ++p) cycle.push_back(z(j, p));
    desc.concentric_cycles.push_back(std::move(cycle));
  }
  for (int j = 0; j < layers; ++j) {
    std::vector<Edge> spokes;
    for (int p = outward(j); p < 6; p += 2) {
      spokes.emplace_back(z(j, p), z(j + 1, p));
    }
    std::sort(spokes.begin(), spokes.end());
    desc.traversed_edges.push_back(std::move(spokes));
  }
  return {PlaneCubicGraph::from_rotation(rotation_from_faces(n, face_list)),
          std::move(desc)};
}

std::optional<TubeDescriptor> recognize_tube(const PlaneCubicGraph& g) {
  const int n = g.order();
  if (n < 14 || (n - 8) % 6 != 0) return std::nullopt;
  const FaceInventory inv = faces(g);
  if (inv.p4 != 6 || inv.p5 != 0) return std::nullopt;
  const int layers = (n - 8) / 6;
  Tube tube = build_tube(layers);
  const auto map = find_isomorphism(tube.graph, g);
  if (!map) return std::nullopt;

  TubeDescriptor desc = std::move(tube.descriptor);
  for (int& c : desc.cap_centers) c = (*map)[c];
  for (auto& cycle : desc.concentric_cycles) {
    for (int& v : cycle) v = (*map)[v];
  }
  for (auto& gap : desc.traversed_edges) {
    for (Edge& e : gap) e = Edge((*map)[e.u], (*map)[e.v]);
    std::sort(gap.begin(), gap.end());
  }
  return desc;
}

TubePmReport verify_tube_pm_structure(int layers) {
  if (layers < 1) {
    throw Error(ErrorCode::kBadLayerCount, "layers must be at least 1");
  }
  if (layers > 6) {
    throw Error(ErrorCode::kTooLarge, "tube matching check supports <= 6 layers");
  }
  const Tube tube = build_tube(layers);
  const auto& gaps = tube.descriptor.traversed_edges;

  TubePmReport report;
  report.layers = layers;
  report.traversed_product = 1;
  for (const auto& gap : gaps) report.traversed_product *= gap.size();
  report.selections = report.traversed_product;
  std::vector<std::uint64_t> tally(report.selections, 0);

  report.one_traversed_per_gap = true;
  for_each_perfect_matching(tube.graph.graph(), [&](const Matching& m) {
    ++report.perfect_matchings;
    std::uint64_t key = 0;
    std::uint64_t scale = 1;
    for (const auto& gap : gaps) {
      int used = 0;
      int which = 0;
      for (int i = 0; i < static_cast<int>(gap.size()); ++i) {
        if (std::binary_search(m.edges.begin(), m.edges.end(), gap[i])) {
          ++used;
          which = i;
        }
      }
      if (used != 1) {
        report.one_traversed_per_gap = false;
        return false;
      }
      key += scale * which;
      scale *= gap.size();
    }
    ++tally[key];
    return false;
  });

  report.min_extensions = *std::min_element(tally.begin(), tally.end());
  report.max_extensions = *std::max_element(tally.begin(), tally.end());
  report.unique_extension = report.one_traversed_per_gap &&
                            report.min_extensions == 1 &&
                            report.max_extensions == 1;
  report.count_is_product =
      report.perfect_matchings == report.traversed_product;
  return report;
}

std::vector<SporadicCandidate> sporadic_candidates(const Catalogue& catalogue) {
  std::vector<SporadicCandidate> out;
  for (const PlaneCubicGraph& g : catalogue.graphs) {
    if (recognize_tube(g)) continue;
    const ExtendabilityReport rep = is_k_extendable(g.graph(), 2);
    if (rep.extendable) continue;
    const AntiKekuleResult ak = anti_kekule_number(g);
    if (ak.number != 3) continue;
    out.push_back({g, g.order(), *rep.witness, ak.number});
  }
  return out;
}

std::vector<SporadicCandidate> sporadic_candidates(int n) {
  if (std::find(kSporadicSizes.begin(), kSporadicSizes.end(), n) ==
      kSporadicSizes.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "sporadic sizes are 12, 14, 18 and 20, got " +
                    std::to_string(n));
  }
  if (n > enumeration_bound()) {
    throw Error(ErrorCode::kEnumerationUnavailable,
                "n=" + std::to_string(n) + " is beyond the enumeration bound");
  }
  return sporadic_candidates(enumerate_fullerenes(n));
}

}  // namespace fullex
