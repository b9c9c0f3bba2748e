#include "fullex/extendability.h"

#include <string>

#include "combinations.h"
#include "fullex/error.h"

namespace fullex {

namespace {

void require_perfect_matching(const SimpleGraph& g) {
  if (!has_perfect_matching(g)) {
    throw Error(ErrorCode::kNoPerfectMatching, "graph has no perfect matching");
  }
}

// Visits the k-matchings of g in lexicographic order of edge indices.
template <class Visit>
void for_each_k_matching(const SimpleGraph& g, int k, Visit&& visit) {
  const auto& edges = g.edges();
  std::vector<Edge> chosen;
  internal::for_each_combination(
      g.size(), k, [&](std::span<const int> idx) {
        chosen.clear();
        for (int i : idx) chosen.push_back(edges[i]);
        if (!is_matching(g, chosen)) return false;
        return visit(Matching(chosen));
      });
}

}  // namespace

ExtendabilityReport is_k_extendable(const SimpleGraph& g, int k) {
  if (k < 0 || k > kMaxExtendabilityK) {
    throw Error(ErrorCode::kInvalidArgument,
                "k must lie in [0, 3], got " + std::to_string(k));
  }
  if (!g.is_connected()) {
    throw Error(ErrorCode::kDisconnected, "graph is disconnected");
  }
  if (g.order() < 2 * k + 2) {
    throw Error(ErrorCode::kTooFewVertices,
                std::to_string(k) + "-extendability needs at least " +
                    std::to_string(2 * k + 2) + " vertices");
  }
  require_perfect_matching(g);

  ExtendabilityReport report;
  report.k = k;
  for_each_k_matching(g, k, [&](const Matching& m) {
    if (extends_to_perfect(g, m)) return false;
    report.extendable = false;
    report.witness = m;
    report.certificate = certificate_after_removal(g, m.vertices());
    return true;
  });
  return report;
}

int extendability_number(const SimpleGraph& g, int cap) {
  if (cap < 0 || cap > kMaxExtendabilityK) {
    throw Error(ErrorCode::kInvalidArgument, "cap must lie in [0, 3]");
  }
  require_perfect_matching(g);
  int best = 0;
  for (int k = 1; k <= cap; ++k) {
    if (g.order() < 2 * k + 2) break;
    if (!is_k_extendable(g, k).extendable) break;
    best = k;
  }
  return best;
}

std::vector<NonExtendablePair> nonextendable_pairs(const SimpleGraph& g) {
  require_perfect_matching(g);
  std::vector<NonExtendablePair> out;
  for_each_k_matching(g, 2, [&](const Matching& m) {
    if (!extends_to_perfect(g, m)) {
      out.push_back({m, certificate_after_removal(g, m.vertices())});
    }
    return false;
  });
  return out;
}

}  // namespace fullex
