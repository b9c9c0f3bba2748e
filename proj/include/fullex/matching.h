#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fullex/graph.h"

namespace fullex {

// Pairwise vertex-disjoint edges, kept sorted.
struct Matching {
  std::vector<Edge> edges;

  Matching() = default;
  explicit Matching(std::vector<Edge> e);

  int size() const { return static_cast<int>(edges.size()); }
  std::vector<int> vertices() const;
  bool operator==(const Matching&) const = default;
};

bool is_matching(const SimpleGraph& g, std::span<const Edge> edges);

// Edmonds' blossom algorithm.
Matching maximum_matching(const SimpleGraph& g);
bool has_perfect_matching(const SimpleGraph& g);

// Whether g - V(m) has a perfect matching. Throws Error(kNotAMatching) if m
// is not a matching of g.
bool extends_to_perfect(const SimpleGraph& g, const Matching& m);

inline constexpr int kMaxEnumerationOrder = 64;

// Exact backtracking count. Throws Error(kTooLarge) above
// kMaxEnumerationOrder vertices.
std::uint64_t count_perfect_matchings(const SimpleGraph& g);

// Streams every perfect matching once, in lexicographic order of the sorted
// edge lists. Returning true from visit stops the stream.
void for_each_perfect_matching(
    const SimpleGraph& g, const std::function<bool(const Matching&)>& visit);
std::vector<Matching> perfect_matchings(const SimpleGraph& g);

bool is_factor_critical(const SimpleGraph& g);

// Canonical Gallai-Edmonds partition: D = vertices missed by some maximum
// matching, A = neighbours of D outside D, C = the rest.
struct GallaiEdmonds {
  std::vector<int> d;
  std::vector<int> a;
  std::vector<int> c;
};
GallaiEdmonds gallai_edmonds(const SimpleGraph& g);

// A set S such that every component of G - S is factor-critical and S is
// matchable to those components. G has a perfect matching iff
// |S| == components.size().
struct DeficiencyCertificate {
  std::vector<int> barrier;                  // S
  std::vector<std::vector<int>> components;  // of G - S
  std::vector<bool> factor_critical;         // per component
  bool matchable = false;

  int surplus() const {
    return static_cast<int>(components.size()) -
           static_cast<int>(barrier.size());
  }
};

DeficiencyCertificate deficiency_certificate(const SimpleGraph& g);

// Re-checks a certificate from scratch: the components are exactly those of
// G - S, each is factor-critical, and S is matchable to them.
bool verify_certificate(const SimpleGraph& g, const DeficiencyCertificate& c);

// Certificate for g - removed, expressed in g's vertex ids.
DeficiencyCertificate certificate_after_removal(const SimpleGraph& g,
                                                std::span<const int> removed);
bool verify_certificate_after_removal(const SimpleGraph& g,
                                      std::span<const int> removed,
                                      const DeficiencyCertificate& c);

}  // namespace fullex
