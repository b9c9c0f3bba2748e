#pragma once

#include <optional>
#include <vector>

#include "fullex/graph.h"
#include "fullex/matching.h"

namespace fullex {

inline constexpr int kMaxExtendabilityK = 3;

struct ExtendabilityReport {
  int k = 0;
  bool extendable = true;
  // First k-matching (lexicographic by edge index) with no perfect matching
  // extension, and a certificate for g - V(witness) in g's vertex ids.
  std::optional<Matching> witness;
  std::optional<DeficiencyCertificate> certificate;
};

// Requires g connected, |V| >= 2k + 2, a perfect matching and 0 <= k <= 3.
ExtendabilityReport is_k_extendable(const SimpleGraph& g, int k);

// Largest k <= cap for which g is k-extendable; 0 if not 1-extendable.
int extendability_number(const SimpleGraph& g, int cap = kMaxExtendabilityK);

struct NonExtendablePair {
  Matching pair;
  DeficiencyCertificate certificate;
};

// Every 2-matching without a perfect matching extension, lexicographic.
std::vector<NonExtendablePair> nonextendable_pairs(const SimpleGraph& g);

}  // namespace fullex
