#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "fullex/enumerator.h"

namespace fullex {

struct ClaimRecord {
  std::string claim;
  std::string anchor;
  int population = 0;
  int passes = 0;
  int failures = 0;
  std::vector<nlohmann::json> counterexamples;
  // Extra data a claim publishes, e.g. every sporadic candidate found.
  nlohmann::json notes;
};

struct VerificationReport {
  int nmax = 0;
  std::map<int, int> catalogue_sizes;
  std::vector<ClaimRecord> claims;

  bool passed() const;
  const ClaimRecord* find(const std::string& claim) const;
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  int jobs = 1;
  // When set, catalogues and analysis digests are written here, and digests
  // already present are reused.
  std::filesystem::path cache_dir;
};

// Enumerates every catalogue up to nmax and checks all claims. Throws
// Error(kBoundExceeded) when nmax exceeds the enumeration bound.
VerificationReport verify_all(int nmax, const VerifyOptions& options = {});

// Checks all claims over the given catalogues, which are not re-validated.
VerificationReport verify_catalogues(int nmax,
                                     const std::vector<Catalogue>& catalogues,
                                     const VerifyOptions& options = {});

// Identifiers of every registered claim, in report order.
std::vector<std::string> claim_ids();

}  // namespace fullex
