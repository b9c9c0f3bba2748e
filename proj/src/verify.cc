#include "fullex/verify.h"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <thread>

#include "fullex/antikekule.h"
#include "fullex/catalogue_io.h"
#include "fullex/error.h"
#include "fullex/extendability.h"
#include "fullex/families.h"
#include "fullex/plane_graph.h"
#include "fullex/report_json.h"

namespace fullex {

using nlohmann::json;

namespace {

constexpr int kMaxCounterexamples = 25;
constexpr int kTubeSuiteLayers = 4;

struct Analysis {
  std::string code;
  int n = 0;
  std::optional<std::string> invalid;  // reason the entry was rejected
  FaceInventory inv;
  int connectivity = 0;
  int girth = 0;
  bool short_facial = false;
  std::vector<EdgeCut> nontrivial_3cuts;
  bool cyclic_cut = false;
  std::optional<TubeDescriptor> tube;
  bool ext1 = false;
  ExtendabilityReport ext2;
  ExtendabilityReport ext3;
  int extendability = 0;
  std::vector<json> pair_problems;
  int nonextendable_pairs = 0;
  AntiKekuleResult ak;
  bool ak_witness_ok = false;
};

int count_edges_between(const SimpleGraph& g, const std::vector<char>& in_a,
                        const std::vector<char>& in_b) {
  int count = 0;
  for (const Edge& e : g.edges()) {
    if ((in_a[e.u] && in_b[e.v]) || (in_a[e.v] && in_b[e.u])) ++count;
  }
  return count;
}

// Checks the certificate of one non-extendable pair: surplus two, every
// component factor-critical, each component sends at least three edges to
// S and V(pair), and the edge-count identity on those cuts.
std::optional<json> check_pair_certificate(const SimpleGraph& g,
                                           const NonExtendablePair& p) {
  const std::vector<int> removed = p.pair.vertices();
  const DeficiencyCertificate& c = p.certificate;
  json problem = {{"pair", edges_json(p.pair.edges)}};
  if (!verify_certificate_after_removal(g, removed, c)) {
    problem["detail"] = "certificate does not verify";
    return problem;
  }
  if (c.surplus() != 2) {
    problem["detail"] = "surplus " + std::to_string(c.surplus());
    return problem;
  }
  const int n = g.order();
  std::vector<char> in_x(n, 0), in_v(n, 0);
  for (int v : c.barrier) in_x[v] = 1;
  for (int v : removed) in_v[v] = 1;
  int cut_sum = 0;
  for (const auto& comp : c.components) {
    std::vector<char> in_c(n, 0);
    for (int v : comp) in_c[v] = 1;
    const int m = count_edges_between(g, in_c, in_x);
    const int r = count_edges_between(g, in_c, in_v);
    if (m + r < 3) {
      problem["detail"] = "component sends only " + std::to_string(m + r) +
                          " edges to S and V(pair)";
      return problem;
    }
    cut_sum += m + r;
  }
  const int x_size = static_cast<int>(c.barrier.size());
  const int expected = 3 * x_size + 12 -
                       2 * count_edges_between(g, in_x, in_x) -
                       2 * count_edges_between(g, in_v, in_v) -
                       2 * count_edges_between(g, in_x, in_v);
  if (cut_sum != expected) {
    problem["detail"] = "cut sum " + std::to_string(cut_sum) + " != " +
                        std::to_string(expected);
    return problem;
  }
  return std::nullopt;
}

Analysis analyze(const PlaneCubicGraph& pg, const std::string& code,
                 const GraphDigest* cached) {
  Analysis a;
  a.code = code;
  a.n = pg.order();
  try {
    validate_fullerene(pg);
  } catch (const Error& e) {
    a.invalid = e.what();
    return a;
  }
  try {
    const SimpleGraph& g = pg.graph();
    a.inv = faces(pg);
    a.connectivity = connectivity(pg);
    a.girth = girth(pg);
    a.short_facial = short_cycles_facial(pg);
    for (EdgeCut& cut : edge_cuts_up_to(pg, 3)) {
      if (cut.edges.size() == 3 && !cut.trivial) {
        a.nontrivial_3cuts.push_back(std::move(cut));
      }
    }
    a.cyclic_cut = has_cyclic_cut_leq3(pg);
    a.tube = recognize_tube(pg);
    a.ext1 = is_k_extendable(g, 1).extendable;
    a.ext2 = is_k_extendable(g, 2);
    a.ext3 = is_k_extendable(g, 3);
    a.extendability = !a.ext1 ? 0 : !a.ext2.extendable ? 1
                                  : !a.ext3.extendable ? 2
                                                       : 3;
    if (!a.ext2.extendable) {
      const auto pairs = nonextendable_pairs(g);
      a.nonextendable_pairs = static_cast<int>(pairs.size());
      for (const NonExtendablePair& p : pairs) {
        if (auto problem = check_pair_certificate(g, p)) {
          a.pair_problems.push_back(std::move(*problem));
        }
      }
    }
    if (cached && cached->anti_kekule) {
      a.ak = {*cached->anti_kekule, cached->anti_kekule_witness};
    } else {
      a.ak = anti_kekule_number(g);
    }
    // Cached witnesses are re-checked, so a stale cache cannot hide a fault.
    a.ak_witness_ok =
        static_cast<int>(a.ak.witness.size()) == a.ak.number &&
        is_anti_kekule_set(g, a.ak.witness);
  } catch (const Error& e) {
    a.invalid = std::string("analysis failed: ") + e.what();
  }
  return a;
}

json graph_ref(const Analysis& a, json detail) {
  return {{"code", a.code}, {"n", a.n}, {"detail", std::move(detail)}};
}

// A per-graph claim: `applies` selects the population, `check` returns the
// counterexample detail or nothing on success.
struct GraphClaim {
  const char* id;
  const char* anchor;
  std::function<bool(const Analysis&)> applies;
  std::function<std::optional<json>(const Analysis&)> check;
};

bool valid(const Analysis& a) { return !a.invalid; }

std::optional<json> fail_if(bool bad, json detail) {
  if (bad) return detail;
  return std::nullopt;
}

const std::vector<GraphClaim>& graph_claims() {
  static const std::vector<GraphClaim> claims = {
      {"catalogue_entry_valid", "catalogue members are (4,5,6)-fullerenes",
       [](const Analysis&) { return true; },
       [](const Analysis& a) {
         return fail_if(a.invalid.has_value(), a.invalid.value_or(""));
       }},
      {"face_identity", "face counts satisfy 2*p4 + p5 = 12", valid,
       [](const Analysis& a) {
         return fail_if(2 * a.inv.p4 + a.inv.p5 != 12, to_json(a.inv));
       }},
      {"connectivity_three", "vertex connectivity is 3", valid,
       [](const Analysis& a) {
         return fail_if(a.connectivity != 3,
                        json{{"connectivity", a.connectivity}});
       }},
      {"girth_at_least_four", "no triangles", valid,
       [](const Analysis& a) {
         return fail_if(a.girth < 4, json{{"girth", a.girth}});
       }},
      {"short_cycles_facial", "every 4-cycle and 5-cycle bounds a face", valid,
       [](const Analysis& a) {
         return fail_if(!a.short_facial, "non-facial 4- or 5-cycle");
       }},
      {"three_cuts_trivial", "every 3-edge-cut is trivial unless a tube",
       valid,
       [](const Analysis& a) {
         if (a.tube || a.nontrivial_3cuts.empty()) return std::optional<json>();
         return std::optional<json>(
             json{{"cut", edges_json(a.nontrivial_3cuts.front().edges)}});
       }},
      {"cyclic_cut_iff_tube",
       "cyclic edge cut of size <= 3 exactly for tubes", valid,
       [](const Analysis& a) {
         return fail_if(a.cyclic_cut != a.tube.has_value(),
                        json{{"cyclic_cut", a.cyclic_cut},
                             {"tube", a.tube.has_value()}});
       }},
      {"one_extendable", "every fullerene is 1-extendable", valid,
       [](const Analysis& a) { return fail_if(!a.ext1, "not 1-extendable"); }},
      {"not_three_extendable", "no planar graph is 3-extendable", valid,
       [](const Analysis& a) {
         return fail_if(a.ext3.extendable, "3-extendable");
       }},
      {"extendability_range", "extendability is 1 or 2", valid,
       [](const Analysis& a) {
         return fail_if(a.extendability < 1 || a.extendability > 2,
                        json{{"extendability", a.extendability}});
       }},
      {"ak_three_or_four", "anti-Kekule number is 3 or 4", valid,
       [](const Analysis& a) {
         return fail_if(a.ak.number < 3 || a.ak.number > 4, to_json(a.ak));
       }},
      {"ak_witness_valid", "reported anti-Kekule witness is a valid set",
       valid,
       [](const Analysis& a) {
         return fail_if(!a.ak_witness_ok, to_json(a.ak));
       }},
      {"ak3_non2ext", "anti-Kekule number 3 implies non-2-extendable",
       [](const Analysis& a) { return valid(a) && a.ak.number == 3; },
       [](const Analysis& a) {
         return fail_if(a.ext2.extendable, to_json(a.ak));
       }},
      {"p4_zero_2ext", "no quadrilaterals implies 2-extendable",
       [](const Analysis& a) { return valid(a) && a.inv.p4 == 0; },
       [](const Analysis& a) {
         return fail_if(!a.ext2.extendable, to_json(a.ext2));
       }},
      {"p5_zero_nontube_2ext",
       "no pentagons and not a tube implies 2-extendable",
       [](const Analysis& a) {
         return valid(a) && a.inv.p5 == 0 && !a.tube;
       },
       [](const Analysis& a) {
         return fail_if(!a.ext2.extendable, to_json(a.ext2));
       }},
      {"tube_non2ext", "tubes are non-2-extendable",
       [](const Analysis& a) { return valid(a) && a.tube.has_value(); },
       [](const Analysis& a) {
         return fail_if(a.ext2.extendable, "tube is 2-extendable");
       }},
      {"pair_certificates",
       "every non-extendable pair has a certificate with |C| = |S| + 2",
       [](const Analysis& a) { return valid(a) && !a.ext2.extendable; },
       [](const Analysis& a) {
         if (a.nonextendable_pairs == 0) {
           return std::optional<json>("no non-extendable pair listed");
         }
         if (a.pair_problems.empty()) return std::optional<json>();
         return std::optional<json>(a.pair_problems.front());
       }},
  };
  return claims;
}

void tally(ClaimRecord& rec, std::optional<json> problem) {
  ++rec.population;
  if (!problem) {
    ++rec.passes;
    return;
  }
  ++rec.failures;
  if (static_cast<int>(rec.counterexamples.size()) < kMaxCounterexamples) {
    rec.counterexamples.push_back(std::move(*problem));
  }
}

ClaimRecord make_record(const char* id, const char* anchor) {
  ClaimRecord rec;
  rec.claim = id;
  rec.anchor = anchor;
  return rec;
}

// Pairs of traversed edges within each gap that extend to no perfect
// matching; returns the first pair that does extend.
std::optional<json> same_gap_pairs_nonextendable(const Tube& tube) {
  const SimpleGraph& g = tube.graph.graph();
  for (size_t gap = 0; gap < tube.descriptor.traversed_edges.size(); ++gap) {
    const auto& edges = tube.descriptor.traversed_edges[gap];
    for (size_t i = 0; i < edges.size(); ++i) {
      for (size_t j = i + 1; j < edges.size(); ++j) {
        const Matching m({edges[i], edges[j]});
        if (extends_to_perfect(g, m)) {
          return json{{"gap", gap + 1}, {"pair", edges_json(m.edges)}};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<json> traversed_cuts_cyclic(const Tube& tube) {
  const SimpleGraph& g = tube.graph.graph();
  for (size_t gap = 0; gap < tube.descriptor.traversed_edges.size(); ++gap) {
    const auto& cut = tube.descriptor.traversed_edges[gap];
    const SimpleGraph rest = g.without_edges(cut);
    const auto comps = rest.components();
    json detail = {{"gap", gap + 1}, {"cut", edges_json(cut)}};
    if (comps.size() != 2 || cut.size() > 3) {
      detail["components"] = comps.size();
      return detail;
    }
    for (const auto& comp : comps) {
      const auto side = rest.induced(comp);
      // A connected side contains a cycle iff it is not a tree.
      if (side.graph.size() < side.graph.order()) {
        detail["acyclic_side"] = comp;
        return detail;
      }
    }
  }
  return std::nullopt;
}

void add_tube_suite(VerificationReport& report) {
  ClaimRecord per_gap = make_record(
      "tube_pm_one_per_gap",
      "each tube perfect matching has one traversed edge per gap");
  ClaimRecord unique = make_record(
      "tube_pm_unique_extension",
      "each one-per-gap traversed selection extends to exactly one perfect "
      "matching");
  ClaimRecord product = make_record(
      "tube_pm_count_product",
      "tube perfect matching count equals the product of gap sizes");
  ClaimRecord witness = make_record(
      "tube_traversed_witness",
      "tubes are non-2-extendable with a same-gap traversed witness pair");
  ClaimRecord cuts = make_record(
      "tube_cuts_cyclic", "each traversed-edge set is a cyclic cut of size 3");
  for (int layers = 1; layers <= kTubeSuiteLayers; ++layers) {
    const Tube tube = build_tube(layers);
    const TubePmReport pm = verify_tube_pm_structure(layers);
    const json pm_json = to_json(pm);
    auto ref = [&](json detail) {
      return json{{"layers", layers},
                  {"code", to_hex(canonical_code(tube.graph))},
                  {"n", tube.graph.order()},
                  {"detail", std::move(detail)}};
    };
    tally(per_gap, fail_if(!pm.one_traversed_per_gap, ref(pm_json)));
    tally(unique, fail_if(!pm.unique_extension, ref(pm_json)));
    tally(product, fail_if(!pm.count_is_product, ref(pm_json)));

    std::optional<json> problem;
    const ExtendabilityReport rep = is_k_extendable(tube.graph.graph(), 2);
    if (rep.extendable) {
      problem = ref("2-extendable");
    } else {
      bool same_gap = false;
      for (const auto& gap : tube.descriptor.traversed_edges) {
        same_gap = same_gap || std::all_of(rep.witness->edges.begin(),
                                           rep.witness->edges.end(),
                                           [&](const Edge& e) {
                                             return std::binary_search(
                                                 gap.begin(), gap.end(), e);
                                           });
      }
      if (!same_gap) {
        problem = ref(json{{"witness", edges_json(rep.witness->edges)}});
      } else if (auto bad = same_gap_pairs_nonextendable(tube)) {
        problem = ref(*bad);
      }
    }
    tally(witness, std::move(problem));
    auto cut_problem = traversed_cuts_cyclic(tube);
    tally(cuts, cut_problem ? std::optional<json>(ref(*cut_problem))
                            : std::nullopt);
  }
  for (ClaimRecord* rec : {&per_gap, &unique, &product, &witness, &cuts}) {
    report.claims.push_back(std::move(*rec));
  }
}

void add_size_claims(VerificationReport& report,
                     const std::vector<Catalogue>& catalogues,
                     const std::vector<std::vector<Analysis>>& analyses) {
  ClaimRecord ak3 = make_record(
      "ak3_every_size", "an anti-Kekule number 3 graph exists at every n >= 10");
  ClaimRecord tubes = make_record(
      "tubes_in_catalogue", "each tube within the bound is catalogued");
  ClaimRecord sporadic = make_record(
      "sporadic_sizes",
      "non-tube, non-2-extendable, anti-Kekule 3 graphs exist at 12, 14, 18, "
      "20 with surplus-2 factor-critical certificates");
  sporadic.notes = json::object();

  for (size_t i = 0; i < catalogues.size(); ++i) {
    const Catalogue& cat = catalogues[i];
    const auto& an = analyses[i];
    const int n = cat.n;
    if (n >= 10) {
      const bool found = std::any_of(an.begin(), an.end(), [](const auto& a) {
        return valid(a) && a.ak.number == 3;
      });
      tally(ak3, fail_if(!found, json{{"n", n}, {"detail", "no ak = 3 graph"}}));
    }
    if (n >= 14 && (n - 8) % 6 == 0) {
      const Tube tube = build_tube((n - 8) / 6);
      const std::string code = canonical_code(tube.graph);
      const bool present =
          std::find(cat.codes.begin(), cat.codes.end(), code) !=
          cat.codes.end();
      tally(tubes, fail_if(!present, json{{"n", n},
                                          {"code", to_hex(code)},
                                          {"detail", "tube missing"}}));
    }
    if (std::find(kSporadicSizes.begin(), kSporadicSizes.end(), n) !=
        kSporadicSizes.end()) {
      json listed = json::array();
      std::optional<json> problem;
      for (const Analysis& a : an) {
        if (!valid(a) || a.tube || a.ext2.extendable || a.ak.number != 3) {
          continue;
        }
        const DeficiencyCertificate& c = *a.ext2.certificate;
        const bool fc = std::all_of(c.factor_critical.begin(),
                                    c.factor_critical.end(),
                                    [](bool b) { return b; });
        listed.push_back({{"code", a.code},
                          {"witness", edges_json(a.ext2.witness->edges)},
                          {"barrier_size", c.barrier.size()},
                          {"component_count", c.components.size()},
                          {"all_factor_critical", fc}});
        if ((c.surplus() != 2 || !fc) && !problem) {
          problem = graph_ref(a, to_json(c));
        }
      }
      if (listed.empty() && !problem) {
        problem = json{{"n", n}, {"detail", "no candidate"}};
      }
      sporadic.notes[std::to_string(n)] = std::move(listed);
      tally(sporadic, std::move(problem));
    }
  }
  for (ClaimRecord* rec : {&ak3, &tubes, &sporadic}) {
    report.claims.push_back(std::move(*rec));
  }
}

std::vector<GraphDigest> digests_of(const std::vector<Analysis>& analyses) {
  std::vector<GraphDigest> out;
  for (const Analysis& a : analyses) {
    GraphDigest d;
    d.code = a.code;
    d.counts = {a.inv.p4, a.inv.p5, a.inv.p6};
    if (valid(a)) {
      d.anti_kekule = a.ak.number;
      d.anti_kekule_witness = a.ak.witness;
      d.extendability = a.extendability;
    }
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const ClaimRecord& c) { return c.failures == 0; });
}

const ClaimRecord* VerificationReport::find(const std::string& claim) const {
  for (const ClaimRecord& c : claims) {
    if (c.claim == claim) return &c;
  }
  return nullptr;
}

json VerificationReport::to_json() const {
  json claims_json = json::array();
  for (const ClaimRecord& c : claims) {
    json rec = {{"claim", c.claim},
                {"anchor", c.anchor},
                {"population", c.population},
                {"passes", c.passes},
                {"failures", c.failures},
                {"counterexamples", c.counterexamples}};
    if (!c.notes.is_null()) rec["notes"] = c.notes;
    claims_json.push_back(std::move(rec));
  }
  json sizes = json::object();
  for (const auto& [n, count] : catalogue_sizes) {
    sizes[std::to_string(n)] = count;
  }
  return {{"nmax", nmax},
          {"version", kLibraryVersion},
          {"catalogue_sizes", sizes},
          {"claims", claims_json},
          {"verdict", passed() ? "pass" : "fail"}};
}

std::vector<std::string> claim_ids() {
  std::vector<std::string> ids;
  for (const GraphClaim& c : graph_claims()) ids.emplace_back(c.id);
  for (const char* id :
       {"tube_pm_one_per_gap", "tube_pm_unique_extension",
        "tube_pm_count_product", "tube_traversed_witness", "tube_cuts_cyclic",
        "ak3_every_size", "tubes_in_catalogue", "sporadic_sizes"}) {
    ids.emplace_back(id);
  }
  return ids;
}

VerificationReport verify_catalogues(int nmax,
                                     const std::vector<Catalogue>& catalogues,
                                     const VerifyOptions& options) {
  // Flatten to one work list; results land by index, so scheduling cannot
  // affect the report.
  struct Job {
    size_t cat;
    size_t index;
  };
  std::vector<Job> jobs;
  std::vector<std::vector<Analysis>> analyses(catalogues.size());
  std::vector<std::map<std::string, GraphDigest>> cached(catalogues.size());
  for (size_t c = 0; c < catalogues.size(); ++c) {
    analyses[c].resize(catalogues[c].graphs.size());
    if (!options.cache_dir.empty()) {
      cached[c] = load_digests(options.cache_dir /
                               (catalogue_stem(catalogues[c].n) + ".json"));
    }
    for (size_t i = 0; i < catalogues[c].graphs.size(); ++i) {
      jobs.push_back({c, i});
    }
  }

  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k = next++; k < jobs.size(); k = next++) {
      const auto [c, i] = jobs[k];
      const Catalogue& cat = catalogues[c];
      const std::string code = i < cat.codes.size()
                                   ? to_hex(cat.codes[i])
                                   : to_hex(canonical_code(cat.graphs[i]));
      const auto hit = cached[c].find(code);
      analyses[c][i] = analyze(cat.graphs[i], code,
                               hit == cached[c].end() ? nullptr : &hit->second);
    }
  };
  const int workers = std::max(1, options.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  VerificationReport report;
  report.nmax = nmax;
  for (const Catalogue& cat : catalogues) {
    report.catalogue_sizes[cat.n] = static_cast<int>(cat.graphs.size());
  }
  for (const GraphClaim& claim : graph_claims()) {
    ClaimRecord rec = make_record(claim.id, claim.anchor);
    for (const auto& per_cat : analyses) {
      for (const Analysis& a : per_cat) {
        if (!claim.applies(a)) continue;
        auto problem = claim.check(a);
        tally(rec, problem ? std::optional<json>(graph_ref(a, *problem))
                           : std::nullopt);
      }
    }
    report.claims.push_back(std::move(rec));
  }
  add_tube_suite(report);
  add_size_claims(report, catalogues, analyses);

  if (!options.cache_dir.empty()) {
    for (size_t c = 0; c < catalogues.size(); ++c) {
      write_catalogue(options.cache_dir, catalogues[c],
                      digests_of(analyses[c]));
    }
  }
  return report;
}

VerificationReport verify_all(int nmax, const VerifyOptions& options) {
  const int bound = enumeration_bound();
  if (nmax > bound) {
    throw Error(ErrorCode::kBoundExceeded,
                "nmax=" + std::to_string(nmax) +
                    " exceeds the enumeration bound " + std::to_string(bound));
  }
  const int top = nmax - nmax % 2;
  if (top < 8) {
    throw Error(ErrorCode::kInvalidArgument, "nmax must be at least 8");
  }
  return verify_catalogues(nmax, enumerate_fullerenes_up_to(top, bound),
                           options);
}

}  // namespace fullex
