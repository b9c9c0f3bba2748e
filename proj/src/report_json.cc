#include "fullex/report_json.h"

namespace fullex {

using nlohmann::json;

json edges_json(std::span<const Edge> edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

json to_json(const FaceInventory& inv) {
  json sizes = json::array();
  for (const Face& f : inv.faces) sizes.push_back(f.size());
  return {{"faces", inv.faces.size()},
          {"p4", inv.p4},
          {"p5", inv.p5},
          {"p6", inv.p6},
          {"face_sizes", sizes}};
}

json to_json(const DeficiencyCertificate& cert) {
  json sizes = json::array();
  for (const auto& comp : cert.components) sizes.push_back(comp.size());
  bool all_fc = true;
  for (bool fc : cert.factor_critical) all_fc = all_fc && fc;
  return {{"barrier", cert.barrier},
          {"components", cert.components},
          {"component_sizes", sizes},
          {"barrier_size", cert.barrier.size()},
          {"component_count", cert.components.size()},
          {"all_factor_critical", all_fc},
          {"matchable", cert.matchable}};
}

json to_json(const ExtendabilityReport& report) {
  json out = {{"k", report.k}, {"extendable", report.extendable}};
  out["witness"] =
      report.witness ? edges_json(report.witness->edges) : json(nullptr);
  out["certificate"] =
      report.certificate ? to_json(*report.certificate) : json(nullptr);
  return out;
}

json to_json(const AntiKekuleResult& result) {
  return {{"number", result.number}, {"witness", edges_json(result.witness)}};
}

json to_json(const TubeDescriptor& desc) {
  json gaps = json::array();
  // Gaps are numbered from 1, nearest the first cap.
  for (size_t g = 0; g < desc.traversed_edges.size(); ++g) {
    gaps.push_back(
        {{"gap", g + 1}, {"edges", edges_json(desc.traversed_edges[g])}});
  }
  return {{"n_layers", desc.n_layers},
          {"cap_centers", desc.cap_centers},
          {"concentric_cycles", desc.concentric_cycles},
          {"traversed_edges", gaps}};
}

json to_json(const TubePmReport& r) {
  return {{"layers", r.layers},
          {"perfect_matchings", r.perfect_matchings},
          {"traversed_product", r.traversed_product},
          {"one_traversed_per_gap", r.one_traversed_per_gap},
          {"selections", r.selections},
          {"min_extensions", r.min_extensions},
          {"max_extensions", r.max_extensions},
          {"unique_extension", r.unique_extension},
          {"count_is_product", r.count_is_product}};
}

}  // namespace fullex
