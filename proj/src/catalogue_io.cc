#include "fullex/catalogue_io.h"

#include <fstream>
#include <sstream>

#include "fullex/error.h"
#include "fullex/planar_code.h"
#include "fullex/report_json.h"

namespace fullex {

using nlohmann::json;

std::string catalogue_stem(int n) {
  return "fullerenes_n" + std::to_string(n);
}

json sidecar_json(const Catalogue& cat,
                  const std::vector<GraphDigest>& digests) {
  json counts = json::array();
  for (const auto& [fc, count] : cat.counts) {
    counts.push_back(
        {{"p4", fc.p4}, {"p5", fc.p5}, {"p6", fc.p6}, {"count", count}});
  }
  json graphs = json::array();
  for (const GraphDigest& d : digests) {
    json g = {{"code", d.code},
              {"p4", d.counts.p4},
              {"p5", d.counts.p5},
              {"p6", d.counts.p6}};
    g["anti_kekule"] = d.anti_kekule ? json(*d.anti_kekule) : json(nullptr);
    g["anti_kekule_witness"] = edges_json(d.anti_kekule_witness);
    g["extendability"] =
        d.extendability ? json(*d.extendability) : json(nullptr);
    graphs.push_back(std::move(g));
  }
  return {{"version", kLibraryVersion},
          {"n", cat.n},
          {"total", cat.graphs.size()},
          {"counts", counts},
          {"graphs", graphs}};
}

void write_catalogue(const std::filesystem::path& dir, const Catalogue& cat,
                     const std::vector<GraphDigest>& digests) {
  std::filesystem::create_directories(dir);
  const std::string stem = catalogue_stem(cat.n);
  {
    std::ofstream plc(dir / (stem + ".plc"), std::ios::binary);
    plc << write_planar_code(cat.graphs);
  }
  std::ofstream side(dir / (stem + ".json"));
  side << sidecar_json(cat, digests).dump(2) << '\n';
}

Catalogue read_catalogue(const std::filesystem::path& plc, int n) {
  std::ifstream in(plc, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kMalformedInput, "cannot open " + plc.string());
  }
  std::ostringstream bytes;
  bytes << in.rdbuf();
  return make_catalogue(n, read_planar_code(bytes.str()));
}

std::map<std::string, GraphDigest> load_digests(
    const std::filesystem::path& sidecar) {
  std::map<std::string, GraphDigest> out;
  std::ifstream in(sidecar);
  if (!in) return out;
  const json doc = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object() ||
      doc.value("version", "") != kLibraryVersion) {
    return out;
  }
  try {
    for (const json& g : doc.at("graphs")) {
      GraphDigest d;
      d.code = g.at("code").get<std::string>();
      d.counts = {g.at("p4").get<int>(), g.at("p5").get<int>(),
                  g.at("p6").get<int>()};
      if (!g.at("anti_kekule").is_null()) {
        d.anti_kekule = g.at("anti_kekule").get<int>();
      }
      for (const json& e : g.at("anti_kekule_witness")) {
        d.anti_kekule_witness.emplace_back(e.at(0).get<int>(),
                                           e.at(1).get<int>());
      }
      if (!g.at("extendability").is_null()) {
        d.extendability = g.at("extendability").get<int>();
      }
      out.emplace(d.code, std::move(d));
    }
  } catch (const json::exception&) {
    out.clear();
  }
  return out;
}

}  // namespace fullex
