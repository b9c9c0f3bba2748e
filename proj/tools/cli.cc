#include "cli.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fullex/antikekule.h"
#include "fullex/catalogue_io.h"
#include "fullex/enumerator.h"
#include "fullex/error.h"
#include "fullex/extendability.h"
#include "fullex/families.h"
#include "fullex/planar_code.h"
#include "fullex/report_json.h"
#include "fullex/verify.h"

namespace fullex::cli {

namespace {

using nlohmann::json;

// Reported as exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path, std::istream& in) {
  std::ostringstream bytes;
  if (path.empty() || path == "-") {
    bytes << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open " + path);
    bytes << file.rdbuf();
  }
  return bytes.str();
}

std::vector<PlaneCubicGraph> read_graphs(const std::string& path,
                                         std::istream& in) {
  return read_planar_code(read_all(path, in));
}

// Graphs handed to analysis commands must be fullerenes.
std::vector<PlaneCubicGraph> read_fullerenes(const std::string& path,
                                             std::istream& in) {
  auto graphs = read_graphs(path, in);
  for (const PlaneCubicGraph& g : graphs) validate_fullerene(g);
  return graphs;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

json graph_header(size_t index, const PlaneCubicGraph& g) {
  return {{"index", index},
          {"n", g.order()},
          {"code", to_hex(canonical_code(g))}};
}

int parse_int(const std::string& s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("not an integer: " + s);
  }
  return value;
}

// "u-v" names an edge by its 0-based endpoints, a bare integer by its index
// in the sorted edge list.
Edge parse_edge(const SimpleGraph& g, const std::string& token) {
  const auto dash = token.find('-');
  if (dash == std::string::npos) {
    const int index = parse_int(token);
    if (index < 0 || index >= g.size()) {
      throw UsageError("edge index out of range: " + token);
    }
    return g.edges()[index];
  }
  const int u = parse_int(token.substr(0, dash));
  const int v = parse_int(token.substr(dash + 1));
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v ||
      !g.has_edge(u, v)) {
    throw Error(ErrorCode::kEdgeNotInGraph, "no edge " + token);
  }
  return Edge(u, v);
}

int cmd_validate(const std::string& path, std::istream& in,
                 std::ostream& out) {
  const auto graphs = read_graphs(path, in);
  json list = json::array();
  int bad = 0;
  for (size_t i = 0; i < graphs.size(); ++i) {
    json entry = graph_header(i, graphs[i]);
    try {
      validate_fullerene(graphs[i]);
      entry["valid"] = true;
      const FaceInventory inv = faces(graphs[i]);
      entry["p4"] = inv.p4;
      entry["p5"] = inv.p5;
      entry["p6"] = inv.p6;
    } catch (const Error& e) {
      ++bad;
      entry["valid"] = false;
      entry["error"] = std::string(to_string(e.code()));
      entry["message"] = e.what();
    }
    list.push_back(std::move(entry));
  }
  emit(out, {{"graphs", list}, {"invalid", bad}, {"total", graphs.size()}});
  return bad == 0 ? kExitPass : kExitCounterexample;
}

int cmd_gen_tube(int layers, bool as_json, std::ostream& out) {
  const Tube tube = build_tube(layers);
  if (as_json) {
    json doc = to_json(tube.descriptor);
    doc["n"] = tube.graph.order();
    doc["code"] = to_hex(canonical_code(tube.graph));
    emit(out, doc);
  } else {
    out << write_planar_code(std::span(&tube.graph, 1));
  }
  return kExitPass;
}

int cmd_enumerate(int n, bool naive, bool plc, const std::string& out_dir,
                  std::ostream& out) {
  const Catalogue cat = naive ? naive_enumerate(n) : enumerate_fullerenes(n);
  std::vector<GraphDigest> digests;
  for (size_t i = 0; i < cat.graphs.size(); ++i) {
    const FaceInventory inv = faces(cat.graphs[i]);
    digests.push_back({to_hex(cat.codes[i]), {inv.p4, inv.p5, inv.p6}, {}, {},
                       {}});
  }
  if (!out_dir.empty()) write_catalogue(out_dir, cat, digests);
  if (plc) {
    out << write_planar_code(cat.graphs);
  } else {
    json doc = sidecar_json(cat, digests);
    doc["generator"] = naive ? "naive" : "augmentation";
    emit(out, doc);
  }
  return kExitPass;
}

int cmd_extend_check(const std::string& path, int k, std::istream& in,
                     std::ostream& out) {
  const auto graphs = read_fullerenes(path, in);
  json list = json::array();
  for (size_t i = 0; i < graphs.size(); ++i) {
    json entry = graph_header(i, graphs[i]);
    const ExtendabilityReport rep = is_k_extendable(graphs[i].graph(), k);
    entry["report"] = to_json(rep);
    if (const auto tube = recognize_tube(graphs[i])) {
      json t = {{"n_layers", tube->n_layers}};
      if (rep.witness) {
        json gap = nullptr;
        for (size_t g = 0; g < tube->traversed_edges.size(); ++g) {
          const auto& set = tube->traversed_edges[g];
          if (std::all_of(rep.witness->edges.begin(), rep.witness->edges.end(),
                          [&](const Edge& e) {
                            return std::binary_search(set.begin(), set.end(),
                                                      e);
                          })) {
            gap = g + 1;
          }
        }
        t["witness_gap"] = gap;
      }
      entry["tube"] = t;
    }
    list.push_back(std::move(entry));
  }
  emit(out, {{"graphs", list}, {"k", k}});
  return kExitPass;
}

int cmd_antikekule(const std::string& path, std::istream& in,
                   std::ostream& out) {
  const auto graphs = read_fullerenes(path, in);
  json list = json::array();
  for (size_t i = 0; i < graphs.size(); ++i) {
    json entry = graph_header(i, graphs[i]);
    entry["anti_kekule"] = to_json(anti_kekule_number(graphs[i]));
    list.push_back(std::move(entry));
  }
  emit(out, {{"graphs", list}});
  return kExitPass;
}

int cmd_certify(const std::string& path, const std::string& edge_list,
                std::istream& in, std::ostream& out) {
  const auto graphs = read_fullerenes(path, in);
  json list = json::array();
  for (size_t i = 0; i < graphs.size(); ++i) {
    const SimpleGraph& g = graphs[i].graph();
    std::vector<Edge> edges;
    std::stringstream tokens(edge_list);
    for (std::string token; std::getline(tokens, token, ',');) {
      if (!token.empty()) edges.push_back(parse_edge(g, token));
    }
    std::sort(edges.begin(), edges.end());
    if (!is_matching(g, edges)) {
      throw Error(ErrorCode::kNotAMatching, "edges " + edge_list +
                                                " do not form a matching");
    }
    const Matching m(edges);
    const std::vector<int> removed = m.vertices();
    const DeficiencyCertificate cert = certificate_after_removal(g, removed);
    json entry = graph_header(i, graphs[i]);
    entry["matching"] = edges_json(m.edges);
    entry["extends"] = extends_to_perfect(g, m);
    entry["certificate"] = to_json(cert);
    entry["surplus"] = cert.surplus();
    entry["verified"] = verify_certificate_after_removal(g, removed, cert);
    list.push_back(std::move(entry));
  }
  emit(out, {{"graphs", list}});
  return kExitPass;
}

int cmd_verify_all(int nmax, int jobs, const std::string& cache,
                   std::ostream& out) {
  VerifyOptions options;
  options.jobs = jobs;
  options.cache_dir = cache;
  const VerificationReport report = verify_all(nmax, options);
  emit(out, report.to_json());
  return report.passed() ? kExitPass : kExitCounterexample;
}

int cmd_canonical(const std::string& path, std::istream& in,
                  std::ostream& out) {
  const auto graphs = read_graphs(path, in);
  json list = json::array();
  for (size_t i = 0; i < graphs.size(); ++i) {
    json entry = graph_header(i, graphs[i]);
    entry["oriented_code"] = to_hex(oriented_code(graphs[i]));
    entry["chiral"] = is_chiral(graphs[i]);
    list.push_back(std::move(entry));
  }
  emit(out, {{"graphs", list}});
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Matching extendability toolkit for (4,5,6)-fullerenes",
               "fullex"};
  app.require_subcommand(1);

  int jobs = 1;
  app.add_option("--jobs", jobs, "worker threads")
      ->check(CLI::Range(1, 256));

  std::string file;
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "planar_code input, '-' for stdin");
  };

  auto* validate = app.add_subcommand("validate", "validate fullerenes");
  add_file(validate);

  int layers = 0;
  bool as_json = false;
  auto* gen_tube = app.add_subcommand("gen-tube", "write the tube T_n");
  gen_tube->add_option("n", layers, "number of hexagon layers")->required();
  gen_tube->add_flag("--json", as_json, "print the layer descriptor");

  int n = 0;
  bool naive = false;
  bool plc = false;
  std::string out_dir;
  auto* enumerate = app.add_subcommand("enumerate", "list fullerenes on n vertices");
  enumerate->add_option("n", n, "vertex count")->required();
  enumerate->add_flag("--naive", naive, "use the exhaustive rotation search");
  enumerate->add_flag("--plc", plc, "write planar_code instead of JSON");
  enumerate->add_option("--out", out_dir,
                        "directory for the .plc catalogue and sidecar");

  int k = 2;
  auto* extend = app.add_subcommand("extend-check", "decide k-extendability");
  add_file(extend);
  extend->add_option("--k", k, "matching size")
      ->check(CLI::Range(0, kMaxExtendabilityK));

  auto* ak = app.add_subcommand("antikekule", "anti-Kekule number");
  add_file(ak);

  std::string edge_list;
  auto* certify = app.add_subcommand(
      "certify", "deficiency certificate after removing a matching");
  add_file(certify);
  certify->add_option("--edges", edge_list,
                      "comma separated edges, u-v (0-based) or edge indices")
      ->required();

  int nmax = enumeration_bound();
  std::string cache;
  auto* verify = app.add_subcommand("verify-all", "check every claim");
  verify->add_option("--nmax", nmax, "largest vertex count");
  verify->add_option("--cache", cache, "catalogue and digest cache directory");
  verify->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::Range(1, 256));

  auto* canonical = app.add_subcommand("canonical", "canonical codes");
  add_file(canonical);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(file, in, out);
    if (*gen_tube) return cmd_gen_tube(layers, as_json, out);
    if (*enumerate) return cmd_enumerate(n, naive, plc, out_dir, out);
    if (*extend) return cmd_extend_check(file, k, in, out);
    if (*ak) return cmd_antikekule(file, in, out);
    if (*certify) return cmd_certify(file, edge_list, in, out);
    if (*verify) return cmd_verify_all(nmax, jobs, cache, out);
    if (*canonical) return cmd_canonical(file, in, out);
  } catch (const Error& e) {
    emit(err, {{"error", std::string(to_string(e.code()))},
               {"message", e.what()}});
    return kExitUsage;
  } catch (const UsageError& e) {
    emit(err, {{"error", "usage"}, {"message", e.what()}});
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    emit(err, {{"error", "io"}, {"message", e.what()}});
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fullex::cli
