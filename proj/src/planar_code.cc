#include "fullex/planar_code.h"

#include "fullex/error.h"

namespace fullex {

std::string write_planar_code(std::span<const PlaneCubicGraph> graphs) {
  std::string out(kPlanarCodeHeader);
  for (const PlaneCubicGraph& g : graphs) {
    if (g.order() > 255) {
      throw Error(ErrorCode::kTooLarge,
                  "planar_code stores at most 255 vertices per graph");
    }
    out.push_back(static_cast<char>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
      for (int w : g.rotation(v)) out.push_back(static_cast<char>(w + 1));
      out.push_back('\0');
    }
  }
  return out;
}

std::vector<PlaneCubicGraph> read_planar_code(std::string_view bytes) {
  if (!bytes.starts_with(kPlanarCodeHeader)) {
    throw Error(ErrorCode::kMalformedInput, "missing >>planar_code<< header");
  }
  std::vector<PlaneCubicGraph> graphs;
  size_t pos = kPlanarCodeHeader.size();
  auto next = [&]() -> int {
    if (pos >= bytes.size()) {
      throw Error(ErrorCode::kMalformedInput,
                  "truncated record at byte " + std::to_string(pos));
    }
    return static_cast<unsigned char>(bytes[pos++]);
  };
  while (pos < bytes.size()) {
    const int n = next();
    if (n == 0) {
      throw Error(ErrorCode::kMalformedInput, "graph with zero vertices");
    }
    std::vector<std::vector<int>> rotation(n);
    for (int v = 0; v < n; ++v) {
      for (int w = next(); w != 0; w = next()) {
        if (w > n) {
          throw Error(ErrorCode::kMalformedInput,
                      "neighbour " + std::to_string(w) + " exceeds order " +
                          std::to_string(n));
        }
        rotation[v].push_back(w - 1);
      }
    }
    graphs.push_back(PlaneCubicGraph::from_rotation(rotation));
  }
  return graphs;
}

}  // namespace fullex
