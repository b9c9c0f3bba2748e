#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fullex/enumerator.h"
#include "fullex/error.h"
#include "fullex/families.h"
#include "fullex/graph.h"
#include "fullex/plane_graph.h"
#include "support.h"

namespace fullex {
namespace {

using testing::cube;
using testing::dodecahedron;
using testing::tetrahedron;
using testing::triangular_prism;

ErrorCode error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInternal;
}

TEST(SimpleGraph, NormalizesAndSortsEdges) {
  const std::vector<Edge> edges = {{2, 1}, {0, 1}, {2, 0}};
  const SimpleGraph g(3, edges);
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(g.edges().front(), Edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_EQ(g.edge_index(Edge(1, 2)), 2);
  EXPECT_FALSE(g.edge_index(Edge(0, 0)).has_value());
}

TEST(SimpleGraph, RejectsLoopsRepeatsAndRange) {
  const std::vector<Edge> loop = {{1, 1}};
  const std::vector<Edge> repeat = {{0, 1}, {1, 0}};
  const std::vector<Edge> range = {{0, 5}};
  EXPECT_EQ(error_of([&] { SimpleGraph(3, loop); }),
            ErrorCode::kSelfLoopOrMultiEdge);
  EXPECT_EQ(error_of([&] { SimpleGraph(3, repeat); }),
            ErrorCode::kSelfLoopOrMultiEdge);
  EXPECT_EQ(error_of([&] { SimpleGraph(3, range); }),
            ErrorCode::kInvalidArgument);
}

TEST(SimpleGraph, VertexDeletionKeepsOriginalIds) {
  const SimpleGraph g = testing::path(5);
  const std::vector<int> removed = {2};
  const auto rest = g.without_vertices(removed);
  EXPECT_EQ(rest.graph.order(), 4);
  EXPECT_EQ(rest.original, (std::vector<int>{0, 1, 3, 4}));
  EXPECT_FALSE(rest.graph.is_connected());
  EXPECT_EQ(rest.graph.components().size(), 2u);
}

TEST(PlaneCubicGraph, CubeHasSixQuadrilaterals) {
  const FaceInventory inv = faces(cube());
  EXPECT_EQ(inv.faces.size(), 6u);
  EXPECT_EQ(inv.p4, 6);
  EXPECT_EQ(inv.p5, 0);
  EXPECT_EQ(inv.p6, 0);
}

TEST(PlaneCubicGraph, TetrahedronHasFourTriangles) {
  const FaceInventory inv = faces(tetrahedron());
  ASSERT_EQ(inv.faces.size(), 4u);
  for (const Face& f : inv.faces) EXPECT_EQ(f.size(), 3);
}

TEST(PlaneCubicGraph, DodecahedronHasTwelvePentagons) {
  const FaceInventory inv = faces(dodecahedron());
  EXPECT_EQ(inv.faces.size(), 12u);
  EXPECT_EQ(inv.p5, 12);
}

TEST(PlaneCubicGraph, FacesCoverEveryDartOnce) {
  const PlaneCubicGraph g = dodecahedron();
  std::set<std::pair<int, int>> darts;
  for (const Face& f : faces(g).faces) {
    for (int i = 0; i < f.size(); ++i) {
      const int a = f.vertices[i];
      const int b = f.vertices[(i + 1) % f.size()];
      EXPECT_TRUE(darts.emplace(a, b).second);
    }
  }
  EXPECT_EQ(darts.size(), 2u * g.size());
}

TEST(PlaneCubicGraph, RejectsRepeatedNeighbour) {
  std::vector<Rotation> rot = cube().rotations();
  rot[0] = {rot[0][0], rot[0][0], rot[0][1]};
  EXPECT_EQ(error_of([&] { PlaneCubicGraph::from_rotation(rot); }),
            ErrorCode::kSelfLoopOrMultiEdge);
}

TEST(PlaneCubicGraph, RejectsAsymmetricAdjacency) {
  // 0 lists 1 but 1 does not list 0.
  const std::vector<Rotation> rot = {
      {1, 2, 3}, {2, 3, 4}, {0, 1, 3}, {0, 2, 1}, {1, 5, 5}, {4, 4, 4}};
  const ErrorCode code =
      error_of([&] { PlaneCubicGraph::from_rotation(rot); });
  EXPECT_TRUE(code == ErrorCode::kNotSymmetric ||
              code == ErrorCode::kSelfLoopOrMultiEdge);
  std::vector<Rotation> asym = tetrahedron().rotations();
  asym[1] = {2, 3, 3};
  EXPECT_EQ(error_of([&] { PlaneCubicGraph::from_rotation(asym); }),
            ErrorCode::kSelfLoopOrMultiEdge);
}

TEST(PlaneCubicGraph, RejectsMissingBackReference) {
  // Cube with vertex 0's neighbour 1 replaced by 6; 6 does not list 0.
  std::vector<Rotation> rot = cube().rotations();
  for (int& w : rot[0]) {
    if (w == 1) w = 6;
  }
  EXPECT_EQ(error_of([&] { PlaneCubicGraph::from_rotation(rot); }),
            ErrorCode::kNotSymmetric);
}

TEST(PlaneCubicGraph, RejectsNonSphericalEmbedding) {
  // K_{3,3} embeds on no sphere.
  const std::vector<Rotation> k33 = {{3, 4, 5}, {3, 4, 5}, {3, 4, 5},
                                     {0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
  EXPECT_EQ(error_of([&] { PlaneCubicGraph::from_rotation(k33); }),
            ErrorCode::kNotSpherical);
  // A cube rotation with one vertex reversed raises the genus.
  std::vector<Rotation> twisted = cube().rotations();
  std::swap(twisted[0][0], twisted[0][1]);
  EXPECT_EQ(error_of([&] { PlaneCubicGraph::from_rotation(twisted); }),
            ErrorCode::kNotSpherical);
}

TEST(PlaneCubicGraph, RejectsNonCubicInput) {
  const std::vector<std::vector<int>> p3 = {{1}, {0, 2}, {1}};
  EXPECT_EQ(error_of([&] { PlaneCubicGraph::from_rotation(p3); }),
            ErrorCode::kNotCubic);
}

TEST(ValidateFullerene, AcceptsCubeAndTube) {
  const FaceInventory cube_inv = validate_fullerene(cube());
  EXPECT_EQ(2 * cube_inv.p4 + cube_inv.p5, 12);
  const FaceInventory tube_inv = validate_fullerene(build_tube(1).graph);
  EXPECT_EQ(tube_inv.p4, 6);
  EXPECT_EQ(tube_inv.p5, 0);
}

TEST(ValidateFullerene, RejectsTriangles) {
  EXPECT_EQ(error_of([] { validate_fullerene(tetrahedron()); }),
            ErrorCode::kBadFaceSize);
  EXPECT_EQ(error_of([] { validate_fullerene(triangular_prism()); }),
            ErrorCode::kBadFaceSize);
}

TEST(CanonicalCode, InvariantUnderRelabellingAndMirror) {
  std::mt19937 rng(7);
  for (const PlaneCubicGraph& g : {cube(), dodecahedron(),
                                   build_tube(2).graph}) {
    const std::string code = canonical_code(g);
    for (int trial = 0; trial < 100; ++trial) {
      const PlaneCubicGraph h = testing::shuffled(g, rng);
      EXPECT_EQ(canonical_code(h), code);
      EXPECT_EQ(canonical_code(h.mirror()), code);
    }
  }
}

TEST(CanonicalCode, LayoutIsOrderThenNeighbourLabels) {
  const std::string code = canonical_code(cube());
  ASSERT_EQ(code.size(), 1u + 3u * 8u);
  EXPECT_EQ(static_cast<unsigned char>(code[0]), 8);
}

TEST(CanonicalCode, DistinguishesDifferentGraphs) {
  EXPECT_NE(canonical_code(cube()), canonical_code(build_tube(1).graph));
  EXPECT_FALSE(is_isomorphic(cube(), build_tube(1).graph));
}

TEST(Isomorphism, AgreesWithBacktrackingOracle) {
  std::mt19937 rng(11);
  const PlaneCubicGraph d = dodecahedron();
  EXPECT_TRUE(is_isomorphic(d, d));
  const PlaneCubicGraph h = testing::shuffled(d, rng);
  const auto map = find_isomorphism(d, h);
  ASSERT_TRUE(map.has_value());
  for (const Edge& e : d.edges()) {
    EXPECT_TRUE(h.graph().has_edge((*map)[e.u], (*map)[e.v]));
  }
  EXPECT_TRUE(testing::brute_isomorphic(d.graph(), h.graph()));
}

TEST(Chirality, MirrorsShareCanonicalCode) {
  int chiral = 0;
  for (const Catalogue& cat : enumerate_fullerenes_up_to(20, 20)) {
    for (const PlaneCubicGraph& g : cat.graphs) {
      const PlaneCubicGraph m = g.mirror();
      EXPECT_EQ(canonical_code(m), canonical_code(g));
      EXPECT_EQ(oriented_code(m) != oriented_code(g), is_chiral(g));
      if (is_chiral(g)) {
        ++chiral;
        EXPECT_TRUE(testing::brute_isomorphic(g.graph(), m.graph()));
      }
    }
  }
  EXPECT_GT(chiral, 0);
}

TEST(Isomorphism, DistinctCatalogueMembersAreNotIsomorphic) {
  const auto graphs = enumerate_fullerenes(20, 20).graphs;
  for (size_t i = 0; i + 1 < graphs.size(); i += 3) {
    EXPECT_FALSE(is_isomorphic(graphs[i], graphs[i + 1]));
    EXPECT_FALSE(
        testing::brute_isomorphic(graphs[i].graph(), graphs[i + 1].graph()));
  }
}

TEST(Connectivity, SmallExamples) {
  EXPECT_EQ(connectivity(cube()), 3);
  EXPECT_EQ(connectivity(tetrahedron()), 3);
  EXPECT_EQ(connectivity(testing::path(4)), 1);
  EXPECT_EQ(connectivity(testing::cycle(6)), 2);
}

TEST(Girth, SmallExamples) {
  EXPECT_EQ(girth(tetrahedron()), 3);
  EXPECT_EQ(girth(cube()), 4);
  EXPECT_EQ(girth(dodecahedron()), 5);
  EXPECT_EQ(girth(testing::path(4)), 0);
}

TEST(ShortCycles, FacialInFullerenes) {
  EXPECT_TRUE(short_cycles_facial(cube()));
  EXPECT_TRUE(short_cycles_facial(dodecahedron()));
  EXPECT_TRUE(short_cycles_facial(build_tube(2).graph));
}

TEST(EdgeCuts, CubeHasOnlyTrivialThreeCuts) {
  const auto cuts = edge_cuts_up_to(cube(), 3);
  EXPECT_EQ(cuts.size(), 8u);
  for (const EdgeCut& c : cuts) {
    EXPECT_TRUE(c.trivial);
    EXPECT_EQ(c.edges.size(), 3u);
  }
}

TEST(EdgeCuts, TubeAddsTraversedCut) {
  const Tube t = build_tube(1);
  const auto cuts = edge_cuts_up_to(t.graph, 3);
  int nontrivial = 0;
  for (const EdgeCut& c : cuts) {
    if (c.trivial) continue;
    ++nontrivial;
    EXPECT_EQ(c.edges, t.descriptor.traversed_edges[0]);
  }
  EXPECT_EQ(nontrivial, 1);
  EXPECT_EQ(cuts.size(), 15u);
}

TEST(EdgeCuts, ArgumentRange) {
  EXPECT_EQ(error_of([] { edge_cuts_up_to(cube(), 5); }),
            ErrorCode::kInvalidArgument);
}

TEST(CyclicCuts, Examples) {
  EXPECT_TRUE(has_cyclic_cut_leq3(build_tube(2).graph));
  EXPECT_FALSE(has_cyclic_cut_leq3(cube()));
  EXPECT_FALSE(has_cyclic_cut_leq3(dodecahedron()));
}

}  // namespace
}  // namespace fullex
