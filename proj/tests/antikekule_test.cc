#include <gtest/gtest.h>

#include "fullex/antikekule.h"
#include "fullex/enumerator.h"
#include "fullex/error.h"
#include "fullex/extendability.h"
#include "fullex/families.h"
#include "support.h"

namespace fullex {
namespace {

TEST(AntiKekuleSet, EmptyAndSingleEdgeSetsFail) {
  const PlaneCubicGraph c = testing::cube();
  EXPECT_FALSE(is_anti_kekule_set(c.graph(), {}));
  for (const Edge& e : c.edges()) {
    const std::vector<Edge> one = {e};
    EXPECT_FALSE(is_anti_kekule_set(c.graph(), one));
  }
}

TEST(AntiKekuleSet, DisconnectingSetIsNotAntiKekule) {
  // The three edges at a vertex isolate it.
  const SimpleGraph g = testing::cube().graph();
  std::vector<Edge> star;
  for (int w : g.neighbors(0)) star.emplace_back(0, w);
  EXPECT_FALSE(is_anti_kekule_set(g, star));
}

TEST(AntiKekuleSet, ForeignEdge) {
  const std::vector<Edge> bad = {Edge(0, 6)};
  try {
    is_anti_kekule_set(testing::cube().graph(), bad);
    ADD_FAILURE() << "no error raised";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEdgeNotInGraph);
  }
}

TEST(AntiKekuleNumber, CubeAndDodecahedronHaveFour) {
  const AntiKekuleResult cube = anti_kekule_number(testing::cube());
  EXPECT_EQ(cube.number, 4);
  EXPECT_TRUE(is_anti_kekule_set(testing::cube().graph(), cube.witness));
  EXPECT_EQ(anti_kekule_number(testing::dodecahedron()).number, 4);
  EXPECT_TRUE(min_anti_kekule_sets(testing::cube().graph(), 3).empty());
}

TEST(AntiKekuleNumber, AgreesWithBruteForce) {
  for (const Catalogue& cat : enumerate_fullerenes_up_to(14, 14)) {
    for (const PlaneCubicGraph& g : cat.graphs) {
      EXPECT_EQ(anti_kekule_number(g).number,
                testing::brute_anti_kekule(g.graph(), 4));
    }
  }
}

TEST(AntiKekuleNumber, WitnessIsLexicographicallyFirst) {
  for (const Catalogue& cat : enumerate_fullerenes_up_to(12, 12)) {
    for (const PlaneCubicGraph& g : cat.graphs) {
      const AntiKekuleResult r = anti_kekule_number(g);
      const auto all = min_anti_kekule_sets(g.graph(), r.number);
      ASSERT_FALSE(all.empty());
      EXPECT_EQ(all.front(), r.witness);
      for (const auto& set : all) {
        EXPECT_TRUE(is_anti_kekule_set(g.graph(), set));
      }
    }
  }
}

TEST(AntiKekuleNumber, SizeZeroSetsNeverExistInFullerenes) {
  EXPECT_TRUE(min_anti_kekule_sets(testing::cube().graph(), 0).empty());
}

TEST(AntiKekuleNumber, ExhaustedSearchIsAnInternalError) {
  try {
    anti_kekule_number(testing::cube().graph(), 3);
    ADD_FAILURE() << "no error raised";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInternal);
  }
}

TEST(AntiKekuleNumber, AkThreeGraphsAreNotTwoExtendable) {
  for (const Catalogue& cat : enumerate_fullerenes_up_to(16, 16)) {
    for (const PlaneCubicGraph& g : cat.graphs) {
      if (anti_kekule_number(g).number == 3) {
        EXPECT_FALSE(is_k_extendable(g.graph(), 2).extendable);
      }
    }
  }
}

}  // namespace
}  // namespace fullex
