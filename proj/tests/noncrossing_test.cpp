#include <gtest/gtest.h>

#include "matchgeo/matchgeo.hpp"
#include "matchgeo/verify.hpp"

using namespace matchgeo;

namespace {

Matching lit(const char* text) { return parse_literal(text); }

// Pairwise chord test, the definition the stack scan must agree with.
bool no_pair_crosses(const Matching& M) {
  const auto es = M.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (edges_cross(es[i], es[j], M.size())) return false;
    }
  }
  return true;
}

}  // namespace

TEST(EdgesCross, Examples) {
  EXPECT_TRUE(edges_cross(Edge{1, 3}, Edge{2, 4}, 2));
  EXPECT_FALSE(edges_cross(Edge{1, 2}, Edge{3, 4}, 2));
  EXPECT_FALSE(edges_cross(Edge{1, 6}, Edge{2, 4}, 3));
  try {
    edges_cross(Edge{1, 2}, Edge{2, 3}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SharedVertex);
  }
  EXPECT_THROW(edges_cross(Edge{1, 2}, Edge{3, 9}, 2), Error);
}

TEST(EdgesCross, Symmetric) {
  const int m = 4;
  for (Vertex a = 1; a <= 2 * m; ++a) {
    for (Vertex b = a + 1; b <= 2 * m; ++b) {
      for (Vertex c = 1; c <= 2 * m; ++c) {
        for (Vertex d = c + 1; d <= 2 * m; ++d) {
          if (c == a || c == b || d == a || d == b) continue;
          EXPECT_EQ(edges_cross(Edge{a, b}, Edge{c, d}, m), edges_cross(Edge{c, d}, Edge{a, b}, m));
        }
      }
    }
  }
}

TEST(IsNoncrossing, Examples) {
  EXPECT_TRUE(is_noncrossing(lit("1-2,3-4,5-6")));
  EXPECT_FALSE(is_noncrossing(lit("1-3,2-4")));
  int count = 0;
  for_each_matching(3, [&](const Matching& M) { count += is_noncrossing(M); });
  EXPECT_EQ(count, 5);
}

TEST(IsNoncrossing, CatalanCountsAndPairwiseDefinition) {
  const std::size_t catalan_numbers[] = {1, 2, 5, 14, 42, 132, 429};
  for (int m = 1; m <= 7; ++m) {
    EXPECT_EQ(noncrossing_matchings(m).size(), catalan_numbers[m - 1]);
    EXPECT_EQ(Count(catalan_numbers[m - 1]), catalan(m));
    if (m <= 5) {
      for_each_matching(m, [](const Matching& M) { EXPECT_EQ(is_noncrossing(M), no_pair_crosses(M)); });
    }
  }
}

TEST(BoundaryPair, Examples) {
  const auto [a2, b2] = boundary_pair(2);
  EXPECT_EQ(a2, lit("1-2,3-4"));
  EXPECT_EQ(b2, lit("1-4,2-3"));
  const auto [a3, b3] = boundary_pair(3);
  EXPECT_EQ(distance(a3, b3), 2);
  EXPECT_EQ(union_decompose(a3, b3).l(), 1);
  const auto [a4, b4] = boundary_pair(4);
  EXPECT_EQ(mm_geodesic_count(a4, b4), 16);
  for (int m = 2; m <= 8; ++m) {
    const auto [a, b] = boundary_pair(m);
    EXPECT_TRUE(is_noncrossing(a));
    EXPECT_TRUE(is_noncrossing(b));
    EXPECT_EQ(union_decompose(a, b).l(), 1);
  }
  EXPECT_THROW(boundary_pair(1), Error);
}

TEST(MmDistance, Examples) {
  const Matching a = lit("1-2,3-4,5-6");
  EXPECT_EQ(mm_distance(a, a), 0);
  const auto [a3, b3] = boundary_pair(3);
  EXPECT_EQ(mm_distance(a3, b3), 2);
  // Two 4-cycles: (1 2 3 4) and (5 6 7 8).
  const Matching x = lit("1-2,3-4,5-6,7-8");
  const Matching y = lit("1-4,2-3,5-8,6-7");
  ASSERT_EQ(union_decompose(x, y).l(), 2);
  EXPECT_EQ(mm_distance(x, y), 2);
  EXPECT_EQ(mm_bfs_distance(x, y), 2);
  try {
    mm_distance(lit("1-3,2-4"), lit("1-2,3-4"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotNonCrossing);
  }
}

TEST(MmDistance, EqualsSubgraphBfsAndAmbientDistance) {
  for (int m = 2; m <= 5; ++m) {
    const auto r = verify::noncrossing_distance(m);
    EXPECT_TRUE(r.passed) << r.counterexample;
  }
}

TEST(MmGeodesicCount, Examples) {
  for (int m = 2; m <= 6; ++m) {
    const auto [a, b] = boundary_pair(m);
    EXPECT_EQ(mm_geodesic_count(a, b), p2k_closed(m)) << "m=" << m;
  }
  const Matching a = lit("1-2,3-4,5-6");
  EXPECT_EQ(mm_geodesic_count(a, a), 1);
  const auto [b1, b2] = boundary_pair(3);
  const auto nc = noncrossing_matchings(3);
  for (const auto& x : nc) {
    for (const auto& y : nc) {
      if (distance(x, y) != 2) continue;
      const bool boundary = (x == b1 && y == b2) || (x == b2 && y == b1);
      if (!boundary) EXPECT_LT(mm_geodesic_count(x, y), 3);
    }
  }
  EXPECT_THROW(mm_geodesic_count(lit("1-3,2-4"), lit("1-2,3-4")), Error);
}

TEST(MmGeodesicCount, NeverExceedsAmbientCount) {
  for (int m = 2; m <= 4; ++m) {
    const auto nc = noncrossing_matchings(m);
    for (const auto& x : nc) {
      for (const auto& y : nc) EXPECT_LE(mm_geodesic_count(x, y), geodesic_count(x, y));
    }
  }
}

// Other antipodal non-crossing pairs lose geodesics to crossing matchings.
TEST(MmGeodesicCount, StrictDeficiencyAwayFromBoundaryPair) {
  for (int m = 3; m <= 5; ++m) {
    const auto [b1, b2] = boundary_pair(m);
    const auto nc = noncrossing_matchings(m);
    for (const auto& x : nc) {
      for (const auto& y : nc) {
        if (union_decompose(x, y).l() != 1) continue;
        if ((x == b1 && y == b2) || (x == b2 && y == b1)) continue;
        EXPECT_LT(mm_geodesic_count(x, y), p2k_closed(m)) << verify::pair_text(x, y);
      }
    }
  }
}

TEST(BoundaryGeodesics, StayNoncrossing) {
  for (int m = 2; m <= 6; ++m) {
    const auto r = verify::boundary_geodesics(m);
    EXPECT_TRUE(r.passed) << r.counterexample;
  }
}

TEST(UniqueMaximalPair, SmallM) {
  const Count expected[] = {1, 3, 16, 125};
  for (int m = 2; m <= 5; ++m) {
    const auto rep = verify_unique_maximal_pair(m);
    EXPECT_TRUE(rep.passed()) << "m=" << m;
    EXPECT_EQ(rep.max_count, expected[m - 2]);
    EXPECT_EQ(Count(rep.noncrossing_count), catalan(m));
  }
  EXPECT_THROW(verify_unique_maximal_pair(7), Error);
}

TEST(UniqueMaximalPair, WorkerCountDoesNotChangeReport) {
  const auto one = verify_unique_maximal_pair(4, 1);
  const auto many = verify_unique_maximal_pair(4, 3);
  EXPECT_EQ(one.max_count, many.max_count);
  EXPECT_EQ(one.runner_up, many.runner_up);
  EXPECT_EQ(one.maximal_pairs, many.maximal_pairs);
}
