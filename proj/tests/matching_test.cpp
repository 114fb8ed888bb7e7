#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include "matchgeo/matchgeo.hpp"

using namespace matchgeo;

namespace {

Matching lit(const char* text) { return parse_literal(text); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no matchgeo::Error thrown";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(Canonicalize, NormalizesOrientationAndOrder) {
  const std::vector<std::pair<Vertex, Vertex>> pairs{{2, 1}, {3, 4}};
  const Matching M = canonicalize(pairs, 2);
  EXPECT_EQ(format_literal(M), "1-2,3-4");
  EXPECT_EQ(lit("5-6,4-3,2-1"), lit("1-2,3-4,5-6"));
  EXPECT_EQ(format_literal(lit("6-1, 2-5 ,3-4")), "1-6,2-5,3-4");
}

TEST(Canonicalize, Errors) {
  const std::vector<std::pair<Vertex, Vertex>> dup{{1, 2}, {2, 3}};
  try {
    canonicalize(dup, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DuplicateVertex);
    EXPECT_NE(std::string(e.what()).find("vertex 2"), std::string::npos);
  }
  const std::vector<std::pair<Vertex, Vertex>> range{{1, 2}, {3, 5}};
  EXPECT_EQ(kind_of([&] { canonicalize(range, 2); }), ErrorKind::VertexOutOfRange);
  const std::vector<std::pair<Vertex, Vertex>> few{{1, 2}};
  EXPECT_EQ(kind_of([&] { canonicalize(few, 2); }), ErrorKind::WrongEdgeCount);
  const std::vector<std::pair<Vertex, Vertex>> loop{{1, 1}, {2, 3}};
  EXPECT_EQ(kind_of([&] { canonicalize(loop, 2); }), ErrorKind::DuplicateVertex);
  EXPECT_EQ(kind_of([] { parse_literal("1-2,3"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_literal("1-2,x-4"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_literal(""); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_literal("1-2,3-4", 3); }), ErrorKind::WrongEdgeCount);
}

TEST(Matching, PairAndPartnerViewsRoundTrip) {
  std::mt19937_64 rng(7);
  for (int m = 1; m <= 9; ++m) {
    for (int t = 0; t < 50; ++t) {
      const Matching M = random_matching(m, rng);
      for (Vertex v = 1; v <= 2 * m; ++v) {
        EXPECT_NE(M.partner(v), v);
        EXPECT_EQ(M.partner(M.partner(v)), v);
      }
      std::vector<std::pair<Vertex, Vertex>> pairs;
      for (const Edge& e : M.edges()) {
        EXPECT_LT(e.a, e.b);
        pairs.emplace_back(e.b, e.a);
      }
      EXPECT_EQ(Matching::from_pairs(pairs, m), M);
      EXPECT_EQ(parse_literal(format_literal(M)), M);
    }
  }
}

TEST(InsertEdge, Examples) {
  EXPECT_EQ(insert_edge(lit("1-2,3-4"), Edge{1, 2}), lit("1-2,3-4"));
  EXPECT_EQ(insert_edge(lit("1-2,3-4"), Edge{1, 3}), lit("1-3,2-4"));
  EXPECT_EQ(insert_edge(lit("1-2,3-4,5-6"), Edge{1, 4}), lit("1-4,2-3,5-6"));
  EXPECT_EQ(kind_of([] { insert_edge(lit("1-2,3-4"), Edge{1, 5}); }), ErrorKind::VertexOutOfRange);
}

TEST(InsertEdge, ResultContainsEdgeAndIsIdempotent) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const Matching M = random_matching(5, rng);
    const auto u = static_cast<Vertex>(rng() % 10) + 1;
    const auto v = static_cast<Vertex>((u + rng() % 9) % 10) + 1;
    const Edge e = Edge::make(u, v);
    const Matching Me = insert_edge(M, e);
    EXPECT_TRUE(Me.contains(e));
    EXPECT_EQ(insert_edge(Me, e), Me);
    if (!M.contains(e)) EXPECT_TRUE(are_adjacent(M, Me));
  }
}

TEST(InsertSequence, Examples) {
  const std::vector<Edge> none;
  EXPECT_EQ(insert_sequence(lit("1-2,3-4"), none), lit("1-2,3-4"));
  const std::vector<Edge> two{Edge{1, 3}, Edge{1, 2}};
  EXPECT_EQ(insert_sequence(lit("1-2,3-4"), two), lit("1-2,3-4"));
}

TEST(InsertSequence, InsertingAllEdgesOfTargetReachesTarget) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const int m = 2 + static_cast<int>(rng() % 6);
    const Matching from = random_matching(m, rng);
    const Matching to = random_matching(m, rng);
    std::vector<Edge> edges = to.edges();
    for (std::size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[rng() % i]);
    EXPECT_EQ(insert_sequence(from, edges), to);
  }
}

TEST(SymmetricDifference, Examples) {
  EXPECT_TRUE(symmetric_difference(lit("1-2,3-4"), lit("1-2,3-4")).empty());
  const std::vector<Edge> four{{1, 2}, {1, 3}, {2, 4}, {3, 4}};
  EXPECT_EQ(symmetric_difference(lit("1-2,3-4"), lit("1-3,2-4")), four);
  const auto d = symmetric_difference(lit("1-2,3-4,5-6"), lit("1-3,2-4,5-6"));
  EXPECT_EQ(d.size(), 4u);
  EXPECT_EQ(std::count(d.begin(), d.end(), Edge{5, 6}), 0);
  EXPECT_EQ(kind_of([] { symmetric_difference(lit("1-2"), lit("1-2,3-4")); }), ErrorKind::MixedSizes);
}

TEST(Adjacency, Examples) {
  EXPECT_TRUE(are_adjacent(lit("1-2,3-4"), lit("1-3,2-4")));
  EXPECT_FALSE(are_adjacent(lit("1-2,3-4"), lit("1-2,3-4")));
  EXPECT_FALSE(are_adjacent(lit("1-2,3-4,5-6"), lit("1-3,2-5,4-6")));
  EXPECT_EQ(kind_of([] { are_adjacent(lit("1-2"), lit("1-2,3-4")); }), ErrorKind::MixedSizes);
}

TEST(Neighbors, Examples) {
  const auto around = neighbors(lit("1-2,3-4"));
  ASSERT_EQ(around.size(), 2u);
  EXPECT_EQ(around[0], lit("1-3,2-4"));
  EXPECT_EQ(around[1], lit("1-4,2-3"));
  EXPECT_EQ(neighbors(lit("1-4,2-6,3-5")).size(), 6u);
  EXPECT_TRUE(neighbors(lit("1-2")).empty());
}

// Neighbor lists agree with are_adjacent over all of P_m, have size
// 2*C(m,2), are sorted and duplicate-free, and adjacency is symmetric.
TEST(Neighbors, ConsistentWithAdjacencyExhaustively) {
  for (int m = 2; m <= 4; ++m) {
    const auto all = enumerate_all_matchings(m);
    for (const auto& M : all) {
      const auto around = neighbors(M);
      ASSERT_EQ(around.size(), static_cast<std::size_t>(m * (m - 1)));
      EXPECT_TRUE(std::is_sorted(around.begin(), around.end()));
      EXPECT_EQ(std::adjacent_find(around.begin(), around.end()), around.end());
      const std::set<Matching> in(around.begin(), around.end());
      for (const auto& N : all) {
        EXPECT_EQ(are_adjacent(M, N), in.count(N) == 1);
        EXPECT_EQ(are_adjacent(M, N), are_adjacent(N, M));
      }
    }
  }
  std::mt19937_64 rng(5);
  for (int m = 5; m <= 6; ++m) {
    for (int t = 0; t < 30; ++t) {
      const Matching M = random_matching(m, rng);
      const auto around = neighbors(M);
      EXPECT_EQ(around.size(), static_cast<std::size_t>(m * (m - 1)));
      for (const auto& N : around) EXPECT_TRUE(are_adjacent(M, N));
    }
  }
}

// Each neighbor is reached by inserting exactly two edges not in M.
TEST(Neighbors, EachArisesFromExactlyTwoInsertions) {
  for (int m = 2; m <= 4; ++m) {
    for_each_matching(m, [&](const Matching& M) {
      std::map<Matching, int> hits;
      for (Vertex u = 1; u <= 2 * m; ++u) {
        for (Vertex v = u + 1; v <= 2 * m; ++v) {
          if (!M.contains(Edge{u, v})) ++hits[insert_edge(M, Edge{u, v})];
        }
      }
      EXPECT_EQ(hits.size(), static_cast<std::size_t>(m * (m - 1)));
      for (const auto& [N, count] : hits) EXPECT_EQ(count, 2);
    });
  }
}

TEST(UnionDecompose, Examples) {
  const auto same = union_decompose(lit("1-2,3-4,5-6"), lit("1-2,3-4,5-6"));
  EXPECT_EQ(same.l(), 3);
  for (const auto& c : same.cycles) EXPECT_EQ(c.length(), 2u);

  const auto hex = union_decompose(lit("1-2,3-4,5-6"), lit("2-3,4-5,1-6"));
  ASSERT_EQ(hex.l(), 1);
  EXPECT_EQ(hex.cycles[0].vertices, (std::vector<Vertex>{1, 2, 3, 4, 5, 6}));

  const auto mixed = union_decompose(lit("1-2,3-4,5-6"), lit("1-3,2-4,5-6"));
  ASSERT_EQ(mixed.l(), 2);
  EXPECT_EQ(mixed.cycles[0].vertices, (std::vector<Vertex>{1, 2, 4, 3}));
  EXPECT_EQ(mixed.cycles[1].vertices, (std::vector<Vertex>{5, 6}));
}

TEST(UnionDecompose, PartitionsVerticesAndDetectsEquality) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 400; ++t) {
    const int m = 1 + static_cast<int>(rng() % 8);
    const Matching a = random_matching(m, rng);
    const Matching b = t % 5 == 0 ? a : random_matching(m, rng);
    const auto d = union_decompose(a, b);
    std::vector<int> seen(2 * m, 0);
    Vertex previous_start = 0;
    for (const auto& c : d.cycles) {
      ASSERT_EQ(c.length() % 2, 0u);
      EXPECT_EQ(c.vertices[0], *std::min_element(c.vertices.begin(), c.vertices.end()));
      EXPECT_GT(c.vertices[0], previous_start);
      previous_start = c.vertices[0];
      EXPECT_EQ(c.vertices[1], a.partner(c.vertices[0]));
      for (std::size_t i = 0; i < c.length(); ++i) {
        ++seen[c.vertices[i] - 1];
        const Vertex next = c.vertices[(i + 1) % c.length()];
        EXPECT_EQ(i % 2 == 0 ? a.partner(c.vertices[i]) : b.partner(c.vertices[i]), next);
      }
    }
    EXPECT_EQ(std::count(seen.begin(), seen.end(), 1), 2 * m);
    EXPECT_LE(d.l(), m);
    EXPECT_EQ(d.l() == m, a == b);
  }
}

TEST(Enumerate, CountsAreDoubleFactorials) {
  const std::uint64_t expected[] = {1, 3, 15, 105, 945, 10395};
  for (int m = 1; m <= 6; ++m) {
    const auto all = enumerate_all_matchings(m);
    EXPECT_EQ(all.size(), expected[m - 1]);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
    std::unordered_set<Matching, MatchingHash> hashed(all.begin(), all.end());
    EXPECT_EQ(hashed.size(), all.size());
    EXPECT_EQ(Count(all.size()), double_factorial(2 * m - 1));
  }
  EXPECT_EQ(kind_of([] { enumerate_all_matchings(9, 1'000'000); }), ErrorKind::ResourceLimit);
}

TEST(Rank, MatchesEnumerationOrder) {
  for (int m = 1; m <= 6; ++m) {
    std::uint64_t expected = 0;
    for_each_matching(m, [&](const Matching& M) {
      ASSERT_EQ(matching_rank(M), expected);
      ASSERT_EQ(matching_unrank(expected, m), M);
      ++expected;
    });
  }
}

TEST(Graph, ConnectedForSmallM) {
  for (int m = 2; m <= 5; ++m) {
    const auto g = MatchingGraph::build(m);
    for (std::size_t s : {std::size_t{0}, g.order() / 2, g.order() - 1}) {
      const auto dist = g.bfs(s);
      EXPECT_EQ(std::count(dist.begin(), dist.end(), -1), 0) << "m=" << m;
    }
  }
}

TEST(Graph, DegenerateSingleEdge) {
  const auto g = MatchingGraph::build(1);
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_EQ(union_decompose(lit("1-2"), lit("1-2")).l(), 1);
}
