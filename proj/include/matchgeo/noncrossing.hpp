#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matchgeo/count.hpp"
#include "matchgeo/detail/parallel.hpp"
#include "matchgeo/error.hpp"
#include "matchgeo/geodesics.hpp"
#include "matchgeo/graph.hpp"
#include "matchgeo/matching.hpp"
#include "matchgeo/metric.hpp"

namespace matchgeo {

// Vertices 1..2m sit on a circle in label order. Chords cross iff their
// endpoints interleave; no coordinates are ever involved.

inline bool edges_cross(Edge e1, Edge e2, int m) {
  for (Vertex v : {e1.a, e1.b, e2.a, e2.b}) {
    if (v < 1 || v > 2 * m) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " not in [1, " + std::to_string(2 * m) + "]");
    }
  }
  if (e1.touches(e2.a) || e1.touches(e2.b)) {
    throw Error(ErrorKind::SharedVertex, "edges " + e1.to_string() + " and " + e2.to_string() +
                                             " share a vertex");
  }
  const auto [lo, hi] = std::minmax(e1.a, e1.b);
  const bool c_inside = lo < e2.a && e2.a < hi;
  const bool d_inside = lo < e2.b && e2.b < hi;
  return c_inside != d_inside;
}

// Chords are non-crossing iff, scanning the circle, every chord closes in
// last-opened-first-closed order.
inline bool is_noncrossing(const Matching& M) {
  const auto p = M.raw_partners();
  std::vector<int> open;
  open.reserve(p.size() / 2);
  for (int v = 0; v < static_cast<int>(p.size()); ++v) {
    if (p[v] > v) {
      open.push_back(v);
    } else {
      if (open.empty() || open.back() != p[v]) return false;
      open.pop_back();
    }
  }
  return true;
}

inline std::vector<Matching> noncrossing_matchings(int m,
                                                   std::uint64_t cap = kDefaultEnumerationCap) {
  if (matching_count_u64(m) > cap) {
    throw Error(ErrorKind::ResourceLimit,
                "enumerating P_" + std::to_string(m) + " exceeds cap " + std::to_string(cap));
  }
  std::vector<Matching> out;
  for_each_matching(m, [&](const Matching& M) {
    if (is_noncrossing(M)) out.push_back(M);
  });
  return out;
}

// The two matchings whose chords all lie on the hull boundary:
// {(1,2), (3,4), ...} and {(2,3), (4,5), ..., (2m,1)}.
inline std::pair<Matching, Matching> boundary_pair(int m) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "boundary_pair needs m >= 2");
  std::vector<std::pair<Vertex, Vertex>> odd;
  std::vector<std::pair<Vertex, Vertex>> even;
  for (int i = 1; i <= m; ++i) {
    odd.emplace_back(2 * i - 1, 2 * i);
    even.emplace_back(2 * i, 2 * i == 2 * m ? 1 : 2 * i + 1);
  }
  return {Matching::from_pairs(odd, m), Matching::from_pairs(even, m)};
}

inline void require_noncrossing(const Matching& M, const char* which) {
  if (!is_noncrossing(M)) {
    throw Error(ErrorKind::NotNonCrossing, std::string(which) + " is not non-crossing");
  }
}

// (1/2) sum (length(C_i) - 2) over the cycles of M1 u M2.
inline int mm_distance(const Matching& M1, const Matching& M2) {
  require_noncrossing(M1, "M1");
  require_noncrossing(M2, "M2");
  int excess = 0;
  for (const auto& c : union_decompose(M1, M2).cycles) excess += static_cast<int>(c.length()) - 2;
  return excess / 2;
}

// BFS inside the induced subgraph of non-crossing matchings.
inline int mm_bfs_distance(const Matching& M1, const Matching& M2,
                           std::uint64_t cap = kDefaultBfsCap) {
  require_noncrossing(M1, "M1");
  require_noncrossing(M2, "M2");
  return bfs_distance(M1, M2, cap, is_noncrossing);
}

// Geodesics of the ambient length whose every step is non-crossing, found
// by walking the ambient geodesics and pruning at the first crossing step.
// `cap` bounds the ambient count, which bounds the work.
inline Count mm_geodesic_count(const Matching& M1, const Matching& M2,
                               std::uint64_t cap = kDefaultPathCap) {
  require_noncrossing(M1, "M1");
  require_noncrossing(M2, "M2");
  return count_geodesics_by_enumeration(M1, M2, cap, is_noncrossing);
}

inline constexpr int kMaxUniquePairM = 6;

struct MaximalPairReport {
  int m = 0;
  std::uint64_t noncrossing_count = 0;
  std::uint64_t pairs_checked = 0;
  Count expected;  // m^(m-2)
  Count max_count;
  Count runner_up;  // largest count among all other pairs
  std::vector<std::pair<Matching, Matching>> maximal_pairs;

  bool unique() const { return maximal_pairs.size() == 1; }

  bool passed() const {
    if (!unique() || max_count != expected || runner_up >= expected) return false;
    const auto [b1, b2] = boundary_pair(m);
    const auto& [x, y] = maximal_pairs.front();
    return (x == b1 && y == b2) || (x == b2 && y == b1);
  }
};

// Counts non-crossing geodesics for every unordered pair of distinct
// non-crossing matchings of size m. Work is split across pairs; the report
// is assembled in pair order and does not depend on `workers`.
inline MaximalPairReport verify_unique_maximal_pair(int m, unsigned workers = 0,
                                                    int max_m = kMaxUniquePairM) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "m must be >= 2");
  if (m > max_m) {
    throw Error(ErrorKind::ResourceLimit, "m = " + std::to_string(m) + " exceeds the limit of " +
                                              std::to_string(max_m));
  }
  const std::vector<Matching> nc = noncrossing_matchings(m);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < nc.size(); ++i) {
    for (std::size_t j = i + 1; j < nc.size(); ++j) pairs.emplace_back(i, j);
  }
  std::vector<Count> counts(pairs.size());
  detail::parallel_for(pairs.size(), workers, [&](std::size_t k) {
    const auto& A = nc[pairs[k].first];
    const auto& B = nc[pairs[k].second];
    counts[k] = count_geodesics_by_enumeration(A, B, UINT64_MAX, is_noncrossing);
  });

  MaximalPairReport report;
  report.m = m;
  report.noncrossing_count = nc.size();
  report.pairs_checked = pairs.size();
  report.expected = p2k_closed(m);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto pair = std::make_pair(nc[pairs[k].first], nc[pairs[k].second]);
    if (counts[k] > report.max_count) {
      report.runner_up = report.max_count;
      report.max_count = counts[k];
      report.maximal_pairs = {pair};
    } else if (counts[k] == report.max_count) {
      report.maximal_pairs.push_back(pair);
    } else if (counts[k] > report.runner_up) {
      report.runner_up = counts[k];
    }
  }
  if (report.maximal_pairs.size() > 1) report.runner_up = report.max_count;
  return report;
}

}  // namespace matchgeo
