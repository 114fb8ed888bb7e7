#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "matchgeo/error.hpp"
#include "matchgeo/graph.hpp"
#include "matchgeo/matching.hpp"

namespace matchgeo {

// d(M1, M2) = m - l, where l counts the alternating cycles of M1 u M2
// (common edges included as 2-cycles). O(m).
inline int distance(const Matching& M1, const Matching& M2) {
  return M1.size() - union_decompose(M1, M2).l();
}

enum class InsertionEffect { Increase, Decrease, Neutral };

constexpr std::string_view to_string(InsertionEffect effect) {
  switch (effect) {
    case InsertionEffect::Increase: return "Increase";
    case InsertionEffect::Decrease: return "Decrease";
    case InsertionEffect::Neutral: return "Neutral";
  }
  return "?";
}

namespace detail {

// With cycles listed as in union_decompose, a vertex at an even position is
// followed by its M1-partner. Inserting e = (u, v), both on one cycle, splits
// that cycle exactly when u and v sit at positions of opposite parity.
inline InsertionEffect classify_in(const CycleDecomposition& d, Edge e) {
  const int u = e.a - 1;
  const int v = e.b - 1;
  if (d.cycle_of[u] != d.cycle_of[v]) return InsertionEffect::Increase;
  return (d.position[u] - d.position[v]) % 2 != 0 ? InsertionEffect::Decrease
                                                  : InsertionEffect::Neutral;
}

}  // namespace detail

// Effect of M1 -> M1 * e on the distance to M2; e must not already be in M1.
inline InsertionEffect classify_insertion(const Matching& M1, const Matching& M2, Edge e) {
  require_same_size(M1, M2);
  M1.check_vertex(e.a);
  M1.check_vertex(e.b);
  if (M1.contains(e)) {
    throw Error(ErrorKind::EdgeAlreadyPresent, "edge " + e.to_string() + " is already in M1");
  }
  return detail::classify_in(union_decompose(M1, M2), e);
}

// Breadth-first search over neighbors(), optionally restricted to matchings
// accepted by `filter`. Oracle only: refuses graphs over `cap` vertices.
inline int bfs_distance(const Matching& M1, const Matching& M2,
                        std::uint64_t cap = kDefaultBfsCap, const MatchingFilter& filter = {}) {
  require_same_size(M1, M2);
  if (matching_count_u64(M1.size()) > cap) {
    throw Error(ErrorKind::ResourceLimit, "BFS over P_" + std::to_string(M1.size()) +
                                              " exceeds cap " + std::to_string(cap));
  }
  if (filter && (!filter(M1) || !filter(M2))) {
    throw Error(ErrorKind::InvalidArgument, "endpoint rejected by the subgraph filter");
  }
  if (M1 == M2) return 0;
  std::unordered_map<Matching, int, MatchingHash> dist;
  std::vector<Matching> frontier{M1};
  dist.emplace(M1, 0);
  for (int depth = 1; !frontier.empty(); ++depth) {
    std::vector<Matching> next;
    for (const Matching& M : frontier) {
      for (Matching& N : neighbors(M)) {
        if (filter && !filter(N)) continue;
        if (!dist.emplace(N, depth).second) continue;
        if (N == M2) return depth;
        next.push_back(std::move(N));
      }
    }
    frontier = std::move(next);
  }
  throw Error(ErrorKind::InvalidArgument, "target unreachable within the subgraph");
}

// Every matching has eccentricity m - 1; so does P_m's diameter.
inline int eccentricity(const Matching& M) { return M.size() - 1; }

inline int diameter(int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "m must be >= 1");
  return m - 1;
}

// Maximum BFS distance from M over the materialized graph.
inline int bfs_eccentricity(const Matching& M, std::uint64_t cap = kDefaultBfsCap) {
  const MatchingGraph g = MatchingGraph::build(M.size(), cap);
  const auto dist = g.bfs(*g.index_of(M));
  return *std::max_element(dist.begin(), dist.end());
}

inline int bfs_diameter(int m, std::uint64_t cap = kDefaultBfsCap) {
  const MatchingGraph g = MatchingGraph::build(m, cap);
  int best = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto dist = g.bfs(i);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

namespace detail {

inline void antipode_walk(const std::vector<std::uint8_t>& p, std::vector<std::uint8_t>& q,
                          std::vector<bool>& seen, int start, int current, int remaining,
                          std::vector<Matching>& out) {
  if (remaining == 0) {
    q[current] = static_cast<std::uint8_t>(start);
    q[start] = static_cast<std::uint8_t>(current);
    out.push_back(Matching::from_partners(q));
    return;
  }
  const int n = static_cast<int>(p.size());
  for (int w = 0; w < n; ++w) {
    if (seen[w]) continue;
    const int w_mate = p[w];
    seen[w] = seen[w_mate] = true;
    q[current] = static_cast<std::uint8_t>(w);
    q[w] = static_cast<std::uint8_t>(current);
    antipode_walk(p, q, seen, start, w_mate, remaining - 1, out);
    seen[w] = seen[w_mate] = false;
  }
}

}  // namespace detail

// All M' with M u M' a single 2m-cycle, in canonical order. Builds each
// Hamiltonian alternating cycle directly: from the current endpoint, the
// partner edge of M' enters some unvisited M-edge, which is then crossed.
// (2m-2)!! results.
inline std::vector<Matching> antipodes_of(const Matching& M) {
  const auto raw = M.raw_partners();
  const std::vector<std::uint8_t> p(raw.begin(), raw.end());
  std::vector<std::uint8_t> q(p.size());
  std::vector<bool> seen(p.size(), false);
  std::vector<Matching> out;
  if (M.size() == 1) {
    out.push_back(M);
    return out;
  }
  seen[0] = seen[p[0]] = true;
  detail::antipode_walk(p, q, seen, 0, p[0], M.size() - 1, out);
  std::sort(out.begin(), out.end());
  return out;
}

// Oracle: filter all (2m-1)!! matchings for a one-cycle union with M.
inline std::vector<Matching> antipodes_by_filter(const Matching& M,
                                                 std::uint64_t cap = kDefaultEnumerationCap) {
  std::vector<Matching> out;
  for (const Matching& N : enumerate_all_matchings(M.size(), cap)) {
    if (union_decompose(M, N).l() == 1) out.push_back(N);
  }
  return out;
}

}  // namespace matchgeo
