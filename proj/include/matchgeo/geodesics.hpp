#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matchgeo/count.hpp"
#include "matchgeo/detail/parallel.hpp"
#include "matchgeo/error.hpp"
#include "matchgeo/matching.hpp"
#include "matchgeo/metric.hpp"

namespace matchgeo {

inline constexpr std::uint64_t kDefaultPathCap = 100'000;

// ---------------------------------------------------------------------------
// P_{2k}: geodesics between two matchings whose union has one 2k-cycle
// (plus common edges). Three evaluations that must agree, and the labeled
// tree recurrence they are compared with.
// ---------------------------------------------------------------------------

enum class P2kMethod { Recurrence, Weighted, Closed, Trees };

constexpr std::string_view to_string(P2kMethod method) {
  switch (method) {
    case P2kMethod::Recurrence: return "recurrence";
    case P2kMethod::Weighted: return "weighted";
    case P2kMethod::Closed: return "closed";
    case P2kMethod::Trees: return "trees";
  }
  return "?";
}

namespace detail {

inline void require_positive_k(int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be >= 1, got " + std::to_string(k));
}

}  // namespace detail

// (k/2) * sum_{i=1}^{k-1} C(k-2, i-1) P_{2i} P_{2k-2i}, P_2 = 1. Entry j of
// the result holds P_{2j}.
inline std::vector<Count> p2k_recurrence_table(int k) {
  detail::require_positive_k(k);
  std::vector<Count> t(k + 1);
  t[1] = 1;
  for (int j = 2; j <= k; ++j) {
    Count sum = 0;
    for (int i = 1; i <= j - 1; ++i) sum += binomial(j - 2, i - 1) * t[i] * t[j - i];
    // j * sum counts every geodesic twice, so it must be even.
    const Count doubled = sum * j;
    if (doubled % 2 != 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "P recurrence produced an odd total at k = " + std::to_string(j));
    }
    t[j] = doubled / 2;
  }
  return t;
}

// sum_{i=1}^{k-1} i C(k-2, i-1) P_{2i} P_{2k-2i}, P_2 = 1.
inline std::vector<Count> p2k_weighted_table(int k) {
  detail::require_positive_k(k);
  std::vector<Count> t(k + 1);
  t[1] = 1;
  for (int j = 2; j <= k; ++j) {
    for (int i = 1; i <= j - 1; ++i) t[j] += i * binomial(j - 2, i - 1) * t[i] * t[j - i];
  }
  return t;
}

// Labeled trees on k points: T_k = sum_{i=1}^{k-1} i C(k-2, i-1) T_i T_{k-i},
// T_1 = 1. Evaluated on its own table, never sharing storage with P.
inline std::vector<Count> labeled_tree_table(int k) {
  detail::require_positive_k(k);
  std::vector<Count> trees(k + 1);
  trees[1] = 1;
  for (int size = 2; size <= k; ++size) {
    Count total = 0;
    for (int root_part = 1; root_part < size; ++root_part) {
      total += Count(root_part) * binomial(size - 2, root_part - 1) * trees[root_part] *
               trees[size - root_part];
    }
    trees[size] = total;
  }
  return trees;
}

inline Count p2k_recurrence(int k) { return p2k_recurrence_table(k)[k]; }
inline Count p2k_weighted(int k) { return p2k_weighted_table(k)[k]; }
inline Count labeled_tree_count(int k) { return labeled_tree_table(k)[k]; }

// k^(k-2), with k = 1 defined as 1.
inline Count p2k_closed(int k) {
  detail::require_positive_k(k);
  if (k == 1) return 1;
  return power(k, k - 2);
}

inline Count p2k(int k, P2kMethod method) {
  switch (method) {
    case P2kMethod::Recurrence: return p2k_recurrence(k);
    case P2kMethod::Weighted: return p2k_weighted(k);
    case P2kMethod::Closed: return p2k_closed(k);
    case P2kMethod::Trees: return labeled_tree_count(k);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown method");
}

// ---------------------------------------------------------------------------
// Geodesic counts for arbitrary pairs.
// ---------------------------------------------------------------------------

// Insertions needed per cycle, n(C) = length(C)/2 - 1, in cycle order.
struct CycleProfile {
  std::vector<int> n;

  int total() const {
    int s = 0;
    for (int x : n) s += x;
    return s;
  }
};

inline CycleProfile cycle_profile(const CycleDecomposition& d) {
  CycleProfile p;
  p.n.reserve(d.cycles.size());
  for (const auto& c : d.cycles) p.n.push_back(c.insertions());
  return p;
}

inline CycleProfile cycle_profile(const Matching& M1, const Matching& M2) {
  return cycle_profile(union_decompose(M1, M2));
}

// (m-l; n_1, ..., n_l) * prod (n_i + 1)^(n_i - 1): interleavings of the
// per-cycle insertion sequences times the geodesics inside each cycle.
inline Count geodesic_count(const CycleProfile& profile) {
  std::vector<std::int64_t> parts(profile.n.begin(), profile.n.end());
  Count result = multinomial(parts);
  for (int n : profile.n) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative cycle profile entry");
    result *= p2k_closed(n + 1);
  }
  return result;
}

inline Count geodesic_count(const Matching& M1, const Matching& M2) {
  return geodesic_count(cycle_profile(M1, M2));
}

// ---------------------------------------------------------------------------
// Enumeration oracle.
// ---------------------------------------------------------------------------

struct GeodesicPath {
  std::vector<Matching> steps;

  int length() const { return static_cast<int>(steps.size()) - 1; }
  friend bool operator==(const GeodesicPath&, const GeodesicPath&) = default;
};

// Neighbors of M one step closer to M2, in canonical order. They are the
// results of Decrease insertions; each arises from exactly two edges (the
// diagonals of its 4-cycle), so duplicates are dropped.
inline std::vector<Matching> geodesic_steps(const Matching& M, const Matching& M2) {
  const CycleDecomposition d = union_decompose(M, M2);
  std::vector<Matching> out;
  for (const AlternatingCycle& c : d.cycles) {
    const auto& vs = c.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        const Edge e = Edge::make(vs[i], vs[j]);
        if (M.contains(e) || detail::classify_in(d, e) != InsertionEffect::Decrease) continue;
        out.push_back(insert_edge(M, e));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

template <typename Fn>
void geodesic_dfs(std::vector<Matching>& path, const Matching& target,
                  const MatchingFilter& filter, Fn& fn) {
  const Matching& here = path.back();
  if (here == target) {
    fn(std::as_const(path));
    return;
  }
  for (Matching& next : geodesic_steps(here, target)) {
    if (filter && !filter(next)) continue;
    path.push_back(std::move(next));
    geodesic_dfs(path, target, filter, fn);
    path.pop_back();
  }
}

inline void require_within_cap(const Matching& M1, const Matching& M2, std::uint64_t cap) {
  const Count expected = geodesic_count(M1, M2);
  if (expected > cap) {
    throw Error(ErrorKind::CapExceeded, "pair has " + to_decimal(expected) +
                                            " geodesics, over the cap of " + std::to_string(cap));
  }
}

}  // namespace detail

// Calls fn(steps) for every geodesic from M1 to M2 in canonical order (paths
// compared lexicographically by their matchings). With a filter, only paths
// whose every step passes are visited. Refuses pairs whose closed-form count
// exceeds `cap` before doing any work.
template <typename Fn>
void for_each_geodesic(const Matching& M1, const Matching& M2, std::uint64_t cap, Fn&& fn,
                       const MatchingFilter& filter = {}) {
  require_same_size(M1, M2);
  detail::require_within_cap(M1, M2, cap);
  std::vector<Matching> path{M1};
  path.reserve(distance(M1, M2) + 1);
  detail::geodesic_dfs(path, M2, filter, fn);
}

// All geodesics as vertex paths. With workers != 1 the subtrees below each
// first step run concurrently; results are concatenated in first-step
// order, which reproduces the sequential order exactly.
inline std::vector<GeodesicPath> enumerate_geodesics(const Matching& M1, const Matching& M2,
                                                     std::uint64_t cap = kDefaultPathCap,
                                                     unsigned workers = 1) {
  require_same_size(M1, M2);
  detail::require_within_cap(M1, M2, cap);
  if (M1 == M2) return {GeodesicPath{{M1}}};
  const std::vector<Matching> firsts = geodesic_steps(M1, M2);
  std::vector<std::vector<GeodesicPath>> parts(firsts.size());
  detail::parallel_for(firsts.size(), workers, [&](std::size_t i) {
    std::vector<Matching> path{M1, firsts[i]};
    auto collect = [&](const std::vector<Matching>& steps) {
      parts[i].push_back(GeodesicPath{steps});
    };
    detail::geodesic_dfs(path, M2, {}, collect);
  });
  std::vector<GeodesicPath> out;
  for (auto& part : parts) {
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

// Number of geodesics found by walking them all (no paths retained).
inline std::uint64_t count_geodesics_by_enumeration(const Matching& M1, const Matching& M2,
                                                    std::uint64_t cap = kDefaultPathCap,
                                                    const MatchingFilter& filter = {}) {
  std::uint64_t n = 0;
  for_each_geodesic(M1, M2, cap, [&](const std::vector<Matching>&) { ++n; }, filter);
  return n;
}

// ---------------------------------------------------------------------------
// Hurwitz cross-check: factorizations of the n-cycle (1 2 ... n) into n-1
// transpositions.
// ---------------------------------------------------------------------------

inline constexpr int kMaxHurwitzN = 8;

// Exact count of sequences (t_1, ..., t_{n-1}) of transpositions of
// {1..n} whose product, applying t_1 first, is (1 2 ... n). Runs a dynamic
// program over the symmetric group: after step j, the number of length-j
// sequences reaching each permutation.
inline Count count_cycle_factorizations(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "n must be >= 2, got " + std::to_string(n));
  if (n > kMaxHurwitzN) {
    throw Error(ErrorKind::ResourceLimit, "n = " + std::to_string(n) + " exceeds the limit of " +
                                              std::to_string(kMaxHurwitzN));
  }
  // Permutation images packed 4 bits per point.
  auto image = [](std::uint64_t code, int x) { return static_cast<int>((code >> (4 * x)) & 0xf); };
  auto with = [](std::uint64_t code, int x, int y) {
    code &= ~(std::uint64_t{0xf} << (4 * x));
    return code | (static_cast<std::uint64_t>(y) << (4 * x));
  };
  std::uint64_t identity = 0;
  std::uint64_t target = 0;
  for (int x = 0; x < n; ++x) {
    identity = with(identity, x, x);
    target = with(target, x, (x + 1) % n);
  }
  std::unordered_map<std::uint64_t, std::uint64_t> layer{{identity, 1}};
  for (int step = 0; step < n - 1; ++step) {
    std::unordered_map<std::uint64_t, std::uint64_t> next;
    for (const auto& [perm, ways] : layer) {
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          // Compose: x -> t(perm(x)) with t = (a b).
          std::uint64_t composed = perm;
          for (int x = 0; x < n; ++x) {
            const int y = image(perm, x);
            if (y == a) composed = with(composed, x, b);
            else if (y == b) composed = with(composed, x, a);
          }
          next[composed] += ways;
        }
      }
    }
    layer = std::move(next);
  }
  const auto it = layer.find(target);
  return it == layer.end() ? Count(0) : Count(it->second);
}

}  // namespace matchgeo
