#pragma once

// Oracle checks: each compares a formula-side result against an independent
// route (BFS over the materialized graph, exhaustive enumeration, brute-force
// group computations) and reports the first counterexample it meets.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "matchgeo/count.hpp"
#include "matchgeo/detail/parallel.hpp"
#include "matchgeo/geodesics.hpp"
#include "matchgeo/graph.hpp"
#include "matchgeo/literal.hpp"
#include "matchgeo/matching.hpp"
#include "matchgeo/metric.hpp"
#include "matchgeo/noncrossing.hpp"

namespace matchgeo::verify {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  std::string detail;
  std::string counterexample;  // empty when passed

  void fail(std::string what) {
    if (passed) counterexample = std::move(what);
    passed = false;
  }
};

struct Options {
  std::uint64_t seed = 0x5eed'2024;
  unsigned workers = 0;
  std::uint64_t graph_cap = kDefaultBfsCap;
  int unique_pair_max_m = kMaxUniquePairM;
};

inline std::string pair_text(const Matching& a, const Matching& b) {
  return "a=" + format_literal(a) + " b=" + format_literal(b);
}

inline std::vector<std::pair<Matching, Matching>> random_pairs(int m, std::size_t count,
                                                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Matching, Matching>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Matching a = random_matching(m, rng);
    Matching b = random_matching(m, rng);
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

// Random pairs whose union is a single 2m-cycle.
inline std::vector<std::pair<Matching, Matching>> random_antipodal_pairs(int m, std::size_t count,
                                                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Matching, Matching>> out;
  while (out.size() < count) {
    Matching a = random_matching(m, rng);
    Matching b = random_matching(m, rng);
    if (union_decompose(a, b).l() == 1) out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

// Type invariants of a geodesic from M1 to M2, including that every step
// keeps the common edges of the endpoints. Empty string when valid.
inline std::string validate_geodesic(const GeodesicPath& path, const Matching& M1,
                                     const Matching& M2) {
  if (path.steps.empty() || path.steps.front() != M1 || path.steps.back() != M2) {
    return "path endpoints differ from the pair";
  }
  if (path.length() != distance(M1, M2)) return "path length differs from distance";
  std::vector<Edge> common;
  for (const Edge& e : M1.edges()) {
    if (M2.contains(e)) common.push_back(e);
  }
  std::set<Matching> seen;
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    const Matching& step = path.steps[i];
    if (!seen.insert(step).second) return "repeated matching " + format_literal(step);
    if (i > 0 && !are_adjacent(path.steps[i - 1], step)) {
      return "non-adjacent steps at index " + std::to_string(i);
    }
    for (const Edge& e : common) {
      if (!step.contains(e)) {
        return "step " + format_literal(step) + " drops common edge " + e.to_string();
      }
    }
  }
  return {};
}

// Vertex count (2m-1)!!, degree 2*C(m,2) everywhere, neighbor lists
// duplicate-free and adjacent, and a single BFS reaching every vertex.
inline CheckResult order_and_regularity(int m, const Options& opt = {}) {
  CheckResult r{.name = "order_regularity_connectivity"};
  const MatchingGraph g = MatchingGraph::build(m, opt.graph_cap);
  const Count expected_order = double_factorial(2 * m - 1);
  const auto expected_degree = static_cast<std::size_t>(m * (m - 1));
  if (Count(g.order()) != expected_order) {
    r.fail("order " + std::to_string(g.order()) + " != " + to_decimal(expected_order));
  }
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto adj = g.adjacent(i);
    std::vector<std::uint32_t> sorted(adj.begin(), adj.end());
    std::sort(sorted.begin(), sorted.end());
    const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (adj.size() != expected_degree || !distinct) {
      r.fail("vertex " + format_literal(g.vertex(i)) + " has degree " + std::to_string(adj.size()));
    }
    for (std::uint32_t j : adj) {
      if (!are_adjacent(g.vertex(i), g.vertex(j))) r.fail(pair_text(g.vertex(i), g.vertex(j)));
    }
    ++r.checked;
  }
  const auto dist = g.bfs(0);
  if (std::count(dist.begin(), dist.end(), -1) != 0) r.fail("graph is disconnected");
  r.detail = "order " + std::to_string(g.order()) + ", degree " + std::to_string(expected_degree);
  return r;
}

// distance() against BFS hop counts. Every ordered pair when `sample` is
// empty, otherwise `sample` random pairs.
inline CheckResult distance_theorem(int m, std::optional<std::size_t> sample,
                                    const Options& opt = {}) {
  CheckResult r{.name = "distance_equals_bfs"};
  const MatchingGraph g = MatchingGraph::build(m, opt.graph_cap);
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> jobs;
  if (!sample) {
    for (std::size_t i = 0; i < g.order(); ++i) {
      std::vector<std::size_t> all(g.order());
      for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
      jobs.emplace_back(i, std::move(all));
    }
  } else {
    for (const auto& [a, b] : random_pairs(m, *sample, opt.seed)) {
      jobs.push_back({*g.index_of(a), {*g.index_of(b)}});
    }
  }
  std::vector<std::string> failures(jobs.size());
  std::vector<std::uint64_t> counted(jobs.size(), 0);
  detail::parallel_for(jobs.size(), opt.workers, [&](std::size_t k) {
    const auto dist = g.bfs(jobs[k].first);
    const Matching& a = g.vertex(jobs[k].first);
    for (std::size_t j : jobs[k].second) {
      ++counted[k];
      if (distance(a, g.vertex(j)) != dist[j]) {
        failures[k] = pair_text(a, g.vertex(j)) + " formula " +
                      std::to_string(distance(a, g.vertex(j))) + " bfs " + std::to_string(dist[j]);
        return;
      }
    }
  });
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    r.checked += counted[k];
    if (!failures[k].empty()) r.fail(failures[k]);
  }
  r.detail = std::to_string(r.checked) + " ordered pairs";
  return r;
}

// BFS eccentricity m-1 and antipode set = BFS sphere of radius m-1 =
// antipodes_of(), of size (2m-2)!!. All vertices, or a sample.
inline CheckResult eccentricity_and_antipodes(int m, std::optional<std::size_t> sample,
                                              const Options& opt = {}) {
  CheckResult r{.name = "eccentricity_antipodes"};
  const MatchingGraph g = MatchingGraph::build(m, opt.graph_cap);
  std::vector<std::size_t> sources;
  if (!sample) {
    for (std::size_t i = 0; i < g.order(); ++i) sources.push_back(i);
  } else {
    std::mt19937_64 rng(opt.seed ^ 0xecc);
    for (std::size_t i = 0; i < *sample; ++i) sources.push_back(rng() % g.order());
  }
  const Count expected_antipodes = double_factorial(2 * m - 2);
  std::vector<std::string> failures(sources.size());
  detail::parallel_for(sources.size(), opt.workers, [&](std::size_t k) {
    const Matching& M = g.vertex(sources[k]);
    const auto dist = g.bfs(sources[k]);
    const int ecc = *std::max_element(dist.begin(), dist.end());
    if (ecc != m - 1 || ecc != eccentricity(M)) {
      failures[k] = format_literal(M) + " has BFS eccentricity " + std::to_string(ecc);
      return;
    }
    std::vector<Matching> sphere;
    for (std::size_t j = 0; j < g.order(); ++j) {
      if (dist[j] == m - 1) sphere.push_back(g.vertex(j));
    }
    const auto direct = antipodes_of(M);
    if (direct != sphere || Count(direct.size()) != expected_antipodes) {
      failures[k] = format_literal(M) + " has " + std::to_string(direct.size()) +
                    " direct antipodes, " + std::to_string(sphere.size()) + " by BFS";
    }
  });
  for (std::size_t k = 0; k < sources.size(); ++k) {
    ++r.checked;
    if (!failures[k].empty()) r.fail(failures[k]);
  }
  // The direct walk and the filter over all matchings agree.
  const Matching id = Matching::identity(m);
  if (antipodes_of(id) != antipodes_by_filter(id)) r.fail("direct/filter antipodes differ");
  r.detail = "eccentricity " + std::to_string(m - 1) + ", " + to_decimal(expected_antipodes) +
             " antipodes per vertex";
  return r;
}

// Recurrence, weighted form, closed form and tree recurrence agree.
inline CheckResult p2k_identities(int k_max) {
  CheckResult r{.name = "p2k_identities"};
  const auto rec = p2k_recurrence_table(k_max);
  const auto wt = p2k_weighted_table(k_max);
  const auto trees = labeled_tree_table(k_max);
  for (int k = 1; k <= k_max; ++k) {
    ++r.checked;
    const Count closed = p2k_closed(k);
    if (rec[k] != closed || wt[k] != closed || trees[k] != closed) {
      r.fail("k=" + std::to_string(k) + " recurrence " + to_decimal(rec[k]) + " weighted " +
             to_decimal(wt[k]) + " trees " + to_decimal(trees[k]) + " closed " +
             to_decimal(closed));
    }
  }
  r.detail = "k in [1, " + std::to_string(k_max) + "]";
  return r;
}

// Closed-form count against full enumeration, validating every path.
inline CheckResult count_matches_enumeration(
    const std::vector<std::pair<Matching, Matching>>& pairs, const Options& opt = {}) {
  CheckResult r{.name = "geodesic_count_equals_enumeration"};
  std::vector<std::string> failures(pairs.size());
  std::vector<std::uint64_t> paths(pairs.size(), 0);
  detail::parallel_for(pairs.size(), opt.workers, [&](std::size_t k) {
    const auto& [a, b] = pairs[k];
    const Count formula = geodesic_count(a, b);
    const auto found = enumerate_geodesics(a, b, UINT64_MAX);
    paths[k] = found.size();
    for (const auto& path : found) {
      if (auto why = validate_geodesic(path, a, b); !why.empty()) {
        failures[k] = pair_text(a, b) + ": " + why;
        return;
      }
    }
    if (Count(found.size()) != formula) {
      failures[k] = pair_text(a, b) + " formula " + to_decimal(formula) + " enumerated " +
                    std::to_string(found.size());
    }
  });
  std::uint64_t total_paths = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    ++r.checked;
    total_paths += paths[k];
    if (!failures[k].empty()) r.fail(failures[k]);
  }
  r.detail = std::to_string(r.checked) + " pairs, " + std::to_string(total_paths) +
             " geodesics validated";
  return r;
}

inline std::vector<std::pair<Matching, Matching>> all_pairs(int m, std::uint64_t cap) {
  const auto all = enumerate_all_matchings(m, cap);
  std::vector<std::pair<Matching, Matching>> out;
  out.reserve(all.size() * all.size());
  for (const auto& a : all) {
    for (const auto& b : all) out.emplace_back(a, b);
  }
  return out;
}

// Identity against its first antipode: m^(m-2) geodesics.
inline CheckResult antipodal_geodesics(int m) {
  CheckResult r{.name = "antipodal_geodesics"};
  const Matching a = Matching::identity(m);
  const Matching b = antipodes_of(a).front();
  const auto found = enumerate_geodesics(a, b, UINT64_MAX);
  r.checked = found.size();
  for (const auto& path : found) {
    if (auto why = validate_geodesic(path, a, b); !why.empty()) r.fail(pair_text(a, b) + ": " + why);
  }
  if (Count(found.size()) != p2k_closed(m)) {
    r.fail(pair_text(a, b) + " enumerated " + std::to_string(found.size()));
  }
  r.detail = std::to_string(found.size()) + " geodesics between " + pair_text(a, b);
  return r;
}

// Brute-force transposition factorizations of an n-cycle vs n^(n-2).
inline CheckResult hurwitz(int n) {
  CheckResult r{.name = "hurwitz_factorizations"};
  const Count found = count_cycle_factorizations(n);
  r.checked = 1;
  if (found != p2k_closed(n)) r.fail("n=" + std::to_string(n) + " counted " + to_decimal(found));
  r.detail = "n=" + std::to_string(n) + ": " + to_decimal(found);
  return r;
}

namespace detail {

// The 4-cycle of an adjacent pair, as its vertex set.
inline std::vector<Vertex> square_vertices(const Matching& a, const Matching& b) {
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= a.vertex_count(); ++v) {
    if (a.partner(v) != b.partner(v)) out.push_back(v);
  }
  return out;
}

inline std::string insertion_lemma_case(const Matching& a, const Matching& b, Edge e) {
  const auto square = square_vertices(a, b);
  const auto in_square = [&](Vertex v) {
    return std::find(square.begin(), square.end(), v) != square.end();
  };
  const Matching ae = insert_edge(a, e);
  const Matching be = insert_edge(b, e);
  if (in_square(e.a) && in_square(e.b)) {
    if (ae != be) return "e on the square but insertions differ";
  } else if (!are_adjacent(ae, be)) {
    return "e off the square but insertions not adjacent";
  }
  return {};
}

}  // namespace detail

// For adjacent M1 ~ M2 and any edge e: both ends of e on their 4-cycle
// gives M1*e = M2*e, otherwise M1*e ~ M2*e. Exhaustive over (M1, neighbor,
// edge) when `trials` is empty, else random triples.
inline CheckResult insertion_lemma(int m, std::optional<std::size_t> trials,
                                   const Options& opt = {}) {
  CheckResult r{.name = "insertion_adjacency_lemma"};
  auto check = [&](const Matching& a, const Matching& b, Edge e) {
    ++r.checked;
    if (auto why = detail::insertion_lemma_case(a, b, e); !why.empty()) {
      r.fail(pair_text(a, b) + " e=" + e.to_string() + ": " + why);
    }
  };
  if (!trials) {
    for_each_matching(m, [&](const Matching& a) {
      for (const Matching& b : neighbors(a)) {
        for (Vertex u = 1; u <= 2 * m; ++u) {
          for (Vertex v = u + 1; v <= 2 * m; ++v) check(a, b, Edge{u, v});
        }
      }
    });
  } else {
    std::mt19937_64 rng(opt.seed ^ 0x1e);
    for (std::size_t t = 0; t < *trials; ++t) {
      const Matching a = random_matching(m, rng);
      const auto around = neighbors(a);
      const Matching& b = around[rng() % around.size()];
      const auto u = static_cast<Vertex>(rng() % (2 * m)) + 1;
      auto v = static_cast<Vertex>(rng() % (2 * m - 1)) + 1;
      if (v >= u) ++v;
      check(a, b, Edge::make(u, v));
    }
  }
  r.detail = std::to_string(r.checked) + " (M1, M2, e) triples";
  return r;
}

// For every edge e of M2 not in M1: d(M1*e, M2) = d(M1, M2) - 1. And for
// every edge e not in M1, classify_insertion predicts the change in distance.
inline CheckResult insertion_effects(const std::vector<std::pair<Matching, Matching>>& pairs) {
  CheckResult r{.name = "insertion_trichotomy_first_insertion"};
  for (const auto& [a, b] : pairs) {
    const int d = distance(a, b);
    const int n = a.vertex_count();
    for (Vertex u = 1; u <= n; ++u) {
      for (Vertex v = u + 1; v <= n; ++v) {
        const Edge e{u, v};
        if (a.contains(e)) continue;
        ++r.checked;
        const int after = distance(insert_edge(a, e), b);
        const InsertionEffect effect = classify_insertion(a, b, e);
        const int predicted = effect == InsertionEffect::Increase   ? d + 1
                              : effect == InsertionEffect::Decrease ? d - 1
                                                                    : d;
        if (after != predicted) {
          r.fail(pair_text(a, b) + " e=" + e.to_string() + " classified " +
                 std::string(to_string(effect)));
        }
        if (b.contains(e) && after != d - 1) {
          r.fail(pair_text(a, b) + " first insertion of " + e.to_string() + " not on a geodesic");
        }
      }
    }
  }
  r.detail = std::to_string(r.checked) + " insertions";
  return r;
}

inline CheckResult noncrossing_catalan(int m) {
  CheckResult r{.name = "noncrossing_catalan"};
  const auto nc = noncrossing_matchings(m);
  r.checked = 1;
  if (Count(nc.size()) != catalan(m)) {
    r.fail(std::to_string(nc.size()) + " non-crossing matchings, Catalan " + to_decimal(catalan(m)));
  }
  r.detail = std::to_string(nc.size()) + " non-crossing matchings";
  return r;
}

// For all non-crossing pairs: BFS inside the subgraph = mm_distance = ambient
// distance.
inline CheckResult noncrossing_distance(int m, const Options& opt = {}) {
  CheckResult r{.name = "noncrossing_distance"};
  const MatchingGraph g = MatchingGraph::build(m, opt.graph_cap, is_noncrossing);
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto dist = g.bfs(i);
    for (std::size_t j = 0; j < g.order(); ++j) {
      ++r.checked;
      const Matching& a = g.vertex(i);
      const Matching& b = g.vertex(j);
      if (dist[j] != mm_distance(a, b) || dist[j] != distance(a, b)) {
        r.fail(pair_text(a, b) + " subgraph bfs " + std::to_string(dist[j]));
      }
    }
  }
  r.detail = std::to_string(r.checked) + " ordered non-crossing pairs";
  return r;
}

// Every ambient geodesic between the boundary pair is non-crossing
// throughout, so the restricted count is m^(m-2).
inline CheckResult boundary_geodesics(int m) {
  CheckResult r{.name = "boundary_geodesics_noncrossing"};
  const auto [a, b] = boundary_pair(m);
  for (const auto& path : enumerate_geodesics(a, b, UINT64_MAX)) {
    ++r.checked;
    for (const auto& step : path.steps) {
      if (!is_noncrossing(step)) r.fail(pair_text(a, b) + " leaves via " + format_literal(step));
    }
  }
  if (mm_geodesic_count(a, b, UINT64_MAX) != p2k_closed(m)) r.fail("restricted count differs");
  r.detail = std::to_string(r.checked) + " geodesics";
  return r;
}

inline CheckResult unique_maximal_pair(int m, const Options& opt = {}) {
  CheckResult r{.name = "noncrossing_unique_maximal_pair"};
  const MaximalPairReport rep = verify_unique_maximal_pair(m, opt.workers, opt.unique_pair_max_m);
  r.checked = rep.pairs_checked;
  if (!rep.passed()) {
    std::string who;
    for (const auto& [x, y] : rep.maximal_pairs) who += " {" + pair_text(x, y) + "}";
    r.fail("maximum " + to_decimal(rep.max_count) + " attained by" + who + ", runner-up " +
           to_decimal(rep.runner_up));
  }
  r.detail = "max " + to_decimal(rep.max_count) + " (expected " + to_decimal(rep.expected) +
             "), runner-up " + to_decimal(rep.runner_up) + " over " +
             std::to_string(rep.pairs_checked) + " pairs";
  return r;
}

// The full suite for one m, sized to finish in minutes for m <= 6.
inline std::vector<CheckResult> run_all(int m, const Options& opt = {}) {
  std::vector<CheckResult> out;
  const bool exhaustive = m <= 5;
  out.push_back(order_and_regularity(m, opt));
  out.push_back(distance_theorem(m, exhaustive ? std::nullopt : std::optional<std::size_t>(10'000), opt));
  out.push_back(eccentricity_and_antipodes(m, exhaustive ? std::nullopt : std::optional<std::size_t>(200), opt));
  out.push_back(p2k_identities(std::max(12, m)));

  std::vector<std::pair<Matching, Matching>> pairs;
  if (m <= 4) {
    pairs = all_pairs(m, opt.graph_cap);
  } else {
    pairs = random_pairs(m, m == 5 ? 500 : 180, opt.seed ^ 0x9e0);
    for (auto& p : random_antipodal_pairs(m, 20, opt.seed ^ 0xa7)) pairs.push_back(std::move(p));
  }
  out.push_back(count_matches_enumeration(pairs, opt));
  if (m >= 2) out.push_back(antipodal_geodesics(m));
  if (m >= 2 && m <= kMaxHurwitzN) out.push_back(hurwitz(m));
  out.push_back(insertion_lemma(m, m <= 3 ? std::nullopt : std::optional<std::size_t>(10'000), opt));
  out.push_back(insertion_effects(m <= 4 ? all_pairs(m, opt.graph_cap)
                                         : random_pairs(m, 1'000, opt.seed ^ 0xf1)));
  out.push_back(noncrossing_catalan(m));
  out.push_back(noncrossing_distance(m, opt));
  if (m >= 2) {
    out.push_back(boundary_geodesics(m));
    if (m <= opt.unique_pair_max_m) out.push_back(unique_maximal_pair(m, opt));
  }
  return out;
}

}  // namespace matchgeo::verify
