#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "matchgeo/error.hpp"
#include "matchgeo/matching.hpp"

namespace matchgeo {

// Refuse to materialize P_m (or run BFS over it) beyond this many vertices.
inline constexpr std::uint64_t kDefaultBfsCap = 1'000'000;

// Position of M in canonical order, in [0, (2m-1)!!). Mixed radix: the
// smallest free vertex picks its partner among the 2r-1 other free vertices.
inline std::uint64_t matching_rank(const Matching& M) {
  const auto p = M.raw_partners();
  std::vector<std::uint8_t> free(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) free[v] = static_cast<std::uint8_t>(v);
  std::uint64_t rank = 0;
  while (!free.empty()) {
    const std::uint8_t v = free.front();
    const std::uint8_t w = p[v];
    const auto it = std::find(free.begin() + 1, free.end(), w);
    const auto digit = static_cast<std::uint64_t>(it - free.begin() - 1);
    rank = rank * (free.size() - 1) + digit;
    free.erase(it);
    free.erase(free.begin());
  }
  return rank;
}

inline Matching matching_unrank(std::uint64_t rank, int m) {
  if (rank >= matching_count_u64(m)) {
    throw Error(ErrorKind::InvalidArgument, "rank " + std::to_string(rank) +
                                                " out of range for m = " + std::to_string(m));
  }
  std::vector<std::uint64_t> digits(m);
  for (int r = 1; r <= m; ++r) {
    const std::uint64_t radix = 2 * static_cast<std::uint64_t>(r) - 1;
    digits[m - r] = rank % radix;
    rank /= radix;
  }
  std::vector<std::uint8_t> free(2 * m);
  for (int v = 0; v < 2 * m; ++v) free[v] = static_cast<std::uint8_t>(v);
  std::vector<std::uint8_t> p(2 * m);
  for (int i = 0; i < m; ++i) {
    const std::uint8_t v = free.front();
    const std::uint8_t w = free[1 + digits[i]];
    p[v] = w;
    p[w] = v;
    free.erase(free.begin() + 1 + static_cast<std::ptrdiff_t>(digits[i]));
    free.erase(free.begin());
  }
  return Matching::from_partners(std::move(p));
}

using MatchingFilter = std::function<bool(const Matching&)>;

// P_m (or the subgraph induced by `filter`) held in memory as a CSR
// adjacency structure. Vertices are in canonical order; adjacency comes
// from neighbors(), so the structure is independent of the distance formula.
class MatchingGraph {
 public:
  static MatchingGraph build(int m, std::uint64_t cap = kDefaultBfsCap,
                             const MatchingFilter& filter = {}) {
    const std::uint64_t total = matching_count_u64(m);
    if (total > cap) {
      throw Error(ErrorKind::ResourceLimit,
                  "P_" + std::to_string(m) + " has " + to_decimal(double_factorial(2 * m - 1)) +
                      " vertices, over the cap of " + std::to_string(cap));
    }
    MatchingGraph g;
    g.m_ = m;
    for_each_matching(m, [&](const Matching& M) {
      if (!filter || filter(M)) g.vertices_.push_back(M);
    });
    g.index_.reserve(g.vertices_.size());
    for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
      g.index_.emplace(g.vertices_[i], static_cast<std::uint32_t>(i));
    }
    g.offsets_.reserve(g.vertices_.size() + 1);
    g.offsets_.push_back(0);
    for (const Matching& M : g.vertices_) {
      for (const Matching& N : neighbors(M)) {
        if (auto it = g.index_.find(N); it != g.index_.end()) g.targets_.push_back(it->second);
      }
      g.offsets_.push_back(static_cast<std::uint32_t>(g.targets_.size()));
    }
    return g;
  }

  int m() const { return m_; }
  std::size_t order() const { return vertices_.size(); }
  std::size_t edge_count() const { return targets_.size() / 2; }
  const Matching& vertex(std::size_t i) const { return vertices_.at(i); }
  const std::vector<Matching>& vertices() const { return vertices_; }

  std::optional<std::size_t> index_of(const Matching& M) const {
    if (auto it = index_.find(M); it != index_.end()) return it->second;
    return std::nullopt;
  }

  std::span<const std::uint32_t> adjacent(std::size_t i) const {
    return std::span(targets_).subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
  }

  // Hop counts from `source`; -1 marks unreachable vertices.
  std::vector<int> bfs(std::size_t source) const {
    std::vector<int> dist(order(), -1);
    std::vector<std::uint32_t> queue;
    queue.reserve(order());
    dist[source] = 0;
    queue.push_back(static_cast<std::uint32_t>(source));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t u = queue[head];
      for (std::uint32_t w : adjacent(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return dist;
  }

 private:
  int m_ = 0;
  std::vector<Matching> vertices_;
  std::unordered_map<Matching, std::uint32_t, MatchingHash> index_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> targets_;
};

}  // namespace matchgeo
