#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "matchgeo/count.hpp"
#include "matchgeo/error.hpp"

namespace matchgeo {

// Vertex labels are 1-based everywhere in the public API. Storage inside
// Matching is 0-based and never exposed as such.
using Vertex = int;

inline constexpr int kMaxM = 127;

// Default refusal threshold for materializing every vertex of P_m.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  // Orients (u, v) so that a < b.
  static Edge make(Vertex u, Vertex v) {
    if (u == v) {
      throw Error(ErrorKind::DuplicateVertex,
                  "edge endpoints coincide at vertex " + std::to_string(u));
    }
    return u < v ? Edge{u, v} : Edge{v, u};
  }

  bool touches(Vertex v) const { return a == v || b == v; }

  std::string to_string() const {
    return std::to_string(a) + "-" + std::to_string(b);
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A perfect matching of K_{2m}, stored as a fixed-point-free involution.
//
// Equality and ordering use the canonical form: edges (a, b) with a < b
// listed by increasing a, compared lexicographically. That order coincides
// with the enumeration order of for_each_matching().
class Matching {
 public:
  // Validates that `pairs` is a perfect matching of {1, ..., 2m}.
  static Matching from_pairs(std::span<const std::pair<Vertex, Vertex>> pairs,
                             int m) {
    if (m < 1 || m > kMaxM) {
      throw Error(ErrorKind::InvalidArgument,
                  "m must lie in [1, " + std::to_string(kMaxM) + "], got " +
                      std::to_string(m));
    }
    const int n = 2 * m;
    std::vector<std::uint8_t> partner(n, kUnset);
    for (const auto& [u, v] : pairs) {
      for (Vertex x : {u, v}) {
        if (x < 1 || x > n) {
          throw Error(ErrorKind::VertexOutOfRange,
                      "vertex " + std::to_string(x) + " not in [1, " +
                          std::to_string(n) + "]");
        }
      }
      if (u == v || partner[u - 1] != kUnset || partner[v - 1] != kUnset) {
        const Vertex dup = (u == v || partner[u - 1] != kUnset) ? u : v;
        throw Error(ErrorKind::DuplicateVertex,
                    "vertex " + std::to_string(dup) + " used twice (pair " +
                        std::to_string(u) + "-" + std::to_string(v) + ")");
      }
      partner[u - 1] = static_cast<std::uint8_t>(v - 1);
      partner[v - 1] = static_cast<std::uint8_t>(u - 1);
    }
    if (pairs.size() != static_cast<std::size_t>(m)) {
      throw Error(ErrorKind::WrongEdgeCount,
                  "expected " + std::to_string(m) + " pairs, got " +
                      std::to_string(pairs.size()));
    }
    return Matching(std::move(partner));
  }

  static Matching from_pairs(std::initializer_list<std::pair<Vertex, Vertex>> pairs,
                             int m) {
    return from_pairs(std::span(pairs.begin(), pairs.size()), m);
  }

  // Infers m from the number of pairs.
  static Matching from_pairs(std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    return from_pairs(pairs, static_cast<int>(pairs.size()));
  }

  // 0-based partner array; must be a fixed-point-free involution.
  static Matching from_partners(std::vector<std::uint8_t> partner) {
    const std::size_t n = partner.size();
    if (n == 0 || n % 2 != 0 || n > 2 * static_cast<std::size_t>(kMaxM)) {
      throw Error(ErrorKind::WrongEdgeCount,
                  "partner array length " + std::to_string(n) + " is not 2m");
    }
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t p = partner[v];
      if (p >= n) {
        throw Error(ErrorKind::VertexOutOfRange,
                    "vertex " + std::to_string(p + 1) + " out of range");
      }
      if (p == v || partner[p] != v) {
        throw Error(ErrorKind::DuplicateVertex,
                    "partner array is not an involution at vertex " +
                        std::to_string(v + 1));
      }
    }
    return Matching(std::move(partner));
  }

  // {(1,2), (3,4), ..., (2m-1,2m)}.
  static Matching identity(int m) {
    if (m < 1 || m > kMaxM) {
      throw Error(ErrorKind::InvalidArgument, "m out of range: " + std::to_string(m));
    }
    std::vector<std::uint8_t> partner(2 * m);
    for (int v = 0; v < 2 * m; ++v) partner[v] = static_cast<std::uint8_t>(v ^ 1);
    return Matching(std::move(partner));
  }

  int size() const { return static_cast<int>(partner_.size() / 2); }
  int vertex_count() const { return static_cast<int>(partner_.size()); }

  Vertex partner(Vertex v) const {
    check_vertex(v);
    return partner_[v - 1] + 1;
  }

  bool contains(Edge e) const {
    return e.a >= 1 && e.b <= vertex_count() && e.a != e.b &&
           partner_[e.a - 1] == e.b - 1;
  }

  // Canonical edge list.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (int v = 0; v < vertex_count(); ++v) {
      if (partner_[v] > v) out.push_back(Edge{v + 1, partner_[v] + 1});
    }
    return out;
  }

  // 0-based partner indices, for algorithm code inside the library.
  std::span<const std::uint8_t> raw_partners() const { return partner_; }

  void check_vertex(Vertex v) const {
    if (v < 1 || v > vertex_count()) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " not in [1, " +
                      std::to_string(vertex_count()) + "]");
    }
  }

  friend bool operator==(const Matching&, const Matching&) = default;

  friend std::strong_ordering operator<=>(const Matching& x, const Matching& y) {
    if (auto c = x.size() <=> y.size(); c != 0) return c;
    const int n = x.vertex_count();
    int i = 0;
    int j = 0;
    for (;;) {
      while (i < n && x.partner_[i] < i) ++i;
      while (j < n && y.partner_[j] < j) ++j;
      // Equal m: both edge lists run out together.
      if (i == n || j == n) return std::strong_ordering::equal;
      if (i != j) return i <=> j;
      if (x.partner_[i] != y.partner_[j]) return x.partner_[i] <=> y.partner_[j];
      ++i;
      ++j;
    }
  }

 private:
  static constexpr std::uint8_t kUnset = 0xff;

  explicit Matching(std::vector<std::uint8_t> partner) : partner_(std::move(partner)) {}

  friend Matching insert_edge(const Matching& M, Edge e);

  std::vector<std::uint8_t> partner_;
};

struct MatchingHash {
  std::size_t operator()(const Matching& M) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint8_t p : M.raw_partners()) {
      h ^= p;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline void require_same_size(const Matching& M1, const Matching& M2) {
  if (M1.size() != M2.size()) {
    throw Error(ErrorKind::MixedSizes, "matchings have m = " + std::to_string(M1.size()) +
                                           " and m = " + std::to_string(M2.size()));
  }
}

// Pairs need not be oriented or sorted.
inline Matching canonicalize(std::span<const std::pair<Vertex, Vertex>> pairs, int m) {
  return Matching::from_pairs(pairs, m);
}

// M * e: force e into M, joining the two displaced partners.
inline Matching insert_edge(const Matching& M, Edge e) {
  M.check_vertex(e.a);
  M.check_vertex(e.b);
  if (e.a == e.b) {
    throw Error(ErrorKind::DuplicateVertex,
                "edge endpoints coincide at vertex " + std::to_string(e.a));
  }
  if (M.contains(e)) return M;
  std::vector<std::uint8_t> p = M.partner_;
  const std::uint8_t v1 = static_cast<std::uint8_t>(e.a - 1);
  const std::uint8_t v2 = static_cast<std::uint8_t>(e.b - 1);
  const std::uint8_t v3 = p[v1];
  const std::uint8_t v4 = p[v2];
  p[v1] = v2;
  p[v2] = v1;
  p[v3] = v4;
  p[v4] = v3;
  return Matching(std::move(p));
}

// Left fold of insert_edge.
inline Matching insert_sequence(const Matching& M, std::span<const Edge> edges) {
  Matching current = M;
  for (const Edge& e : edges) current = insert_edge(current, e);
  return current;
}

// Edges in exactly one of M1, M2, sorted.
inline std::vector<Edge> symmetric_difference(const Matching& M1, const Matching& M2) {
  require_same_size(M1, M2);
  std::vector<Edge> out;
  for (const Edge& e : M1.edges()) {
    if (!M2.contains(e)) out.push_back(e);
  }
  for (const Edge& e : M2.edges()) {
    if (!M1.contains(e)) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The symmetric difference of two matchings is a disjoint union of
// alternating cycles of length >= 4, so four edges means one 4-cycle.
inline bool are_adjacent(const Matching& M1, const Matching& M2) {
  require_same_size(M1, M2);
  int differing = 0;
  const auto p1 = M1.raw_partners();
  const auto p2 = M2.raw_partners();
  for (std::size_t v = 0; v < p1.size(); ++v) {
    if (p1[v] != p2[v]) ++differing;
  }
  return differing == 4;
}

// All 2*C(m,2) neighbors, in canonical order. Each pair of edges
// (a,b), (c,d) of M yields {(a,c),(b,d)} and {(a,d),(b,c)}.
inline std::vector<Matching> neighbors(const Matching& M) {
  const std::vector<Edge> es = M.edges();
  std::vector<Matching> out;
  out.reserve(es.size() * (es.size() - 1));
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      out.push_back(insert_edge(M, Edge::make(es[i].a, es[j].a)));
      out.push_back(insert_edge(M, Edge::make(es[i].a, es[j].b)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Vertices in cycle order: starts at the smallest vertex, the second entry
// is its M1-partner, and edges then alternate M2, M1, ...
struct AlternatingCycle {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size(); }
  // Insertions needed inside this cycle: length/2 - 1.
  int insertions() const { return static_cast<int>(vertices.size() / 2) - 1; }

  friend bool operator==(const AlternatingCycle&, const AlternatingCycle&) = default;
};

struct CycleDecomposition {
  std::vector<AlternatingCycle> cycles;  // sorted by smallest vertex
  std::vector<int> cycle_of;             // cycle index per vertex (index v-1)
  std::vector<int> position;             // index within its cycle (index v-1)

  int l() const { return static_cast<int>(cycles.size()); }
};

inline CycleDecomposition union_decompose(const Matching& M1, const Matching& M2) {
  require_same_size(M1, M2);
  const auto p1 = M1.raw_partners();
  const auto p2 = M2.raw_partners();
  const int n = M1.vertex_count();
  CycleDecomposition d;
  d.cycle_of.assign(n, -1);
  d.position.assign(n, -1);
  for (int start = 0; start < n; ++start) {
    if (d.cycle_of[start] >= 0) continue;
    const int id = d.l();
    AlternatingCycle cycle;
    int v = start;
    bool use_first = true;
    do {
      d.cycle_of[v] = id;
      d.position[v] = static_cast<int>(cycle.vertices.size());
      cycle.vertices.push_back(v + 1);
      v = use_first ? p1[v] : p2[v];
      use_first = !use_first;
    } while (v != start);
    d.cycles.push_back(std::move(cycle));
  }
  return d;
}

namespace detail {

template <typename Fn>
void matchings_rec(std::vector<std::uint8_t>& p, std::vector<bool>& used, Fn& fn) {
  const int n = static_cast<int>(p.size());
  int v = 0;
  while (v < n && used[v]) ++v;
  if (v == n) {
    fn(Matching::from_partners(p));
    return;
  }
  used[v] = true;
  for (int w = v + 1; w < n; ++w) {
    if (used[w]) continue;
    used[w] = true;
    p[v] = static_cast<std::uint8_t>(w);
    p[w] = static_cast<std::uint8_t>(v);
    matchings_rec(p, used, fn);
    used[w] = false;
  }
  used[v] = false;
}

}  // namespace detail

// Visits every perfect matching of K_{2m} once, in canonical order: the
// smallest unmatched vertex is paired with each larger free vertex in turn.
template <typename Fn>
void for_each_matching(int m, Fn&& fn) {
  if (m < 1 || m > kMaxM) {
    throw Error(ErrorKind::InvalidArgument, "m out of range: " + std::to_string(m));
  }
  std::vector<std::uint8_t> p(2 * m, 0);
  std::vector<bool> used(2 * m, false);
  detail::matchings_rec(p, used, fn);
}

inline std::vector<Matching> enumerate_all_matchings(
    int m, std::uint64_t cap = kDefaultEnumerationCap) {
  const std::uint64_t total = matching_count_u64(m);
  if (total > cap) {
    throw Error(ErrorKind::ResourceLimit, "(2m-1)!! = " + to_decimal(double_factorial(2 * m - 1)) +
                                              " matchings exceeds cap " + std::to_string(cap));
  }
  std::vector<Matching> out;
  out.reserve(total);
  for_each_matching(m, [&](const Matching& M) { out.push_back(M); });
  return out;
}

// Uniform (up to modulo bias) over all (2m-1)!! matchings. Uses a
// hand-rolled Fisher-Yates so sequences are identical across standard
// libraries for a given engine and seed.
template <typename Rng>
Matching random_matching(int m, Rng& rng) {
  std::vector<std::uint8_t> order(2 * m);
  for (int v = 0; v < 2 * m; ++v) order[v] = static_cast<std::uint8_t>(v);
  for (int i = 2 * m - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(order[i], order[j]);
  }
  std::vector<std::uint8_t> p(2 * m);
  for (int i = 0; i < 2 * m; i += 2) {
    p[order[i]] = order[i + 1];
    p[order[i + 1]] = order[i];
  }
  return Matching::from_partners(std::move(p));
}

}  // namespace matchgeo
