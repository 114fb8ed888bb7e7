#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matchgeo/error.hpp"
#include "matchgeo/matching.hpp"

namespace matchgeo {

// Text form of a matching: comma-separated hyphen pairs, 1-based, e.g.
// "1-2,3-4,5-6". Any pair order and orientation is accepted on input; the
// canonical form is always emitted on output.

inline std::string format_literal(const Matching& M) {
  std::string out;
  for (const Edge& e : M.edges()) {
    if (!out.empty()) out += ',';
    out += e.to_string();
  }
  return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline Vertex parse_vertex(std::string_view token, std::string_view whole) {
  token = trim(token);
  Vertex value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end) {
    throw Error(ErrorKind::Parse, "bad vertex '" + std::string(token) + "' in '" +
                                      std::string(whole) + "'");
  }
  return value;
}

}  // namespace detail

inline std::vector<std::pair<Vertex, Vertex>> parse_pairs(std::string_view text) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  const std::string_view whole = text;
  if (detail::trim(text).empty()) {
    throw Error(ErrorKind::Parse, "empty matching literal");
  }
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      throw Error(ErrorKind::Parse, "pair '" + std::string(detail::trim(item)) +
                                        "' lacks '-' in '" + std::string(whole) + "'");
    }
    pairs.emplace_back(detail::parse_vertex(item.substr(0, dash), whole),
                       detail::parse_vertex(item.substr(dash + 1), whole));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return pairs;
}

// When `m` is absent it is inferred from the number of pairs.
inline Matching parse_literal(std::string_view text, std::optional<int> m = std::nullopt) {
  const auto pairs = parse_pairs(text);
  return Matching::from_pairs(pairs, m.value_or(static_cast<int>(pairs.size())));
}

inline std::string format_cycle(const AlternatingCycle& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(c.vertices[i]);
  }
  return out + ")";
}

}  // namespace matchgeo
