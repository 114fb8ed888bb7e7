#pragma once

// Command-line front end. Each invocation prints one JSON envelope on `out`
// ({"command", "parameters", "result", "exact"}, keys in that order) and a
// short human-readable summary on `err`. export-dot is the exception: it
// writes the DOT graph itself on `out`.
//
// Exit codes: 0 success (including passing verifications), 1 usage or
// input errors, 2 verification failure.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "matchgeo/matchgeo.hpp"
#include "matchgeo/verify.hpp"

namespace matchgeo::cli {

using json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;

inline constexpr int kDefaultMaxM = 6;

// Largest m for which the full graph may be materialized.
inline int max_materialized_m() {
  if (const char* env = std::getenv("MATCHGEO_MAX_M")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::InvalidArgument,
                "MATCHGEO_MAX_M must be a positive integer, got '" + std::string(env) + "'");
  }
  return kDefaultMaxM;
}

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline json envelope(const std::string& command, json parameters, json result) {
  json doc;
  doc["command"] = command;
  doc["parameters"] = std::move(parameters);
  doc["result"] = std::move(result);
  doc["exact"] = true;
  return doc;
}

inline void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

inline Matching parse_flag(const std::string& flag, const std::string& text, std::optional<int> m) {
  try {
    return parse_literal(text, m);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

inline std::string path_text(const GeodesicPath& path) {
  std::string s;
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    if (i) s += " > ";
    s += format_literal(path.steps[i]);
  }
  return s;
}

inline json cycles_json(const CycleDecomposition& d) {
  json cycles = json::array();
  for (const auto& c : d.cycles) cycles.push_back(format_cycle(c));
  return cycles;
}

inline void require_materializable(int m) {
  const int limit = max_materialized_m();
  if (m > limit) {
    throw UsageError("--m " + std::to_string(m) + " exceeds the materialization limit " +
                     std::to_string(limit) + " (set MATCHGEO_MAX_M to raise it)");
  }
  if (m < 1) throw UsageError("--m must be >= 1");
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distances and geodesics in the graph of perfect matchings of K_2m", "matchgeo"};
  app.require_subcommand(1);

  std::optional<int> m;
  std::string a_text;
  std::string b_text;
  std::uint64_t cap = kDefaultPathCap;
  bool count_only = false;
  int k = 0;
  std::string method = "closed";
  int n = 0;
  bool noncrossing_only = false;
  std::uint64_t seed = verify::Options{}.seed;

  auto* dist = app.add_subcommand("dist", "distance and cycle decomposition of a pair");
  dist->add_option("--m", m, "matching size");
  dist->add_option("--a", a_text, "first matching, e.g. 1-2,3-4")->required();
  dist->add_option("--b", b_text, "second matching")->required();

  auto* count = app.add_subcommand("count", "closed-form geodesic count of a pair");
  count->add_option("--m", m, "matching size");
  count->add_option("--a", a_text, "first matching")->required();
  count->add_option("--b", b_text, "second matching")->required();

  auto* enumerate = app.add_subcommand("enumerate", "list every geodesic of a pair");
  enumerate->add_option("--m", m, "matching size");
  enumerate->add_option("--a", a_text, "first matching")->required();
  enumerate->add_option("--b", b_text, "second matching")->required();
  enumerate->add_option("--cap", cap, "refuse pairs with more geodesics than this");

  auto* antipodes = app.add_subcommand("antipodes", "matchings at maximal distance");
  antipodes->add_option("--m", m, "matching size");
  antipodes->add_option("--a", a_text, "matching")->required();
  antipodes->add_flag("--count-only", count_only, "omit the list");

  auto* p2k_cmd = app.add_subcommand("p2k", "geodesics across a single 2k-cycle");
  p2k_cmd->add_option("--k", k, "half cycle length")->required()->check(CLI::Range(1, 100000));
  p2k_cmd->add_option("--method", method, "recurrence|weighted|closed|trees")
      ->check(CLI::IsMember({"recurrence", "weighted", "closed", "trees"}));

  auto* hurwitz = app.add_subcommand("hurwitz", "count n-cycle factorizations into transpositions");
  hurwitz->add_option("--n", n, "cycle length")->required();

  auto* noncross = app.add_subcommand("noncross", "non-crossing matchings");
  noncross->require_subcommand(1);
  auto* nc_verify = noncross->add_subcommand("verify", "check the unique maximal pair");
  nc_verify->add_option("--m", m, "matching size")->required();
  auto* nc_count = noncross->add_subcommand("count", "geodesics staying non-crossing");
  nc_count->add_option("--m", m, "matching size");
  nc_count->add_option("--a", a_text, "first matching")->required();
  nc_count->add_option("--b", b_text, "second matching")->required();
  nc_count->add_option("--cap", cap, "refuse pairs with more ambient geodesics than this");

  auto* verify_cmd = app.add_subcommand("verify", "oracle suites");
  verify_cmd->require_subcommand(1);
  auto* verify_all = verify_cmd->add_subcommand("all", "run every oracle check for one m");
  verify_all->add_option("--m", m, "matching size")->required();
  verify_all->add_option("--seed", seed, "seed for sampled checks");

  auto* export_dot = app.add_subcommand("export-dot", "write P_m as a DOT graph");
  export_dot->add_option("--m", m, "matching size")->required();
  export_dot->add_flag("--noncrossing", noncrossing_only, "restrict to non-crossing matchings");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (dist->parsed()) {
      const Matching a = detail::parse_flag("--a", a_text, m);
      const Matching b = detail::parse_flag("--b", b_text, a.size());
      const CycleDecomposition d = union_decompose(a, b);
      json lengths = json::array();
      for (const auto& c : d.cycles) lengths.push_back(c.length());
      const int value = distance(a, b);
      detail::emit(out, detail::envelope(
                            "dist", {{"m", a.size()}, {"a", format_literal(a)}, {"b", format_literal(b)}},
                            {{"distance", value},
                             {"l", d.l()},
                             {"cycles", detail::cycles_json(d)},
                             {"cycle_lengths", lengths}}));
      err << "distance " << value << " (" << d.l() << " cycle" << (d.l() == 1 ? "" : "s") << ")\n";
    } else if (count->parsed()) {
      const Matching a = detail::parse_flag("--a", a_text, m);
      const Matching b = detail::parse_flag("--b", b_text, a.size());
      const CycleProfile profile = cycle_profile(a, b);
      const Count c = geodesic_count(profile);
      detail::emit(out, detail::envelope(
                            "count", {{"m", a.size()}, {"a", format_literal(a)}, {"b", format_literal(b)}},
                            {{"count", to_decimal(c)},
                             {"distance", profile.total()},
                             {"cycle_profile", profile.n}}));
      err << to_decimal(c) << " geodesics\n";
    } else if (enumerate->parsed()) {
      const Matching a = detail::parse_flag("--a", a_text, m);
      const Matching b = detail::parse_flag("--b", b_text, a.size());
      const auto paths = enumerate_geodesics(a, b, cap);
      json listed = json::array();
      for (const auto& p : paths) listed.push_back(detail::path_text(p));
      detail::emit(out, detail::envelope("enumerate",
                                         {{"m", a.size()},
                                          {"a", format_literal(a)},
                                          {"b", format_literal(b)},
                                          {"cap", cap}},
                                         {{"count", std::to_string(paths.size())},
                                          {"distance", distance(a, b)},
                                          {"paths", listed}}));
      err << paths.size() << " geodesics\n";
    } else if (antipodes->parsed()) {
      const Matching a = detail::parse_flag("--a", a_text, m);
      const auto found = antipodes_of(a);
      json result{{"count", std::to_string(found.size())}, {"distance", eccentricity(a)}};
      if (!count_only) {
        json listed = json::array();
        for (const auto& x : found) listed.push_back(format_literal(x));
        result["antipodes"] = listed;
      }
      detail::emit(out, detail::envelope(
                            "antipodes",
                            {{"m", a.size()}, {"a", format_literal(a)}, {"count_only", count_only}},
                            result));
      err << found.size() << " antipodes at distance " << eccentricity(a) << "\n";
    } else if (p2k_cmd->parsed()) {
      const P2kMethod which = method == "recurrence" ? P2kMethod::Recurrence
                              : method == "weighted" ? P2kMethod::Weighted
                              : method == "trees"    ? P2kMethod::Trees
                                                     : P2kMethod::Closed;
      const Count v = p2k(k, which);
      detail::emit(out, detail::envelope("p2k", {{"k", k}, {"method", method}},
                                         {{"value", to_decimal(v)}}));
      err << "P_" << 2 * k << " = " << to_decimal(v) << "\n";
    } else if (hurwitz->parsed()) {
      const Count found = count_cycle_factorizations(n);
      const Count expected = p2k_closed(n);
      detail::emit(out, detail::envelope(
                            "hurwitz", {{"n", n}},
                            {{"count", to_decimal(found)}, {"expected", to_decimal(expected)},
                             {"passed", found == expected}}));
      err << to_decimal(found) << " factorizations\n";
      if (found != expected) return kExitVerifyFailed;
    } else if (nc_verify->parsed()) {
      detail::require_materializable(*m);
      if (*m < 2) throw detail::UsageError("--m must be >= 2 for noncross verify");
      const MaximalPairReport rep = verify_unique_maximal_pair(*m, 0, max_materialized_m());
      json maximal = json::array();
      for (const auto& [x, y] : rep.maximal_pairs) {
        maximal.push_back(json::array({format_literal(x), format_literal(y)}));
      }
      detail::emit(out, detail::envelope("noncross verify", {{"m", *m}},
                                         {{"noncrossing_matchings", rep.noncrossing_count},
                                          {"pairs_checked", rep.pairs_checked},
                                          {"max_count", to_decimal(rep.max_count)},
                                          {"expected", to_decimal(rep.expected)},
                                          {"runner_up", to_decimal(rep.runner_up)},
                                          {"maximal_pairs", maximal},
                                          {"unique", rep.unique()},
                                          {"passed", rep.passed()}}));
      if (!rep.passed()) {
        err << "FAILED: maximum " << to_decimal(rep.max_count) << " attained by "
            << rep.maximal_pairs.size() << " pair(s)";
        if (!rep.maximal_pairs.empty()) {
          err << "; first a=" << format_literal(rep.maximal_pairs.front().first)
              << " b=" << format_literal(rep.maximal_pairs.front().second);
        }
        err << "\n";
        return kExitVerifyFailed;
      }
      err << "unique maximal pair with " << to_decimal(rep.max_count) << " geodesics\n";
    } else if (nc_count->parsed()) {
      const Matching a = detail::parse_flag("--a", a_text, m);
      const Matching b = detail::parse_flag("--b", b_text, a.size());
      const Count c = mm_geodesic_count(a, b, cap);
      detail::emit(out, detail::envelope("noncross count",
                                         {{"m", a.size()},
                                          {"a", format_literal(a)},
                                          {"b", format_literal(b)},
                                          {"cap", cap}},
                                         {{"count", to_decimal(c)},
                                          {"ambient_count", to_decimal(geodesic_count(a, b))},
                                          {"distance", mm_distance(a, b)}}));
      err << to_decimal(c) << " non-crossing geodesics\n";
    } else if (verify_all->parsed()) {
      detail::require_materializable(*m);
      verify::Options opt;
      opt.seed = seed;
      opt.unique_pair_max_m = max_materialized_m();
      const auto checks = verify::run_all(*m, opt);
      json listed = json::array();
      const verify::CheckResult* first_failure = nullptr;
      for (const auto& c : checks) {
        json entry{{"name", c.name}, {"passed", c.passed}, {"checked", c.checked}, {"detail", c.detail}};
        if (!c.passed) entry["counterexample"] = c.counterexample;
        listed.push_back(entry);
        if (!c.passed && !first_failure) first_failure = &c;
        err << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
      }
      detail::emit(out, detail::envelope("verify all", {{"m", *m}, {"seed", seed}},
                                         {{"passed", first_failure == nullptr}, {"checks", listed}}));
      if (first_failure) {
        err << "counterexample (" << first_failure->name << "): " << first_failure->counterexample
            << "\n";
        return kExitVerifyFailed;
      }
    } else if (export_dot->parsed()) {
      detail::require_materializable(*m);
      const MatchingGraph g = noncrossing_only
                                  ? MatchingGraph::build(*m, UINT64_MAX, is_noncrossing)
                                  : MatchingGraph::build(*m, UINT64_MAX);
      out << "graph " << (noncrossing_only ? "M_" : "P_") << *m << " {\n";
      for (const auto& v : g.vertices()) out << "  \"" << format_literal(v) << "\";\n";
      for (std::size_t i = 0; i < g.order(); ++i) {
        for (std::uint32_t j : g.adjacent(i)) {
          if (j > i) {
            out << "  \"" << format_literal(g.vertex(i)) << "\" -- \""
                << format_literal(g.vertex(j)) << "\";\n";
          }
        }
      }
      out << "}\n";
      err << g.order() << " vertices, " << g.edge_count() << " edges\n";
    }
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace matchgeo::cli
