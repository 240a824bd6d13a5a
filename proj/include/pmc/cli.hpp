#pragma once

// Command-line front end.  Every command reads JSON payloads from options
// and writes one response document:
//   {"status": "ok" | "error", "command": ..., "result": ..., "diagnostics": [...]}
// Exit codes: 0 success, 2 invalid input or resource limit, 1 internal
// consistency failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pmc/io.hpp"
#include "pmc/pmc.hpp"
#include "pmc/specht.hpp"

namespace pmc::cli {

using json = nlohmann::json;

enum ExitCode : int { kOk = 0, kConsistency = 1, kInvalid = 2 };

namespace detail {

struct Common {
  std::string cartan = "A";
  std::optional<int> rank;
  std::string format = "json";
  int threads = 1;
  std::size_t limit = kDefaultElementCeiling;
};

struct Payload {
  std::string r, j, sequence, diagram;
  bool truncation = false, bound = false, coeffs = false, oracle = false;
  std::optional<int> restrict_n, n;
};

// Rank defaults to the smallest one the input fits in.
inline RootDatum make_datum(const Common& c, const PointMultiset& r) {
  const auto kind = parse_cartan_kind(c.cartan);
  if (c.rank) return build_root_datum(kind, *c.rank);
  const int v = r.max_vertex();
  switch (kind) {
  case CartanKind::A: return build_root_datum(kind, std::max(1, v));
  case CartanKind::D: return build_root_datum(kind, std::max(4, v));
  case CartanKind::GL: return build_root_datum(kind, v + 1);
  case CartanKind::E6: return build_root_datum(kind, 6);
  case CartanKind::E7: return build_root_datum(kind, 7);
  case CartanKind::E8: return build_root_datum(kind, 8);
  }
  throw ValidationError("unknown cartan kind");
}

inline void require_format(const Common& c, std::initializer_list<const char*> allowed, const std::string& command) {
  for (auto* f : allowed)
    if (c.format == f) return;
  throw ValidationError("format '" + c.format + "' is not available for " + command);
}

inline ThresholdSet target_set(const RootDatum& datum, const PointMultiset& r, const Payload& p) {
  if (!p.j.empty()) return io::threshold_from_json(io::parse(p.j, "J"), datum);
  return up_closure(datum, r.support());
}

inline json character_json(const RootDatum& datum, const GroupAlgebraElement& ch) {
  auto out = io::character_to_json(datum, ch);
  if (datum.is_gl()) out["text_mod_det"] = render(datum, reduce_mod_det(datum, ch));
  return out;
}

inline json weight_map_json(const std::map<Weight, std::int64_t>& m) {
  json out = json::object();
  for (auto& [w, c] : m) out[w.str()] = c;
  return out;
}

inline json graph_json(const CrystalGraph<Monomial>& g) {
  json nodes = json::array(), edges = json::array();
  for (std::size_t k = 0; k < g.size(); ++k) nodes.push_back(io::to_json(g[k]));
  for (std::size_t k = 0; k < g.size(); ++k)
    for (int i = 1; i <= g.num_vertices(); ++i)
      if (auto t = g.f_edge(k, i); t >= 0) edges.push_back({{"from", k}, {"to", t}, {"i", i}});
  return {{"nodes", nodes}, {"edges", edges}};
}

struct Outcome {
  json result;
  std::vector<std::string> diagnostics;
  std::optional<std::string> raw; // non-JSON output for dot / ascii
};

inline Outcome cmd_decompose(const Common& c, const Payload& p) {
  require_format(c, {"json"}, "decompose");
  const auto r = io::multiset_from_json(io::parse(p.r, "R"));
  const auto datum = make_datum(c, r);
  r.validate(datum);
  const auto d = decompose(datum, r, {.ceiling = c.limit, .parallel = c.threads > 1});
  Outcome out;
  if (datum.is_gl()) {
    out.result = io::decomposition_to_json(datum, d.multiplicities);
  } else {
    json fund = json::object();
    for (auto& [w, m] : d.multiplicities) fund[io::fundamental_form(datum, w)] = m;
    out.result = {{"multiplicities", weight_map_json(d.multiplicities)}, {"fundamental", fund}};
  }
  out.diagnostics.push_back(datum.name() + "; highest weights enumerated on the " + d.enumeration_route + " crystal");
  return out;
}

inline Outcome cmd_character(const Common& c, const Payload& p) {
  require_format(c, {"json"}, "character");
  const auto r = io::multiset_from_json(io::parse(p.r, "R"));
  const auto datum = make_datum(c, r);
  r.validate(datum);
  Outcome out;
  if (p.truncation) {
    const auto plan = build_plan(datum, r, target_set(datum, r, p));
    const auto ch = char_by_plan(datum, plan);
    out.result = {{"J", io::to_json(plan.target)}, {"character", character_json(datum, ch)},
                  {"keys", weight_map_json(key_decompose(datum, ch))}};
  } else {
    if (!p.j.empty()) throw ValidationError("--J requires --truncation");
    const auto ch = full_character(datum, r);
    out.result = {{"character", character_json(datum, ch)}, {"decomposition", io::decomposition_to_json(datum, weyl_decompose(datum, ch))}};
  }
  return out;
}

inline Outcome cmd_truncate(const Common& c, const Payload& p) {
  require_format(c, {"json"}, "truncate");
  const auto r = io::multiset_from_json(io::parse(p.r, "R"));
  const auto datum = make_datum(c, r);
  r.validate(datum);
  const auto j = target_set(datum, r, p);
  const auto xs = truncate(datum, r, j, c.limit);
  const MonomialOps ops(datum);
  json elements = json::array(), primitive = json::array();
  for (auto& x : xs) elements.push_back(io::to_json(x));
  for (auto& x : highest_weights(ops, xs)) primitive.push_back(io::to_json(x));
  Outcome out;
  out.result = {{"J", io::to_json(j)},
                {"size", xs.size()},
                {"elements", elements},
                {"highest_weight", primitive},
                {"character", character_json(datum, character_of_set(ops, xs))}};
  return out;
}

inline Outcome cmd_plan(const Common& c, const Payload& p) {
  require_format(c, {"json"}, "plan");
  const auto r = io::multiset_from_json(io::parse(p.r, "R"));
  const auto datum = make_datum(c, r);
  r.validate(datum);
  const auto plan = build_plan(datum, r, target_set(datum, r, p));
  json eff = json::array();
  for (auto& s : effective_steps(datum, plan)) eff.push_back(io::to_json(s));
  json stages = json::array();
  std::vector<ElementSet<Monomial>> sets;
  replay_plan(datum, plan, &sets);
  for (auto& s : sets) stages.push_back(s.size());
  Outcome out;
  out.result = io::to_json(plan);
  out.result["effective_steps"] = eff;
  out.result["stage_sizes"] = stages;
  out.result["character"] = character_json(datum, char_by_plan(datum, plan));
  return out;
}

inline Outcome cmd_graph(const Common& c, const Payload& p) {
  require_format(c, {"json", "dot"}, "graph");
  const auto r = io::multiset_from_json(io::parse(p.r, "R"));
  const auto datum = make_datum(c, r);
  r.validate(datum);
  const MonomialOps ops(datum);
  const auto g = p.j.empty() ? product_crystal(datum, r, c.limit)
                             : induced_graph(ops, truncate(datum, r, target_set(datum, r, p), c.limit));
  Outcome out;
  if (c.format == "dot") out.raw = to_dot(ops, g);
  else out.result = graph_json(g);
  return out;
}

inline Outcome cmd_schur(const Common& c, const Payload& p) {
  require_format(c, {"json", "ascii"}, "schur");
  if (p.sequence.empty() == p.diagram.empty()) throw ValidationError("schur needs exactly one of --sequence or --diagram");
  PartitionSequence seq;
  Diagram d;
  if (!p.sequence.empty()) {
    seq = io::sequence_from_json(io::parse(p.sequence, "sequence"));
    d = diagram_of_sequence(seq);
  } else {
    d = io::diagram_from_json(io::parse(p.diagram, "diagram"));
    if (!d.column_convex()) throw ValidationError("diagram is not column-convex");
    seq = sequence_of_diagram(d);
  }
  Outcome out;
  if (c.format == "ascii") {
    out.raw = d.ascii();
    return out;
  }
  const int n = p.n.value_or(static_cast<int>(std::max<std::int64_t>({1, static_cast<std::int64_t>(seq.length()), d.max_row()})));
  const auto gl = build_root_datum(CartanKind::GL, n);
  const auto flagged = flagged_schur_char(seq, n);
  const auto coeffs = partition_decompose(gl, schur_char(seq, n));
  out.result = {{"sequence", io::to_json(seq)},
                {"diagram", io::to_json(d)},
                {"n", n},
                {"decomposition", io::partition_map_to_json(coeffs)},
                {"flagged_character", character_json(gl, flagged)},
                {"keys", weight_map_json(key_decompose(gl, flagged))}};
  if (auto skew = skew_normalise(d)) out.result["skew"] = {{"outer", skew->outer.parts()}, {"inner", skew->inner.parts()}};
  if (p.oracle) {
    if (static_cast<std::int64_t>(d.max_row()) > n)
      throw ValidationError("--oracle needs n at least the number of rows of the diagram");
    const auto specht = specht_decompose_bruteforce(d);
    if (restrict_coeffs(specht, static_cast<std::size_t>(n)) != coeffs)
      throw ConsistencyError("schur: character route disagrees with the Specht module oracle");
    out.diagnostics.push_back("Specht module oracle agrees");
  }
  return out;
}

inline Outcome cmd_stable(const Common& c, const Payload& p) {
  require_format(c, {"json"}, "stable");
  if (c.cartan != "A" && c.cartan != "GL") throw ValidationError("stable works over GL");
  if (int(p.bound) + int(p.coeffs) + int(p.restrict_n.has_value()) != 1)
    throw ValidationError("stable needs exactly one of --bound, --coeffs or --restrict");
  const auto r = io::multiset_from_json(io::parse(p.r, "R"));
  for (auto& [q, m] : r.points())
    if (q.vertex < 1 || ((q.c % 2) + 2) % 2 != q.vertex % 2) throw ValidationError("R: point (" + std::to_string(q.vertex) + "," + std::to_string(q.c) + ") violates parity");
  const DecomposeOptions opt{.ceiling = c.limit, .parallel = c.threads > 1};
  Outcome out;
  if (p.bound) {
    out.result = {{"stable_bound", stable_bound(r)}};
    return out;
  }
  const auto coeffs = stable_coeffs(r, opt);
  out.diagnostics.push_back("computed over GL_" + std::to_string(stable_rank(r)));
  if (p.coeffs) {
    out.result = {{"stable_bound", stable_bound(r)}, {"coefficients", io::partition_map_to_json(coeffs)}};
    return out;
  }
  const int n = *p.restrict_n;
  if (n < 1) throw ValidationError("--restrict needs n >= 1");
  const auto restricted = restrict_coeffs(coeffs, static_cast<std::size_t>(n));
  if (r.max_vertex() < n) {
    const auto gl = build_root_datum(CartanKind::GL, n);
    if (partition_decompose(gl, full_character(gl, r)) != restricted)
      throw ConsistencyError("stable: restricted coefficients disagree with the direct GL_" + std::to_string(n) + " decomposition");
    out.diagnostics.push_back("checked against the direct GL_" + std::to_string(n) + " decomposition");
  }
  out.result = {{"n", n}, {"coefficients", io::partition_map_to_json(restricted)}};
  return out;
}

inline json envelope(const std::string& command, const std::string& status, json result, const std::vector<std::string>& diags) {
  return {{"status", status}, {"command", command}, {"result", std::move(result)}, {"diagnostics", diags}};
}

inline json error_doc(const std::string& command, const std::string& kind, const std::string& message) {
  return envelope(command, "error", nullptr, {kind + ": " + message});
}

} // namespace detail

/// Runs one request.  The response goes to `out`; help text too.
inline int run(const std::vector<std::string>& args, std::ostream& out) {
  using namespace detail;
  CLI::App app{"Product monomial crystals: decompositions, characters, truncations and generalised Schur modules", "pmc"};
  app.require_subcommand(1);
  Common common;
  Payload payload;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cartan", common.cartan, "A, D, E6, E7, E8 or GL")->capture_default_str();
    sub->add_option("--rank", common.rank, "rank (n for GL_n); defaults to the smallest that fits R");
    sub->add_option("--format", common.format, "json, dot or ascii")->capture_default_str();
    sub->add_option("--threads", common.threads, "worker threads; above 1 runs independent routes concurrently")->check(CLI::PositiveNumber);
    sub->add_option("--limit", common.limit, "element-count ceiling for enumerations")->capture_default_str();
  };
  auto add_r = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--R", payload.r, "multiset as JSON [[i, c, mult], ...]");
    if (required) o->required();
  };
  auto add_j = [&](CLI::App* sub) { sub->add_option("--J", payload.j, R"(upward-closed set as JSON {"thresholds": {"i": c}})"); };

  std::vector<std::pair<CLI::App*, Outcome (*)(const Common&, const Payload&)>> commands;
  auto* dec = app.add_subcommand("decompose", "irreducible multiplicities of M(R)");
  add_common(dec), add_r(dec, true);
  commands.emplace_back(dec, cmd_decompose);

  auto* chr = app.add_subcommand("character", "character of M(R), or of a truncation with --truncation");
  add_common(chr), add_r(chr, true), add_j(chr);
  chr->add_flag("--truncation", payload.truncation, "character of M(R, J) by the inductive formula");
  commands.emplace_back(chr, cmd_character);

  auto* trc = app.add_subcommand("truncate", "elements of M(R, J)");
  add_common(trc), add_r(trc, true), add_j(trc);
  commands.emplace_back(trc, cmd_truncate);

  auto* pln = app.add_subcommand("plan", "build plan for M(R, J) by extensions and boundary products");
  add_common(pln), add_r(pln, true), add_j(pln);
  commands.emplace_back(pln, cmd_plan);

  auto* gph = app.add_subcommand("graph", "crystal graph of M(R), or of M(R, J) with --J");
  add_common(gph), add_r(gph, true), add_j(gph);
  commands.emplace_back(gph, cmd_graph);

  auto* sch = app.add_subcommand("schur", "generalised Schur module of a partition sequence or diagram");
  add_common(sch);
  sch->add_option("--sequence", payload.sequence, "partition sequence as JSON [[...], ...]");
  sch->add_option("--diagram", payload.diagram, "column-convex diagram as JSON [[row, col], ...]");
  sch->add_option("--n", payload.n, "GL rank for the character")->check(CLI::PositiveNumber);
  sch->add_flag("--oracle", payload.oracle, "cross-check against the Specht module oracle");
  commands.emplace_back(sch, cmd_schur);

  auto* stb = app.add_subcommand("stable", "stable coefficients of R over GL");
  add_common(stb), add_r(stb, true);
  stb->add_flag("--bound", payload.bound, "smallest stable rank");
  stb->add_flag("--coeffs", payload.coeffs, "stable coefficients keyed by partition");
  stb->add_option("--restrict", payload.restrict_n, "coefficients for GL_n");
  commands.emplace_back(stb, cmd_stable);

  std::string command = "?";
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    out << error_doc(command, "validation", e.what()).dump(2) << "\n";
    return kInvalid;
  }

  for (auto& [sub, fn] : commands) {
    if (!sub->parsed()) continue;
    command = sub->get_name();
    try {
      auto outcome = fn(common, payload);
      if (outcome.raw) out << *outcome.raw;
      else out << envelope(command, "ok", std::move(outcome.result), outcome.diagnostics).dump(2) << "\n";
      return kOk;
    } catch (const ValidationError& e) {
      out << error_doc(command, "validation", e.what()).dump(2) << "\n";
      return kInvalid;
    } catch (const LimitExceeded& e) {
      out << error_doc(command, "limit", e.what()).dump(2) << "\n";
      return kInvalid;
    } catch (const ConsistencyError& e) {
      out << error_doc(command, "consistency", e.what()).dump(2) << "\n";
      return kConsistency;
    } catch (const nlohmann::json::exception& e) {
      out << error_doc(command, "validation", e.what()).dump(2) << "\n";
      return kInvalid;
    }
  }
  out << error_doc(command, "validation", "no command given").dump(2) << "\n";
  return kInvalid;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return run(args, out);
}

} // namespace pmc::cli
