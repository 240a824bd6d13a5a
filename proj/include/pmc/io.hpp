#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "pmc/cartan.hpp"
#include "pmc/crystal.hpp"
#include "pmc/errors.hpp"
#include "pmc/monomial.hpp"
#include "pmc/product.hpp"
#include "pmc/truncation.hpp"
#include "pmc/typea.hpp"
#include "pmc/weightring.hpp"

namespace pmc::io {

using json = nlohmann::json;

inline json parse(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(what + ": malformed JSON (" + e.what() + ")");
  }
}

namespace detail {
inline std::int64_t as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ValidationError(what + ": expected an integer");
  return j.get<std::int64_t>();
}
} // namespace detail

// Point multisets: [[i, c, mult], ...]

inline PointMultiset multiset_from_json(const json& j, const RootDatum* datum = nullptr) {
  if (!j.is_array()) throw ValidationError("R: expected an array of [i, c, mult] triples");
  PointMultiset r;
  for (auto& t : j) {
    if (!t.is_array() || (t.size() != 3 && t.size() != 2)) throw ValidationError("R: each entry must be [i, c, mult]");
    const auto i = detail::as_int(t[0], "R vertex");
    const auto c = detail::as_int(t[1], "R height");
    const auto m = t.size() == 3 ? detail::as_int(t[2], "R multiplicity") : 1;
    if (m <= 0) throw ValidationError("R: multiplicities must be positive");
    r.add(static_cast<int>(i), c, m);
  }
  if (datum) r.validate(*datum);
  return r;
}

inline json to_json(const PointMultiset& r) {
  json out = json::array();
  for (auto& [p, m] : r.points()) out.push_back({p.vertex, p.c, m});
  return out;
}

// Threshold sets: {"thresholds": {"i": k, ...}}; a missing column is empty.

inline ThresholdSet threshold_from_json(const json& j, const RootDatum& datum) {
  if (!j.is_object() || !j.contains("thresholds") || !j["thresholds"].is_object())
    throw ValidationError("J: expected {\"thresholds\": {\"i\": k, ...}}");
  ThresholdSet out(datum.num_vertices());
  for (auto& [key, val] : j["thresholds"].items()) {
    int i = 0;
    try {
      i = std::stoi(key);
    } catch (...) {
      throw ValidationError("J: column key '" + key + "' is not an integer");
    }
    datum.require_vertex(i);
    out.set_threshold(i, detail::as_int(val, "J threshold"));
  }
  out.validate(datum);
  return out;
}

inline json to_json(const ThresholdSet& j) {
  json th = json::object();
  for (int i = 1; i <= j.num_vertices(); ++i)
    if (j.threshold(i)) th[std::to_string(i)] = *j.threshold(i);
  return {{"thresholds", th}};
}

// Weights and characters

inline json to_json(const Weight& w) { return w.coords(); }

/// "2varpi_1+varpi_3", with det_n for GL; "0" for the zero weight.
inline std::string fundamental_form(const RootDatum& datum, const Weight& w) {
  std::string out;
  auto term = [&](std::int64_t coeff, const std::string& name) {
    if (!coeff) return;
    if (!out.empty()) out += coeff < 0 ? "-" : "+";
    else if (coeff < 0) out += "-";
    const auto mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1) out += std::to_string(mag);
    out += name;
  };
  for (int i = 1; i <= datum.num_vertices(); ++i) term(datum.pairing(i, w), "varpi_" + std::to_string(i));
  if (datum.is_gl()) term(w[datum.lattice_rank() - 1], "det");
  return out.empty() ? "0" : out;
}

inline json character_to_json(const RootDatum& datum, const GroupAlgebraElement& f) {
  json terms = json::object();
  for (auto& [w, c] : f.terms()) terms[w.str()] = c;
  return {{"terms", terms}, {"text", render(datum, f)}, {"dimension", f.augmentation()}};
}

/// Irreducible multiplicities.  Semisimple types give a map keyed by the
/// fundamental coordinates; GL_n gives the partition form and the
/// fundamental-weight-plus-det form side by side.
inline json decomposition_to_json(const RootDatum& datum, const std::map<Weight, std::int64_t>& mult) {
  if (!datum.is_gl()) {
    json out = json::object();
    for (auto& [w, m] : mult) out[w.str()] = m;
    return out;
  }
  json parts = json::object(), fund = json::object(), list = json::array();
  for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
    const auto& [w, m] = *it;
    const auto p = weight_partition(w);
    parts[p.str()] = m;
    fund[fundamental_form(datum, w)] = m;
    list.push_back({{"partition", p.parts()}, {"fundamental", fundamental_form(datum, w)}, {"weight", w.coords()}, {"multiplicity", m}});
  }
  return {{"partitions", parts}, {"fundamental", fund}, {"summands", list}};
}

inline json partition_map_to_json(const std::map<Partition, std::int64_t>& m) {
  json out = json::object();
  for (auto it = m.rbegin(); it != m.rend(); ++it) out[it->first.str()] = it->second;
  return out;
}

// Monomials: {"weight": [...], "exponents": [{"i":, "c":, "e":}, ...]}

inline json to_json(const Monomial& p) {
  json ex = json::array();
  for (auto& t : p.terms()) ex.push_back({{"i", t.vertex}, {"c", t.c}, {"e", t.exp}});
  return {{"weight", p.weight().coords()}, {"exponents", ex}, {"text", p.str()}};
}

inline Monomial monomial_from_json(const json& j, const RootDatum& datum) {
  if (!j.is_object() || !j.contains("weight") || !j.contains("exponents")) throw ValidationError("monomial: expected {weight, exponents}");
  std::vector<std::int64_t> w;
  for (auto& x : j["weight"]) w.push_back(detail::as_int(x, "monomial weight"));
  if (w.size() != datum.lattice_rank()) throw ValidationError("monomial: weight has the wrong length");
  std::vector<Monomial::Term> terms;
  for (auto& t : j["exponents"])
    terms.push_back({static_cast<int>(detail::as_int(t.at("i"), "i")), detail::as_int(t.at("c"), "c"), detail::as_int(t.at("e"), "e")});
  Monomial p(Weight(std::move(w)), std::move(terms));
  std::string why;
  if (!is_valid_monomial(datum, p, &why)) throw ValidationError("monomial: " + why);
  return p;
}

// Plans

inline json to_json(const PlanStep& step) {
  if (auto* e = std::get_if<ExtendStep>(&step)) return {{"op", "extend"}, {"i", e->point.vertex}, {"c", e->point.c}};
  return {{"op", "multiply"}, {"Q", to_json(std::get<MultiplyStep>(step).q)}};
}

inline json to_json(const BuildPlan& plan) {
  json steps = json::array();
  for (auto& s : plan.steps) steps.push_back(to_json(s));
  return {{"R", to_json(plan.r)}, {"start", to_json(plan.start)}, {"target", to_json(plan.target)}, {"steps", steps}};
}

// Type A

inline Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("partition: expected an array of parts");
  std::vector<std::int64_t> parts;
  for (auto& x : j) parts.push_back(detail::as_int(x, "partition part"));
  return Partition(std::move(parts));
}

inline PartitionSequence sequence_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("sequence: expected an array of partitions");
  std::vector<Partition> seq;
  for (auto& p : j) seq.push_back(partition_from_json(p));
  return PartitionSequence(std::move(seq));
}

inline json to_json(const PartitionSequence& seq) {
  json out = json::array();
  for (auto& p : seq.entries()) out.push_back(p.parts());
  return out;
}

inline Diagram diagram_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("diagram: expected an array of [row, col] pairs");
  std::set<Box> boxes;
  for (auto& b : j) {
    if (!b.is_array() || b.size() != 2) throw ValidationError("diagram: each box must be [row, col]");
    if (!boxes.insert({detail::as_int(b[0], "row"), detail::as_int(b[1], "col")}).second) throw ValidationError("diagram: repeated box");
  }
  return Diagram(std::move(boxes));
}

inline json to_json(const Diagram& d) {
  json out = json::array();
  for (auto& b : d.boxes()) out.push_back({b.row, b.col});
  return out;
}

} // namespace pmc::io
