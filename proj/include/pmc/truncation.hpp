#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "pmc/cartan.hpp"
#include "pmc/crystal.hpp"
#include "pmc/errors.hpp"
#include "pmc/monomial.hpp"
#include "pmc/product.hpp"
#include "pmc/weightring.hpp"

namespace pmc {

/// An upward-closed subset J of the parity-respecting lattice, stored as one
/// threshold per column: column i of J is {(i,c) : c >= theta_i}.  An absent
/// threshold means the column is empty.
class ThresholdSet {
public:
  ThresholdSet() = default;
  explicit ThresholdSet(int num_vertices) : theta_(num_vertices) {}
  explicit ThresholdSet(std::vector<std::optional<std::int64_t>> theta) : theta_(std::move(theta)) {}

  [[nodiscard]] int num_vertices() const noexcept { return static_cast<int>(theta_.size()); }
  [[nodiscard]] const std::optional<std::int64_t>& threshold(int i) const { return theta_[i - 1]; }
  void set_threshold(int i, std::optional<std::int64_t> t) { theta_[i - 1] = t; }
  [[nodiscard]] const std::vector<std::optional<std::int64_t>>& thresholds() const noexcept { return theta_; }

  [[nodiscard]] bool contains(const LatticePoint& p) const {
    if (p.vertex < 1 || p.vertex > num_vertices()) return false;
    const auto& t = theta_[p.vertex - 1];
    return t && p.c >= *t;
  }
  [[nodiscard]] bool all_finite() const {
    return std::all_of(theta_.begin(), theta_.end(), [](const auto& t) { return t.has_value(); });
  }

  /// Checks parity of each threshold and closure across edges.
  void validate(const RootDatum& datum) const {
    if (num_vertices() != datum.num_vertices()) throw ValidationError("threshold set has the wrong number of columns");
    for (int i = 1; i <= num_vertices(); ++i) {
      if (!theta_[i - 1]) continue;
      require_parity(datum, {i, *theta_[i - 1]});
      for (int j : datum.neighbours(i))
        if (!theta_[j - 1] || *theta_[j - 1] > *theta_[i - 1] + 1)
          throw ValidationError("threshold set is not upward-closed across the edge " + std::to_string(i) + "-" + std::to_string(j));
    }
  }

  /// The boundary points (i, theta_i).
  [[nodiscard]] std::vector<LatticePoint> boundary() const {
    std::vector<LatticePoint> out;
    for (int i = 1; i <= num_vertices(); ++i) {
      if (!theta_[i - 1]) throw ValidationError("column " + std::to_string(i) + " has no boundary");
      out.push_back({i, *theta_[i - 1]});
    }
    return out;
  }

  [[nodiscard]] ThresholdSet shifted(std::int64_t delta) const {
    ThresholdSet out = *this;
    for (auto& t : out.theta_)
      if (t) *t += delta;
    return out;
  }

  friend ThresholdSet set_union(const ThresholdSet& a, const ThresholdSet& b) {
    ThresholdSet out(a.num_vertices());
    for (int k = 0; k < a.num_vertices(); ++k) {
      const auto &x = a.theta_[k], &y = b.theta_[k];
      out.theta_[k] = !x ? y : (!y ? x : std::optional(std::min(*x, *y)));
    }
    return out;
  }
  friend ThresholdSet set_intersection(const ThresholdSet& a, const ThresholdSet& b) {
    ThresholdSet out(a.num_vertices());
    for (int k = 0; k < a.num_vertices(); ++k) {
      const auto &x = a.theta_[k], &y = b.theta_[k];
      if (x && y) out.theta_[k] = std::max(*x, *y);
    }
    return out;
  }
  friend bool operator==(const ThresholdSet&, const ThresholdSet&) = default;

  [[nodiscard]] std::string str() const {
    std::string s = "(";
    for (int k = 0; k < num_vertices(); ++k) s += (k ? "," : "") + (theta_[k] ? std::to_string(*theta_[k]) : std::string("inf"));
    return s + ")";
  }

private:
  std::vector<std::optional<std::int64_t>> theta_;
};

/// A downward-closed set, stored as per-column tops: column i is
/// {(i,c) : c <= tau_i}; an absent top means the column is empty.
class DownSet {
public:
  DownSet() = default;
  explicit DownSet(int num_vertices) : tau_(num_vertices) {}

  [[nodiscard]] int num_vertices() const noexcept { return static_cast<int>(tau_.size()); }
  [[nodiscard]] const std::optional<std::int64_t>& top(int i) const { return tau_[i - 1]; }
  void set_top(int i, std::optional<std::int64_t> t) { tau_[i - 1] = t; }
  [[nodiscard]] bool contains(const LatticePoint& p) const {
    if (p.vertex < 1 || p.vertex > num_vertices()) return false;
    const auto& t = tau_[p.vertex - 1];
    return t && p.c <= *t;
  }
  [[nodiscard]] bool empty() const {
    return std::none_of(tau_.begin(), tau_.end(), [](const auto& t) { return t.has_value(); });
  }

private:
  std::vector<std::optional<std::int64_t>> tau_;
};

/// up(X): threshold theta_j = min over x of c_x + dist(i_x, j).
inline ThresholdSet up_closure(const RootDatum& datum, const std::vector<LatticePoint>& points) {
  ThresholdSet out(datum.num_vertices());
  for (auto& p : points) {
    require_parity(datum, p);
    for (int j = 1; j <= datum.num_vertices(); ++j) {
      const auto t = p.c + datum.diagram().distance(p.vertex, j);
      const auto& cur = out.threshold(j);
      if (!cur || t < *cur) out.set_threshold(j, t);
    }
  }
  return out;
}

/// down(X): top tau_j = max over x of c_x - dist(i_x, j).
inline DownSet down_closure(const RootDatum& datum, const std::vector<LatticePoint>& points) {
  DownSet out(datum.num_vertices());
  for (auto& p : points) {
    require_parity(datum, p);
    for (int j = 1; j <= datum.num_vertices(); ++j) {
      const auto t = p.c - datum.diagram().distance(p.vertex, j);
      const auto& cur = out.top(j);
      if (!cur || t > *cur) out.set_top(j, t);
    }
  }
  return out;
}

/// J minus a downward-closed set; again upward-closed.
inline ThresholdSet set_difference(const ThresholdSet& j, const DownSet& d) {
  ThresholdSet out = j;
  for (int i = 1; i <= j.num_vertices(); ++i) {
    const auto &t = j.threshold(i), &top = d.top(i);
    if (t && top) out.set_threshold(i, std::max(*t, *top + 2));
  }
  return out;
}

/// The complement of a downward-closed set.
inline ThresholdSet complement(const RootDatum& datum, const DownSet& d) {
  ThresholdSet out(datum.num_vertices());
  for (int i = 1; i <= datum.num_vertices(); ++i) {
    if (!d.top(i)) throw ValidationError("complement of a set with an empty column is not a threshold set");
    out.set_threshold(i, *d.top(i) + 2);
  }
  return out;
}

/// The finite set J intersect D, listed by column.
inline std::vector<LatticePoint> window(const ThresholdSet& j, const DownSet& d) {
  std::vector<LatticePoint> out;
  for (int i = 1; i <= j.num_vertices(); ++i) {
    const auto &t = j.threshold(i), &top = d.top(i);
    if (!t || !top) continue;
    for (auto c = *t; c <= *top; c += 2) out.push_back({i, c});
  }
  return out;
}

/// M(R, J) = {p in M(R) : Supp_R(p) inside J}, by filtering the product
/// crystal.
inline ElementSet<Monomial> truncate(const RootDatum& datum, const PointMultiset& r, const ThresholdSet& j,
                                     std::size_t ceiling = kDefaultElementCeiling) {
  j.validate(datum);
  for (auto& [p, m] : r.points())
    if (!j.contains(p)) throw ValidationError("truncate: Supp R is not contained in J");
  ElementSet<Monomial> out;
  for (auto& p : product_crystal_set(datum, r, ceiling)) {
    const auto supp = r_support(datum, r, p);
    if (std::all_of(supp.begin(), supp.end(), [&](const LatticePoint& q) { return j.contains(q); })) out.insert(p);
  }
  return out;
}

struct ExtendStep {
  LatticePoint point;
  friend bool operator==(const ExtendStep&, const ExtendStep&) = default;
};
struct MultiplyStep {
  PointMultiset q;
  friend bool operator==(const MultiplyStep&, const MultiplyStep&) = default;
};
using PlanStep = std::variant<ExtendStep, MultiplyStep>;

/// An ordered recipe that grows M(empty, J_0) = {1} into M(R, J_target)
/// by adding one point to J at a time and multiplying by boundary
/// monomials.
struct BuildPlan {
  PointMultiset r;
  ThresholdSet start;
  ThresholdSet target;
  std::vector<PlanStep> steps;
};

inline BuildPlan build_plan(const RootDatum& datum, const PointMultiset& r, std::optional<ThresholdSet> target = std::nullopt) {
  r.validate(datum);
  const auto supp = r.support();
  BuildPlan plan;
  plan.r = r;
  plan.target = target ? *target : up_closure(datum, supp);
  plan.target.validate(datum);
  for (auto& p : supp)
    if (!plan.target.contains(p)) throw ValidationError("build_plan: target set does not contain Supp R");
  if (supp.empty()) {
    plan.start = plan.target;
    return plan;
  }
  const auto down = down_closure(datum, supp);
  plan.start = set_difference(plan.target, down);
  auto k = window(plan.target, down);
  std::sort(k.begin(), k.end(), [](const LatticePoint& a, const LatticePoint& b) {
    return a.c != b.c ? a.c > b.c : a.vertex < b.vertex;
  });
  for (auto& p : k) {
    plan.steps.emplace_back(ExtendStep{p});
    if (auto m = r[p]) {
      PointMultiset q;
      q.add(p, m);
      plan.steps.emplace_back(MultiplyStep{std::move(q)});
    }
  }
  return plan;
}

/// Replays a plan on sets, checking at each stage that J stays
/// upward-closed and that each multiplier sits on the boundary.
inline ElementSet<Monomial> replay_plan(const RootDatum& datum, const BuildPlan& plan,
                                        std::vector<ElementSet<Monomial>>* stages = nullptr) {
  const MonomialOps ops(datum);
  ElementSet<Monomial> xs{Monomial::one(datum)};
  ThresholdSet j = plan.start;
  for (auto& step : plan.steps) {
    if (auto* ext = std::get_if<ExtendStep>(&step)) {
      const auto& p = ext->point;
      const auto& t = j.threshold(p.vertex);
      if (t && *t != p.c + 2) throw ConsistencyError("plan extends a point that is not just below the column threshold");
      j.set_threshold(p.vertex, p.c);
      j.validate(datum);
      xs = extend_strings(ops, p.vertex, xs);
    } else {
      const auto& q = std::get<MultiplyStep>(step).q;
      for (auto& [p, m] : q.points())
        if (!j.threshold(p.vertex) || *j.threshold(p.vertex) != p.c) throw ConsistencyError("plan multiplies by a point off the boundary");
      const auto yq = y_of(datum, q);
      ElementSet<Monomial> next;
      for (auto& x : xs) next.insert(x * yq);
      xs = std::move(next);
    }
    if (stages) stages->push_back(xs);
  }
  return xs;
}

/// ch M(empty, J) = 1; Multiply Q multiplies by e^{wt Q}; Extend (i,k)
/// applies pi_i.
inline GroupAlgebraElement char_by_plan(const RootDatum& datum, const BuildPlan& plan) {
  auto ch = GroupAlgebraElement::exp(datum.zero());
  for (auto& step : plan.steps) {
    if (auto* ext = std::get_if<ExtendStep>(&step)) ch = demazure_pi(datum, ext->point.vertex, ch);
    else ch = ch.shifted(weight_of(datum, std::get<MultiplyStep>(step).q));
  }
  return ch;
}

/// The plan with set-level no-op extensions removed and adjacent
/// multiplications merged.
inline std::vector<PlanStep> effective_steps(const RootDatum& datum, const BuildPlan& plan) {
  std::vector<ElementSet<Monomial>> stages;
  replay_plan(datum, plan, &stages);
  std::vector<PlanStep> out;
  const ElementSet<Monomial> initial{Monomial::one(datum)};
  for (std::size_t k = 0; k < plan.steps.size(); ++k) {
    const auto& before = k ? stages[k - 1] : initial;
    if (std::holds_alternative<ExtendStep>(plan.steps[k])) {
      if (stages[k] != before) out.push_back(plan.steps[k]);
      continue;
    }
    const auto& q = std::get<MultiplyStep>(plan.steps[k]).q;
    if (!out.empty() && std::holds_alternative<MultiplyStep>(out.back())) std::get<MultiplyStep>(out.back()).q += q;
    else out.emplace_back(MultiplyStep{q});
  }
  return out;
}

/// ch M(R) = pi_{w0} ch M(R, up(R)).
inline GroupAlgebraElement full_character(const RootDatum& datum, const PointMultiset& r) {
  auto ch = apply_longest(datum, char_by_plan(datum, build_plan(datum, r)));
  if (!is_weyl_invariant(datum, ch)) throw ConsistencyError("full character is not Weyl invariant");
  return ch;
}

struct DecomposeOptions {
  std::size_t ceiling = kDefaultElementCeiling;
  bool parallel = false; // run the two routes on separate threads
};

struct Decomposition {
  std::map<Weight, std::int64_t> multiplicities;
  std::string enumeration_route; // "product" or "truncation"
};

/// Multiplicities of B(lambda) in M(R), computed by enumerating primitive
/// elements and, independently, by decomposing the stabilised truncation
/// character.  The two must agree.
inline Decomposition decompose(const RootDatum& datum, const PointMultiset& r, const DecomposeOptions& opt = {}) {
  r.validate(datum);
  const MonomialOps ops(datum);
  auto character_route = [&] { return weyl_decompose(datum, full_character(datum, r)); };
  std::future<std::map<Weight, std::int64_t>> pending;
  if (opt.parallel) pending = std::async(std::launch::async, character_route);
  Decomposition out;
  std::vector<Monomial> primitive;
  if (product_size_bound(datum, r, opt.ceiling) <= static_cast<double>(opt.ceiling)) {
    primitive = highest_weights(ops, product_crystal_set(datum, r, opt.ceiling));
    out.enumeration_route = "product";
  } else {
    primitive = highest_weights(ops, replay_plan(datum, build_plan(datum, r)));
    out.enumeration_route = "truncation";
  }
  for (auto& p : primitive) out.multiplicities[p.weight()] += 1;

  const auto by_character = opt.parallel ? pending.get() : character_route();
  if (by_character != out.multiplicities) {
    std::string a, b;
    for (auto& [w, m] : out.multiplicities) a += " " + w.str() + ":" + std::to_string(m);
    for (auto& [w, m] : by_character) b += " " + w.str() + ":" + std::to_string(m);
    throw ConsistencyError("decompose: highest-weight enumeration {" + a + " } disagrees with character route {" + b + " }");
  }
  return out;
}

} // namespace pmc
