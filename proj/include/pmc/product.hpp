#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pmc/cartan.hpp"
#include "pmc/crystal.hpp"
#include "pmc/errors.hpp"
#include "pmc/monomial.hpp"
#include "pmc/weightring.hpp"

namespace pmc {

/// A finite multiset of lattice points.  Parity is checked against a datum
/// by validate(); the container itself is datum-free so that the same
/// multiset can be read over several GL_n.
class PointMultiset {
public:
  using map_type = std::map<LatticePoint, std::int64_t>;

  PointMultiset() = default;
  PointMultiset(std::initializer_list<std::pair<LatticePoint, std::int64_t>> xs) {
    for (auto& [p, m] : xs) add(p, m);
  }

  void add(const LatticePoint& p, std::int64_t m = 1) {
    if (m < 0) throw ValidationError("multiplicities must be nonnegative");
    if (m == 0) return;
    mult_[p] += m;
  }
  void add(int i, std::int64_t c, std::int64_t m = 1) { add(LatticePoint{i, c}, m); }

  [[nodiscard]] std::int64_t operator[](const LatticePoint& p) const {
    auto it = mult_.find(p);
    return it == mult_.end() ? 0 : it->second;
  }
  [[nodiscard]] const map_type& points() const noexcept { return mult_; }
  [[nodiscard]] bool empty() const noexcept { return mult_.empty(); }
  [[nodiscard]] std::size_t support_size() const noexcept { return mult_.size(); }
  [[nodiscard]] std::int64_t cardinality() const {
    std::int64_t s = 0;
    for (auto& [p, m] : mult_) s += m;
    return s;
  }
  [[nodiscard]] std::vector<LatticePoint> support() const {
    std::vector<LatticePoint> out;
    for (auto& [p, m] : mult_) out.push_back(p);
    return out;
  }
  [[nodiscard]] int max_vertex() const {
    int v = 0;
    for (auto& [p, m] : mult_) v = std::max(v, p.vertex);
    return v;
  }
  /// Every point shifted by delta in c.
  [[nodiscard]] PointMultiset shifted(std::int64_t delta) const {
    PointMultiset out;
    for (auto& [p, m] : mult_) out.add(p.vertex, p.c + delta, m);
    return out;
  }

  PointMultiset& operator+=(const PointMultiset& o) {
    for (auto& [p, m] : o.mult_) add(p, m);
    return *this;
  }
  friend PointMultiset operator+(PointMultiset a, const PointMultiset& b) { return a += b; }
  friend bool operator==(const PointMultiset&, const PointMultiset&) = default;

  void validate(const RootDatum& datum) const {
    for (auto& [p, m] : mult_) require_parity(datum, p);
  }

  [[nodiscard]] std::string str() const {
    std::string s = "{";
    bool first = true;
    for (auto& [p, m] : mult_) {
      s += (first ? "" : ", ") + ("(" + std::to_string(p.vertex) + "," + std::to_string(p.c) + ")");
      if (m != 1) s += "^" + std::to_string(m);
      first = false;
    }
    return s + "}";
  }

private:
  map_type mult_;
};

/// wt(R) = sum of R[i,c] varpi_i.
inline Weight weight_of(const RootDatum& datum, const PointMultiset& r) {
  Weight w = datum.zero();
  for (auto& [p, m] : r.points()) w += m * datum.varpi(p.vertex);
  return w;
}

/// y_R = prod e^{varpi_i} y_{i,c} over R.
inline Monomial y_of(const RootDatum& datum, const PointMultiset& r) {
  r.validate(datum);
  std::vector<Monomial::Term> terms;
  for (auto& [p, m] : r.points()) terms.push_back({p.vertex, p.c, m});
  return Monomial(weight_of(datum, r), std::move(terms));
}

/// z_S = prod z_{i,k} over S.
inline Monomial z_of(const RootDatum& datum, const PointMultiset& s) {
  Monomial out = Monomial::one(datum);
  for (auto& [p, m] : s.points()) {
    require_parity(datum, p);
    for (std::int64_t k = 0; k < m; ++k) multiply_z(datum, out, p.vertex, p.c, +1);
  }
  return out;
}

/// y_R z_S^{-1}.
inline Monomial monomial_from_label(const RootDatum& datum, const PointMultiset& r, const PointMultiset& s) {
  Monomial out = y_of(datum, r);
  for (auto& [p, m] : s.points()) {
    require_parity(datum, p);
    for (std::int64_t k = 0; k < m; ++k) multiply_z(datum, out, p.vertex, p.c, -1);
  }
  return out;
}

/// M(i,c)^n: the subcrystal generated by e^{n varpi_i} y_{i,c}^n.
inline CrystalGraph<Monomial> fundamental_crystal(const RootDatum& datum, int i, std::int64_t c, std::int64_t n,
                                                  std::size_t ceiling = kDefaultElementCeiling) {
  if (n < 0) throw ValidationError("fundamental_crystal needs n >= 0");
  return closure(MonomialOps(datum), {Monomial::y(datum, i, c, n)}, ceiling);
}

/// Product of the sizes of the fundamental factors; an upper bound on |M(R)|.
/// Infinite when a single factor already exceeds the ceiling.
inline double product_size_bound(const RootDatum& datum, const PointMultiset& r, std::size_t ceiling = kDefaultElementCeiling) {
  double bound = 1;
  for (auto& [p, m] : r.points()) {
    try {
      bound *= static_cast<double>(fundamental_crystal(datum, p.vertex, p.c, m, ceiling).size());
    } catch (const LimitExceeded&) {
      return std::numeric_limits<double>::infinity();
    }
  }
  return bound;
}

/// The monomial-wise product of the fundamental subcrystals M(i,c)^{R[i,c]}.
/// The result is checked to be closed under every e_i and f_i.
inline ElementSet<Monomial> product_crystal_set(const RootDatum& datum, const PointMultiset& r,
                                                std::size_t ceiling = kDefaultElementCeiling) {
  r.validate(datum);
  ElementSet<Monomial> acc{Monomial::one(datum)};
  for (auto& [p, m] : r.points()) {
    const auto factor = fundamental_crystal(datum, p.vertex, p.c, m, ceiling);
    ElementSet<Monomial> next;
    for (auto& x : acc)
      for (auto& y : factor.elements()) {
        next.insert(x * y);
        if (next.size() > ceiling) throw LimitExceeded("product crystal exceeded limit of " + std::to_string(ceiling) + " elements");
      }
    acc = std::move(next);
  }
  if (auto bad = closure_violation(MonomialOps(datum), acc)) throw ConsistencyError("product crystal is not closed: " + *bad);
  return acc;
}

inline CrystalGraph<Monomial> product_crystal(const RootDatum& datum, const PointMultiset& r,
                                              std::size_t ceiling = kDefaultElementCeiling) {
  return induced_graph(MonomialOps(datum), product_crystal_set(datum, r, ceiling));
}

/// The unique S with p = y_R z_S^{-1}, found by an ascending sweep of
///   S[i,k] = R[i,k] - p[i,k] - S[i,k-2] + sum_{j~i} S[j,k-1].
/// Throws ValidationError when p is not of that form with S >= 0.
inline PointMultiset s_label(const RootDatum& datum, const PointMultiset& r, const Monomial& p) {
  if (p.terms().empty() && r.empty()) {
    if (!p.weight().is_zero()) throw ValidationError("s_label: monomial not expressible as y_R z_S^{-1}");
    return {};
  }
  std::int64_t lo = 0, hi = 0;
  bool any = false;
  auto widen = [&](std::int64_t c) {
    lo = any ? std::min(lo, c) : c;
    hi = any ? std::max(hi, c) : c;
    any = true;
  };
  for (auto& t : p.terms()) widen(t.c);
  for (auto& [q, m] : r.points()) widen(q.c);

  const int n = datum.num_vertices();
  // S values indexed [vertex][k - lo]; k runs over lo .. hi - 2.
  const std::int64_t width = hi - lo + 1;
  std::vector<std::vector<std::int64_t>> s(n + 1, std::vector<std::int64_t>(static_cast<std::size_t>(std::max<std::int64_t>(width, 0)), 0));
  auto at = [&](int i, std::int64_t k) -> std::int64_t {
    if (k < lo || k > hi) return 0;
    return s[i][static_cast<std::size_t>(k - lo)];
  };
  PointMultiset out;
  for (std::int64_t k = lo; k <= hi - 2; ++k) {
    for (int i = 1; i <= n; ++i) {
      if (!parity_respecting(datum, {i, k})) continue;
      std::int64_t v = r[{i, k}] - p.exponent(i, k) - at(i, k - 2);
      for (int j : datum.neighbours(i)) v += at(j, k - 1);
      if (v < 0) throw ValidationError("s_label: monomial not expressible (negative entry at (" + std::to_string(i) + "," + std::to_string(k) + "))");
      s[i][static_cast<std::size_t>(k - lo)] = v;
      if (v) out.add(i, k, v);
    }
  }
  if (monomial_from_label(datum, r, out) != p) throw ValidationError("s_label: monomial not expressible as y_R z_S^{-1}");
  return out;
}

/// Supp_R(p) = Supp R union Supp S.
inline std::set<LatticePoint> r_support(const RootDatum& datum, const PointMultiset& r, const Monomial& p) {
  std::set<LatticePoint> out;
  for (auto& [q, m] : r.points()) out.insert(q);
  const auto s = s_label(datum, r, p);
  for (auto& [q, m] : s.points()) out.insert(q);
  return out;
}

} // namespace pmc
