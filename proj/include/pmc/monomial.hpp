#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "pmc/cartan.hpp"
#include "pmc/errors.hpp"

namespace pmc {

/// A point (i, c) of I x Z.  Parity-respecting points (parity(i) == c mod 2)
/// form the lattice the monomial crystal lives on.
struct LatticePoint {
  int vertex = 0;
  std::int64_t c = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline bool parity_respecting(const RootDatum& datum, const LatticePoint& p) {
  if (!datum.has_vertex(p.vertex)) return false;
  const auto m = ((p.c % 2) + 2) % 2;
  return m == datum.parity(p.vertex);
}

inline void require_parity(const RootDatum& datum, const LatticePoint& p) {
  datum.require_vertex(p.vertex);
  if (!parity_respecting(datum, p))
    throw ValidationError("point (" + std::to_string(p.vertex) + "," + std::to_string(p.c) + ") violates parity: vertex " +
                          std::to_string(p.vertex) + " has parity " + std::to_string(datum.parity(p.vertex)));
}

/// A Nakajima monomial e^{wt} prod y_{i,c}^{p[i,c]}.  Exponents are stored
/// sorted by (vertex, c) with zeros dropped, so equality is structural.
class Monomial {
public:
  struct Term {
    int vertex;
    std::int64_t c;
    std::int64_t exp;
    friend bool operator==(const Term&, const Term&) = default;
    friend auto operator<=>(const Term&, const Term&) = default;
  };

  Monomial() = default;
  explicit Monomial(Weight wt) : weight_(std::move(wt)) {}
  Monomial(Weight wt, std::vector<Term> terms) : weight_(std::move(wt)), terms_(std::move(terms)) { canonicalise(); }

  static Monomial one(const RootDatum& datum) { return Monomial(datum.zero()); }

  /// e^{n varpi_i} y_{i,c}^n.
  static Monomial y(const RootDatum& datum, int i, std::int64_t c, std::int64_t n = 1) {
    require_parity(datum, {i, c});
    Weight w = datum.varpi(i);
    w *= n;
    Monomial m(std::move(w));
    if (n != 0) m.terms_.push_back({i, c, n});
    return m;
  }

  [[nodiscard]] const Weight& weight() const noexcept { return weight_; }
  [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_trivial() const noexcept { return terms_.empty() && weight_.is_zero(); }

  [[nodiscard]] std::int64_t exponent(int i, std::int64_t c) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{i, c, 0},
                               [](const Term& a, const Term& b) { return std::tie(a.vertex, a.c) < std::tie(b.vertex, b.c); });
    return (it != terms_.end() && it->vertex == i && it->c == c) ? it->exp : 0;
  }

  /// Column i of the exponent array, ascending in c.
  [[nodiscard]] std::span<const Term> column(int i) const {
    auto lo = std::lower_bound(terms_.begin(), terms_.end(), i, [](const Term& t, int v) { return t.vertex < v; });
    auto hi = std::upper_bound(lo, terms_.end(), i, [](int v, const Term& t) { return v < t.vertex; });
    return {lo, hi};
  }

  /// Adds delta to the exponent at (i, c).
  void bump(int i, std::int64_t c, std::int64_t delta) {
    if (delta == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{i, c, 0},
                               [](const Term& a, const Term& b) { return std::tie(a.vertex, a.c) < std::tie(b.vertex, b.c); });
    if (it != terms_.end() && it->vertex == i && it->c == c) {
      it->exp += delta;
      if (it->exp == 0) terms_.erase(it);
    } else {
      terms_.insert(it, Term{i, c, delta});
    }
  }
  void shift_weight(const Weight& w, std::int64_t times = 1) {
    for (std::size_t k = 0; k < weight_.size(); ++k) weight_[k] += times * w[k];
  }

  Monomial& operator*=(const Monomial& o) {
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.cbegin();
    auto b = o.terms_.cbegin();
    while (a != terms_.cend() || b != o.terms_.cend()) {
      if (b == o.terms_.cend() || (a != terms_.cend() && std::tie(a->vertex, a->c) < std::tie(b->vertex, b->c))) {
        merged.push_back(*a++);
      } else if (a == terms_.cend() || std::tie(b->vertex, b->c) < std::tie(a->vertex, a->c)) {
        merged.push_back(*b++);
      } else {
        if (auto e = a->exp + b->exp; e != 0) merged.push_back({a->vertex, a->c, e});
        ++a, ++b;
      }
    }
    terms_ = std::move(merged);
    weight_ += o.weight_;
    return *this;
  }
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  [[nodiscard]] Monomial inverse() const {
    Monomial m(-weight_);
    m.terms_ = terms_;
    for (auto& t : m.terms_) t.exp = -t.exp;
    return m;
  }
  friend Monomial operator/(Monomial a, const Monomial& b) { return a *= b.inverse(); }

  [[nodiscard]] Monomial pow(std::int64_t n) const {
    Monomial m(n * weight_);
    if (n == 0) return m;
    m.terms_ = terms_;
    for (auto& t : m.terms_) t.exp *= n;
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  /// "y_{1,3} y_{3,1}^-1"; the trivial exponent part renders as "1".  The
  /// weight is rendered separately by callers that need it.
  [[nodiscard]] std::string str() const {
    if (terms_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
      os << (first ? "" : " ") << "y_{" << t.vertex << "," << t.c << "}";
      if (t.exp != 1) os << "^" << t.exp;
      first = false;
    }
    return os.str();
  }
  [[nodiscard]] std::string str_with_weight() const { return "e^" + weight_.str() + " " + str(); }

private:
  void canonicalise() {
    std::sort(terms_.begin(), terms_.end());
    std::vector<Term> out;
    for (auto& t : terms_) {
      if (!out.empty() && out.back().vertex == t.vertex && out.back().c == t.c) out.back().exp += t.exp;
      else out.push_back(t);
    }
    std::erase_if(out, [](const Term& t) { return t.exp == 0; });
    terms_ = std::move(out);
  }

  Weight weight_;
  std::vector<Term> terms_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = WeightHash{}(m.weight());
    for (auto& t : m.terms()) {
      h ^= static_cast<std::size_t>(t.vertex) * 0x9e3779b97f4a7c15ULL + static_cast<std::size_t>(t.c) * 0xc2b2ae3d27d4eb4fULL +
           static_cast<std::size_t>(t.exp) + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// Checks both membership conditions of the monomial crystal: the column
/// sums match the weight pairings, and every exponent sits on a
/// parity-respecting point.
inline bool is_valid_monomial(const RootDatum& datum, const Monomial& p, std::string* why = nullptr) {
  for (auto& t : p.terms()) {
    if (!parity_respecting(datum, {t.vertex, t.c})) {
      if (why) *why = "exponent at non-parity-respecting point";
      return false;
    }
  }
  for (int i = 1; i <= datum.num_vertices(); ++i) {
    std::int64_t s = 0;
    for (auto& t : p.column(i)) s += t.exp;
    if (s != datum.pairing(i, p.weight())) {
      if (why) *why = "column " + std::to_string(i) + " sum does not match weight pairing";
      return false;
    }
  }
  return true;
}

/// z_{i,k} = e^{alpha_i} y_{i,k} y_{i,k+2} prod_{j~i} y_{j,k+1}^{-1}.
inline Monomial z_monomial(const RootDatum& datum, int i, std::int64_t k) {
  require_parity(datum, {i, k});
  std::vector<Monomial::Term> terms{{i, k, 1}, {i, k + 2, 1}};
  for (int j : datum.neighbours(i)) terms.push_back({j, k + 1, -1});
  return Monomial(datum.alpha(i), std::move(terms));
}

/// Multiplies p in place by z_{i,k}^{sign}.
inline void multiply_z(const RootDatum& datum, Monomial& p, int i, std::int64_t k, int sign) {
  p.bump(i, k, sign);
  p.bump(i, k + 2, sign);
  for (int j : datum.neighbours(i)) p.bump(j, k + 1, -sign);
  p.shift_weight(datum.alpha(i), sign);
}

struct ColumnStats {
  std::int64_t phi = 0;
  std::int64_t epsilon = 0;
  std::optional<std::int64_t> f_index; // F_i, present iff phi != 0
  std::optional<std::int64_t> e_index; // E_i, present iff epsilon != 0
};

/// phi_i = max_k sum_{l>=k} p[i,l] and epsilon_i = max_k -sum_{l<=k} p[i,l],
/// both including the value 0 attained outside the support.  F_i is the
/// largest maximiser of the upper sums, E_i the smallest maximiser of the
/// negated lower sums.
inline ColumnStats column_stats(const Monomial& p, int i) {
  ColumnStats s;
  const auto col = p.column(i);
  std::int64_t suffix = 0;
  for (auto it = col.rbegin(); it != col.rend(); ++it) {
    suffix += it->exp;
    if (suffix > s.phi) {
      s.phi = suffix;
      s.f_index = it->c;
    }
  }
  std::int64_t prefix = 0;
  for (const auto& t : col) {
    prefix += t.exp;
    if (-prefix > s.epsilon) {
      s.epsilon = -prefix;
      s.e_index = t.c;
    }
  }
  return s;
}

/// f_i(p) = p z_{i,F_i(p)-2}^{-1}, or nullopt when phi_i(p) = 0.
inline std::optional<Monomial> f_op(const RootDatum& datum, const Monomial& p, int i) {
  const auto s = column_stats(p, i);
  if (s.phi == 0) return std::nullopt;
  Monomial q = p;
  multiply_z(datum, q, i, *s.f_index - 2, -1);
  return q;
}

/// e_i(p) = p z_{i,E_i(p)}, or nullopt when epsilon_i(p) = 0.
inline std::optional<Monomial> e_op(const RootDatum& datum, const Monomial& p, int i) {
  const auto s = column_stats(p, i);
  if (s.epsilon == 0) return std::nullopt;
  Monomial q = p;
  multiply_z(datum, q, i, *s.e_index, +1);
  return q;
}

/// Crystal operations on monomials, in the shape the generic crystal engine
/// expects.
class MonomialOps {
public:
  using element_type = Monomial;
  explicit MonomialOps(const RootDatum& datum) : datum_(&datum) {}

  [[nodiscard]] const RootDatum& datum() const noexcept { return *datum_; }
  [[nodiscard]] const Weight& weight(const Monomial& p) const { return p.weight(); }
  [[nodiscard]] std::optional<Monomial> e(const Monomial& p, int i) const { return e_op(*datum_, p, i); }
  [[nodiscard]] std::optional<Monomial> f(const Monomial& p, int i) const { return f_op(*datum_, p, i); }
  [[nodiscard]] std::int64_t epsilon(const Monomial& p, int i) const { return column_stats(p, i).epsilon; }
  [[nodiscard]] std::int64_t phi(const Monomial& p, int i) const { return column_stats(p, i).phi; }
  [[nodiscard]] std::string label(const Monomial& p) const { return p.str(); }

private:
  const RootDatum* datum_;
};

} // namespace pmc
