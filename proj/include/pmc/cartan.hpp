#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pmc/errors.hpp"

namespace pmc {

/// An element of the weight lattice, stored as integer coordinates in the
/// datum's chosen basis (fundamental weights for semisimple types, the
/// epsilon basis for GL_n).
class Weight {
public:
  Weight() = default;
  explicit Weight(std::size_t rank) : coords_(rank, 0) {}
  Weight(std::initializer_list<std::int64_t> xs) : coords_(xs) {}
  explicit Weight(std::vector<std::int64_t> xs) : coords_(std::move(xs)) {}

  [[nodiscard]] std::size_t size() const noexcept { return coords_.size(); }
  [[nodiscard]] std::int64_t operator[](std::size_t k) const { return coords_[k]; }
  std::int64_t& operator[](std::size_t k) { return coords_[k]; }
  [[nodiscard]] const std::vector<std::int64_t>& coords() const noexcept { return coords_; }

  [[nodiscard]] bool is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t x) { return x == 0; });
  }

  Weight& operator+=(const Weight& o) {
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
    return *this;
  }
  Weight& operator*=(std::int64_t s) {
    for (auto& x : coords_) x *= s;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(std::int64_t s, Weight a) { return a *= s; }
  friend Weight operator-(Weight a) { return a *= -1; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  /// "(a,b,c)"; the zero weight renders as "0".
  [[nodiscard]] std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < coords_.size(); ++k) os << (k ? "," : "") << coords_[k];
    os << ')';
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

private:
  std::vector<std::int64_t> coords_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : w.coords()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL + (h >> 29);
    return h;
  }
};

enum class CartanKind { A, D, E6, E7, E8, GL };

inline std::string to_string(CartanKind k) {
  switch (k) {
  case CartanKind::A: return "A";
  case CartanKind::D: return "D";
  case CartanKind::E6: return "E6";
  case CartanKind::E7: return "E7";
  case CartanKind::E8: return "E8";
  case CartanKind::GL: return "GL";
  }
  return "?";
}

inline CartanKind parse_cartan_kind(const std::string& s) {
  if (s == "A") return CartanKind::A;
  if (s == "D") return CartanKind::D;
  if (s == "E6") return CartanKind::E6;
  if (s == "E7") return CartanKind::E7;
  if (s == "E8") return CartanKind::E8;
  if (s == "GL") return CartanKind::GL;
  throw ValidationError("unknown cartan kind '" + s + "' (expected A, D, E6, E7, E8 or GL)");
}

/// A connected simply-laced Dynkin diagram with a fixed two-colouring.
/// Vertices are labelled 1..size().
class DynkinDiagram {
public:
  DynkinDiagram() = default;
  DynkinDiagram(int n, const std::vector<std::pair<int, int>>& edges) : n_(n), adj_(n, std::vector<bool>(n, false)) {
    for (auto [a, b] : edges) {
      if (a < 1 || b < 1 || a > n || b > n || a == b) throw ValidationError("bad Dynkin edge");
      adj_[a - 1][b - 1] = adj_[b - 1][a - 1] = true;
    }
    neighbours_.resize(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (adj_[i][j]) neighbours_[i].push_back(j + 1);
    dist_.assign(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
      std::deque<int> q{s};
      dist_[s][s] = 0;
      while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : neighbours_[u])
          if (dist_[s][v - 1] < 0) {
            dist_[s][v - 1] = dist_[s][u] + 1;
            q.push_back(v - 1);
          }
      }
      for (int t = 0; t < n; ++t)
        if (dist_[s][t] < 0) throw ValidationError("Dynkin diagram is not connected");
    }
    parity_.assign(n, 0);
    for (int i = 0; i < n; ++i) parity_[i] = n ? dist_[0][i] % 2 : 0;
  }

  /// Overrides the breadth-first colouring; must stay proper.
  void set_parity(std::vector<int> parity) {
    for (int i = 0; i < n_; ++i)
      for (int j : neighbours_[i])
        if (parity[i] == parity[j - 1]) throw ValidationError("parity is not a proper 2-colouring");
    parity_ = std::move(parity);
  }

  [[nodiscard]] int size() const noexcept { return n_; }
  [[nodiscard]] bool adjacent(int i, int j) const { return adj_[i - 1][j - 1]; }
  [[nodiscard]] const std::vector<int>& neighbours(int i) const { return neighbours_[i - 1]; }
  [[nodiscard]] int parity(int i) const { return parity_[i - 1]; }
  [[nodiscard]] int distance(int i, int j) const { return dist_[i - 1][j - 1]; }
  [[nodiscard]] int cartan(int i, int j) const { return i == j ? 2 : (adjacent(i, j) ? -1 : 0); }

private:
  int n_ = 0;
  std::vector<std::vector<bool>> adj_;
  std::vector<std::vector<int>> neighbours_;
  std::vector<std::vector<int>> dist_;
  std::vector<int> parity_;
};

namespace detail {

struct Fraction {
  std::int64_t num = 0, den = 1;
  Fraction() = default;
  Fraction(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalise(); }
  void normalise() {
    if (den < 0) num = -num, den = -den;
    auto g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) num /= g, den /= g;
  }
  friend Fraction operator+(Fraction a, Fraction b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Fraction operator-(Fraction a, Fraction b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Fraction operator*(Fraction a, Fraction b) { return {a.num * b.num, a.den * b.den}; }
  friend Fraction operator/(Fraction a, Fraction b) { return {a.num * b.den, a.den * b.num}; }
};

// Exact inverse of a small integer matrix (Gauss-Jordan over the rationals).
inline std::vector<std::vector<Fraction>> invert(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Fraction>> a(n, std::vector<Fraction>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Fraction(m[i][j]);
    a[i][n + i] = Fraction(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].num == 0) ++piv;
    if (piv == n) throw ConsistencyError("singular Cartan matrix");
    std::swap(a[piv], a[col]);
    Fraction p = a[col][col];
    for (auto& x : a[col]) x = x / p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].num == 0) continue;
      Fraction f = a[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] = a[r][k] - f * a[col][k];
    }
  }
  std::vector<std::vector<Fraction>> inv(n, std::vector<Fraction>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

} // namespace detail

/// Root datum of a simply-laced finite type or of GL_n.
///
/// Semisimple types store weights in fundamental-weight coordinates, so
/// the pairing with a coroot is a coordinate read.  GL_n stores weights in
/// epsilon coordinates and has n-1 vertices.
class RootDatum {
public:
  RootDatum() = default;

  [[nodiscard]] CartanKind kind() const noexcept { return kind_; }
  [[nodiscard]] int rank() const noexcept { return rank_; }
  [[nodiscard]] bool is_gl() const noexcept { return kind_ == CartanKind::GL; }
  [[nodiscard]] int num_vertices() const noexcept { return diagram_.size(); }
  [[nodiscard]] std::size_t lattice_rank() const noexcept { return lattice_rank_; }
  [[nodiscard]] const DynkinDiagram& diagram() const noexcept { return diagram_; }
  [[nodiscard]] std::string name() const { return to_string(kind_) + (kind_ == CartanKind::A || kind_ == CartanKind::D || kind_ == CartanKind::GL ? std::to_string(rank_) : ""); }

  [[nodiscard]] bool has_vertex(int i) const noexcept { return i >= 1 && i <= num_vertices(); }
  void require_vertex(int i) const {
    if (!has_vertex(i)) throw ValidationError("vertex " + std::to_string(i) + " is not in the Dynkin diagram of " + name());
  }
  [[nodiscard]] int parity(int i) const { return diagram_.parity(i); }
  [[nodiscard]] const std::vector<int>& neighbours(int i) const { return diagram_.neighbours(i); }
  [[nodiscard]] int cartan(int i, int j) const { return diagram_.cartan(i, j); }

  [[nodiscard]] Weight zero() const { return Weight(lattice_rank_); }
  [[nodiscard]] const Weight& alpha(int i) const { return alpha_[i - 1]; }
  [[nodiscard]] const Weight& varpi(int i) const { return varpi_[i - 1]; }
  [[nodiscard]] const std::optional<Weight>& det() const noexcept { return det_; }

  /// The pairing <alpha_i^vee, lambda>.
  [[nodiscard]] std::int64_t pairing(int i, const Weight& lambda) const {
    if (is_gl()) return lambda[i - 1] - lambda[i];
    return lambda[i - 1];
  }

  [[nodiscard]] Weight reflect(int i, Weight lambda) const {
    const auto a = pairing(i, lambda);
    if (a == 0) return lambda;
    const auto& al = alpha(i);
    for (std::size_t k = 0; k < lattice_rank_; ++k) lambda[k] -= a * al[k];
    return lambda;
  }

  /// Applies s_{w[0]} s_{w[1]} ... s_{w[r-1]} to lambda (rightmost first).
  [[nodiscard]] Weight act(std::span<const int> word, Weight lambda) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) lambda = reflect(*it, std::move(lambda));
    return lambda;
  }

  [[nodiscard]] bool is_dominant(const Weight& lambda) const {
    for (int i = 1; i <= num_vertices(); ++i)
      if (pairing(i, lambda) < 0) return false;
    return true;
  }

  /// A linear functional that increases by the same positive constant along
  /// every simple root; any term maximising (minimising) it is maximal
  /// (minimal) in the positive-root order.
  [[nodiscard]] std::int64_t height(const Weight& lambda) const {
    std::int64_t h = 0;
    for (std::size_t k = 0; k < lattice_rank_; ++k) h += height_coeffs_[k] * lambda[k];
    return h;
  }

  /// Coordinates of lambda in the basis of simple roots, or nullopt when
  /// lambda is not in the root lattice.
  [[nodiscard]] std::optional<std::vector<std::int64_t>> root_coordinates(const Weight& lambda) const {
    const int n = num_vertices();
    std::vector<std::int64_t> out(n, 0);
    if (is_gl()) {
      std::int64_t partial = 0;
      for (int k = 0; k < n; ++k) {
        partial += lambda[k];
        out[k] = partial;
      }
      if (partial + lambda[n] != 0) return std::nullopt;
      return out;
    }
    for (int i = 0; i < n; ++i) {
      detail::Fraction acc(0);
      for (int j = 0; j < n; ++j) acc = acc + inverse_cartan_[i][j] * detail::Fraction(lambda[j]);
      if (acc.den != 1) return std::nullopt;
      out[i] = acc.num;
    }
    return out;
  }

  /// True when nu - mu is a nonnegative integral combination of simple roots.
  [[nodiscard]] bool root_order_leq(const Weight& mu, const Weight& nu) const {
    auto rc = root_coordinates(nu - mu);
    if (!rc) return false;
    return std::all_of(rc->begin(), rc->end(), [](std::int64_t x) { return x >= 0; });
  }

  /// rho: pairs to 1 with every simple coroot.
  [[nodiscard]] Weight rho() const {
    Weight r = zero();
    if (is_gl()) {
      for (std::size_t k = 0; k < lattice_rank_; ++k) r[k] = static_cast<std::int64_t>(lattice_rank_ - 1 - k);
    } else {
      for (std::size_t k = 0; k < lattice_rank_; ++k) r[k] = 1;
    }
    return r;
  }

  friend RootDatum build_root_datum(CartanKind kind, int rank);

private:
  CartanKind kind_ = CartanKind::A;
  int rank_ = 0;
  DynkinDiagram diagram_;
  std::size_t lattice_rank_ = 0;
  std::vector<Weight> alpha_, varpi_;
  std::optional<Weight> det_;
  std::vector<std::int64_t> height_coeffs_;
  std::vector<std::vector<detail::Fraction>> inverse_cartan_;
};

/// Builds the root datum of the given kind.  For A and D the rank is the
/// number of vertices; for GL it is n (so GL_n has n-1 vertices); E types
/// require their fixed rank.
inline RootDatum build_root_datum(CartanKind kind, int rank) {
  RootDatum d;
  d.kind_ = kind;
  d.rank_ = rank;
  std::vector<std::pair<int, int>> edges;
  int n = 0;
  switch (kind) {
  case CartanKind::A:
    if (rank < 1) throw ValidationError("type A needs rank >= 1");
    n = rank;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    break;
  case CartanKind::GL:
    if (rank < 1) throw ValidationError("GL_n needs n >= 1");
    n = rank - 1;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    break;
  case CartanKind::D:
    if (rank < 4) throw ValidationError("type D needs rank >= 4");
    n = rank;
    for (int i = 1; i + 1 <= n - 1; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 2, n);
    break;
  case CartanKind::E6:
  case CartanKind::E7:
  case CartanKind::E8: {
    const int want = kind == CartanKind::E6 ? 6 : (kind == CartanKind::E7 ? 7 : 8);
    if (rank != want) throw ValidationError("type " + to_string(kind) + " has fixed rank " + std::to_string(want));
    n = rank;
    edges = {{1, 3}, {3, 4}, {4, 5}, {2, 4}};
    for (int i = 5; i < n; ++i) edges.emplace_back(i, i + 1);
    break;
  }
  }
  d.diagram_ = DynkinDiagram(n, edges);
  if (kind == CartanKind::A || kind == CartanKind::GL) {
    std::vector<int> par(n);
    for (int i = 1; i <= n; ++i) par[i - 1] = i % 2;
    d.diagram_.set_parity(std::move(par));
  }

  if (kind == CartanKind::GL) {
    d.lattice_rank_ = static_cast<std::size_t>(rank);
    for (int i = 1; i <= n; ++i) {
      Weight a(d.lattice_rank_), w(d.lattice_rank_);
      a[i - 1] = 1;
      a[i] = -1;
      for (int k = 0; k < i; ++k) w[k] = 1;
      d.alpha_.push_back(a);
      d.varpi_.push_back(w);
    }
    Weight det(d.lattice_rank_);
    for (auto k = 0u; k < d.lattice_rank_; ++k) det[k] = 1;
    d.det_ = det;
    d.height_coeffs_.resize(d.lattice_rank_);
    for (std::size_t k = 0; k < d.lattice_rank_; ++k) d.height_coeffs_[k] = static_cast<std::int64_t>(d.lattice_rank_ - 1 - k);
  } else {
    d.lattice_rank_ = static_cast<std::size_t>(n);
    std::vector<std::vector<int>> c(n, std::vector<int>(n));
    for (int i = 1; i <= n; ++i) {
      Weight a(d.lattice_rank_), w(d.lattice_rank_);
      for (int j = 1; j <= n; ++j) a[j - 1] = d.diagram_.cartan(j, i);
      w[i - 1] = 1;
      d.alpha_.push_back(a);
      d.varpi_.push_back(w);
      for (int j = 1; j <= n; ++j) c[i - 1][j - 1] = d.diagram_.cartan(i, j);
    }
    d.inverse_cartan_ = detail::invert(c);
    // height(lambda) = L * (sum of root coordinates), L clearing denominators
    std::int64_t lcm = 1;
    for (auto& row : d.inverse_cartan_)
      for (auto& f : row) lcm = std::lcm(lcm, f.den);
    d.height_coeffs_.assign(n, 0);
    for (int j = 0; j < n; ++j) {
      detail::Fraction s(0);
      for (int i = 0; i < n; ++i) s = s + d.inverse_cartan_[i][j];
      d.height_coeffs_[j] = s.num * (lcm / s.den);
    }
  }
  return d;
}

/// Lifts lambda to the dominant chamber by greedy ascent.  Returns the
/// dominant weight and a word (i_1, ..., i_k) with
/// lambda = s_{i_1} ... s_{i_k} (dominant).
inline std::pair<Weight, std::vector<int>> dominant_representative(const RootDatum& datum, Weight lambda) {
  std::vector<int> word;
  for (;;) {
    int found = 0;
    for (int i = 1; i <= datum.num_vertices(); ++i)
      if (datum.pairing(i, lambda) < 0) {
        found = i;
        break;
      }
    if (!found) break;
    lambda = datum.reflect(found, std::move(lambda));
    word.push_back(found);
  }
  return {std::move(lambda), std::move(word)};
}

/// A reduced word for the longest Weyl group element, found by greedy
/// descent from rho.
inline std::vector<int> longest_element_word(const RootDatum& datum) {
  std::vector<int> word;
  Weight lambda = datum.rho();
  for (;;) {
    int found = 0;
    for (int i = 1; i <= datum.num_vertices(); ++i)
      if (datum.pairing(i, lambda) > 0) {
        found = i;
        break;
      }
    if (!found) break;
    lambda = datum.reflect(found, std::move(lambda));
    word.push_back(found);
  }
  return word;
}

} // namespace pmc
