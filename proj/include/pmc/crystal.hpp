#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pmc/cartan.hpp"
#include "pmc/errors.hpp"
#include "pmc/monomial.hpp"
#include "pmc/weightring.hpp"

namespace pmc {

inline constexpr std::size_t kDefaultElementCeiling = 1'000'000;

template <class E>
using ElementSet = std::set<E>;

/// A finite crystal graph.  Elements are kept sorted so that indices, and
/// everything serialised from them, are reproducible.
template <class E>
class CrystalGraph {
public:
  CrystalGraph() = default;
  CrystalGraph(std::vector<E> elements, int num_vertices)
      : elements_(std::move(elements)), num_vertices_(num_vertices),
        f_edges_(elements_.size(), std::vector<std::ptrdiff_t>(num_vertices, -1)) {}

  [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
  [[nodiscard]] bool empty() const noexcept { return elements_.empty(); }
  [[nodiscard]] int num_vertices() const noexcept { return num_vertices_; }
  [[nodiscard]] const std::vector<E>& elements() const noexcept { return elements_; }
  [[nodiscard]] const E& operator[](std::size_t k) const { return elements_[k]; }

  [[nodiscard]] std::optional<std::size_t> index_of(const E& x) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
    if (it == elements_.end() || !(*it == x)) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
  }
  [[nodiscard]] bool contains(const E& x) const { return index_of(x).has_value(); }

  /// Target index of the f_i edge out of element k, or -1.
  [[nodiscard]] std::ptrdiff_t f_edge(std::size_t k, int i) const { return f_edges_[k][i - 1]; }
  void set_f_edge(std::size_t k, int i, std::ptrdiff_t target) { f_edges_[k][i - 1] = target; }

  [[nodiscard]] std::size_t num_edges() const {
    std::size_t n = 0;
    for (auto& row : f_edges_)
      for (auto t : row) n += t >= 0;
    return n;
  }

  [[nodiscard]] ElementSet<E> as_set() const { return ElementSet<E>(elements_.begin(), elements_.end()); }

private:
  std::vector<E> elements_;
  int num_vertices_ = 0;
  std::vector<std::vector<std::ptrdiff_t>> f_edges_;
};

/// Builds the graph induced on a set: f-edges whose target leaves the set
/// are dropped.
template <class Ops>
CrystalGraph<typename Ops::element_type> induced_graph(const Ops& ops, const ElementSet<typename Ops::element_type>& xs) {
  using E = typename Ops::element_type;
  const int n = ops.datum().num_vertices();
  CrystalGraph<E> g(std::vector<E>(xs.begin(), xs.end()), n);
  for (std::size_t k = 0; k < g.size(); ++k)
    for (int i = 1; i <= n; ++i)
      if (auto y = ops.f(g[k], i))
        if (auto t = g.index_of(*y)) g.set_f_edge(k, i, static_cast<std::ptrdiff_t>(*t));
  return g;
}

/// Smallest superset of the seeds closed under every e_i and f_i.
template <class Ops>
CrystalGraph<typename Ops::element_type> closure(const Ops& ops, const std::vector<typename Ops::element_type>& seeds,
                                                 std::size_t ceiling = kDefaultElementCeiling) {
  using E = typename Ops::element_type;
  const int n = ops.datum().num_vertices();
  ElementSet<E> seen(seeds.begin(), seeds.end());
  std::deque<E> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    E x = std::move(todo.front());
    todo.pop_front();
    for (int i = 1; i <= n; ++i) {
      for (auto y : {ops.e(x, i), ops.f(x, i)}) {
        if (!y || seen.contains(*y)) continue;
        if (seen.size() >= ceiling) throw LimitExceeded("closure exceeded limit of " + std::to_string(ceiling) + " elements");
        seen.insert(*y);
        todo.push_back(std::move(*y));
      }
    }
  }
  return induced_graph(ops, seen);
}

/// Checks that a set is closed under every e_i and f_i; returns a witness
/// description otherwise.
template <class Ops>
std::optional<std::string> closure_violation(const Ops& ops, const ElementSet<typename Ops::element_type>& xs) {
  const int n = ops.datum().num_vertices();
  for (auto& x : xs)
    for (int i = 1; i <= n; ++i) {
      if (auto y = ops.e(x, i); y && !xs.contains(*y)) return "e_" + std::to_string(i) + " leaves the set at " + ops.label(x);
      if (auto y = ops.f(x, i); y && !xs.contains(*y)) return "f_" + std::to_string(i) + " leaves the set at " + ops.label(x);
    }
  return std::nullopt;
}

/// Elements killed by every e_i.
template <class Ops>
std::vector<typename Ops::element_type> highest_weights(const Ops& ops, const CrystalGraph<typename Ops::element_type>& g) {
  std::vector<typename Ops::element_type> out;
  const int n = ops.datum().num_vertices();
  for (auto& x : g.elements()) {
    bool primitive = true;
    for (int i = 1; i <= n && primitive; ++i) primitive = !ops.e(x, i).has_value();
    if (primitive) out.push_back(x);
  }
  return out;
}

template <class Ops>
std::vector<typename Ops::element_type> highest_weights(const Ops& ops, const ElementSet<typename Ops::element_type>& xs) {
  std::vector<typename Ops::element_type> out;
  const int n = ops.datum().num_vertices();
  for (auto& x : xs) {
    bool primitive = true;
    for (int i = 1; i <= n && primitive; ++i) primitive = !ops.e(x, i).has_value();
    if (primitive) out.push_back(x);
  }
  return out;
}

/// D_i X: X together with every f_i-descendant of its elements.
template <class Ops>
ElementSet<typename Ops::element_type> extend_strings(const Ops& ops, int i, const ElementSet<typename Ops::element_type>& xs) {
  ops.datum().require_vertex(i);
  ElementSet<typename Ops::element_type> out = xs;
  for (auto& x : xs) {
    auto y = ops.f(x, i);
    while (y && out.insert(*y).second) y = ops.f(*y, i);
  }
  return out;
}

template <class E>
struct StringCheck {
  bool ok = true;
  int vertex = 0;
  std::vector<E> offending; // the i-string, top first
};

/// Every i-string S of the ambient set must meet X in nothing, all of S, or
/// exactly the top of S.
template <class Ops>
StringCheck<typename Ops::element_type> string_property(const Ops& ops, const ElementSet<typename Ops::element_type>& xs,
                                                        const ElementSet<typename Ops::element_type>& ambient) {
  using E = typename Ops::element_type;
  const int n = ops.datum().num_vertices();
  for (int i = 1; i <= n; ++i) {
    for (auto& top : ambient) {
      if (auto up = ops.e(top, i); up && ambient.contains(*up)) continue;
      std::vector<E> str{top};
      for (auto y = ops.f(top, i); y && ambient.contains(*y); y = ops.f(*y, i)) str.push_back(*y);
      std::size_t hits = 0;
      for (auto& s : str) hits += xs.contains(s);
      const bool fine = hits == 0 || hits == str.size() || (hits == 1 && xs.contains(str.front()));
      if (!fine) return {false, i, std::move(str)};
    }
  }
  return {};
}

template <class Ops>
GroupAlgebraElement character_of_set(const Ops& ops, const ElementSet<typename Ops::element_type>& xs) {
  GroupAlgebraElement ch;
  for (auto& x : xs) ch.add(ops.weight(x), 1);
  return ch;
}

/// Verifies the upper-seminormal crystal axioms on a set, including that
/// epsilon and phi count the e- and f-steps exactly.  Returns the first
/// failure found.
template <class Ops>
std::optional<std::string> check_axioms(const Ops& ops, const ElementSet<typename Ops::element_type>& xs, bool seminormal = true) {
  const auto& datum = ops.datum();
  const int n = datum.num_vertices();
  for (auto& x : xs) {
    const auto& wt = ops.weight(x);
    for (int i = 1; i <= n; ++i) {
      const auto tag = " (i=" + std::to_string(i) + ", element " + ops.label(x) + ")";
      const auto eps = ops.epsilon(x, i), phi = ops.phi(x, i);
      if (phi != eps + datum.pairing(i, wt)) return "phi != epsilon + <alpha^vee, wt>" + tag;
      if (auto y = ops.f(x, i)) {
        if (!xs.contains(*y)) return "f leaves the set" + tag;
        if (ops.weight(*y) != wt - datum.alpha(i)) return "f does not lower the weight by alpha_i" + tag;
        auto back = ops.e(*y, i);
        if (!back || !(*back == x)) return "e_i f_i x != x" + tag;
        if (ops.epsilon(*y, i) != eps + 1 || ops.phi(*y, i) != phi - 1) return "epsilon/phi not shifted by f" + tag;
      }
      if (auto y = ops.e(x, i)) {
        if (!xs.contains(*y)) return "e leaves the set" + tag;
        if (ops.weight(*y) != wt + datum.alpha(i)) return "e does not raise the weight by alpha_i" + tag;
        auto back = ops.f(*y, i);
        if (!back || !(*back == x)) return "f_i e_i x != x" + tag;
      }
      if (seminormal) {
        std::int64_t steps = 0;
        for (auto y = ops.e(x, i); y; y = ops.e(*y, i)) ++steps;
        if (steps != eps) return "epsilon does not count e-steps" + tag;
        steps = 0;
        for (auto y = ops.f(x, i); y; y = ops.f(*y, i)) ++steps;
        if (steps != phi) return "phi does not count f-steps" + tag;
      }
    }
  }
  return std::nullopt;
}

/// The highest-weight monomial b_lambda = prod_i y_{i,c(i)}^{<alpha_i^vee, lambda>}
/// carrying weight lambda, with c(i) the parity-matched value nearest the
/// baseline (default c(i) = parity(i)).
inline Monomial highest_weight_monomial(const RootDatum& datum, const Weight& lambda, std::int64_t baseline = 0) {
  if (!datum.is_dominant(lambda)) throw ValidationError("weight " + lambda.str() + " is not dominant");
  std::vector<Monomial::Term> terms;
  for (int i = 1; i <= datum.num_vertices(); ++i) {
    const auto a = datum.pairing(i, lambda);
    const auto c = baseline + (((datum.parity(i) - baseline) % 2 + 2) % 2);
    if (a) terms.push_back({i, c, a});
  }
  return Monomial(lambda, std::move(terms));
}

/// B_w(lambda) = D_{i_1} ... D_{i_r} {b_lambda}.
inline ElementSet<Monomial> demazure_crystal(const RootDatum& datum, const Weight& lambda, std::span<const int> word,
                                             std::int64_t baseline = 0) {
  const MonomialOps ops(datum);
  ElementSet<Monomial> xs{highest_weight_monomial(datum, lambda, baseline)};
  for (auto it = word.rbegin(); it != word.rend(); ++it) xs = extend_strings(ops, *it, xs);
  return xs;
}

template <class A, class B>
struct TensorElement {
  A left;
  B right;
  friend bool operator==(const TensorElement&, const TensorElement&) = default;
  friend auto operator<=>(const TensorElement&, const TensorElement&) = default;
};

/// Tensor product rule with e_i acting on the left factor when
/// phi_i(b1) >= epsilon_i(b2) and f_i acting on the left when
/// phi_i(b1) > epsilon_i(b2).
template <class OpsA, class OpsB>
class TensorOps {
public:
  using left_type = typename OpsA::element_type;
  using right_type = typename OpsB::element_type;
  using element_type = TensorElement<left_type, right_type>;

  TensorOps(OpsA a, OpsB b) : a_(std::move(a)), b_(std::move(b)) {}

  [[nodiscard]] const RootDatum& datum() const { return a_.datum(); }
  [[nodiscard]] Weight weight(const element_type& x) const { return a_.weight(x.left) + b_.weight(x.right); }
  [[nodiscard]] std::int64_t epsilon(const element_type& x, int i) const {
    return std::max(a_.epsilon(x.left, i), b_.epsilon(x.right, i) - datum().pairing(i, a_.weight(x.left)));
  }
  [[nodiscard]] std::int64_t phi(const element_type& x, int i) const {
    return std::max(b_.phi(x.right, i), a_.phi(x.left, i) + datum().pairing(i, b_.weight(x.right)));
  }
  [[nodiscard]] std::optional<element_type> e(const element_type& x, int i) const {
    if (a_.phi(x.left, i) >= b_.epsilon(x.right, i)) {
      auto y = a_.e(x.left, i);
      if (!y) return std::nullopt;
      return element_type{std::move(*y), x.right};
    }
    auto y = b_.e(x.right, i);
    if (!y) return std::nullopt;
    return element_type{x.left, std::move(*y)};
  }
  [[nodiscard]] std::optional<element_type> f(const element_type& x, int i) const {
    if (a_.phi(x.left, i) > b_.epsilon(x.right, i)) {
      auto y = a_.f(x.left, i);
      if (!y) return std::nullopt;
      return element_type{std::move(*y), x.right};
    }
    auto y = b_.f(x.right, i);
    if (!y) return std::nullopt;
    return element_type{x.left, std::move(*y)};
  }
  [[nodiscard]] std::string label(const element_type& x) const { return a_.label(x.left) + " (x) " + b_.label(x.right); }

private:
  OpsA a_;
  OpsB b_;
};

template <class OpsA, class OpsB>
CrystalGraph<TensorElement<typename OpsA::element_type, typename OpsB::element_type>>
tensor_crystal(const TensorOps<OpsA, OpsB>& ops, const CrystalGraph<typename OpsA::element_type>& a,
               const CrystalGraph<typename OpsB::element_type>& b) {
  ElementSet<TensorElement<typename OpsA::element_type, typename OpsB::element_type>> xs;
  for (auto& x : a.elements())
    for (auto& y : b.elements()) xs.insert({x, y});
  return induced_graph(ops, xs);
}

namespace detail {
inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}
} // namespace detail

/// DOT text with nodes in sorted element order and edges labelled by i.
template <class Ops>
std::string to_dot(const Ops& ops, const CrystalGraph<typename Ops::element_type>& g, const std::string& name = "crystal") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t k = 0; k < g.size(); ++k)
    os << "  n" << k << " [label=\"" << detail::dot_escape(ops.label(g[k])) << "\"];\n";
  for (std::size_t k = 0; k < g.size(); ++k)
    for (int i = 1; i <= g.num_vertices(); ++i)
      if (auto t = g.f_edge(k, i); t >= 0) os << "  n" << k << " -> n" << t << " [label=\"" << i << "\"];\n";
  os << "}\n";
  return os.str();
}

} // namespace pmc
