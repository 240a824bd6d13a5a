#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pmc/cartan.hpp"
#include "pmc/errors.hpp"

namespace pmc {

/// A finitely supported Z-linear combination of formal exponentials e^lambda,
/// i.e. an element of the group algebra Z[P].  Zero coefficients are never
/// stored.
class GroupAlgebraElement {
public:
  using map_type = std::map<Weight, std::int64_t>;

  GroupAlgebraElement() = default;
  static GroupAlgebraElement exp(const Weight& lambda, std::int64_t coeff = 1) {
    GroupAlgebraElement f;
    f.add(lambda, coeff);
    return f;
  }

  void add(const Weight& lambda, std::int64_t coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(lambda, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  [[nodiscard]] std::int64_t coefficient(const Weight& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? 0 : it->second;
  }
  [[nodiscard]] const map_type& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

  /// Sum of all coefficients (the dimension, for a character).
  [[nodiscard]] std::int64_t augmentation() const {
    std::int64_t s = 0;
    for (auto& [w, c] : terms_) s += c;
    return s;
  }

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) {
    for (auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o) {
    for (auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  GroupAlgebraElement& operator*=(std::int64_t s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(std::int64_t s, GroupAlgebraElement a) { return a *= s; }
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement out;
    for (auto& [wa, ca] : a.terms_)
      for (auto& [wb, cb] : b.terms_) out.add(wa + wb, ca * cb);
    return out;
  }
  /// Multiplication by e^shift.
  [[nodiscard]] GroupAlgebraElement shifted(const Weight& shift) const {
    GroupAlgebraElement out;
    for (auto& [w, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), w + shift, c);
    return out;
  }

  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

private:
  map_type terms_;
};

using Character = GroupAlgebraElement;

/// Renders an element.  GL_n elements are printed as Laurent polynomials with
/// e^{eps_i} = x_i, leading (lexicographically largest) term first; other
/// types print e^(a,b,...) in fundamental-weight coordinates.
inline std::string render(const RootDatum& datum, const GroupAlgebraElement& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    auto [w, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const auto mag = c < 0 ? -c : c;
    std::string mono;
    if (datum.is_gl()) {
      std::ostringstream ms;
      bool any = false;
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] == 0) continue;
        ms << (any ? "*" : "") << "x" << (k + 1);
        if (w[k] != 1) ms << "^" << w[k];
        any = true;
      }
      mono = any ? ms.str() : "1";
    } else {
      mono = w.is_zero() ? "1" : "e^" + w.str();
    }
    if (mag != 1) os << mag << (mono == "1" ? "" : "*" + mono);
    else os << mono;
  }
  return os.str();
}

/// The Demazure operator pi_i on a single exponential, added into out with
/// the given coefficient.
inline void demazure_pi_term(const RootDatum& datum, int i, const Weight& lambda, std::int64_t coeff,
                             GroupAlgebraElement& out) {
  const auto a = datum.pairing(i, lambda);
  const Weight& al = datum.alpha(i);
  if (a >= 0) {
    Weight w = lambda;
    for (std::int64_t k = 0; k <= a; ++k) {
      out.add(w, coeff);
      w -= al;
    }
  } else if (a <= -2) {
    Weight w = lambda;
    for (std::int64_t k = 1; k <= -a - 1; ++k) {
      w += al;
      out.add(w, -coeff);
    }
  }
}

inline GroupAlgebraElement demazure_pi(const RootDatum& datum, int i, const GroupAlgebraElement& f) {
  datum.require_vertex(i);
  GroupAlgebraElement out;
  for (auto& [w, c] : f.terms()) demazure_pi_term(datum, i, w, c, out);
  return out;
}

/// pi_{w_1} o pi_{w_2} o ... o pi_{w_r} applied to f (rightmost first).
inline GroupAlgebraElement apply_word(const RootDatum& datum, std::span<const int> word, GroupAlgebraElement f) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = demazure_pi(datum, *it, f);
  return f;
}

inline GroupAlgebraElement apply_longest(const RootDatum& datum, GroupAlgebraElement f) {
  const auto w0 = longest_element_word(datum);
  return apply_word(datum, w0, std::move(f));
}

inline bool is_weyl_invariant(const RootDatum& datum, const GroupAlgebraElement& f) {
  for (int i = 1; i <= datum.num_vertices(); ++i)
    for (auto& [w, c] : f.terms())
      if (f.coefficient(datum.reflect(i, w)) != c) return false;
  return true;
}

inline GroupAlgebraElement irreducible_character(const RootDatum& datum, const Weight& lambda) {
  if (!datum.is_dominant(lambda)) throw ValidationError("irreducible_character: weight " + lambda.str() + " is not dominant");
  auto ch = apply_longest(datum, GroupAlgebraElement::exp(lambda));
  if (!is_weyl_invariant(datum, ch)) throw ConsistencyError("pi_{w0} e^lambda is not Weyl invariant");
  return ch;
}

/// Expresses f as a combination of irreducible characters by repeatedly
/// peeling a dominance-maximal dominant term.  Throws ValidationError when f
/// is not a nonnegative integral combination.
inline std::map<Weight, std::int64_t> weyl_decompose(const RootDatum& datum, GroupAlgebraElement f) {
  if (!is_weyl_invariant(datum, f)) throw ValidationError("weyl_decompose: not a nonnegative integral combination (input is not Weyl invariant)");
  std::map<Weight, std::int64_t> out;
  std::map<Weight, GroupAlgebraElement> cache;
  while (!f.is_zero()) {
    const Weight* best = nullptr;
    std::int64_t best_h = 0;
    for (auto& [w, c] : f.terms()) {
      if (!datum.is_dominant(w)) continue;
      const auto h = datum.height(w);
      if (!best || h > best_h) best = &w, best_h = h;
    }
    if (!best) throw ValidationError("weyl_decompose: not a nonnegative integral combination (residue has no dominant term)");
    const Weight lambda = *best;
    const auto c = f.coefficient(lambda);
    if (c < 0) throw ValidationError("weyl_decompose: not a nonnegative integral combination (negative multiplicity at " + lambda.str() + ")");
    auto it = cache.find(lambda);
    if (it == cache.end()) it = cache.emplace(lambda, irreducible_character(datum, lambda)).first;
    f -= c * it->second;
    out[lambda] += c;
  }
  return out;
}

/// ch D(mu): the Demazure character with Demazure lowest weight mu.
inline GroupAlgebraElement demazure_character(const RootDatum& datum, const Weight& mu) {
  auto [lambda, word] = dominant_representative(datum, mu);
  return apply_word(datum, word, GroupAlgebraElement::exp(lambda));
}

/// Expands f in Demazure characters by repeatedly peeling a term that is
/// minimal in the positive-root order.  Throws ValidationError when a
/// negative coefficient appears or the iteration guard trips.
inline std::map<Weight, std::int64_t> key_decompose(const RootDatum& datum, GroupAlgebraElement f,
                                                    std::size_t max_steps = 1'000'000) {
  std::map<Weight, std::int64_t> out;
  std::size_t steps = 0;
  while (!f.is_zero()) {
    if (++steps > max_steps) throw ValidationError("key_decompose: iteration guard exceeded");
    const Weight* best = nullptr;
    std::int64_t best_h = 0;
    for (auto& [w, c] : f.terms()) {
      const auto h = datum.height(w);
      if (!best || h < best_h) best = &w, best_h = h;
    }
    const Weight mu = *best;
    const auto c = f.coefficient(mu);
    if (c < 0) throw ValidationError("key_decompose: negative coefficient at " + mu.str() + " (input is not key-positive)");
    f -= c * demazure_character(datum, mu);
    out[mu] += c;
  }
  return out;
}

/// Re-expands a key decomposition; inverse of key_decompose.
inline GroupAlgebraElement key_expand(const RootDatum& datum, const std::map<Weight, std::int64_t>& keys) {
  GroupAlgebraElement f;
  for (auto& [mu, c] : keys) f += c * demazure_character(datum, mu);
  return f;
}

inline GroupAlgebraElement weyl_expand(const RootDatum& datum, const std::map<Weight, std::int64_t>& irreps) {
  GroupAlgebraElement f;
  for (auto& [lambda, c] : irreps) f += c * irreducible_character(datum, lambda);
  return f;
}

/// For GL_n, the image of f in Z[P]/(det - 1): each weight is shifted by a
/// multiple of det so its last coordinate is zero.
inline GroupAlgebraElement reduce_mod_det(const RootDatum& datum, const GroupAlgebraElement& f) {
  if (!datum.is_gl()) return f;
  const auto& det = *datum.det();
  GroupAlgebraElement out;
  for (auto& [w, c] : f.terms()) {
    Weight v = w;
    const auto last = v[v.size() - 1];
    v -= last * det;
    out.add(v, c);
  }
  return out;
}

} // namespace pmc
