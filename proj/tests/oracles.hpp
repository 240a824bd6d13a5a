#pragma once

// Independent reference computations for the test suites.  These avoid the
// library's own algorithms: roots come from reflection closure in root
// coordinates, dimensions from the Weyl dimension formula, Young tableau
// counts from plain enumeration.

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "pmc/pmc.hpp"

namespace oracle {

using Coords = std::vector<std::int64_t>;

inline int cartan_entry(const pmc::RootDatum& d, int i, int j) {
  if (i == j) return 2;
  for (int k : d.neighbours(i))
    if (k == j) return -1;
  return 0;
}

/// Positive roots in simple-root coordinates, by closing the simple roots
/// under simple reflections and keeping the positive ones.
inline std::set<Coords> positive_roots(const pmc::RootDatum& d) {
  const int n = d.num_vertices();
  std::set<Coords> seen;
  std::vector<Coords> todo;
  for (int i = 0; i < n; ++i) {
    Coords a(n, 0);
    a[i] = 1;
    seen.insert(a), todo.push_back(a);
  }
  while (!todo.empty()) {
    auto a = todo.back();
    todo.pop_back();
    for (int i = 1; i <= n; ++i) {
      std::int64_t pair = 0; // <alpha_i^vee, a>
      for (int j = 1; j <= n; ++j) pair += cartan_entry(d, i, j) * a[j - 1];
      auto b = a;
      b[i - 1] -= pair;
      if (std::all_of(b.begin(), b.end(), [](auto x) { return x >= 0; }) && seen.insert(b).second) todo.push_back(b);
    }
  }
  return seen;
}

/// <alpha^vee, lambda> for a positive root alpha (simply laced).
inline std::int64_t coroot_pairing(const pmc::RootDatum& d, const Coords& alpha, const pmc::Weight& lambda) {
  std::int64_t s = 0;
  for (int i = 1; i <= d.num_vertices(); ++i) s += alpha[i - 1] * d.pairing(i, lambda);
  return s;
}

/// Weyl dimension formula, exact via rational accumulation.
inline std::int64_t weyl_dimension(const pmc::RootDatum& d, const pmc::Weight& lambda) {
  std::int64_t num = 1, den = 1;
  for (auto& a : positive_roots(d)) {
    std::int64_t h = 0; // <alpha^vee, rho>
    for (auto x : a) h += x;
    num *= coroot_pairing(d, a, lambda) + h;
    den *= h;
    const auto g = std::gcd(num, den);
    num /= g, den /= g;
  }
  return num / den;
}

/// Number of positive roots alpha with <alpha^vee, lambda> < 0, which is the
/// length of the shortest w with w^{-1} lambda dominant.
inline std::size_t inversion_count(const pmc::RootDatum& d, const pmc::Weight& lambda) {
  std::size_t k = 0;
  for (auto& a : positive_roots(d)) k += coroot_pairing(d, a, lambda) < 0;
  return k;
}

/// Dimension of the GL_n irreducible with highest weight lambda, by
/// counting semistandard tableaux with entries at most n.
inline std::int64_t count_ssyt(const pmc::Partition& lam, int n) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < lam.length(); ++r)
    for (std::size_t c = 0; c < static_cast<std::size_t>(lam[r]); ++c) cells.emplace_back(r, c);
  std::vector<std::vector<int>> t(lam.length());
  for (std::size_t r = 0; r < lam.length(); ++r) t[r].assign(static_cast<std::size_t>(lam[r]), 0);
  std::int64_t count = 0;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      t[r][c] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return count;
}

/// Standard Young tableaux of a skew shape, by removing outer corners.
inline std::int64_t count_skew_syt(std::vector<std::int64_t> outer, const std::vector<std::int64_t>& inner) {
  std::map<std::vector<std::int64_t>, std::int64_t> memo;
  auto inner_at = [&](std::size_t r) { return r < inner.size() ? inner[r] : 0; };
  auto rec = [&](auto&& self, std::vector<std::int64_t>& lam) -> std::int64_t {
    bool done = true;
    for (std::size_t r = 0; r < lam.size(); ++r) done &= lam[r] == inner_at(r);
    if (done) return 1;
    if (auto it = memo.find(lam); it != memo.end()) return it->second;
    std::int64_t total = 0;
    for (std::size_t r = 0; r < lam.size(); ++r) {
      const bool corner = lam[r] > inner_at(r) && (r + 1 == lam.size() || lam[r + 1] < lam[r]);
      if (!corner) continue;
      --lam[r];
      total += self(self, lam);
      ++lam[r];
    }
    return memo[lam] = total;
  };
  return rec(rec, outer);
}

inline std::int64_t count_syt(const pmc::Partition& p) { return count_skew_syt(p.parts(), {}); }

/// Upward closure by brute force in a finite window of c values.
inline std::set<pmc::LatticePoint> up_closure_brute(const pmc::RootDatum& d, const std::vector<pmc::LatticePoint>& seeds,
                                                    std::int64_t c_max) {
  std::set<pmc::LatticePoint> out(seeds.begin(), seeds.end());
  std::vector<pmc::LatticePoint> todo(seeds.begin(), seeds.end());
  while (!todo.empty()) {
    auto p = todo.back();
    todo.pop_back();
    std::vector<pmc::LatticePoint> next{{p.vertex, p.c + 2}};
    for (int j : d.neighbours(p.vertex)) next.push_back({j, p.c + 1});
    for (auto& q : next)
      if (q.c <= c_max && out.insert(q).second) todo.push_back(q);
  }
  return out;
}

// Random generators with fixed seeds so failures reproduce.

inline pmc::GroupAlgebraElement random_element(const pmc::RootDatum& d, std::mt19937& rng, int terms = 4, int spread = 3) {
  std::uniform_int_distribution<int> coord(-spread, spread), coeff(-3, 3);
  pmc::GroupAlgebraElement f;
  for (int k = 0; k < terms; ++k) {
    pmc::Weight w = d.zero();
    for (std::size_t a = 0; a < d.lattice_rank(); ++a) w[a] = coord(rng);
    f.add(w, coeff(rng));
  }
  return f;
}

inline std::vector<int> random_word(const pmc::RootDatum& d, std::mt19937& rng, int max_len = 6) {
  std::uniform_int_distribution<int> len(0, max_len), vertex(1, d.num_vertices());
  std::vector<int> w(static_cast<std::size_t>(len(rng)));
  for (auto& x : w) x = vertex(rng);
  return w;
}

/// A parity-respecting point with c in [lo, hi].
inline pmc::LatticePoint random_point(const pmc::RootDatum& d, std::mt19937& rng, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<int> vertex(1, d.num_vertices());
  std::uniform_int_distribution<std::int64_t> c(lo, hi);
  const int i = vertex(rng);
  auto k = c(rng);
  if (((k % 2) + 2) % 2 != d.parity(i)) ++k;
  return {i, k};
}

inline pmc::PointMultiset random_multiset(const pmc::RootDatum& d, std::mt19937& rng, int max_points = 3, int max_mult = 2,
                                          std::int64_t lo = 0, std::int64_t hi = 5) {
  std::uniform_int_distribution<int> count(1, max_points), mult(1, max_mult);
  pmc::PointMultiset r;
  const int n = count(rng);
  for (int k = 0; k < n; ++k) r.add(random_point(d, rng, lo, hi), mult(rng));
  // cap the total at max_points to keep crystals small
  while (r.cardinality() > max_points) {
    auto p = r.points().begin()->first;
    pmc::PointMultiset smaller;
    for (auto& [q, m] : r.points()) smaller.add(q, q == p ? m - 1 : m);
    r = smaller;
  }
  return r;
}

inline pmc::Partition random_partition(std::mt19937& rng, int max_boxes) {
  std::uniform_int_distribution<int> size(0, max_boxes);
  int left = size(rng);
  std::vector<std::int64_t> parts;
  while (left > 0) {
    std::uniform_int_distribution<int> part(1, parts.empty() ? left : std::min<int>(left, static_cast<int>(parts.back())));
    const int p = part(rng);
    parts.push_back(p);
    left -= p;
  }
  return pmc::Partition(parts);
}

/// A random valid partition sequence: entry i has at most i rows.
inline pmc::PartitionSequence random_sequence(std::mt19937& rng, int max_length, int max_boxes) {
  std::uniform_int_distribution<int> len(1, max_length);
  const int n = len(rng);
  std::vector<pmc::Partition> seq;
  for (int i = 1; i <= n; ++i) {
    pmc::Partition p;
    do p = random_partition(rng, max_boxes);
    while (static_cast<int>(p.length()) > i);
    seq.push_back(p);
  }
  return pmc::PartitionSequence(seq);
}

} // namespace oracle
