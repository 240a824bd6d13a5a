#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "pmc/errors.hpp"
#include "pmc/typea.hpp"

namespace pmc {

namespace specht_detail {

using Perm = std::vector<std::uint8_t>; // perm[v] = image of v

inline constexpr std::uint64_t kPrime = 2147483647ULL; // 2^31 - 1

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  b %= kPrime;
  for (; e; e >>= 1, b = b * b % kPrime)
    if (e & 1) r = r * b % kPrime;
  return r;
}
inline std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

inline std::uint64_t encode(const Perm& p) {
  std::uint64_t key = 0;
  for (auto v : p) key = key * 8 + v;
  return key;
}

inline std::vector<Perm> all_perms(int d) {
  std::vector<Perm> out;
  Perm p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// All permutations preserving each block of a set partition of {0..d-1}.
inline std::vector<Perm> block_group(int d, const std::vector<std::vector<int>>& blocks) {
  std::vector<Perm> out;
  Perm base(static_cast<std::size_t>(d));
  std::iota(base.begin(), base.end(), 0);
  out.push_back(base);
  for (auto& blk : blocks) {
    std::vector<Perm> next;
    std::vector<int> images = blk;
    std::sort(images.begin(), images.end());
    do {
      for (auto& g : out) {
        Perm h = g;
        for (std::size_t k = 0; k < blk.size(); ++k) h[static_cast<std::size_t>(blk[k])] = static_cast<std::uint8_t>(images[k]);
        next.push_back(std::move(h));
      }
    } while (std::next_permutation(images.begin(), images.end()));
    out = std::move(next);
  }
  return out;
}

inline Perm compose(const Perm& g, const Perm& h) { // (g h)(v) = g(h(v))
  Perm out(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) out[v] = g[h[v]];
  return out;
}

/// Cycle type of a permutation as a partition.
inline Partition cycle_type(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<std::int64_t> lens;
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (seen[v]) continue;
    std::int64_t len = 0;
    for (auto w = v; !seen[w]; w = p[w]) seen[w] = true, ++len;
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return Partition(std::move(lens));
}

inline std::vector<Partition> partitions_of(std::int64_t n, std::int64_t max_part) {
  if (n == 0) return {Partition{}};
  std::vector<Partition> out;
  for (auto first = std::min(n, max_part); first >= 1; --first)
    for (auto& rest : partitions_of(n - first, first)) {
      std::vector<std::int64_t> parts{first};
      parts.insert(parts.end(), rest.parts().begin(), rest.parts().end());
      out.emplace_back(std::move(parts));
    }
  return out;
}
inline std::vector<Partition> partitions_of(std::int64_t n) { return partitions_of(n, n); }

} // namespace specht_detail

/// chi^lambda(mu) by the Murnaghan-Nakayama rule on beta-sets, memoised.
class SymmetricGroupCharacters {
public:
  std::int64_t operator()(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw ValidationError("character arguments must be partitions of the same size");
    std::vector<std::int64_t> beta;
    const auto l = static_cast<std::int64_t>(lambda.length());
    for (std::int64_t k = 0; k < l; ++k) beta.push_back(lambda[static_cast<std::size_t>(k)] + (l - 1 - k));
    return eval(std::move(beta), mu.parts(), 0);
  }

private:
  std::int64_t eval(std::vector<std::int64_t> beta, const std::vector<std::int64_t>& mu, std::size_t k) {
    if (k == mu.size()) return 1;
    std::sort(beta.begin(), beta.end());
    auto key = std::make_pair(beta, std::vector<std::int64_t>(mu.begin() + static_cast<std::ptrdiff_t>(k), mu.end()));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const auto h = mu[k];
    std::int64_t total = 0;
    for (std::size_t a = 0; a < beta.size(); ++a) {
      const auto b = beta[a] - h;
      if (b < 0 || std::binary_search(beta.begin(), beta.end(), b)) continue;
      std::int64_t between = 0;
      for (auto x : beta) between += x > b && x < beta[a];
      auto next = beta;
      next[a] = b;
      total += (between % 2 ? -1 : 1) * eval(std::move(next), mu, k + 1);
    }
    memo_.emplace(std::move(key), total);
    return total;
  }
  std::map<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>, std::int64_t> memo_;
};

/// Decomposes the module C[S_d] y_T, y_T = sum_{r in R_T, c in C_T} sign(c) r c,
/// into Specht modules by computing its character directly.
///
/// The module lies in C[S_d] b (b the signed column sum), whose basis is
/// {h b} over left cosets h C_T.  It is spanned by the vectors g a b over
/// cosets g R_T.  A reduced row echelon basis is found modulo a large prime,
/// the trace of each conjugacy class representative is read off at the
/// pivots, and the multiplicities come from inner products with the
/// irreducible characters.  Integrality and the dimension count are checked.
inline std::map<Partition, std::int64_t> specht_decompose_bruteforce(const Diagram& d, std::size_t max_boxes = 7) {
  using namespace specht_detail;
  const auto n = static_cast<int>(d.size());
  if (d.size() > max_boxes) throw LimitExceeded("specht_decompose_bruteforce: diagram has more than " + std::to_string(max_boxes) + " boxes");
  if (n == 0) return {{Partition{}, 1}};

  // T numbers the boxes 0..n-1 in sorted order.
  std::map<std::int64_t, std::vector<int>> row_blocks, col_blocks;
  int idx = 0;
  for (auto& b : d.boxes()) {
    row_blocks[b.row].push_back(idx);
    col_blocks[b.col].push_back(idx);
    ++idx;
  }
  std::vector<std::vector<int>> rows, cols;
  for (auto& [k, v] : row_blocks) rows.push_back(v);
  for (auto& [k, v] : col_blocks) cols.push_back(v);
  const auto row_group = block_group(n, rows);

  // Canonical representative of the coset h C_T and the sign relating them.
  auto canonical = [&](Perm h, int& sign) {
    sign = 1;
    for (auto& blk : cols) {
      std::vector<std::uint8_t> vals;
      for (int v : blk) vals.push_back(h[static_cast<std::size_t>(v)]);
      for (std::size_t a = 0; a < vals.size(); ++a)
        for (std::size_t b = a + 1; b < vals.size(); ++b)
          if (vals[a] > vals[b]) sign = -sign;
      std::sort(vals.begin(), vals.end());
      for (std::size_t k = 0; k < blk.size(); ++k) h[static_cast<std::size_t>(blk[k])] = vals[k];
    }
    return h;
  };

  std::unordered_map<std::uint64_t, std::size_t> coset_index;
  std::vector<Perm> coset_reps;
  auto coord = [&](const Perm& h, int& sign) {
    const auto rep = canonical(h, sign);
    const auto key = encode(rep);
    auto [it, inserted] = coset_index.try_emplace(key, coset_reps.size());
    if (inserted) coset_reps.push_back(rep);
    return it->second;
  };
  // Enumerate the coset space up front so that the ambient dimension is fixed.
  const auto everything = all_perms(n);
  for (auto& g : everything) {
    int s;
    coord(g, s);
  }
  const std::size_t dim = coset_reps.size();

  // Spanning vectors g a b, one per left coset of R_T.
  std::unordered_map<std::uint64_t, bool> seen_row_coset;
  std::vector<std::vector<std::uint64_t>> basis; // RREF rows
  std::vector<std::size_t> pivots;
  std::vector<std::int64_t> acc(dim);
  for (auto& g : everything) {
    // canonical representative of g R_T: sort values within each row block
    Perm key_perm = g;
    for (auto& blk : rows) {
      std::vector<std::uint8_t> vals;
      for (int v : blk) vals.push_back(g[static_cast<std::size_t>(v)]);
      std::sort(vals.begin(), vals.end());
      for (std::size_t k = 0; k < blk.size(); ++k) key_perm[static_cast<std::size_t>(blk[k])] = vals[k];
    }
    if (!seen_row_coset.emplace(encode(key_perm), true).second) continue;
    std::fill(acc.begin(), acc.end(), 0);
    for (auto& r : row_group) {
      int s;
      const auto k = coord(compose(g, r), s);
      acc[k] += s;
    }
    std::vector<std::uint64_t> v(dim);
    for (std::size_t k = 0; k < dim; ++k) v[k] = static_cast<std::uint64_t>((acc[k] % static_cast<std::int64_t>(kPrime) + static_cast<std::int64_t>(kPrime)) % static_cast<std::int64_t>(kPrime));
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const auto f = v[pivots[b]];
      if (!f) continue;
      const auto neg = kPrime - f;
      for (std::size_t k = 0; k < dim; ++k)
        if (basis[b][k]) v[k] = (v[k] + neg * basis[b][k]) % kPrime;
    }
    std::size_t p = 0;
    while (p < dim && !v[p]) ++p;
    if (p == dim) continue;
    const auto inv = inv_mod(v[p]);
    for (auto& x : v) x = x * inv % kPrime;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const auto f = basis[b][p];
      if (!f) continue;
      const auto neg = kPrime - f;
      for (std::size_t k = 0; k < dim; ++k)
        if (v[k]) basis[b][k] = (basis[b][k] + neg * v[k]) % kPrime;
    }
    basis.push_back(std::move(v));
    pivots.push_back(p);
  }

  // Left multiplication by h permutes the coset basis up to sign.
  auto trace = [&](const Perm& h) -> std::int64_t {
    std::vector<std::size_t> target(dim);
    std::vector<int> sign(dim);
    for (std::size_t j = 0; j < dim; ++j) target[j] = coord(compose(h, coset_reps[j]), sign[j]);
    std::vector<std::int64_t> where(dim, -1);
    for (std::size_t b = 0; b < pivots.size(); ++b) where[pivots[b]] = static_cast<std::int64_t>(b);
    std::uint64_t t = 0;
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (std::size_t j = 0; j < dim; ++j) {
        if (!basis[b][j] || where[target[j]] != static_cast<std::int64_t>(b)) continue;
        t = (t + (sign[j] > 0 ? basis[b][j] : kPrime - basis[b][j])) % kPrime;
      }
    return t > kPrime / 2 ? static_cast<std::int64_t>(t) - static_cast<std::int64_t>(kPrime) : static_cast<std::int64_t>(t);
  };

  // One representative per cycle type.
  std::map<Partition, std::pair<Perm, std::int64_t>> classes; // type -> (rep, class size)
  for (auto& g : everything) {
    auto type = cycle_type(g);
    auto [it, inserted] = classes.try_emplace(type, g, 0);
    ++it->second.second;
  }
  std::map<Partition, std::int64_t> chi_module;
  for (auto& [type, rep] : classes) chi_module[type] = trace(rep.first);

  std::int64_t order = 1;
  for (int k = 2; k <= n; ++k) order *= k;
  SymmetricGroupCharacters chars;
  std::map<Partition, std::int64_t> out;
  std::int64_t dim_check = 0;
  const Partition identity_type(std::vector<std::int64_t>(static_cast<std::size_t>(n), 1));
  for (auto& lambda : partitions_of(n)) {
    std::int64_t s = 0;
    for (auto& [type, rep] : classes) s += rep.second * chi_module[type] * chars(lambda, type);
    if (s % order != 0) throw ConsistencyError("specht oracle: non-integral multiplicity for " + lambda.str());
    if (auto m = s / order) {
      if (m < 0) throw ConsistencyError("specht oracle: negative multiplicity for " + lambda.str());
      out[lambda] = m;
      dim_check += m * chars(lambda, identity_type);
    }
  }
  if (dim_check != static_cast<std::int64_t>(basis.size()) || chi_module[identity_type] != dim_check)
    throw ConsistencyError("specht oracle: dimension check failed");
  return out;
}

} // namespace pmc
