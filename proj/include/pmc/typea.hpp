#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pmc/cartan.hpp"
#include "pmc/errors.hpp"
#include "pmc/product.hpp"
#include "pmc/truncation.hpp"
#include "pmc/weightring.hpp"

namespace pmc {

/// A weakly decreasing list of positive integers.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<std::int64_t> parts) : Partition(std::vector<std::int64_t>(parts)) {}
  explicit Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] <= 0) throw ValidationError("partition parts must be positive");
      if (k && parts_[k] > parts_[k - 1]) throw ValidationError("partition parts must be weakly decreasing");
    }
  }

  [[nodiscard]] const std::vector<std::int64_t>& parts() const noexcept { return parts_; }
  [[nodiscard]] std::size_t length() const noexcept { return parts_.size(); }
  [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
  [[nodiscard]] std::int64_t operator[](std::size_t k) const { return k < parts_.size() ? parts_[k] : 0; }
  [[nodiscard]] std::int64_t size() const { return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0}); }

  [[nodiscard]] Partition conjugate() const {
    std::vector<std::int64_t> out;
    for (std::int64_t j = 1; !parts_.empty() && j <= parts_[0]; ++j) {
      std::int64_t n = 0;
      for (auto p : parts_) n += p >= j;
      out.push_back(n);
    }
    return Partition(std::move(out));
  }
  /// Number of columns of length j.
  [[nodiscard]] std::int64_t columns_of_length(std::size_t j) const { return (*this)[j - 1] - (*this)[j]; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

  [[nodiscard]] std::string str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < parts_.size(); ++k) s += (k ? "," : "") + std::to_string(parts_[k]);
    return s + ")";
  }

private:
  std::vector<std::int64_t> parts_;
};

/// The GL_n weight in epsilon coordinates.
inline Weight partition_weight(const RootDatum& gl, const Partition& p) {
  if (!gl.is_gl()) throw ValidationError("partitions are GL_n weights");
  if (p.length() > gl.lattice_rank()) throw ValidationError("partition " + p.str() + " is longer than n = " + std::to_string(gl.lattice_rank()));
  Weight w = gl.zero();
  for (std::size_t k = 0; k < p.length(); ++k) w[k] = p[k];
  return w;
}

/// Reads a dominant GL_n weight with nonnegative entries as a partition.
inline Partition weight_partition(const Weight& w) {
  std::vector<std::int64_t> parts(w.coords());
  for (auto x : parts)
    if (x < 0) throw ValidationError("weight " + w.str() + " has a negative entry");
  return Partition(std::move(parts));
}

/// lambda^(1), ..., lambda^(r) with l(lambda^(i)) <= i.
class PartitionSequence {
public:
  PartitionSequence() = default;
  PartitionSequence(std::initializer_list<Partition> seq) : PartitionSequence(std::vector<Partition>(seq)) {}
  explicit PartitionSequence(std::vector<Partition> seq) : seq_(std::move(seq)) {
    for (std::size_t i = 0; i < seq_.size(); ++i)
      if (seq_[i].length() > i + 1)
        throw ValidationError("partition sequence entry " + std::to_string(i + 1) + " has length " + std::to_string(seq_[i].length()) + " > " + std::to_string(i + 1));
  }
  [[nodiscard]] std::size_t length() const noexcept { return seq_.size(); }
  [[nodiscard]] const Partition& operator[](std::size_t i) const { return seq_[i]; }
  [[nodiscard]] const std::vector<Partition>& entries() const noexcept { return seq_; }
  [[nodiscard]] std::int64_t boxes() const {
    std::int64_t s = 0;
    for (auto& p : seq_) s += p.size();
    return s;
  }
  friend bool operator==(const PartitionSequence&, const PartitionSequence&) = default;
  [[nodiscard]] std::string str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < seq_.size(); ++k) s += (k ? "," : "") + seq_[k].str();
    return s + ")";
  }

private:
  std::vector<Partition> seq_;
};

struct Box {
  std::int64_t row;
  std::int64_t col;
  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

/// A finite set of boxes (row, column), rows counted downwards from 1.
class Diagram {
public:
  Diagram() = default;
  explicit Diagram(std::set<Box> boxes) : boxes_(std::move(boxes)) {
    for (auto& b : boxes_)
      if (b.row < 1 || b.col < 1) throw ValidationError("diagram boxes must have positive coordinates");
  }
  Diagram(std::initializer_list<Box> boxes) : Diagram(std::set<Box>(boxes)) {}

  [[nodiscard]] const std::set<Box>& boxes() const noexcept { return boxes_; }
  [[nodiscard]] std::size_t size() const noexcept { return boxes_.size(); }
  [[nodiscard]] bool contains(const Box& b) const { return boxes_.contains(b); }
  [[nodiscard]] std::int64_t max_row() const {
    std::int64_t r = 0;
    for (auto& b : boxes_) r = std::max(r, b.row);
    return r;
  }
  [[nodiscard]] std::int64_t max_col() const {
    std::int64_t c = 0;
    for (auto& b : boxes_) c = std::max(c, b.col);
    return c;
  }
  /// Rows occupied in each nonempty column, keyed by column.
  [[nodiscard]] std::map<std::int64_t, std::vector<std::int64_t>> columns() const {
    std::map<std::int64_t, std::vector<std::int64_t>> out;
    for (auto& b : boxes_) out[b.col].push_back(b.row);
    for (auto& [c, rows] : out) std::sort(rows.begin(), rows.end());
    return out;
  }
  [[nodiscard]] bool column_convex() const {
    for (auto& [c, rows] : columns())
      if (rows.back() - rows.front() + 1 != static_cast<std::int64_t>(rows.size())) return false;
    return true;
  }
  friend bool operator==(const Diagram&, const Diagram&) = default;

  /// English-notation grid, '#' for a box and '.' for a gap.
  [[nodiscard]] std::string ascii() const {
    std::string out;
    const auto rows = max_row(), cols = max_col();
    for (std::int64_t r = 1; r <= rows; ++r) {
      for (std::int64_t c = 1; c <= cols; ++c) out += contains({r, c}) ? '#' : '.';
      out += '\n';
    }
    return out;
  }

private:
  std::set<Box> boxes_;
};

inline Diagram young_diagram(const Partition& p) {
  std::set<Box> boxes;
  for (std::size_t r = 0; r < p.length(); ++r)
    for (std::int64_t c = 1; c <= p[r]; ++c) boxes.insert({static_cast<std::int64_t>(r) + 1, c});
  return Diagram(std::move(boxes));
}

/// D(lambda): at step i shift everything down one row and append the Young
/// diagram of lambda^(i) on the right, top-aligned.
inline Diagram diagram_of_sequence(const PartitionSequence& seq) {
  std::set<Box> boxes;
  std::int64_t next_col = 1;
  for (auto& lam : seq.entries()) {
    std::set<Box> moved;
    for (auto& b : boxes) moved.insert({b.row + 1, b.col});
    boxes = std::move(moved);
    const auto conj = lam.conjugate();
    for (std::size_t j = 0; j < conj.length(); ++j, ++next_col)
      for (std::int64_t r = 1; r <= conj[j]; ++r) boxes.insert({r, next_col});
  }
  return Diagram(std::move(boxes));
}

/// A partition sequence whose diagram is D up to a column permutation.
/// Needs D column-convex: a column spanning rows a..b, with r the lowest
/// occupied row, is a column of length b-a+1 added at step r-a+1.
inline PartitionSequence sequence_of_diagram(const Diagram& d) {
  if (!d.column_convex()) throw ValidationError("diagram is not column-convex");
  const auto r = d.max_row();
  std::vector<std::vector<std::int64_t>> lengths(static_cast<std::size_t>(r));
  for (auto& [c, rows] : d.columns()) {
    const auto step = r - rows.front() + 1;
    lengths[static_cast<std::size_t>(step - 1)].push_back(static_cast<std::int64_t>(rows.size()));
  }
  std::vector<Partition> seq;
  for (auto& cols : lengths) {
    std::sort(cols.rbegin(), cols.rend());
    std::vector<std::int64_t> parts;
    if (!cols.empty()) {
      parts.assign(static_cast<std::size_t>(cols.front()), 0);
      for (auto len : cols)
        for (std::int64_t k = 0; k < len; ++k) ++parts[static_cast<std::size_t>(k)];
    }
    seq.emplace_back(std::move(parts));
  }
  return PartitionSequence(std::move(seq));
}

/// J(lambda^i): the complement of down({(1,-1)}) together with
/// up({(1,-2k+1)}) for k <= i, i.e. theta_j = min(2-j, j-2i).
inline ThresholdSet sequence_threshold(const RootDatum& gl, std::size_t i) {
  ThresholdSet j(gl.num_vertices());
  for (int v = 1; v <= gl.num_vertices(); ++v)
    j.set_threshold(v, std::min<std::int64_t>(2 - v, v - 2 * static_cast<std::int64_t>(i)));
  return j;
}

/// The multiset R(lambda): the increment at step i places, for each j, the
/// m_j(lambda^(i)) columns of length j at the single strip point
/// (j, j - 2i).
inline PointMultiset multiset_of_sequence(const PartitionSequence& seq) {
  PointMultiset r;
  for (std::size_t i = 1; i <= seq.length(); ++i) {
    const auto& lam = seq[i - 1];
    for (std::size_t j = 1; j <= lam.length(); ++j)
      if (auto m = lam.columns_of_length(j)) r.add(static_cast<int>(j), static_cast<std::int64_t>(j) - 2 * static_cast<std::int64_t>(i), m);
  }
  return r;
}

/// Shifts R by an even amount so that it lies in down({(1,-1)}) touching
/// its edge, then reads each point (j, c) as a column of length j at step
/// (j - c) / 2.
inline PartitionSequence sequence_of_multiset(const PointMultiset& r) {
  if (r.empty()) return {};
  std::int64_t top = 0;
  bool first = true;
  for (auto& [p, m] : r.points()) {
    if (((p.c - p.vertex) % 2 + 2) % 2 != 0) throw ValidationError("point violates type A parity");
    top = first ? p.c + p.vertex : std::max(top, p.c + p.vertex);
    first = false;
  }
  std::map<std::int64_t, std::map<std::int64_t, std::int64_t>> cols; // step -> length -> count
  std::int64_t steps = 0;
  for (auto& [p, m] : r.points()) {
    const auto c = p.c - top;
    const auto step = (p.vertex - c) / 2;
    cols[step][p.vertex] += m;
    steps = std::max(steps, step);
  }
  std::vector<Partition> seq;
  for (std::int64_t i = 1; i <= steps; ++i) {
    std::vector<std::int64_t> parts;
    for (auto it = cols[i].rbegin(); it != cols[i].rend(); ++it) {
      auto [len, count] = *it;
      if (parts.size() < static_cast<std::size_t>(len)) parts.resize(static_cast<std::size_t>(len), 0);
      for (std::int64_t k = 0; k < len; ++k) parts[static_cast<std::size_t>(k)] += count;
    }
    seq.emplace_back(std::move(parts));
  }
  return PartitionSequence(std::move(seq));
}

/// ch = e^{lambda^(i)} pi_1 ... pi_{i-1} (ch), starting from 1.
inline GroupAlgebraElement flagged_schur_char(const PartitionSequence& seq, int n) {
  if (n < static_cast<int>(seq.length()) || n < 1) throw ValidationError("flagged_schur_char needs n >= length of the sequence");
  const auto gl = build_root_datum(CartanKind::GL, n);
  auto ch = GroupAlgebraElement::exp(gl.zero());
  for (std::size_t i = 1; i <= seq.length(); ++i) {
    std::vector<int> word;
    for (int k = 1; k < static_cast<int>(i); ++k) word.push_back(k);
    ch = apply_word(gl, word, std::move(ch)).shifted(partition_weight(gl, seq[i - 1]));
  }
  return ch;
}

inline GroupAlgebraElement schur_char(const PartitionSequence& seq, int n) {
  const auto gl = build_root_datum(CartanKind::GL, n);
  auto ch = apply_longest(gl, flagged_schur_char(seq, n));
  if (!is_weyl_invariant(gl, ch)) throw ConsistencyError("schur character is not Weyl invariant");
  return ch;
}

/// Irreducible multiplicities of the GL_n module with the given character,
/// keyed by partition.
inline std::map<Partition, std::int64_t> partition_decompose(const RootDatum& gl, const GroupAlgebraElement& ch) {
  std::map<Partition, std::int64_t> out;
  for (auto& [w, m] : weyl_decompose(gl, ch)) out[weight_partition(w)] += m;
  return out;
}

/// A skew shape lambda / mu.
struct SkewShape {
  Partition outer;
  Partition inner;
  friend bool operator==(const SkewShape&, const SkewShape&) = default;
  [[nodiscard]] std::string str() const { return outer.str() + "/" + inner.str(); }
};

/// Searches row and column permutations for a skew presentation of D.
/// Empty rows and columns are dropped; for each row order the columns are
/// sorted by (top, bottom) descending, which is the only candidate column
/// order.  Among all skew presentations the one with smallest |mu| is
/// returned, ties broken lexicographically on (lambda, mu).
inline std::optional<SkewShape> skew_normalise(const Diagram& d, std::size_t max_rows = 7) {
  if (d.size() == 0) return SkewShape{};
  std::vector<std::int64_t> rows;
  for (auto& b : d.boxes()) rows.push_back(b.row);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  if (rows.size() > max_rows) throw LimitExceeded("skew_normalise: more than " + std::to_string(max_rows) + " nonempty rows");
  std::vector<std::vector<int>> col_rows; // compressed row indices per column
  for (auto& [c, rs] : d.columns()) {
    std::vector<int> v;
    for (auto r : rs) v.push_back(static_cast<int>(std::lower_bound(rows.begin(), rows.end(), r) - rows.begin()));
    col_rows.push_back(std::move(v));
  }
  std::vector<int> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<SkewShape> best;
  do {
    // perm[k] is the new position of original row k
    std::vector<std::pair<int, int>> spans; // (top, bottom), 1-based
    bool ok = true;
    for (auto& cr : col_rows) {
      std::vector<int> pos;
      for (int r : cr) pos.push_back(perm[static_cast<std::size_t>(r)]);
      std::sort(pos.begin(), pos.end());
      if (pos.back() - pos.front() + 1 != static_cast<int>(pos.size())) {
        ok = false;
        break;
      }
      spans.emplace_back(pos.front() + 1, pos.back() + 1);
    }
    if (!ok) continue;
    std::sort(spans.begin(), spans.end(), [](auto a, auto b) { return a > b; });
    for (std::size_t k = 1; k < spans.size() && ok; ++k) ok = spans[k].second <= spans[k - 1].second;
    if (!ok) continue;
    std::vector<std::int64_t> outer_conj, inner_conj;
    for (auto [top, bottom] : spans) {
      outer_conj.push_back(bottom);
      inner_conj.push_back(top - 1);
    }
    SkewShape s{Partition(outer_conj).conjugate(), Partition(inner_conj).conjugate()};
    if (!best || s.inner.size() < best->inner.size() ||
        (s.inner.size() == best->inner.size() && std::tie(s.outer, s.inner) < std::tie(best->outer, best->inner)))
      best = std::move(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Littlewood-Richardson expansion of s_{lambda/mu}: counts semistandard
/// fillings whose reverse reading word is a lattice word.
inline std::map<Partition, std::int64_t> lr_skew_expand(const SkewShape& shape) {
  const auto& lam = shape.outer;
  const auto& mu = shape.inner;
  if (mu.length() > lam.length()) throw ValidationError("inner shape is not contained in the outer shape");
  for (std::size_t r = 0; r < mu.length(); ++r)
    if (mu[r] > lam[r]) throw ValidationError("inner shape is not contained in the outer shape");
  const std::size_t nrows = lam.length();
  std::vector<std::vector<int>> fill(nrows);
  for (std::size_t r = 0; r < nrows; ++r) fill[r].assign(static_cast<std::size_t>(lam[r]), 0);
  std::vector<std::int64_t> content(nrows + 1, 0);
  std::map<Partition, std::int64_t> out;

  // cells in reading order: rows top to bottom, each right to left
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < nrows; ++r)
    for (auto c = static_cast<std::size_t>(lam[r]); c-- > static_cast<std::size_t>(mu[r]);) cells.emplace_back(r, c);

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      std::vector<std::int64_t> parts(content.begin() + 1, content.end());
      out[Partition(std::move(parts))] += 1;
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1, hi = static_cast<int>(r) + 1; // entries in row r are at most r+1
    if (c + 1 < static_cast<std::size_t>(lam[r])) hi = std::min(hi, fill[r][c + 1]);          // weakly increasing along the row
    if (r > 0 && c < static_cast<std::size_t>(lam[r - 1]) && c >= static_cast<std::size_t>(mu[r - 1]))
      lo = std::max(lo, fill[r - 1][c] + 1); // strictly increasing down columns
    for (int v = lo; v <= hi; ++v) {
      if (v > 1 && content[static_cast<std::size_t>(v)] + 1 > content[static_cast<std::size_t>(v - 1)]) continue; // lattice condition
      fill[r][c] = v;
      ++content[static_cast<std::size_t>(v)];
      self(self, k + 1);
      --content[static_cast<std::size_t>(v)];
    }
    fill[r][c] = 0;
  };
  rec(rec, 0);
  return out;
}

/// Smallest n such that up(R) intersect down({(i, c-2) : (i,c) in Supp R})
/// lives over I_n = {1, ..., n-1}; 1 when that set is empty.
inline int stable_bound(const PointMultiset& r) {
  if (r.empty()) return 1;
  // The set only involves columns up to max vertex + |c-range|, so a
  // generous GL_m suffices to compute it exactly.
  std::int64_t lo = 0, hi = 0;
  bool first = true;
  for (auto& [p, m] : r.points()) {
    lo = first ? p.c : std::min(lo, p.c);
    hi = first ? p.c : std::max(hi, p.c);
    first = false;
  }
  const int m = r.max_vertex() + static_cast<int>(hi - lo) + 3;
  const auto gl = build_root_datum(CartanKind::GL, m + 1);
  std::vector<LatticePoint> supp, lowered;
  for (auto& [p, mult] : r.points()) {
    supp.push_back(p);
    lowered.push_back({p.vertex, p.c - 2});
  }
  const auto up = up_closure(gl, supp);
  const auto down = down_closure(gl, lowered);
  int maxcol = 0;
  for (auto& p : window(up, down)) maxcol = std::max(maxcol, p.vertex);
  return maxcol + 1;
}

/// The rank at which stable coefficients are computed: at least the stable
/// bound, and large enough that R lives over I_n.
inline int stable_rank(const PointMultiset& r) { return std::max(stable_bound(r), r.max_vertex() + 1); }

inline std::map<Partition, std::int64_t> stable_coeffs(const PointMultiset& r, const DecomposeOptions& opt = {}) {
  const auto gl = build_root_datum(CartanKind::GL, stable_rank(r));
  std::map<Partition, std::int64_t> out;
  for (auto& [w, m] : decompose(gl, r, opt).multiplicities) out[weight_partition(w)] += m;
  return out;
}

inline std::map<Partition, std::int64_t> restrict_coeffs(const std::map<Partition, std::int64_t>& coeffs, std::size_t n) {
  std::map<Partition, std::int64_t> out;
  for (auto& [p, m] : coeffs)
    if (p.length() <= n) out[p] = m;
  return out;
}

/// Psi_{n,m}: re-reads y_R z_S^{-1} in GL_m, keeping the S-label.
inline Monomial psi_embed(const RootDatum& gl_n, const RootDatum& gl_m, const PointMultiset& r, const Monomial& p) {
  if (!gl_n.is_gl() || !gl_m.is_gl()) throw ValidationError("psi_embed works between GL data");
  if (gl_n.rank() > gl_m.rank()) throw ValidationError("psi_embed needs n <= m");
  r.validate(gl_n);
  return monomial_from_label(gl_m, r, s_label(gl_n, r, p));
}

} // namespace pmc
