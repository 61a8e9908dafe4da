#pragma once
// Skew shapes and Littlewood-Richardson tableaux.
//
// Conventions (these are load-bearing; the geometry side depends on them):
//  * French orientation: row 0 is the southernmost (longest) row, rows grow
//    northwards, column 0 is the westernmost.  Inner and outer shape share
//    their southwest corner.
//  * Entries are weakly increasing along each row from west to east, and
//    strictly increasing up each column from south to north.
//  * The reading word lists rows north to south, each west to east.  A
//    filling is lattice if every tail of the reading word contains at least
//    as many k's as (k+1)'s, for every k.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "partition.hpp"

namespace lrm {

struct Cell {
  int row = 0, col = 0;
  bool operator==(const Cell&) const = default;
  auto operator<=>(const Cell&) const = default;
};

struct SkewShape {
  Partition outer, inner;

  SkewShape() = default;
  SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
    if (!outer.contains(inner)) throw std::invalid_argument("skew shape: inner not contained in outer");
  }

  bool has_cell(int r, int c) const {
    return r >= 0 && r < outer.size() && c >= inner.part(r) && c < outer.part(r);
  }
  long long cell_count() const { return outer.weight() - inner.weight(); }

  std::vector<Cell> cells_reading_order() const {  // north to south, west to east
    std::vector<Cell> cs;
    for (int r = outer.size() - 1; r >= 0; --r)
      for (int c = inner.part(r); c < outer.part(r); ++c) cs.push_back({r, c});
    return cs;
  }
  bool operator==(const SkewShape&) const = default;
};

struct LRTableau {
  SkewShape shape;
  // entries[r][c - inner_r] for each skew cell of row r
  std::vector<std::vector<int>> rows;

  LRTableau() = default;
  explicit LRTableau(SkewShape sh) : shape(std::move(sh)) {
    rows.resize(shape.outer.size());
    for (int r = 0; r < shape.outer.size(); ++r)
      rows[r].assign(shape.outer.part(r) - shape.inner.part(r), 0);
  }

  int entry(int r, int c) const {
    if (!shape.has_cell(r, c)) throw std::out_of_range("no such cell");
    return rows[r][c - shape.inner.part(r)];
  }
  int& entry_ref(int r, int c) { return rows[r][c - shape.inner.part(r)]; }
  bool operator==(const LRTableau&) const = default;

  std::vector<int> reading_word() const {
    std::vector<int> w;
    for (int r = shape.outer.size() - 1; r >= 0; --r)
      for (int v : rows[r]) w.push_back(v);
    return w;
  }

  Partition content() const {
    std::vector<int> cnt;
    for (const auto& row : rows)
      for (int v : row) {
        if ((int)cnt.size() < v) cnt.resize(v, 0);
        cnt[v - 1]++;
      }
    return Partition{std::move(cnt)};  // throws if not weakly decreasing
  }
};

inline bool is_lattice_word_tails(const std::vector<int>& w) {
  // every tail w_s..w_end must have #k >= #(k+1)
  std::vector<int> cnt;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    int k = *it;
    if (k <= 0) return false;
    if ((int)cnt.size() < k + 1) cnt.resize(k + 1, 0);
    cnt[k - 1]++;
    if (k >= 2 && cnt[k - 2] < cnt[k - 1]) return false;
  }
  return true;
}

inline bool validate_lr(const LRTableau& t) {
  const SkewShape& sh = t.shape;
  for (int r = 0; r < sh.outer.size(); ++r) {
    for (int c = sh.inner.part(r); c < sh.outer.part(r); ++c) {
      int v = t.entry(r, c);
      if (v <= 0) return false;
      // row: weakly increasing west -> east
      if (sh.has_cell(r, c + 1) && v > t.entry(r, c + 1)) return false;
      // column: strictly increasing south -> north
      if (sh.has_cell(r + 1, c) && t.entry(r + 1, c) <= v) return false;
    }
  }
  return is_lattice_word_tails(t.reading_word());
}

// Standard order on the cells of a filling: X before Y iff f(X) < f(Y), or
// the entries are equal and X is strictly west of Y.
inline std::vector<Cell> standard_order(const LRTableau& t) {
  std::vector<Cell> cs = t.shape.cells_reading_order();
  std::stable_sort(cs.begin(), cs.end(), [&](const Cell& x, const Cell& y) {
    int fx = t.entry(x.row, x.col), fy = t.entry(y.row, y.col);
    if (fx != fy) return fx < fy;
    return x.col < y.col;
  });
  // equal entries never share a column, so the order is total
  return cs;
}

// Enumerate all LR (lattice) tableaux on the given skew shape with entries
// bounded by max_entry.  Cells are filled south to north, east to west, so
// row/column constraints and the tail condition check incrementally.
inline std::vector<LRTableau> enumerate_lr(const SkewShape& sh, int max_entry) {
  std::vector<LRTableau> out;
  LRTableau t(sh);
  std::vector<Cell> order;  // reverse reading order
  for (int r = 0; r < sh.outer.size(); ++r)
    for (int c = sh.outer.part(r) - 1; c >= sh.inner.part(r); --c) order.push_back({r, c});
  std::vector<int> cnt(max_entry + 2, 0);

  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == order.size()) {
      out.push_back(t);
      return;
    }
    auto [r, c] = order[idx];
    int lo = 1, hi = max_entry;
    if (sh.has_cell(r, c + 1)) hi = std::min(hi, t.entry(r, c + 1));      // east neighbor, filled
    if (sh.has_cell(r - 1, c)) lo = std::max(lo, t.entry(r - 1, c) + 1);  // south neighbor, filled
    for (int v = lo; v <= hi; ++v) {
      if (v >= 2 && cnt[v - 2] < cnt[v - 1] + 1) continue;  // tail condition would fail
      t.entry_ref(r, c) = v;
      cnt[v - 1]++;
      rec(idx + 1);
      cnt[v - 1]--;
    }
    t.entry_ref(r, c) = 0;
  };
  rec(0);
  return out;
}

inline std::vector<LRTableau> enumerate_lr_with_content(const SkewShape& sh, const Partition& nu,
                                                        int max_entry) {
  std::vector<LRTableau> out;
  if (sh.cell_count() != nu.weight()) return out;
  for (auto& t : enumerate_lr(sh, max_entry))
    if (t.content() == nu) out.push_back(std::move(t));
  return out;
}

// c_{nu,mu}^{lambda}: LR tableaux of shape lambda/mu and content nu.  In the
// boundary-data form used throughout, the triple is written (nu, mu, lambda^c)
// with lambda^c the box complement of lambda.
inline long long lr_coefficient_tableau(const Partition& nu, const Partition& mu,
                                        const Partition& lambda_complement, const BoxParams& box) {
  Partition lambda = lambda_complement.complement(box);
  if (!lambda.contains(mu)) return 0;
  if (nu.weight() + mu.weight() != lambda.weight()) return 0;
  return (long long)enumerate_lr_with_content(SkewShape(lambda, mu), nu, box.d).size();
}

// LR-bitableaux on lambda with middle shape kappa: f has shape lambda/kappa
// and content xi, g has shape kappa/mu and content nu.
struct LRBitableau {
  LRTableau g;  // inner tableau, shape kappa/mu
  LRTableau f;  // outer tableau, shape lambda/kappa
};

inline std::vector<LRBitableau> enumerate_lr_bitableaux(const Partition& lambda, const Partition& mu,
                                                        const BoxParams& box) {
  std::vector<LRBitableau> out;
  for (const Partition& kappa : partitions_in_box(box)) {
    if (!lambda.contains(kappa) || !kappa.contains(mu)) continue;
    auto gs = enumerate_lr(SkewShape(kappa, mu), box.d);
    if (gs.empty()) continue;
    auto fs = enumerate_lr(SkewShape(lambda, kappa), box.d);
    for (const auto& g : gs)
      for (const auto& f : fs) out.push_back({g, f});
  }
  return out;
}

}  // namespace lrm
