#pragma once
// Partitions in a d x (n-d) box and their 01-string boundary encoding.
//
// A partition is stored as weakly decreasing positive parts (no trailing
// zeros).  The boundary string of a partition in the box walks the lattice
// path of the diagram from the southeast corner of the box to the northwest
// corner: a horizontal step contributes '0', a vertical step '1'.  Strings
// have length n and exactly d ones.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "exact.hpp"

namespace lrm {

struct BoxParams {
  int d = 0;  // number of rows / number of ones
  int n = 0;  // total string length, 0 < d < n
  int cols() const { return n - d; }
  bool valid() const { return 0 < d && d < n; }
  bool operator==(const BoxParams&) const = default;
};

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) { normalize(); }

  void normalize() {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 1; i < parts.size(); ++i)
      if (parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must weakly decrease");
    for (int p : parts)
      if (p < 0) throw std::invalid_argument("negative part");
  }

  int size() const { return (int)parts.size(); }          // number of rows
  int part(int i) const { return i < size() ? parts[i] : 0; }  // 0-based, 0 beyond
  long long weight() const { return std::accumulate(parts.begin(), parts.end(), 0ll); }
  bool empty() const { return parts.empty(); }
  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& o) const { return parts < o.parts; }

  bool fits_in(const BoxParams& box) const {
    return size() <= box.d && (parts.empty() || parts[0] <= box.cols());
  }

  bool contains(const Partition& mu) const {
    if (mu.size() > size()) return false;
    for (int i = 0; i < mu.size(); ++i)
      if (mu.parts[i] > parts[i]) return false;
    return true;
  }

  Partition conjugate() const {
    std::vector<int> t;
    if (parts.empty()) return Partition{};
    t.assign(parts[0], 0);
    for (int p : parts)
      for (int j = 0; j < p; ++j) t[j]++;
    return Partition{std::move(t)};
  }

  // complement in the box: rotate the skew of the box by 180 degrees
  Partition complement(const BoxParams& box) const {
    if (!fits_in(box)) throw std::invalid_argument("complement: partition outside box");
    std::vector<int> c(box.d);
    for (int k = 0; k < box.d; ++k) c[k] = box.cols() - part(box.d - 1 - k);
    return Partition{std::move(c)};
  }

  std::string to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts[i]);
    }
    return s + ")";
  }
};

using BoundaryString = std::string;  // characters '0'/'1', length n, d ones

inline bool string_in_box(const BoundaryString& s, const BoxParams& box) {
  if ((int)s.size() != box.n) return false;
  int ones = 0;
  for (char ch : s) {
    if (ch != '0' && ch != '1') return false;
    ones += ch == '1';
  }
  return ones == box.d;
}

inline BoundaryString string_of_partition(const Partition& lam, const BoxParams& box) {
  if (!box.valid()) throw std::invalid_argument("bad box");
  if (!lam.fits_in(box)) throw std::invalid_argument("partition outside box");
  BoundaryString s(box.n, '0');
  for (int k = 1; k <= box.d; ++k) {
    int pos = box.cols() - lam.part(k - 1) + k;  // 1-based position of the k-th one
    s[pos - 1] = '1';
  }
  return s;
}

inline Partition partition_of_string(const BoundaryString& s, const BoxParams& box) {
  if (!string_in_box(s, box)) throw std::invalid_argument("bad boundary string for box");
  std::vector<int> parts(box.d);
  int k = 0;
  for (int i = 0; i < box.n; ++i) {
    if (s[i] == '1') {
      ++k;
      // zeros before the k-th one equals cols - lambda_k
      parts[k - 1] = box.cols() - ((i + 1) - k);
    }
  }
  return Partition{std::move(parts)};
}

inline BoundaryString reverse_string(BoundaryString s) {
  std::reverse(s.begin(), s.end());
  return s;
}

inline std::vector<Partition> partitions_in_box(const BoxParams& box) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int row, int maxpart) {
    out.push_back(Partition{std::vector<int>(cur.begin(), cur.end())});
    if (row == box.d) return;
    for (int p = maxpart; p >= 1; --p) {
      cur.push_back(p);
      rec(row + 1, p);
      cur.pop_back();
    }
  };
  rec(0, box.cols());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lrm
