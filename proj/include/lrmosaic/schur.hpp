#pragma once
// Independent algebraic oracle for Littlewood-Richardson numbers on a
// Grassmannian: Schur calculus in the quotient ring where classes leaving
// the d x (n-d) box vanish.  Products are computed with the Pieri rule only;
// general Schur multiplication goes through the Jacobi-Trudi determinant
// expanded as a signed sum of complete homogeneous products.  This keeps the
// oracle disjoint from the tableau and puzzle code paths it is used to check.

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "partition.hpp"

namespace lrm {

using SchurExpansion = std::map<Partition, long long>;

inline void add_term(SchurExpansion& x, const Partition& p, long long c) {
  if (c == 0) return;
  auto it = x.find(p);
  if (it == x.end())
    x.emplace(p, c);
  else if ((it->second += c) == 0)
    x.erase(it);
}

// multiply by h_k: add horizontal k-strips, truncating outside the box
inline SchurExpansion pieri_multiply(const SchurExpansion& x, int k, const BoxParams& box) {
  if (k == 0) return x;
  SchurExpansion out;
  for (const auto& [lam, coef] : x) {
    // enumerate mu >= lam with mu/lam a horizontal strip of size k
    std::vector<int> mu(box.d);
    std::function<void(int, int)> rec = [&](int row, int remaining) {
      if (row == box.d) {
        if (remaining == 0) add_term(out, Partition{std::vector<int>(mu.begin(), mu.end())}, coef);
        return;
      }
      int lo = lam.part(row);
      int hi = std::min(box.cols(), row == 0 ? box.cols() : mu[row - 1]);
      // horizontal strip: mu_row <= lam_{row-1}
      if (row > 0) hi = std::min(hi, lam.part(row - 1));
      for (int v = lo; v <= hi && v - lo <= remaining; ++v) {
        mu[row] = v;
        rec(row + 1, remaining - (v - lo));
      }
      mu[row] = 0;
    };
    rec(0, k);
  }
  return out;
}

// s_nu expressed through the Jacobi-Trudi determinant det(h_{nu_i - i + j}),
// applied multiplicatively to an existing expansion.
inline SchurExpansion jacobi_trudi_multiply(const SchurExpansion& x, const Partition& nu,
                                            const BoxParams& box) {
  int r = nu.size();
  if (r == 0) return x;
  SchurExpansion acc;
  std::vector<int> perm(r);
  for (int i = 0; i < r; ++i) perm[i] = i;
  do {
    // sign and the multiset of h-indices for this permutation
    int inv = 0;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) inv += perm[i] > perm[j];
    bool ok = true;
    std::vector<int> ks;
    for (int i = 0; i < r; ++i) {
      int k = nu.part(i) - i + perm[i];
      if (k < 0) { ok = false; break; }
      if (k > 0) ks.push_back(k);
    }
    if (!ok) continue;
    SchurExpansion term = x;
    for (int k : ks) term = pieri_multiply(term, k, box);
    for (const auto& [p, c] : term) add_term(acc, p, (inv % 2 == 0) ? c : -c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

inline SchurExpansion schur_times_schur(const Partition& nu, const Partition& mu,
                                        const BoxParams& box) {
  SchurExpansion x;
  add_term(x, mu, 1);
  return jacobi_trudi_multiply(x, nu, box);
}

// a_{nu,mu}^{lambda} with boundary data written as (nu, mu, lambda^c)
inline long long lr_coefficient_algebra(const Partition& nu, const Partition& mu,
                                        const Partition& lambda_complement, const BoxParams& box) {
  Partition lambda = lambda_complement.complement(box);
  SchurExpansion prod = schur_times_schur(nu, mu, box);
  auto it = prod.find(lambda);
  return it == prod.end() ? 0 : it->second;
}

}  // namespace lrm
