#pragma once

#include <vector>

#include "hive.hpp"

namespace lrcomm {

// tau(T): the beta pattern of f(T) as a tableau, type nu, weight lambda-mu.
inline SkewTableau tau(const SkewTableau& t, int n) {
  return gt_to_ssyt(extract_gt(hive_from_tableau(t, n), Orientation::beta));
}

// gamma(T): the alpha pattern of f(T), type mu, weight rev(lambda-nu).
inline SkewTableau gamma(const SkewTableau& t, int n) {
  return gt_to_ssyt(extract_gt(hive_from_tableau(t, n), Orientation::alpha));
}

// Attach mu as the left edge of the beta pattern of s and complete the hive.
inline SkewTableau tau_inv(const SkewTableau& s, const Partition& mu, int n) {
  GTPattern p = ssyt_to_gt(s, n);
  auto beta = [&](int i, int j) { return p.row_of_length(j)[i - 1]; };
  Seq m = mu.padded(n), w = gt_weight(p), lam(n);
  if (mu.length() > n) throw InvalidInput("mu longer than n");
  for (int i = 0; i < n; ++i) lam[i] = m[i] + w[i];
  UArray u(n);
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) u(i, j) = beta(i, j) - beta(i, j - 1);
  Hive h(lam, m, p.type(), u);
  if (auto v = lr_hive_violation(h)) throw InvalidInput("tableau not in the image of tau: " + *v);
  return tableau_from_hive(h);
}

// Attach nu as the right edge of the alpha pattern of s.
inline SkewTableau gamma_inv(const SkewTableau& s, const Partition& nu, int n) {
  GTPattern p = ssyt_to_gt(s, n);
  auto alpha = [&](int i, int j) { return p.row_of_length(n - i)[j - i - 1]; };
  Seq v = nu.padded(n), w = reversed(gt_weight(p)), lam(n);
  if (nu.length() > n) throw InvalidInput("nu longer than n");
  for (int i = 0; i < n; ++i) lam[i] = v[i] + w[i];
  UArray u(n);
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) u(i, j) = alpha(i, j) - alpha(i - 1, j);
  Hive h(lam, p.type(), v, u);
  if (auto e = lr_hive_violation(h)) throw InvalidInput("tableau not in the image of gamma: " + *e);
  return tableau_from_hive(h);
}

// b_i: in each row, the letters i and i+1 not stacked over one another are
// a block i^a (i+1)^b; it becomes i^b (i+1)^a.
inline SkewTableau bender_knuth(const SkewTableau& t, int i) {
  if (i < 1) throw InvalidInput("bender_knuth needs i >= 1");
  std::vector<Seq> rows = t.rows();
  for (int r = 1; r <= t.num_rows(); ++r) {
    int a = 0, b = 0, start = -1;
    const Seq& row = t.rows()[r - 1];
    for (int c = 1; c <= static_cast<int>(row.size()); ++c) {
      int x = row[c - 1];
      bool free_i = x == i && t(r + 1, c) != i + 1;
      bool free_j = x == i + 1 && !(r > 1 && c > t.inner_length(r - 1) && t(r - 1, c) == i);
      if (free_i || free_j) {
        if (start < 0) start = c - 1;
        (free_i ? a : b) += 1;
      }
    }
    if (start < 0) continue;
    Seq& out = rows[r - 1];
    for (int k = 0; k < a + b; ++k) out[start + k] = k < b ? i : i + 1;
  }
  return SkewTableau(rows);
}

// Schutzenberger involution as (b1)(b2 b1)...(b_{n-1}...b1).
inline SkewTableau schutzenberger(const SkewTableau& t, int n) {
  if (!t.inner().empty() || !is_semistandard(t)) throw InvalidInput("xi needs a straight semistandard tableau");
  if (t.max_letter() > n) throw InvalidInput("letters exceed n");
  SkewTableau cur = t;
  for (int k = n - 1; k >= 1; --k)
    for (int i = 1; i <= k; ++i) cur = bender_knuth(cur, i);
  return cur;
}

// tau^{-1} xi gamma
inline SkewTableau commutor_hk(const SkewTableau& t, int n) {
  require_lr(t);
  return tau_inv(schutzenberger(gamma(t, n), n), Partition(t.weight()), n);
}

}  // namespace lrcomm
