#pragma once

// Structural properties of the deletion and path-removal procedures, checked
// on individual inputs. Each returns an empty string when the property holds.

#include <functional>
#include <string>

#include "lrcomm/lrcomm.hpp"

namespace props {

using namespace lrcomm;

template <class F>
void for_each_triple(int max_weight, int max_len, F&& f) {
  for (int k = 0; k <= max_weight; ++k)
    for (const auto& lam : partitions_of(k, max_len))
      for (const auto& mu : subpartitions(lam))
        for (const auto& nu : partitions_of(k - mu.size(), max_len))
          if (contains(nu, lam)) f(lam, mu, nu);
}

inline std::string where(const SkewTableau& t) { return " on " + to_string(t); }

inline int column_in_row(const std::vector<Cell>& path, int row) {
  for (const auto& c : path)
    if (c.row == row) return c.col;
  return 0;
}

// Each deletion of delta_r keeps the tableau LR; consecutive type (ii) paths
// run strictly left of the previous one and terminate weakly lower.
inline std::string horizontal_paths(const SkewTableau& t, int r) {
  auto d = full_row_deletion(t, r, true);
  const DeletionResult* prev = nullptr;
  for (const auto& s : d.steps) {
    if (s.type != DeletionType::i && !is_lr(s.tableau)) return "deletion broke LR" + where(t);
    if (s.type != DeletionType::ii) continue;
    if (prev) {
      if (s.terminating_row < prev->terminating_row) return "terminating rows decrease" + where(t);
      for (const auto& c : s.path) {
        int pc = column_in_row(prev->path, c.row);
        if (pc && c.col >= pc) return "path not strictly left" + where(t);
      }
    }
    prev = &s;
  }
  return {};
}

// The j-th Phase 2B path of delta_r against the j-th type (ii) path of
// delta_{r-1} applied afterwards.
inline std::string vertical_paths(const SkewTableau& t) {
  int r = t.num_rows();
  if (r < 2) return {};
  const Seq& bottom = t.rows()[r - 1];
  auto d = full_row_deletion(t, r, true);
  std::vector<const DeletionResult*> p;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    int e = bottom[bottom.size() - 1 - i];
    if (d.steps[i].type == DeletionType::ii && e <= r - 2) p.push_back(&d.steps[i]);
  }
  auto d2 = full_row_deletion(d.tableau, r - 1, true);
  std::vector<const DeletionResult*> q;
  for (const auto& s : d2.steps)
    if (s.type == DeletionType::ii) q.push_back(&s);
  if (q.size() < p.size()) return "delta_{r-1} has too few type (ii) deletions" + where(t);
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (q[j]->terminating_row >= p[j]->terminating_row) return "t#_j >= t_j" + where(t);
    for (const auto& c : q[j]->path) {
      int pc = column_in_row(p[j]->path, c.row);
      if (pc && c.col < pc) return "P#_j not weakly right of P_j" + where(t);
    }
  }
  return {};
}

inline bool prop61_applies(const SkewTableau& s, int n) {
  return n >= 3 && s.num_rows() == n && s.row_length(n) == 1 && s(n, 1) >= 1 && s(n, 1) <= n - 2;
}

// Deleting the bottom cell before or after delta_{n-1}.
inline std::string prop61(const SkewTableau& s, int n) {
  int e = s(n, 1);
  std::vector<Seq> rows = s.rows();
  rows.pop_back();
  SkewTableau s_minus(rows);

  auto first = delete_corner(s, n);  // hat-delta_{n,1} applied to S-
  int l1 = first.terminating_row;
  auto route1 = full_row_deletion(first.tableau, n - 1);
  auto mid = full_row_deletion(s_minus, n - 1);
  auto route2 = delete_corner(adjoin_cell(mid.tableau, {n - 1, 1}, e), n - 1);
  if (route1.tableau != route2.tableau) return "part (1) fails" + where(s);

  const Seq& r1 = route1.terminating_rows;
  const Seq& r2 = mid.terminating_rows;
  int pos = -1;
  for (int i = static_cast<int>(r1.size()) - 1; i >= 0; --i)
    if (r1[i] < l1) {
      pos = i;
      break;
    }
  if (pos < 0) return "no entry of R' below l'" + where(s);
  int l2 = r1[pos];
  if (l2 <= 0) return "l'' is not positive" + where(s);
  Seq expect = r1;
  expect[pos] = l1;
  if (expect != r2) return "R'' is not R' with l'' raised to l'" + where(s);
  if (route2.terminating_row != l2) return "hat-delta_{n-1,1} does not terminate at l''" + where(s);
  return {};
}

inline std::string where(const Hive& h) {
  return " on lambda=" + seq_str(h.lambda) + " mu=" + seq_str(h.mu) + " nu=" + seq_str(h.nu) + " U=" +
         diagonals_str(h.u);
}

// Corollary 7.1 and Lemma 7.2 at every theta stage, Lemma 7.3 across
// consecutive stages.
inline std::string theta_observations(const Hive& h) {
  SigmaTrace tr;
  sigma(h, &tr);
  int n = h.n;
  for (std::size_t idx = 0; idx < tr.thetas.size(); ++idx) {
    int r = n - static_cast<int>(idx);
    const Hive& before = tr.pairs[idx].first;
    const ThetaResult& th = tr.thetas[idx];
    for (int k = 1; k < r; ++k) {
      int after = before.m(k) - th.v[k - 1];
      if (th.hive.m(k) != after) return "mu_k not reduced by V_kr" + where(h);
      if (after < before.m(k + 1)) return "mu_k - V_kr < mu_{k+1}" + where(h);
    }
    int last = 0;
    for (const auto& p : th.paths)
      if (p.kind == PathKind::ii) {
        if (p.terminating_level < last) return "terminating levels decrease" + where(h);
        last = p.terminating_level;
      }
    if (idx + 1 < tr.thetas.size() && r >= 3 && before.lam(r) > 0) {
      const ThetaResult& next = tr.thetas[idx + 1];
      // N_kr counts the type (ii) removals of theta_r ending at levels 1..k
      for (int k = 1; k < r; ++k) {
        int nk = 0, nk1 = 0;
        for (int j = 1; j <= k; ++j) nk += th.v[j - 1];
        for (int j = 1; j <= k - 1; ++j) nk1 += next.v[j - 1];
        if (nk1 < nk - before.U(r - 1, r)) return "N_{k-1,r-1} < N_kr - U_{r-1,r}" + where(h);
      }
    }
  }
  return {};
}

}  // namespace props
