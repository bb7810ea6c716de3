#pragma once

#include <string>
#include <vector>

#include "tableau.hpp"

namespace lrcomm {

enum class DeletionType { i = 1, ii = 2, iii = 3 };

struct DeletionResult {
  SkewTableau tableau;
  int terminating_row = 0;  // 0 for type (i)
  DeletionType type = DeletionType::i;
  std::vector<Cell> path;   // start cell first, then one cell per row upwards
};

namespace detail {

// In-place corner deletion on ragged rows; r is 1-based.
inline int delete_corner_rows(std::vector<Seq>& rows, int r, DeletionType* type,
                              std::vector<Cell>* path) {
  int nr = static_cast<int>(rows.size());
  if (r < 1 || r > nr || rows[r - 1].empty() ||
      (r < nr && rows[r].size() >= rows[r - 1].size()))
    throw PreconditionError("(" + std::to_string(r) + ", lambda_r) is not a corner");
  Seq& row = rows[r - 1];
  int c = static_cast<int>(row.size());
  int x = row.back();
  if (path) path->push_back({r, c});
  row.pop_back();
  int result;
  if (x == 0) {
    if (type) *type = DeletionType::iii;
    result = r;
  } else if (x == r) {
    if (type) *type = DeletionType::i;
    result = 0;
  } else if (x > r) {
    throw InvalidInput("entry " + std::to_string(x) + " in row " + std::to_string(r) +
                       " exceeds its row index");
  } else {
    if (type) *type = DeletionType::ii;
    result = -1;
    for (int s = r - 1; s >= 1 && result < 0; --s) {
      Seq& up = rows[s - 1];
      int p = static_cast<int>(up.size()) - 1;
      while (p >= 0 && up[p] >= x) --p;
      if (p < 0) throw InvalidInput("no entry below " + std::to_string(x) + " in row " + std::to_string(s));
      int y = up[p];
      up[p] = x;
      if (path) path->push_back({s, p + 1});
      if (y == 0)
        result = s;
      else
        x = y;
    }
    if (result < 0) throw InvalidInput("deletion path left the tableau");
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return result;
}

}  // namespace detail

// delta_{r, lambda_r}
inline DeletionResult delete_corner(const SkewTableau& t, int r) {
  DeletionResult res;
  res.tableau = t;
  res.terminating_row = detail::delete_corner_rows(detail::rows_of(res.tableau), r, &res.type, &res.path);
  if (res.type == DeletionType::i) res.path.clear();
  // the inner shape must still be a partition
  res.tableau.inner();
  return res;
}

struct RowDeletion {
  SkewTableau tableau;
  Seq terminating_rows;
  std::vector<DeletionResult> steps;  // filled only when traced
};

// delta_r = delta_{r,1} ... delta_{r,lambda_r}; identity when row r is absent.
inline RowDeletion full_row_deletion(const SkewTableau& t, int r, bool trace = false) {
  if (t.num_rows() > r)
    throw PreconditionError("full deletion of row " + std::to_string(r) + " needs at most " +
                            std::to_string(r) + " rows");
  RowDeletion out;
  out.tableau = t;
  auto& rows = detail::rows_of(out.tableau);
  while (static_cast<int>(rows.size()) == r && !rows[r - 1].empty()) {
    if (trace) {
      DeletionResult d = delete_corner(out.tableau, r);
      out.terminating_rows.push_back(d.terminating_row);
      out.tableau = d.tableau;
      out.steps.push_back(std::move(d));
    } else {
      out.terminating_rows.push_back(detail::delete_corner_rows(rows, r, nullptr, nullptr));
    }
  }
  return out;
}

struct CommuterStep {
  int r = 0;
  Partition inner_after;  // inner shape of T^(r-1)
  Seq new_row;            // terminating numbers, row r of S
  std::vector<DeletionResult> deletions;
};

struct CommuterTrace {
  std::vector<CommuterStep> steps;  // r = n, n-1, ..., 1
};

// rho^(n): LR(lambda/mu, nu) -> LR(lambda/nu, mu)
inline SkewTableau rho(const SkewTableau& t, int n, CommuterTrace* trace = nullptr) {
  require_lr(t);
  if (t.num_rows() > n) throw InvalidInput("tableau has more than n=" + std::to_string(n) + " rows");
  Seq nu = padded(t.weight(), std::max<int>(n, static_cast<int>(t.weight().size())));
  std::vector<Seq> s(t.num_rows());
  SkewTableau cur = t;
  for (int r = n; r >= 1; --r) {
    RowDeletion d = full_row_deletion(cur, r, trace != nullptr);
    if (r <= t.num_rows()) {
      int zeros = 0;
      for (int x : d.terminating_rows) zeros += x == 0;
      if (zeros != nu[r - 1])
        throw Error("row " + std::to_string(r) + " produced " + std::to_string(zeros) +
                    " type (i) deletions, expected nu_r=" + std::to_string(nu[r - 1]));
      s[r - 1] = d.terminating_rows;
    }
    if (trace) trace->steps.push_back({r, d.tableau.inner(), d.terminating_rows, std::move(d.steps)});
    cur = std::move(d.tableau);
  }
  if (cur.num_rows() != 0) throw Error("rho left cells behind");
  return SkewTableau(s);
}

namespace detail {

// Bump x downward from row `row` (1-based, the row below the vacated cell).
// Returns the row in which x came to rest at the end of the row.
inline int bump_down(std::vector<Seq>& rows, int row, int x) {
  for (int s = row;; ++s) {
    if (s > static_cast<int>(rows.size())) rows.emplace_back();
    Seq& cur = rows[s - 1];
    auto it = std::upper_bound(cur.begin(), cur.end(), x);
    // zeros sit at the front and never exceed x, so upper_bound is the
    // leftmost entry strictly greater than x
    if (it == cur.end()) {
      if (s > 1 && rows[s - 2].size() < cur.size() + 1) throw InvalidInput("insertion broke the shape");
      cur.push_back(x);
      return s;
    }
    std::swap(*it, x);
  }
}

}  // namespace detail

// Internal insertion from the inner corner in from_row. The leftmost filled
// cell of from_row becomes inner; its entry is bumped downwards until it is
// appended in to_row. from_row == to_row appends an inner cell to that row.
inline SkewTableau internal_insert(const SkewTableau& t, int from_row, int to_row) {
  SkewTableau out = t;
  auto& rows = detail::rows_of(out);
  if (from_row == to_row) {
    int r = from_row;
    if (r < 1 || r > t.num_rows() + 1 || t.inner_length(r) != t.row_length(r) ||
        (r > 1 && t.inner_length(r - 1) <= t.inner_length(r)))
      throw PreconditionError("cannot add an inner cell to row " + std::to_string(r));
    if (r > out.num_rows()) rows.emplace_back();
    rows[r - 1].push_back(0);
    return out;
  }
  int k = from_row;
  if (k < 1 || k > t.num_rows() || t.inner_length(k) >= t.row_length(k) ||
      (k > 1 && t.inner_length(k - 1) <= t.inner_length(k)))
    throw PreconditionError("no inner corner in row " + std::to_string(k));
  if (to_row < k) throw PreconditionError("insertion moves downwards");
  Seq& r = rows[k - 1];
  int c = t.inner_length(k);
  int x = r[c];
  r[c] = 0;
  int landed = detail::bump_down(rows, k + 1, x);
  if (landed != to_row)
    throw PreconditionError("insertion from row " + std::to_string(k) + " ended in row " +
                            std::to_string(landed) + ", not " + std::to_string(to_row));
  return out;
}

// Inverse of rho^(n): rebuild T row by row from S in LR(lambda/nu, mu).
inline SkewTableau rho_inverse(const SkewTableau& s, int n) {
  require_lr(s);
  if (s.num_rows() > n) throw InvalidInput("tableau has more than n=" + std::to_string(n) + " rows");
  SkewTableau t;
  for (int r = 1; r <= s.num_rows(); ++r) {
    Seq v(r + 1, 0);  // v[k] = V_{kr}, v[0] = number of inner cells
    for (int x : s.rows()[r - 1]) {
      if (x > r) throw InvalidInput("entry exceeds its row in rho_inverse input");
      ++v[x];
    }
    for (int k = r; k >= 1; --k)
      for (int c = 0; c < v[k]; ++c) t = internal_insert(t, k, r);
    auto& rows = detail::rows_of(t);
    if (v[0] > 0) {
      if (static_cast<int>(rows.size()) < r) rows.resize(r);
      rows[r - 1].insert(rows[r - 1].end(), v[0], r);
    }
    if (v[0] != s.inner_length(r)) throw Error("V_0r differs from nu_r");
  }
  t = SkewTableau(detail::rows_of(t));
  return t;
}

}  // namespace lrcomm
