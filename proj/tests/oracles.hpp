#pragma once

// Brute-force reference implementations. Slow on purpose; none of them
// calls into the library's algorithms.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "lrcomm/lrcomm.hpp"

namespace oracle {

using lrcomm::Seq;
using Rows = std::vector<Seq>;

// Reverse reading word (right to left, top to bottom) is a lattice word.
inline bool lattice_word(const Rows& rows) {
  std::map<int, int> seen;
  for (const auto& r : rows)
    for (auto it = r.rbegin(); it != r.rend(); ++it) {
      int x = *it;
      if (x == 0) continue;
      ++seen[x];
      if (x > 1 && seen[x] > seen[x - 1]) return false;
    }
  return true;
}

inline bool semistandard(const Rows& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      int x = rows[i][j];
      if (x == 0) continue;
      if (j + 1 < rows[i].size() && rows[i][j + 1] < x) return false;
      if (i + 1 < rows.size() && j < rows[i + 1].size() && rows[i + 1][j] <= x) return false;
    }
  return true;
}

// Every filling of lambda/mu with content nu, kept when semistandard and lattice.
inline std::set<Rows> lr_tableaux(const Seq& lambda, const Seq& mu, const Seq& nu) {
  std::set<Rows> out;
  Seq letters;
  for (std::size_t s = 0; s < nu.size(); ++s) letters.insert(letters.end(), nu[s], static_cast<int>(s + 1));
  int cells = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) cells += lambda[i] - (i < mu.size() ? mu[i] : 0);
  if (cells != static_cast<int>(letters.size())) return out;
  std::sort(letters.begin(), letters.end());
  do {
    Rows rows;
    std::size_t k = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      int m = i < mu.size() ? mu[i] : 0;
      Seq r(m, 0);
      for (int c = m; c < lambda[i]; ++c) r.push_back(letters[k++]);
      rows.push_back(r);
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    if (semistandard(rows) && lattice_word(rows)) out.insert(rows);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

// All semistandard fillings of a straight shape with letters 1..n.
inline std::vector<Rows> ssyt(const Seq& shape, int n) {
  std::vector<Rows> out;
  Rows rows;
  for (int len : shape) rows.push_back(Seq(len, 0));
  std::vector<std::pair<int, int>> cells;
  for (std::size_t i = 0; i < shape.size(); ++i)
    for (int j = 0; j < shape[i]; ++j) cells.emplace_back(static_cast<int>(i), j);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      out.push_back(rows);
      return;
    }
    auto [i, j] = cells[k];
    int lo = 1;
    if (j > 0) lo = std::max(lo, rows[i][j - 1]);
    if (i > 0) lo = std::max(lo, rows[i - 1][j] + 1);
    for (int x = lo; x <= n; ++x) {
      rows[i][j] = x;
      rec(k + 1);
    }
    rows[i][j] = 0;
  };
  rec(0);
  return out;
}

// Schutzenberger evacuation by jeu de taquin on the standardization,
// then destandardized with the reversed content.
inline Rows evacuation(const Rows& t, int n) {
  Seq content(n, 0);
  for (const auto& r : t)
    for (int x : r) ++content[x - 1];
  // standardize: equal letters numbered left to right
  Rows st = t;
  int label = 0;
  for (int x = 1; x <= n; ++x)
    for (std::size_t j = 0;; ++j) {
      bool any = false;
      for (std::size_t i = 0; i < t.size(); ++i)
        if (j < t[i].size()) {
          any = true;
          if (t[i][j] == x) st[i][j] = ++label;
        }
      if (!any) break;
    }
  int N = label;
  Rows p = st, ev = st;
  for (int k = 1; k <= N; ++k) {
    std::size_t i = 0, j = 0;
    p[0][0] = 1 << 30;  // hole
    for (;;) {
      bool right = j + 1 < p[i].size();
      bool down = i + 1 < p.size() && j < p[i + 1].size();
      if (!right && !down) break;
      bool go_down = down && (!right || p[i + 1][j] < p[i][j + 1]);
      if (go_down) {
        std::swap(p[i][j], p[i + 1][j]);
        ++i;
      } else {
        std::swap(p[i][j], p[i][j + 1]);
        ++j;
      }
    }
    p[i].pop_back();
    ev[i][j] = N + 1 - k;
    while (!p.empty() && p.back().empty()) p.pop_back();
  }
  Seq rc(content.rbegin(), content.rend());
  Seq bound;  // standard label -> letter
  for (int s = 0; s < n; ++s) bound.insert(bound.end(), rc[s], s + 1);
  for (auto& r : ev)
    for (int& x : r) x = bound[x - 1];
  return ev;
}

// Vertex-form hive test: every elementary rhombus satisfies
// (ends of the shared edge) >= (other two vertices).
inline bool rhombus_inequalities(const std::vector<std::vector<int>>& a, int n) {
  using V = std::pair<int, int>;
  std::vector<std::array<V, 3>> tri;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      tri.push_back({V{i - 1, j - 1}, V{i - 1, j}, V{i, j}});
      if (i < j) tri.push_back({V{i - 1, j - 1}, V{i, j - 1}, V{i, j}});
    }
  auto val = [&](V v) { return a[v.first][v.second]; };
  for (std::size_t x = 0; x < tri.size(); ++x)
    for (std::size_t y = x + 1; y < tri.size(); ++y) {
      std::vector<V> shared, other;
      for (auto v : tri[x]) (std::count(tri[y].begin(), tri[y].end(), v) ? shared : other).push_back(v);
      if (shared.size() != 2) continue;
      for (auto v : tri[y])
        if (!std::count(tri[x].begin(), tri[x].end(), v)) other.push_back(v);
      if (val(shared[0]) + val(shared[1]) < val(other[0]) + val(other[1])) return false;
    }
  return true;
}

}  // namespace oracle
