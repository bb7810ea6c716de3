#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace lrcomm {

using Seq = std::vector<int>;

inline std::string seq_str(const Seq& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + ")";
}

inline Seq padded(const Seq& s, int n) {
  Seq out(s.begin(), s.begin() + std::min<std::size_t>(s.size(), n));
  out.resize(n, 0);
  return out;
}

inline Seq reversed(Seq s) {
  std::reverse(s.begin(), s.end());
  return s;
}

inline bool weakly_decreasing(const Seq& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] < s[i]) return false;
  return true;
}

// Weakly decreasing sequence of nonnegative integers, stored without
// trailing zeros.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(Seq(parts)) {}
  explicit Partition(Seq parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0)
        throw InvalidInput("negative part in " + seq_str(parts_));
      if (i && parts_[i - 1] < parts_[i])
        throw InvalidInput("parts not weakly decreasing in " + seq_str(parts_));
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  const Seq& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }

  // 1-based; zero past the end.
  int operator()(int i) const {
    return i >= 1 && i <= length() ? parts_[i - 1] : 0;
  }
  Seq padded(int n) const { return lrcomm::padded(parts_, n); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  Seq parts_;
};

inline std::string to_string(const Partition& p) { return seq_str(p.parts()); }

inline bool contains(const Partition& inner, const Partition& outer) {
  int n = std::max(inner.length(), outer.length());
  for (int i = 1; i <= n; ++i)
    if (inner(i) > outer(i)) return false;
  return true;
}

struct Cell {
  int row;
  int col;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape() = default;
  SkewShape(Partition o, Partition i) : outer(std::move(o)), inner(std::move(i)) {
    if (!contains(inner, outer))
      throw InvalidInput("inner shape " + to_string(inner) + " not inside " + to_string(outer));
  }
  int size() const { return outer.size() - inner.size(); }
  friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

// Row-major list of the cells of outer/inner, 1-based.
inline std::vector<Cell> skew_cells(const SkewShape& s) {
  std::vector<Cell> cells;
  for (int i = 1; i <= s.outer.length(); ++i)
    for (int j = s.inner(i) + 1; j <= s.outer(i); ++j) cells.push_back({i, j});
  return cells;
}

// All partitions of k with at most max_len parts, each part at most max_part,
// in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int k, int max_len, int max_part = 1 << 30) {
  std::vector<Partition> out;
  Seq cur;
  auto rec = [&](auto& self, int left, int cap) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  if (k >= 0) rec(rec, k, max_part);
  return out;
}

// All partitions contained in outer, any size.
inline std::vector<Partition> subpartitions(const Partition& outer) {
  std::vector<Partition> out;
  Seq cur;
  auto rec = [&](auto& self, int i, int cap) -> void {
    if (i > outer.length()) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(cap, outer(i)); p >= 0; --p) {
      cur.push_back(p);
      self(self, i + 1, p);
      cur.pop_back();
    }
  };
  rec(rec, 1, 1 << 30);
  return out;
}

enum class Orientation { plain, alpha, beta, gamma };

// Gelfand-Tsetlin pattern. rows[0] is the top row of length n, rows[n-1]
// has length 1, so the row of length k is rows[n-k].
struct GTPattern {
  std::vector<Seq> rows;
  Orientation orientation = Orientation::plain;

  int n() const { return static_cast<int>(rows.size()); }
  const Seq& row_of_length(int k) const { return rows[n() - k]; }
  Seq type() const { return rows.empty() ? Seq{} : rows[0]; }

  friend bool operator==(const GTPattern& a, const GTPattern& b) { return a.rows == b.rows; }
};

// Empty string when fine, otherwise the first violated condition.
inline std::string gt_violation(const GTPattern& p) {
  int n = p.n();
  for (int k = 1; k <= n; ++k)
    if (static_cast<int>(p.row_of_length(k).size()) != k)
      return "row " + std::to_string(n - k + 1) + " has wrong length";
  for (int k = 1; k < n; ++k) {
    const Seq& up = p.row_of_length(k + 1);
    const Seq& lo = p.row_of_length(k);
    for (int j = 0; j < k; ++j)
      if (!(up[j] >= lo[j] && lo[j] >= up[j + 1]))
        return "betweenness fails at row length " + std::to_string(k) + ", entry " +
               std::to_string(j + 1);
  }
  if (n && p.rows[0].back() < 0) return "negative entry";
  return {};
}

inline Seq gt_weight(const GTPattern& p) {
  Seq w;
  int prev = 0;
  for (int k = 1; k <= p.n(); ++k) {
    const Seq& r = p.row_of_length(k);
    int s = std::accumulate(r.begin(), r.end(), 0);
    w.push_back(s - prev);
    prev = s;
  }
  return w;
}

// Enumerate GT patterns with the given top row and weight; calls f(pattern).
template <class F>
void for_each_gt(const Seq& top, const Seq& weight, F&& f) {
  int n = static_cast<int>(top.size());
  if (static_cast<int>(weight.size()) != n) return;
  GTPattern p;
  p.rows.assign(n, Seq{});
  if (n == 0) {
    f(p);
    return;
  }
  p.rows[0] = top;
  int total = std::accumulate(top.begin(), top.end(), 0);
  if (total != std::accumulate(weight.begin(), weight.end(), 0)) return;
  // target sum of the row of length k is weight_1 + ... + weight_k
  Seq target(n + 1, 0);
  for (int k = 1; k <= n; ++k) target[k] = target[k - 1] + weight[k - 1];
  auto fill = [&](auto& self, int k, int j, int sum) -> void {
    // filling the row of length k (index n-k), entry j
    Seq& row = p.rows[n - k];
    const Seq& up = p.rows[n - k - 1];
    if (j == k) {
      if (sum != target[k]) return;
      if (k == 1) {
        f(p);
        return;
      }
      self(self, k - 1, 0, 0);
      return;
    }
    // bound remaining entries to prune quickly
    int lo = up[j + 1], hi = up[j];
    int rest_max = 0, rest_min = 0;
    for (int t = j + 1; t < k; ++t) {
      rest_max += up[t];
      rest_min += up[t + 1];
    }
    lo = std::max(lo, target[k] - sum - rest_max);
    hi = std::min(hi, target[k] - sum - rest_min);
    for (int v = lo; v <= hi; ++v) {
      row[j] = v;
      self(self, k, j + 1, sum + v);
    }
  };
  for (int k = 1; k < n; ++k) p.rows[n - k].assign(k, 0);
  if (n == 1) {
    if (top[0] == weight[0]) f(p);
    return;
  }
  fill(fill, n - 1, 0, 0);
}

}  // namespace lrcomm
