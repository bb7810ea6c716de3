#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shapes.hpp"

namespace lrcomm {

class SkewTableau;
namespace detail {
std::vector<Seq>& rows_of(SkewTableau& t);
}

// Skew tableau stored as ragged rows: row i holds outer_i slots, the first
// inner_i of which are 0 (cells of the inner shape).
class SkewTableau {
 public:
  SkewTableau() = default;

  // Shape is read off the rows: outer from lengths, inner from leading zeros.
  explicit SkewTableau(std::vector<Seq> rows) : rows_(std::move(rows)) {
    trim();
    validate_shape();
  }
  SkewTableau(std::initializer_list<Seq> rows) : SkewTableau(std::vector<Seq>(rows)) {}

  SkewTableau(const Partition& outer, const Partition& inner, std::vector<Seq> rows)
      : SkewTableau(std::move(rows)) {
    if (this->outer() != outer || this->inner() != inner)
      throw InvalidInput("rows do not match outer " + to_string(outer) + " / inner " +
                         to_string(inner));
  }

  const std::vector<Seq>& rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }

  Partition outer() const {
    Seq p;
    for (const auto& r : rows_) p.push_back(static_cast<int>(r.size()));
    return Partition(p);
  }
  Partition inner() const {
    Seq p;
    for (const auto& r : rows_) p.push_back(inner_len(r));
    return Partition(p);
  }
  SkewShape shape() const { return {outer(), inner()}; }

  int row_length(int r) const { return r >= 1 && r <= num_rows() ? static_cast<int>(rows_[r - 1].size()) : 0; }
  int inner_length(int r) const { return r >= 1 && r <= num_rows() ? inner_len(rows_[r - 1]) : 0; }

  // 1-based; 0 for inner cells and for cells outside the shape.
  int operator()(int r, int c) const {
    if (r < 1 || r > num_rows() || c < 1 || c > row_length(r)) return 0;
    return rows_[r - 1][c - 1];
  }

  int num_cells() const {
    int k = 0;
    for (const auto& r : rows_)
      for (int x : r) k += x > 0;
    return k;
  }

  Seq weight() const {
    Seq w;
    for (const auto& r : rows_)
      for (int x : r)
        if (x > 0) {
          if (static_cast<int>(w.size()) < x) w.resize(x, 0);
          ++w[x - 1];
        }
    return w;
  }
  int max_letter() const {
    int m = 0;
    for (const auto& r : rows_)
      for (int x : r) m = std::max(m, x);
    return m;
  }

  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;
  friend auto operator<=>(const SkewTableau&, const SkewTableau&) = default;

 private:
  friend std::vector<Seq>& detail::rows_of(SkewTableau&);

  static int inner_len(const Seq& r) {
    int k = 0;
    while (k < static_cast<int>(r.size()) && r[k] == 0) ++k;
    return k;
  }
  void trim() {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  }
  void validate_shape() const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Seq& r = rows_[i];
      int k = inner_len(r);
      for (std::size_t j = k; j < r.size(); ++j)
        if (r[j] < 1)
          throw InvalidInput("row " + std::to_string(i + 1) + " has a non-positive entry after its inner cells");
    }
    outer();  // both throw unless partitions
    inner();
  }

  std::vector<Seq> rows_;
};

namespace detail {
inline std::vector<Seq>& rows_of(SkewTableau& t) { return t.rows_; }
}  // namespace detail

inline std::string to_string(const SkewTableau& t) {
  std::string s = "[";
  for (int i = 0; i < t.num_rows(); ++i) {
    if (i) s += ",";
    s += "[";
    const Seq& r = t.rows()[i];
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) s += ",";
      s += std::to_string(r[j]);
    }
    s += "]";
  }
  return s + "]";
}

struct Witness {
  bool ok = true;
  std::optional<Cell> cell;  // semistandard failures
  int row = 0, letter = 0;   // lattice failures
  explicit operator bool() const { return ok; }
};

struct LRValidity {
  bool semistandard = true;
  bool lattice = true;
  std::string first_violation;
  bool ok() const { return semistandard && lattice; }
};

inline Witness semistandard_check(const SkewTableau& t) {
  for (int r = 1; r <= t.num_rows(); ++r) {
    int in = t.inner_length(r), len = t.row_length(r);
    for (int c = in + 1; c <= len; ++c) {
      if (c > in + 1 && t(r, c - 1) > t(r, c)) return {false, Cell{r, c}};
      if (r > 1 && c > t.inner_length(r - 1) && t(r - 1, c) >= t(r, c)) return {false, Cell{r, c}};
    }
  }
  return {};
}

// #s in rows 1..r must not exceed #(s-1) in rows 1..r-1.
inline Witness lattice_check(const SkewTableau& t) {
  int m = t.max_letter();
  Seq prev(m + 2, 0), cur(m + 2, 0);
  for (int r = 1; r <= t.num_rows(); ++r) {
    for (int x : t.rows()[r - 1])
      if (x > 0) ++cur[x];
    for (int s = 2; s <= m; ++s)
      if (cur[s] > prev[s - 1]) {
        Witness w{false, std::nullopt};
        w.row = r;
        w.letter = s;
        return w;
      }
    prev = cur;
  }
  return {};
}

inline bool is_semistandard(const SkewTableau& t) { return semistandard_check(t).ok; }
inline bool is_lattice(const SkewTableau& t) { return lattice_check(t).ok; }
inline bool is_lr(const SkewTableau& t) { return is_semistandard(t) && is_lattice(t); }

inline LRValidity lr_validity(const SkewTableau& t) {
  LRValidity v;
  auto s = semistandard_check(t);
  auto l = lattice_check(t);
  v.semistandard = s.ok;
  v.lattice = l.ok;
  if (!s.ok)
    v.first_violation = "cell (" + std::to_string(s.cell->row) + "," + std::to_string(s.cell->col) +
                        ") breaks semistandardness";
  else if (!l.ok)
    v.first_violation = "letter " + std::to_string(l.letter) + " too frequent in rows 1.." +
                        std::to_string(l.row);
  return v;
}

inline void require_lr(const SkewTableau& t) {
  auto v = lr_validity(t);
  if (!v.ok()) throw InvalidInput("not an LR tableau: " + v.first_violation);
}

inline GTPattern ssyt_to_gt(const SkewTableau& t, int n) {
  if (!t.inner().empty()) throw InvalidInput("ssyt_to_gt needs a straight shape");
  if (!is_semistandard(t)) throw InvalidInput("ssyt_to_gt needs a semistandard tableau");
  if (t.num_rows() > n || t.max_letter() > n)
    throw InvalidInput("tableau does not fit a GT pattern with n=" + std::to_string(n));
  GTPattern p;
  p.rows.assign(n, Seq{});
  for (int k = 1; k <= n; ++k) {
    Seq row(k, 0);
    for (int m = 1; m <= std::min(k, t.num_rows()); ++m)
      for (int x : t.rows()[m - 1]) row[m - 1] += x <= k;
    p.rows[n - k] = row;
  }
  return p;
}

inline GTPattern ssyt_to_gt(const SkewTableau& t) {
  return ssyt_to_gt(t, std::max(t.num_rows(), t.max_letter()));
}

inline SkewTableau gt_to_ssyt(const GTPattern& p) {
  if (auto v = gt_violation(p); !v.empty()) throw InvalidInput("invalid GT pattern: " + v);
  int n = p.n();
  std::vector<Seq> rows(n);
  for (int m = 1; m <= n; ++m)
    for (int k = m; k <= n; ++k) {
      int prev = k - 1 >= m ? p.row_of_length(k - 1)[m - 1] : 0;
      rows[m - 1].insert(rows[m - 1].end(), p.row_of_length(k)[m - 1] - prev, k);
    }
  return SkewTableau(rows);
}

// Adds a filled cell at the end of a row; the result must still be a skew
// Young diagram. Semistandardness is left to the caller.
inline SkewTableau adjoin_cell(const SkewTableau& t, Cell cell, int letter) {
  if (letter < 1) throw InvalidInput("letters are positive");
  int r = cell.row;
  if (r < 1 || r > t.num_rows() + 1 || cell.col != t.row_length(r) + 1 ||
      (r > 1 && t.row_length(r - 1) < cell.col))
    throw InvalidInput("cell (" + std::to_string(cell.row) + "," + std::to_string(cell.col) +
                       ") cannot be adjoined");
  SkewTableau out = t;
  auto& rows = detail::rows_of(out);
  if (r > out.num_rows()) rows.emplace_back();
  rows[r - 1].push_back(letter);
  return out;
}

inline SkewTableau yamanouchi(const Partition& lambda) {
  std::vector<Seq> rows;
  for (int i = 1; i <= lambda.length(); ++i) rows.emplace_back(lambda(i), i);
  return SkewTableau(rows);
}

}  // namespace lrcomm
