#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tableau.hpp"

namespace lrcomm {

// Upper-triangular array of upright gradients U_{ij}, 1 <= i < j <= n.
class UArray {
 public:
  UArray() = default;
  explicit UArray(int n) : n_(n), a_((n + 1) * (n + 1), 0) {}

  // diagonals[d] = [U_{1,d+2}, ..., U_{d+1,d+2}]
  static UArray from_diagonals(int n, const std::vector<Seq>& diagonals) {
    if (static_cast<int>(diagonals.size()) != std::max(n - 1, 0))
      throw InvalidInput("expected " + std::to_string(std::max(n - 1, 0)) + " U diagonals");
    UArray u(n);
    for (int j = 2; j <= n; ++j) {
      const Seq& d = diagonals[j - 2];
      if (static_cast<int>(d.size()) != j - 1)
        throw InvalidInput("U diagonal " + std::to_string(j) + " needs " + std::to_string(j - 1) + " entries");
      for (int i = 1; i < j; ++i) u(i, j) = d[i - 1];
    }
    return u;
  }
  std::vector<Seq> diagonals() const {
    std::vector<Seq> out;
    for (int j = 2; j <= n_; ++j) {
      Seq d;
      for (int i = 1; i < j; ++i) d.push_back((*this)(i, j));
      out.push_back(d);
    }
    return out;
  }

  int n() const { return n_; }
  int operator()(int i, int j) const { return a_[i * (n_ + 1) + j]; }
  int& operator()(int i, int j) { return a_[i * (n_ + 1) + j]; }

  int column_sum(int j) const {  // sum over i<j of U_{ij}
    int s = 0;
    for (int i = 1; i < j; ++i) s += (*this)(i, j);
    return s;
  }
  int row_sum(int i) const {  // sum over j>i of U_{ij}
    int s = 0;
    for (int j = i + 1; j <= n_; ++j) s += (*this)(i, j);
    return s;
  }

  // n -> n+1 with a zero diagonal, or n -> n-1 dropping the last one.
  UArray resized(int m) const {
    UArray u(m);
    for (int j = 2; j <= std::min(m, n_); ++j)
      for (int i = 1; i < j; ++i) u(i, j) = (*this)(i, j);
    return u;
  }

  friend bool operator==(const UArray&, const UArray&) = default;

 private:
  int n_ = 0;
  std::vector<int> a_;
};

inline std::string diagonals_str(const UArray& u) {
  std::string s;
  auto d = u.diagonals();
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k) s += ";";
    for (std::size_t i = 0; i < d[k].size(); ++i) {
      if (i) s += ",";
      s += std::to_string(d[k][i]);
    }
  }
  return s;
}

// Boundary labels plus upright gradients. lambda is the base, mu the left
// edge, nu the right edge. Boundaries are raw integers so that negative
// labels can be represented.
struct Hive {
  int n = 0;
  Seq lambda, mu, nu;
  UArray u;

  Hive() = default;
  explicit Hive(int n_) : n(n_), lambda(n_, 0), mu(n_, 0), nu(n_, 0), u(n_) {}
  Hive(Seq l, Seq m, Seq v, UArray uu) : n(uu.n()), lambda(std::move(l)), mu(std::move(m)), nu(std::move(v)), u(std::move(uu)) {
    if (static_cast<int>(lambda.size()) != n || static_cast<int>(mu.size()) != n ||
        static_cast<int>(nu.size()) != n)
      throw InvalidInput("boundary lengths must equal n=" + std::to_string(n));
  }
  Hive(int n_, const Seq& l, const Seq& m, const Seq& v, const std::vector<Seq>& diagonals)
      : Hive(padded(l, n_), padded(m, n_), padded(v, n_), UArray::from_diagonals(n_, diagonals)) {
    if (static_cast<int>(l.size()) > n_ || static_cast<int>(m.size()) > n_ || static_cast<int>(v.size()) > n_)
      throw InvalidInput("boundary longer than n=" + std::to_string(n_));
  }

  int U(int i, int j) const { return u(i, j); }
  int& U(int i, int j) { return u(i, j); }
  // 1-based boundary access
  int lam(int i) const { return lambda[i - 1]; }
  int m(int i) const { return mu[i - 1]; }
  int v(int i) const { return nu[i - 1]; }

  // base label forced by mu, nu and U
  int forced_lambda(int k) const { return mu[k - 1] + nu[k - 1] + u.column_sum(k) - u.row_sum(k); }

  friend bool operator==(const Hive&, const Hive&) = default;
};

// alpha(i,j) 0<=i<j<=n; beta(i,j), gamma(i,j) 1<=i<=j<=n.
struct EdgeLabels {
  int n = 0;
  std::vector<int> a, b, g;
  int alpha(int i, int j) const { return a[i * (n + 1) + j]; }
  int beta(int i, int j) const { return b[i * (n + 1) + j]; }
  int gamma(int i, int j) const { return g[i * (n + 1) + j]; }
};

inline EdgeLabels edge_labels(const Hive& h) {
  int n = h.n;
  EdgeLabels e;
  e.n = n;
  e.a.assign((n + 1) * (n + 1), 0);
  e.b = e.a;
  e.g = e.a;
  auto at = [n](int i, int j) { return i * (n + 1) + j; };
  for (int j = 1; j <= n; ++j) {
    int s = h.mu[j - 1];
    e.a[at(0, j)] = s;
    for (int i = 1; i < j; ++i) {
      s += h.U(i, j);
      e.a[at(i, j)] = s;
    }
  }
  for (int i = 1; i <= n; ++i) {
    int s = h.nu[i - 1];
    e.b[at(i, n)] = s;
    for (int j = n - 1; j >= i; --j) {
      s -= h.U(i, j + 1);
      e.b[at(i, j)] = s;
    }
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) e.g[at(i, j)] = e.a[at(i - 1, j)] + e.b[at(i, j)];
  return e;
}

// Vertex labels a_{ij}, 0<=i<=j<=n, anchored at a_{00}=0.
inline std::vector<std::vector<int>> vertex_labels(const Hive& h) {
  auto e = edge_labels(h);
  int n = h.n;
  std::vector<std::vector<int>> a(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    if (i > 0) a[i][i] = a[i - 1][i - 1] + e.gamma(i, i);
    for (int j = i + 1; j <= n; ++j) a[i][j] = a[i][j - 1] + e.alpha(i, j);
  }
  return a;
}

struct Gradients {
  int n = 0;
  std::vector<int> r, u, l;
  int R(int i, int j) const { return r[i * (n + 1) + j]; }
  int U(int i, int j) const { return u[i * (n + 1) + j]; }
  int L(int i, int j) const { return l[i * (n + 1) + j]; }
};

inline Gradients gradients(const Hive& h) {
  auto e = edge_labels(h);
  int n = h.n;
  Gradients g;
  g.n = n;
  g.r.assign((n + 1) * (n + 1), 0);
  g.u = g.r;
  g.l = g.r;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) {
      int k = i * (n + 1) + j;
      g.r[k] = e.alpha(i - 1, j - 1) - e.alpha(i, j);
      g.u[k] = h.U(i, j);
      g.l[k] = e.beta(i, j - 1) - e.beta(i + 1, j);
    }
  return g;
}

namespace detail {
inline std::string name2(const char* what, int i, int j) {
  return std::string(what) + "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

// Checks shared by the LR and rational validators.
inline std::optional<std::string> hive_core_violation(const Hive& h) {
  int n = h.n;
  for (int k = 1; k <= n; ++k)
    if (h.lam(k) != h.forced_lambda(k))
      return "triangle condition: lambda_" + std::to_string(k) + " = " + std::to_string(h.lam(k)) +
             " but mu, nu and U force " + std::to_string(h.forced_lambda(k));
  auto g = gradients(h);
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) {
      if (g.U(i, j) < 0) return name2("U", i, j) + " = " + std::to_string(g.U(i, j));
      if (g.R(i, j) < 0) return name2("R", i, j) + " = " + std::to_string(g.R(i, j));
      if (g.L(i, j) < 0) return name2("L", i, j) + " = " + std::to_string(g.L(i, j));
    }
  return std::nullopt;
}
}  // namespace detail

// First violated constraint of an LR hive, or nullopt.
inline std::optional<std::string> lr_hive_violation(const Hive& h) {
  if (auto v = detail::hive_core_violation(h)) return v;
  auto e = edge_labels(h);
  int n = h.n;
  for (int j = 1; j <= n; ++j)
    for (int i = 0; i < j; ++i)
      if (e.alpha(i, j) < 0) return detail::name2("alpha", i, j) + " = " + std::to_string(e.alpha(i, j));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      if (e.beta(i, j) < 0) return detail::name2("beta", i, j) + " = " + std::to_string(e.beta(i, j));
      if (e.gamma(i, j) < 0) return detail::name2("gamma", i, j) + " = " + std::to_string(e.gamma(i, j));
    }
  return std::nullopt;
}

inline bool is_lr_hive(const Hive& h) { return !lr_hive_violation(h); }

// Integer boundaries may be negative; they must be weakly decreasing and all
// gradients nonnegative.
inline std::optional<std::string> rational_hive_violation(const Hive& h) {
  if (!weakly_decreasing(h.lambda)) return "lambda not weakly decreasing";
  if (!weakly_decreasing(h.mu)) return "mu not weakly decreasing";
  if (!weakly_decreasing(h.nu)) return "nu not weakly decreasing";
  return detail::hive_core_violation(h);
}

inline bool is_rational_hive(const Hive& h) { return !rational_hive_violation(h); }

inline void require_lr_hive(const Hive& h) {
  if (auto v = lr_hive_violation(h)) throw InvalidInput("not an LR hive: " + *v);
}

// U_{ij} = number of letters i in row j.
inline Hive hive_from_tableau(const SkewTableau& t, int n) {
  require_lr(t);
  if (t.num_rows() > n) throw InvalidInput("tableau has more than n=" + std::to_string(n) + " rows");
  Seq w = t.weight();
  if (static_cast<int>(w.size()) > n) throw InvalidInput("letters exceed n");
  Hive h(t.outer().padded(n), t.inner().padded(n), padded(w, n), UArray(n));
  for (int j = 1; j <= t.num_rows(); ++j)
    for (int x : t.rows()[j - 1])
      if (x > 0 && x < j) ++h.U(x, j);
  return h;
}

// Row j: mu_j empties, U_{ij} letters i for i<j, then beta_{jj} letters j.
inline SkewTableau tableau_from_hive(const Hive& h) {
  require_lr_hive(h);
  auto e = edge_labels(h);
  std::vector<Seq> rows(h.n);
  for (int j = 1; j <= h.n; ++j) {
    Seq& r = rows[j - 1];
    r.assign(h.m(j), 0);
    for (int i = 1; i < j; ++i) r.insert(r.end(), h.U(i, j), i);
    r.insert(r.end(), e.beta(j, j), j);
  }
  return SkewTableau(rows);
}

// The three interlocking GT patterns read off the edge labels.
inline GTPattern extract_gt(const Hive& h, Orientation o) {
  auto e = edge_labels(h);
  int n = h.n;
  GTPattern p;
  p.orientation = o;
  for (int t = 0; t < n; ++t) {  // row of length n-t
    Seq row;
    int len = n - t;
    for (int s = 1; s <= len; ++s) {
      switch (o) {
        case Orientation::alpha:
          row.push_back(e.alpha(t, t + s));
          break;
        case Orientation::beta:
          row.push_back(e.beta(s, len));
          break;
        case Orientation::gamma:
          row.push_back(e.gamma(s, s + t));
          break;
        default:
          throw InvalidInput("extract_gt needs alpha, beta or gamma");
      }
    }
    p.rows.push_back(row);
  }
  return p;
}

// Drops the empty last diagonal.
inline Hive kappa(const Hive& h) {
  int n = h.n;
  if (n == 0) throw PreconditionError("kappa on the empty hive");
  if (h.lam(n) || h.m(n) || h.v(n) || h.u.column_sum(n))
    throw PreconditionError("kappa needs an empty diagonal " + std::to_string(n));
  for (int i = 1; i < n; ++i)
    if (h.U(i, n)) throw PreconditionError("kappa needs an empty diagonal " + std::to_string(n));
  return Hive(Seq(h.lambda.begin(), h.lambda.end() - 1), Seq(h.mu.begin(), h.mu.end() - 1),
              Seq(h.nu.begin(), h.nu.end() - 1), h.u.resized(n - 1));
}

inline Hive kappa_inv(const Hive& h) {
  Hive out(padded(h.lambda, h.n + 1), padded(h.mu, h.n + 1), padded(h.nu, h.n + 1), h.u.resized(h.n + 1));
  return out;
}

}  // namespace lrcomm
