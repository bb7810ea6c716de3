#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hive.hpp"

namespace lrcomm {

enum class PathKind { i = 1, ii = 2, iii = 3, iv = 4 };

inline const char* kind_name(PathKind k) {
  switch (k) {
    case PathKind::i: return "i";
    case PathKind::ii: return "ii";
    case PathKind::iii: return "iii";
    default: return "iv";
  }
}

struct EdgeDelta {
  std::string edge;  // e.g. "alpha[2,4]"
  int delta = 0;
};

struct RemovalPath {
  PathKind kind = PathKind::i;
  std::vector<EdgeDelta> edges;
  int start_diagonal = 0;
  int terminating_level = 0;
};

// Labels that differ between two hives of the same side, alpha then beta
// then gamma, each in index order.
inline std::vector<EdgeDelta> edge_diff(const Hive& before, const Hive& after) {
  auto a = edge_labels(before), b = edge_labels(after);
  std::vector<EdgeDelta> out;
  int n = before.n;
  auto push = [&](const char* fam, int i, int j, int d) {
    if (d) out.push_back({std::string(fam) + "[" + std::to_string(i) + "," + std::to_string(j) + "]", d});
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) push("alpha", i, j, b.alpha(i, j) - a.alpha(i, j));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) push("beta", i, j, b.beta(i, j) - a.beta(i, j));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) push("gamma", i, j, b.gamma(i, j) - a.gamma(i, j));
  return out;
}

namespace detail {

inline void check_diagonal(const Hive& h, int r) {
  if (r < 1 || r > h.n) throw PreconditionError("diagonal " + std::to_string(r) + " outside the hive");
}

// Type (ii) removal on the gradients alone. Climbs diagonal r from the base
// through zero rhombi, leaves at the first positive one, and so on leftwards.
// Returns the level k of the left boundary edge reached.
inline int phi_u(UArray& u, int r) {
  int c = 0;
  for (int i = r - 1; i >= 1; --i)
    if (u(i, r) > 0) {
      c = i;
      break;
    }
  if (!c) throw PreconditionError("phi needs a positive gradient in diagonal " + std::to_string(r));
  --u(c, r);
  int x = c;
  for (int j = r - 1; j >= 1; --j) {
    if (x < j) ++u(x, j);  // foot rhombus
    int next = 0;
    for (int i = x - 1; i >= 1; --i)
      if (u(i, j) > 0) {
        next = i;
        break;
      }
    if (!next) return j;
    --u(next, j);  // head rhombus
    x = next;
  }
  throw Error("phi path did not reach the left boundary");
}

// Inverse of phi_u for a path ending on level k; r is the diagonal it
// starts from.
inline void phi_bar_u(UArray& u, int k, int r) {
  int x = k;
  for (int i = 1; i < k; ++i)
    if (u(i, k) > 0) {
      x = i;
      break;
    }
  if (x < k) --u(x, k);  // foot rhombus
  for (int j = k + 1; j <= r; ++j) {
    ++u(x, j);  // head rhombus
    if (j == r) return;
    int next = j;
    for (int i = x + 1; i < j; ++i)
      if (u(i, j) > 0) {
        next = i;
        break;
      }
    if (next < j) --u(next, j);
    x = next;
  }
}

}  // namespace detail

// chi_r: type (i), the path is the two boundary edges lambda_r and nu_r.
inline Hive chi(const Hive& h, int r) {
  detail::check_diagonal(h, r);
  if (h.v(r) <= 0) throw PreconditionError("chi needs nu_r > 0");
  Hive out = h;
  --out.lambda[r - 1];
  --out.nu[r - 1];
  return out;
}

struct PhiResult {
  Hive hive;
  int level = 0;
};

// phi_r: type (ii), from lambda_r to some mu_k with k < r.
inline PhiResult phi(const Hive& h, int r) {
  detail::check_diagonal(h, r);
  PhiResult res{h, 0};
  res.level = detail::phi_u(res.hive.u, r);
  --res.hive.lambda[r - 1];
  --res.hive.mu[res.level - 1];
  return res;
}

// omega_r: type (iii), straight up diagonal r.
inline Hive omega(const Hive& h, int r) {
  detail::check_diagonal(h, r);
  if (h.m(r) <= 0) throw PreconditionError("omega needs mu_r > 0");
  Hive out = h;
  --out.lambda[r - 1];
  --out.mu[r - 1];
  return out;
}

struct ThetaResult {
  Hive hive;
  Seq v;  // v[k-1] = V_{kr}, k = 1..r-1
  int chi_count = 0, phi_count = 0, omega_count = 0;
  std::vector<RemovalPath> paths;  // when traced
};

// theta_r = omega_r^{mu_r} phi_r^{lambda_r-mu_r-nu_r} chi_r^{nu_r}, built one
// removal at a time by case analysis on the current hive.
inline ThetaResult theta_full(const Hive& h, int r, bool trace = false) {
  detail::check_diagonal(h, r);
  for (int j = r + 1; j <= h.n; ++j)
    if (h.lam(j)) throw PreconditionError("theta_r needs lambda_j = 0 for j > r");
  ThetaResult res{h, Seq(r - 1, 0), 0, 0, 0, {}};
  const int nu_r = h.v(r), mu_r = h.m(r), lam_r = h.lam(r);
  Hive& cur = res.hive;
  while (cur.lam(r) > 0) {
    Hive before = trace ? cur : Hive{};
    RemovalPath p;
    p.start_diagonal = r;
    if (cur.v(r) > 0) {
      cur = chi(cur, r);
      p.kind = PathKind::i;
      ++res.chi_count;
    } else if (cur.u.column_sum(r) > 0) {
      auto ph = phi(cur, r);
      cur = std::move(ph.hive);
      p.kind = PathKind::ii;
      p.terminating_level = ph.level;
      ++res.v[ph.level - 1];
      ++res.phi_count;
    } else if (cur.m(r) > 0) {
      cur = omega(cur, r);
      p.kind = PathKind::iii;
      p.terminating_level = r;
      ++res.omega_count;
    } else {
      throw InvalidInput("lambda_" + std::to_string(r) + " cannot be exhausted by path removals");
    }
    if (trace) {
      p.edges = edge_diff(before, cur);
      res.paths.push_back(std::move(p));
    }
  }
  if (res.chi_count != nu_r || res.omega_count != mu_r || res.phi_count != lam_r - mu_r - nu_r)
    throw InvalidInput("phase counts of theta_" + std::to_string(r) + " disagree with the boundary");
  if (cur.m(r) || cur.v(r) || cur.u.column_sum(r))
    throw InvalidInput("theta_" + std::to_string(r) + " left diagonal " + std::to_string(r) + " nonempty");
  return res;
}

// The rightmost n-r diagonals of an n-hive under construction.
struct TruncatedHive {
  int n = 0;
  int r = 0;
  Seq lambda;  // full length n; entries r+1..n meaningful
  Seq nu;      // left edge labels, entries r+1..n meaningful
  Seq mu;      // right edge labels mu_1..mu_n
  Seq inner;   // mu^(r)_1..mu^(r)_r
  UArray v;    // V_{ks} for s > r

  static TruncatedHive empty(int n, const Seq& mu) {
    TruncatedHive k;
    k.n = n;
    k.r = n;
    k.lambda.assign(n, 0);
    k.nu.assign(n, 0);
    k.mu = mu;
    k.inner = mu;
    k.v = UArray(n);
    return k;
  }

  // Attach diagonal r (= current r) with gradients vcol[k-1] = V_{kr}.
  TruncatedHive add_diagonal(int lam_r, int nu_r, const Seq& vcol) const {
    TruncatedHive k = *this;
    int s = r;
    k.lambda[s - 1] = lam_r;
    k.nu[s - 1] = nu_r;
    for (int i = 1; i < s; ++i) k.v(i, s) = vcol[i - 1];
    k.inner.resize(s - 1);
    for (int i = 1; i < s; ++i) k.inner[i - 1] -= vcol[i - 1];
    k.r = s - 1;
    return k;
  }

  // Empty string when the occupied region is consistent.
  std::string violation() const {
    for (int i = 1; i < static_cast<int>(inner.size()); ++i)
      if (inner[i - 1] < inner[i]) return "inner labels not weakly decreasing";
    for (int k = 1; k <= r; ++k) {
      int back = inner[k - 1];
      for (int s = r + 1; s <= n; ++s) back += v(k, s);
      if (back != mu[k - 1]) return "inner labels do not add back up to mu";
    }
    for (int s = r + 1; s <= n; ++s) {
      int expect = nu[s - 1] + (mu[s - 1] - v.row_sum(s));
      for (int k = 1; k < s; ++k) expect += v(k, s);
      if (lambda[s - 1] != expect) return "triangle condition fails on diagonal " + std::to_string(s);
      for (int k = 1; k < s; ++k)
        if (v(k, s) < 0) return "negative gradient";
    }
    return {};
  }

  // Once every diagonal is attached this is K in H(lambda, nu, mu).
  Hive complete() const {
    if (r != 0) throw PreconditionError("truncated hive still missing diagonals");
    return Hive(lambda, nu, mu, v);
  }
};

struct SigmaStep {
  int r = 0;
  std::string op;
  std::vector<EdgeDelta> path_edges;
  int terminating_level = 0;
};

struct SigmaTrace {
  std::vector<std::pair<Hive, TruncatedHive>> pairs;  // r = n, ..., 0
  std::vector<ThetaResult> thetas;                    // r = n, ..., 1
  std::vector<SigmaStep> steps;
};

// sigma^(n): H(lambda, mu, nu) -> H(lambda, nu, mu)
inline Hive sigma(const Hive& h, SigmaTrace* trace = nullptr) {
  require_lr_hive(h);
  int n = h.n;
  Hive cur = h;
  TruncatedHive k = TruncatedHive::empty(n, h.mu);
  if (trace) trace->pairs.emplace_back(cur, k);
  for (int r = n; r >= 1; --r) {
    ThetaResult th = theta_full(cur, r, trace != nullptr);
    k = k.add_diagonal(h.lam(r), h.v(r), th.v);
    cur = kappa(th.hive);
    if (cur.mu != k.inner) throw Error("truncated hive inner edge out of step with H^(r-1)");
    if (trace) {
      for (const auto& p : th.paths)
        trace->steps.push_back({r, std::string(p.kind == PathKind::i ? "chi" : p.kind == PathKind::ii ? "phi" : "omega"),
                                p.edges, p.terminating_level});
      trace->pairs.emplace_back(cur, k);
      trace->thetas.push_back(std::move(th));
    }
  }
  return k.complete();
}

inline Hive chi_bar(const Hive& h, int r) {
  detail::check_diagonal(h, r);
  Hive out = h;
  ++out.lambda[r - 1];
  ++out.nu[r - 1];
  return out;
}

// Path from mu_k down and rightwards to lambda_n, n the side of h.
inline Hive phi_bar(const Hive& h, int k) {
  int r = h.n;
  if (k < 1 || k >= r) throw PreconditionError("phi_bar needs 1 <= k < n");
  Hive out = h;
  detail::phi_bar_u(out.u, k, r);
  ++out.mu[k - 1];
  ++out.lambda[r - 1];
  return out;
}

inline Hive omega_bar(const Hive& h, int r) {
  detail::check_diagonal(h, r);
  Hive out = h;
  ++out.lambda[r - 1];
  ++out.mu[r - 1];
  return out;
}

// sigma-bar^(n): rebuild H in H(lambda, mu, nu) from K in H(lambda, nu, mu).
inline Hive sigma_bar(const Hive& kh) {
  require_lr_hive(kh);
  int n = kh.n;
  const Seq& nu = kh.mu;  // H's right edge is K's left edge
  const Seq& mu = kh.nu;
  Hive cur(0);
  for (int r = 1; r <= n; ++r) {
    cur = kappa_inv(cur);
    int m = mu[r - 1] - kh.u.row_sum(r);
    if (m < 0) throw InvalidInput("negative omega-bar exponent on diagonal " + std::to_string(r));
    for (int c = 0; c < m; ++c) cur = omega_bar(cur, r);
    for (int k = r - 1; k >= 1; --k)
      for (int c = 0; c < kh.U(k, r); ++c) cur = phi_bar(cur, k);
    for (int c = 0; c < nu[r - 1]; ++c) cur = chi_bar(cur, r);
    if (cur.lam(r) != kh.lam(r)) throw InvalidInput("path additions do not rebuild lambda_" + std::to_string(r));
  }
  require_lr_hive(cur);
  return cur;
}

// psi_n: type (iv), lambda_n to nu_k with k the first positive U_{kn}.
inline Hive psi(const Hive& h) {
  int n = h.n;
  if (n == 0 || h.lam(n) <= 0) throw PreconditionError("psi needs lambda_n > 0");
  int k = 0;
  for (int j = 1; j < n; ++j)
    if (h.U(j, n) > 0) {
      k = j;
      break;
    }
  if (!k) throw PreconditionError("psi needs U_{in} > 0 for some i < n");
  Hive out = h;
  --out.lambda[n - 1];
  --out.nu[k - 1];
  --out.U(k, n);
  return out;
}

}  // namespace lrcomm
