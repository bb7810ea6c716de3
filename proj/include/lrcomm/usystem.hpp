#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>

#include "paths.hpp"

namespace lrcomm {

// Upright gradients with no boundary attached.
struct USystem {
  UArray u;

  USystem() = default;
  explicit USystem(UArray a) : u(std::move(a)) {
    for (int j = 2; j <= u.n(); ++j)
      for (int i = 1; i < j; ++i)
        if (u(i, j) < 0) throw InvalidInput("U-system entries must be nonnegative");
  }
  int n() const { return u.n(); }
  friend bool operator==(const USystem&, const USystem&) = default;
};

// "1;1,2;1,2,1": diagonals j = 2..n separated by ';'. The empty string is
// the system of side 1.
inline USystem parse_usystem(const std::string& text) {
  std::vector<Seq> diags;
  if (!text.empty()) {
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
      Seq d;
      std::stringstream ps(part);
      std::string num;
      while (std::getline(ps, num, ',')) {
        try {
          std::size_t used = 0;
          d.push_back(std::stoi(num, &used));
          if (used != num.size()) throw std::invalid_argument(num);
        } catch (const std::exception&) {
          throw InvalidInput("bad U-system entry '" + num + "'");
        }
      }
      diags.push_back(d);
    }
  }
  int n = static_cast<int>(diags.size()) + 1;
  return USystem(UArray::from_diagonals(n, diags));
}

inline std::string to_string(const USystem& s) { return diagonals_str(s.u); }

// theta_r restricted to gradients is phi_r repeated until diagonal r is
// clear; the terminating levels give the V-system.
inline USystem sigma_u(const USystem& s) {
  int n = s.n();
  UArray cur = s.u, v(n);
  for (int r = n; r >= 2; --r) {
    while (cur.column_sum(r) > 0) ++v(detail::phi_u(cur, r), r);
    cur = cur.resized(r - 1);
  }
  return USystem(v);
}

// Dressing that needs no max or min: mu_i sums the U in diagonals to the
// right of i, nu_i the U in rows i and below.
inline Hive canonical_dressing(const USystem& s) {
  int n = s.n();
  Seq mu(n, 0), nu(n, 0);
  for (int k = 2; k <= n; ++k)
    for (int j = 1; j < k; ++j) {
      int x = s.u(j, k);
      for (int i = 1; i < k && i < n; ++i) mu[i - 1] += x;
      for (int i = 1; i <= j && i < n; ++i) nu[i - 1] += x;
    }
  Hive h(mu, mu, nu, s.u);
  for (int i = 1; i <= n; ++i) h.lambda[i - 1] = h.forced_lambda(i);
  return h;
}

struct Feasibility {
  bool feasible = false;
  Seq lambda;
  std::string reason;
};

// Lower bounds on mu_l - mu_{l+1} and nu_l - nu_{l+1}, with mu_n, nu_n >= 0.
inline Seq mu_gap_bounds(const USystem& s) {
  int n = s.n();
  Seq out;
  for (int l = 1; l < n; ++l) {
    int best = 0, a = 0, b = 0;
    for (int i = 1; i <= l; ++i) {
      if (i > 1) a += s.u(i - 1, l);
      b += s.u(i, l + 1);
      best = std::max(best, b - a);
    }
    out.push_back(best);
  }
  return out;
}

inline Seq nu_gap_bounds(const USystem& s) {
  int n = s.n();
  Seq out;
  for (int l = 1; l < n; ++l) {
    int best = 0;
    for (int j = l + 1; j <= n; ++j) {
      int a = 0, b = 0;
      for (int k = j; k <= n; ++k) a += s.u(l, k);
      for (int k = j + 1; k <= n; ++k) b += s.u(l + 1, k);
      best = std::max(best, a - b);
    }
    out.push_back(best);
  }
  return out;
}

inline Feasibility dressing_feasible(const USystem& s, const Seq& mu, const Seq& nu) {
  int n = s.n();
  Feasibility f;
  if (static_cast<int>(mu.size()) != n || static_cast<int>(nu.size()) != n)
    throw InvalidInput("mu and nu need length n=" + std::to_string(n));
  Hive h(mu, mu, nu, s.u);
  for (int i = 1; i <= n; ++i) h.lambda[i - 1] = h.forced_lambda(i);
  f.lambda = h.lambda;
  auto mb = mu_gap_bounds(s), nb = nu_gap_bounds(s);
  for (int l = 1; l < n; ++l) {
    if (mu[l - 1] - mu[l] < mb[l - 1]) {
      f.reason = "mu_" + std::to_string(l) + " - mu_" + std::to_string(l + 1) + " < " + std::to_string(mb[l - 1]);
      return f;
    }
    if (nu[l - 1] - nu[l] < nb[l - 1]) {
      f.reason = "nu_" + std::to_string(l) + " - nu_" + std::to_string(l + 1) + " < " + std::to_string(nb[l - 1]);
      return f;
    }
  }
  if (n && (mu[n - 1] < 0 || nu[n - 1] < 0)) {
    f.reason = "mu_n and nu_n must be nonnegative";
    return f;
  }
  f.feasible = true;
  return f;
}

// Adds p to every alpha label, q to every beta label and p+q to every gamma
// label.
inline Hive shift_dressing(const Hive& h, int p, int q) {
  Hive out = h;
  for (int i = 0; i < h.n; ++i) {
    out.mu[i] += p;
    out.nu[i] += q;
    out.lambda[i] += p + q;
  }
  return out;
}

// Canonical dressing plus random slack in each gap inequality.
class DressingSampler {
 public:
  explicit DressingSampler(std::uint64_t seed, int max_slack = 3) : rng_(seed), max_slack_(max_slack) {}

  Hive operator()(const USystem& s) {
    int n = s.n();
    auto mb = mu_gap_bounds(s), nb = nu_gap_bounds(s);
    std::uniform_int_distribution<int> d(0, max_slack_);
    Seq mu(n, 0), nu(n, 0);
    if (n) {
      mu[n - 1] = d(rng_);
      nu[n - 1] = d(rng_);
    }
    for (int l = n - 1; l >= 1; --l) {
      mu[l - 1] = mu[l] + mb[l - 1] + d(rng_);
      nu[l - 1] = nu[l] + nb[l - 1] + d(rng_);
    }
    Hive h(mu, mu, nu, s.u);
    for (int i = 1; i <= n; ++i) h.lambda[i - 1] = h.forced_lambda(i);
    return h;
  }

 private:
  std::mt19937_64 rng_;
  int max_slack_;
};

}  // namespace lrcomm
