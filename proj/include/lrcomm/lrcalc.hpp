#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "deletion.hpp"
#include "paths.hpp"

namespace lrcomm {

// Calls f(rows) for every LR tableau of shape lambda/mu and weight nu, in
// lexicographic order of the row-major reading word. rows include inner
// zeros. f may return false to stop early.
template <class F>
void for_each_lr(const Partition& lambda, const Partition& mu, const Partition& nu, F&& f) {
  if (!contains(mu, lambda) || !contains(nu, lambda)) return;
  if (lambda.size() != mu.size() + nu.size()) return;
  int L = lambda.length(), m = nu.length();
  std::vector<Seq> rows(L);
  std::vector<Cell> cells;
  for (int i = 1; i <= L; ++i) {
    rows[i - 1].assign(lambda(i), 0);
    for (int c = mu(i) + 1; c <= lambda(i); ++c) cells.push_back({i, c});
  }
  // cum[i][s]: letters s in rows 1..i
  std::vector<Seq> cum(L + 1, Seq(m + 2, 0));
  Seq used(m + 2, 0);
  bool stop = false;
  int total = static_cast<int>(cells.size());
  auto rec = [&](auto& self, int idx, int row_started) -> void {
    if (stop) return;
    if (idx == total) {
      if (!f(static_cast<const std::vector<Seq>&>(rows))) stop = true;
      return;
    }
    auto [i, c] = cells[idx];
    if (row_started != i) {
      // entering row i; rows without cells between are already copied
      for (int k = row_started + 1; k <= i; ++k) cum[k] = cum[k - 1];
    }
    int lo = 1;
    if (c > mu(i) + 1) lo = rows[i - 1][c - 2];
    if (i > 1 && c <= lambda(i - 1) && c > mu(i - 1)) lo = std::max(lo, rows[i - 2][c - 1] + 1);
    int hi = std::min(i, m);
    for (int x = lo; x <= hi; ++x) {
      if (used[x] >= nu(x)) continue;
      if (x >= 2 && cum[i][x] + 1 > cum[i - 1][x - 1]) continue;
      rows[i - 1][c - 1] = x;
      ++used[x];
      ++cum[i][x];
      self(self, idx + 1, i);
      --cum[i][x];
      --used[x];
      rows[i - 1][c - 1] = 0;
      if (stop) return;
    }
  };
  rec(rec, 0, 0);
}

inline std::vector<SkewTableau> enumerate_lr(const Partition& lambda, const Partition& mu,
                                             const Partition& nu, int n) {
  if (lambda.length() > n) throw InvalidInput("l(lambda) exceeds n=" + std::to_string(n));
  std::vector<SkewTableau> out;
  for_each_lr(lambda, mu, nu, [&](const std::vector<Seq>& rows) {
    out.emplace_back(rows);
    return true;
  });
  return out;
}

inline std::int64_t count_lr_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu) {
  std::int64_t k = 0;
  for_each_lr(lambda, mu, nu, [&](const std::vector<Seq>&) {
    ++k;
    return true;
  });
  return k;
}

// Calls f(hive) for every integer hive with the given boundaries. Diagonals
// are filled from n down to 2 since each one's sum is then forced. With
// rational set, edge labels may be negative.
template <class F>
void for_each_hive(const Seq& lambda, const Seq& mu, const Seq& nu, bool rational, F&& f) {
  int n = static_cast<int>(lambda.size());
  if (static_cast<int>(mu.size()) != n || static_cast<int>(nu.size()) != n)
    throw InvalidInput("boundaries need a common length");
  Hive h(lambda, mu, nu, UArray(n));
  auto alpha = [&](int i, int j) {  // needs diagonal j filled up to row i
    int s = mu[j - 1];
    for (int k = 1; k <= i; ++k) s += h.U(k, j);
    return s;
  };
  auto beta = [&](int i, int j) {  // needs rows i, diagonals > j
    int s = nu[i - 1];
    for (int k = j + 1; k <= n; ++k) s -= h.U(i, k);
    return s;
  };
  auto accept = [&]() {
    if (rational ? is_rational_hive(h) : is_lr_hive(h)) f(static_cast<const Hive&>(h));
  };
  auto rec = [&](auto& self, int j, int i, int left) -> void {
    if (j == 1) {
      if (lambda[0] != mu[0] + nu[0] - h.u.row_sum(1)) return;
      if (n >= 2 && mu[0] < alpha(1, 2)) return;
      accept();
      return;
    }
    if (i == j) {
      if (left != 0) return;
      // R_{j,j+1}: alpha_{j-1,j} >= alpha_{j,j+1}
      if (j < n && alpha(j - 1, j) < alpha(j, j + 1)) return;
      int next = j - 1;
      int s = next >= 1 ? lambda[next - 1] - mu[next - 1] - nu[next - 1] + h.u.row_sum(next) : 0;
      if (next >= 2 && s < 0) return;
      self(self, next, 1, s);
      return;
    }
    // R_{i,j+1}: alpha_{i-1,j} >= alpha_{i,j+1}
    if (j < n && alpha(i - 1, j) < alpha(i, j + 1)) return;
    for (int x = 0; x <= left; ++x) {
      h.U(i, j) = x;
      // L_{ij} = beta_{i,j-1} - beta_{i+1,j}
      if (beta(i, j - 1) - beta(i + 1, j) >= 0) self(self, j, i + 1, left - x);
    }
    h.U(i, j) = 0;
  };
  if (n == 0) {
    f(static_cast<const Hive&>(h));
    return;
  }
  int s = lambda[n - 1] - mu[n - 1] - nu[n - 1];
  if (n >= 2 && s < 0) return;
  rec(rec, n, 1, s);
}

enum class CoeffMode { tableau, hive, gz, bz, kh, rational };

inline CoeffMode parse_mode(const std::string& s) {
  if (s == "tableau") return CoeffMode::tableau;
  if (s == "hive") return CoeffMode::hive;
  if (s == "gz") return CoeffMode::gz;
  if (s == "bz") return CoeffMode::bz;
  if (s == "kh") return CoeffMode::kh;
  if (s == "rational") return CoeffMode::rational;
  throw InvalidInput("unknown mode '" + s + "'");
}

struct CoeffQuery {
  Seq lambda, mu, nu;
  int n = 0;  // 0: smallest n that fits
  CoeffMode mode = CoeffMode::tableau;
};

namespace detail {

inline Seq sub(const Seq& a, const Seq& b) {
  Seq out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// beta-pattern count: GT patterns of type nu, weight lambda-mu, whose alpha
// labels (rebuilt from mu) respect R >= 0.
inline std::int64_t count_gz(const Seq& lambda, const Seq& mu, const Seq& nu) {
  int n = static_cast<int>(lambda.size());
  std::int64_t k = 0;
  for_each_gt(nu, sub(lambda, mu), [&](const GTPattern& p) {
    auto beta = [&](int i, int j) { return p.row_of_length(j)[i - 1]; };
    for (int j = 2; j <= n; ++j) {
      int a_prev = mu[j - 2], a = mu[j - 1];  // alpha_{0,j-1}, alpha_{0,j}
      for (int i = 1; i < j; ++i) {
        a += beta(i, j) - beta(i, j - 1);
        if (i > 1) a_prev += beta(i - 1, j - 1) - beta(i - 1, j - 2);
        if (a_prev < a) return;
      }
    }
    ++k;
  });
  return k;
}

// alpha-pattern count: GT patterns of type mu, weight rev(lambda-nu), whose
// beta labels (rebuilt from nu) respect L >= 0 and stay nonnegative.
inline std::int64_t count_bz(const Seq& lambda, const Seq& mu, const Seq& nu) {
  int n = static_cast<int>(lambda.size());
  std::int64_t k = 0;
  for_each_gt(mu, reversed(sub(lambda, nu)), [&](const GTPattern& p) {
    auto alpha = [&](int i, int j) { return p.row_of_length(n - i)[j - i - 1]; };
    std::vector<Seq> b(n + 2, Seq(n + 2, 0));
    for (int i = 1; i <= n; ++i) {
      b[i][n] = nu[i - 1];
      for (int j = n - 1; j >= i; --j) b[i][j] = b[i][j + 1] - (alpha(i, j + 1) - alpha(i - 1, j + 1));
      if (b[i][i] < 0) return;
    }
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i)
        if (b[i][j - 1] < b[i + 1][j]) return;
    ++k;
  });
  return k;
}

// Pairs of GT patterns (beta of type nu, alpha of type mu) sharing U.
inline std::int64_t count_kh(const Seq& lambda, const Seq& mu, const Seq& nu) {
  int n = static_cast<int>(lambda.size());
  std::map<Seq, std::int64_t> from_beta;
  for_each_gt(nu, sub(lambda, mu), [&](const GTPattern& p) {
    Seq key;
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i) key.push_back(p.row_of_length(j)[i - 1] - p.row_of_length(j - 1)[i - 1]);
    ++from_beta[key];
  });
  std::int64_t k = 0;
  for_each_gt(mu, reversed(sub(lambda, nu)), [&](const GTPattern& p) {
    auto alpha = [&](int i, int j) { return p.row_of_length(n - i)[j - i - 1]; };
    Seq key;
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i) key.push_back(alpha(i, j) - alpha(i - 1, j));
    auto it = from_beta.find(key);
    if (it != from_beta.end()) k += it->second;
  });
  return k;
}

}  // namespace detail

inline std::int64_t coefficient(const CoeffQuery& q) {
  bool rational = q.mode == CoeffMode::rational;
  for (const Seq* s : {&q.lambda, &q.mu, &q.nu}) {
    if (!weakly_decreasing(*s)) throw InvalidInput("boundary " + seq_str(*s) + " is not weakly decreasing");
    if (!rational)
      for (int x : *s)
        if (x < 0) throw InvalidInput("boundary " + seq_str(*s) + " has a negative part");
  }
  int fit = static_cast<int>(std::max({q.lambda.size(), q.mu.size(), q.nu.size()}));
  auto strip = [](Seq s) {
    while (!s.empty() && s.back() == 0) s.pop_back();
    return static_cast<int>(s.size());
  };
  int need = rational ? fit : std::max({strip(q.lambda), strip(q.mu), strip(q.nu)});
  int n = q.n ? q.n : need;
  if (n < need) throw InvalidInput("boundaries do not fit n=" + std::to_string(n));
  // for rational data a shorter sequence is padded with zeros
  Seq l = padded(q.lambda, n), m = padded(q.mu, n), v = padded(q.nu, n);
  if (rational) {
    for (const Seq* s : {&l, &m, &v})
      if (!weakly_decreasing(*s)) throw InvalidInput("padding breaks monotonicity of " + seq_str(*s));
  }
  switch (q.mode) {
    case CoeffMode::tableau:
      return count_lr_tableaux(Partition(l), Partition(m), Partition(v));
    case CoeffMode::hive:
    case CoeffMode::rational: {
      std::int64_t k = 0;
      for_each_hive(l, m, v, rational, [&](const Hive&) { ++k; });
      return k;
    }
    case CoeffMode::gz:
      return detail::count_gz(l, m, v);
    case CoeffMode::bz:
      return detail::count_bz(l, m, v);
    case CoeffMode::kh:
      return detail::count_kh(l, m, v);
  }
  return 0;
}

inline std::int64_t coefficient(const Seq& lambda, const Seq& mu, const Seq& nu, CoeffMode mode, int n = 0) {
  return coefficient(CoeffQuery{lambda, mu, nu, n, mode});
}

struct SymmetryReport {
  std::int64_t forward = 0;   // |LR(lambda/mu, nu)|
  std::int64_t backward = 0;  // |LR(lambda/nu, mu)|
  bool rho_bijective = true;
  bool sigma_bijective = true;
  std::vector<std::string> mismatches;
  bool ok() const { return forward == backward && rho_bijective && sigma_bijective && mismatches.empty(); }
};

// Counts both sides and checks that rho and sigma map one set onto the other.
inline SymmetryReport symmetry_check(const Partition& lambda, const Partition& mu, const Partition& nu, int n) {
  SymmetryReport rep;
  auto a = enumerate_lr(lambda, mu, nu, n);
  auto b = enumerate_lr(lambda, nu, mu, n);
  rep.forward = static_cast<std::int64_t>(a.size());
  rep.backward = static_cast<std::int64_t>(b.size());
  if (rep.forward != rep.backward)
    rep.mismatches.push_back("counts differ: " + std::to_string(rep.forward) + " vs " + std::to_string(rep.backward));
  std::set<SkewTableau> target(b.begin(), b.end()), seen;
  std::set<std::vector<Seq>> hive_target, hive_seen;
  for (const auto& s : b) hive_target.insert(hive_from_tableau(s, n).u.diagonals());
  for (const auto& t : a) {
    SkewTableau s = rho(t, n);
    if (!target.count(s)) {
      rep.rho_bijective = false;
      rep.mismatches.push_back("rho(" + to_string(t) + ") = " + to_string(s) + " not in LR(lambda/nu, mu)");
    }
    if (!seen.insert(s).second) {
      rep.rho_bijective = false;
      rep.mismatches.push_back("rho collision at " + to_string(s));
    }
    Hive k = sigma(hive_from_tableau(t, n));
    auto key = k.u.diagonals();
    if (!hive_target.count(key) || k.mu != nu.padded(n) || k.nu != mu.padded(n)) {
      rep.sigma_bijective = false;
      rep.mismatches.push_back("sigma image of " + to_string(t) + " not an LR hive of the swapped triple");
    }
    if (!hive_seen.insert(key).second) {
      rep.sigma_bijective = false;
      rep.mismatches.push_back("sigma collision");
    }
  }
  if (seen.size() != target.size()) rep.rho_bijective = false;
  if (hive_seen.size() != hive_target.size()) rep.sigma_bijective = false;
  return rep;
}

}  // namespace lrcomm
