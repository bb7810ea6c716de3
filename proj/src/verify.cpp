#include "lrcomm/verify.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace lrcomm {

std::vector<Triple> sweep_triples(int max_weight, int max_len) {
  std::vector<Triple> out;
  for (int k = 0; k <= max_weight; ++k)
    for (const auto& lam : partitions_of(k, max_len))
      for (const auto& mu : subpartitions(lam))
        for (const auto& nu : partitions_of(k - mu.size(), max_len))
          if (contains(nu, lam)) out.push_back({lam, mu, nu});
  return out;
}

Suite parse_suite(const std::string& s) {
  if (s == "involution") return Suite::involution;
  if (s == "symmetry") return Suite::symmetry;
  if (s == "crossmodel") return Suite::crossmodel;
  if (s == "counts") return Suite::counts;
  if (s == "crystal") return Suite::crystal;
  if (s == "all") return Suite::all;
  throw InvalidInput("unknown suite '" + s + "'");
}

int thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LR_THREADS")) {
    int k = std::atoi(env);
    if (k > 0) return k;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

io::json VerifyReport::to_json() const {
  io::json j;
  j["passed"] = ok();
  j["triples"] = triples;
  j["tableaux"] = tableaux;
  j["hives"] = hives;
  j["checks"] = checks;
  j["failures"] = failures;
  j["failure_log"] = failure_log;
  j["coincidence"] = {{"checked", coincidence.checked},
                      {"equal", coincidence.equal},
                      {"counterexamples", coincidence.counterexamples}};
  return j;
}

namespace {

struct TripleResult {
  std::int64_t tableaux = 0, hives = 0, checks = 0;
  std::vector<std::string> failures;
  std::int64_t coincidence_checked = 0, coincidence_equal = 0;
  std::vector<std::string> counterexamples;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

std::string label(const Triple& t) {
  return "(" + to_string(t.lambda) + "," + to_string(t.mu) + "," + to_string(t.nu) + ")";
}

TripleResult run_triple(const Triple& tr, Suite suite, int n) {
  TripleResult res;
  auto on = [&](Suite s) { return suite == Suite::all || suite == s; };
  const std::string tag = label(tr);
  try {
    auto lrs = enumerate_lr(tr.lambda, tr.mu, tr.nu, n);
    res.tableaux = static_cast<std::int64_t>(lrs.size());
    res.hives = res.tableaux;

    if (on(Suite::counts)) {
      std::int64_t base = static_cast<std::int64_t>(lrs.size());
      const Seq l = tr.lambda.padded(n), m = tr.mu.padded(n), v = tr.nu.padded(n);
      for (auto mode : {CoeffMode::tableau, CoeffMode::hive, CoeffMode::gz, CoeffMode::bz, CoeffMode::kh,
                        CoeffMode::rational}) {
        std::int64_t c = coefficient(l, m, v, mode, n);
        res.check(c == base, tag + ": mode count " + std::to_string(c) + " vs " + std::to_string(base));
      }
    }
    if (on(Suite::symmetry)) {
      auto rep = symmetry_check(tr.lambda, tr.mu, tr.nu, n);
      std::string why = rep.mismatches.empty() ? "" : rep.mismatches.front();
      res.check(rep.ok(), tag + ": symmetry " + why);
    }
    for (const auto& t : lrs) {
      const std::string tt = tag + " T=" + to_string(t);
      SkewTableau s = rho(t, n);
      Hive h = hive_from_tableau(t, n);
      if (on(Suite::involution)) {
        res.check(rho(s, n) == t, tt + ": rho^2 != id");
        res.check(rho_inverse(s, n) == t, tt + ": rho_inverse(rho) != id");
        Hive k = sigma(h);
        res.check(sigma(k) == h, tt + ": sigma^2 != id");
        res.check(sigma_bar(k) == h, tt + ": sigma_bar(sigma) != id");
        res.check(sigma(sigma_bar(h)) == h, tt + ": sigma(sigma_bar) != id");
      }
      if (on(Suite::crossmodel)) {
        Hive k = sigma(h);
        res.check(is_lr_hive(k), tt + ": sigma(H) is not an LR hive");
        res.check(hive_from_tableau(s, n) == k, tt + ": f(rho T) != sigma(f T)");
        if (h.lam(n) > 0 && h.u.column_sum(n) > 0)
          res.check(sigma(psi(h)) == phi(k, n).hive, tt + ": sigma(psi H) != phi_n(sigma H)");
      }
      if (on(Suite::crystal)) {
        SkewTableau c = commutor_hk(t, n);
        res.check(commutor_hk(c, n) == t, tt + ": commutor_hk not involutive");
        res.check(schutzenberger(tau(t, n), n) == gamma(c, n), tt + ": xi(tau T) != gamma(commutor T)");
        res.check(schutzenberger(gamma(t, n), n) == tau(c, n), tt + ": xi(gamma T) != tau(commutor T)");
        SkewTableau g = gamma(t, n);
        res.check(schutzenberger(schutzenberger(g, n), n) == g, tt + ": xi^2 != id");
        ++res.coincidence_checked;
        if (c == s)
          ++res.coincidence_equal;
        else
          res.counterexamples.push_back(tt + " rho=" + to_string(s) + " commutor_hk=" + to_string(c));
      }
    }
  } catch (const std::exception& e) {
    res.check(false, tag + ": exception " + e.what());
  }
  return res;
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opts) {
  if (opts.max_weight < 0 || opts.max_n < 1) throw InvalidInput("bounds must be positive");
  auto triples = sweep_triples(opts.max_weight, opts.max_n);
  std::vector<TripleResult> results(triples.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < triples.size();)
      results[i] = run_triple(triples[i], opts.suite, opts.max_n);
  };
  int nt = std::min<int>(thread_count(opts.threads), static_cast<int>(std::max<std::size_t>(triples.size(), 1)));
  std::vector<std::thread> pool;
  for (int i = 1; i < nt; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  VerifyReport rep;
  rep.triples = static_cast<std::int64_t>(triples.size());
  for (auto& r : results) {
    rep.tableaux += r.tableaux;
    rep.hives += r.hives;
    rep.checks += r.checks;
    rep.failures += static_cast<std::int64_t>(r.failures.size());
    for (auto& f : r.failures)
      if (rep.failure_log.size() < opts.max_listed_failures) rep.failure_log.push_back(std::move(f));
    rep.coincidence.checked += r.coincidence_checked;
    rep.coincidence.equal += r.coincidence_equal;
    for (auto& c : r.counterexamples) rep.coincidence.counterexamples.push_back(std::move(c));
  }
  return rep;
}

}  // namespace lrcomm
