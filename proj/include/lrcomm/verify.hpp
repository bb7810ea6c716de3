#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "io.hpp"

namespace lrcomm {

struct Triple {
  Partition lambda, mu, nu;
};

// Every (lambda, mu, nu) with |lambda| <= max_weight, l(lambda) <= max_len,
// mu, nu inside lambda and |lambda| = |mu| + |nu|.
std::vector<Triple> sweep_triples(int max_weight, int max_len);

enum class Suite { involution, symmetry, crossmodel, counts, crystal, all };
Suite parse_suite(const std::string& s);

struct VerifyOptions {
  Suite suite = Suite::all;
  int max_weight = 10;
  int max_n = 4;
  int threads = 0;  // 0: LR_THREADS, else hardware concurrency
  std::size_t max_listed_failures = 50;
};

struct Coincidence {
  std::int64_t checked = 0, equal = 0;
  std::vector<std::string> counterexamples;
};

struct VerifyReport {
  std::int64_t triples = 0, tableaux = 0, hives = 0, checks = 0, failures = 0;
  std::vector<std::string> failure_log;  // first few, in sweep order
  Coincidence coincidence;               // commutor_hk versus rho, never a failure
  bool ok() const { return failures == 0; }
  io::json to_json() const;
};

int thread_count(int requested);

VerifyReport run_verify(const VerifyOptions& opts);

}  // namespace lrcomm
