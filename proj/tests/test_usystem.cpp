#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "lrcomm/usystem.hpp"

using namespace lrcomm;

namespace {
USystem random_system(std::mt19937& rng, int n, int max_entry) {
  std::uniform_int_distribution<int> d(0, max_entry);
  UArray u(n);
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) u(i, j) = d(rng);
  return USystem(u);
}
const USystem S4 = parse_usystem("1;1,2;1,2,1");
}  // namespace

TEST_CASE("parse and print") {
  CHECK(S4.n() == 4);
  CHECK(S4.u(2, 4) == 2);
  CHECK(to_string(S4) == "1;1,2;1,2,1");
  CHECK(parse_usystem("").n() == 1);
  CHECK_THROWS_AS(parse_usystem("1;x"), InvalidInput);
  CHECK_THROWS_AS(parse_usystem("1;1"), InvalidInput);
  CHECK_THROWS_AS(parse_usystem("-1"), InvalidInput);
}

TEST_CASE("sigma_u examples") {
  // V_{13}=1, V_{23}=3; V_{14}=1, V_{24}=1, V_{34}=2
  CHECK(to_string(sigma_u(S4)) == "1;1,3;1,1,2");
  CHECK(sigma_u(sigma_u(S4)) == S4);
  CHECK(sigma_u(USystem(UArray(5))) == USystem(UArray(5)));
  CHECK(sigma_u(parse_usystem("")) == parse_usystem(""));
}

TEST_CASE("sigma_u is an involution on random systems") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    USystem s = random_system(rng, 1 + trial % 5, 3);
    CHECK(sigma_u(sigma_u(s)) == s);
  }
}

TEST_CASE("canonical dressing") {
  Hive h = canonical_dressing(parse_usystem("1"));
  CHECK(h.lambda == Seq{1, 1});
  CHECK(h.mu == Seq{1, 0});
  CHECK(h.nu == Seq{1, 0});
  CHECK(is_lr_hive(h));
  CHECK(canonical_dressing(USystem(UArray(3))) == Hive(3));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    USystem s = random_system(rng, 1 + trial % 5, 3);
    Hive c = canonical_dressing(s);
    CHECK(c.u == s.u);
    CHECK(is_lr_hive(c));
    auto f = dressing_feasible(s, c.mu, c.nu);
    CHECK(f.feasible);
    CHECK(f.lambda == c.lambda);
  }
}

TEST_CASE("feasibility examples") {
  auto f = dressing_feasible(S4, {6, 5, 2, 0}, {5, 4, 1, 0});
  CHECK(f.feasible);
  CHECK(f.lambda == Seq{8, 6, 5, 4});
  auto g = dressing_feasible(S4, {8, 7, 4, 2}, {9, 8, 5, 4});
  CHECK(g.feasible);
  CHECK(g.lambda == Seq{14, 12, 11, 10});
  auto z = dressing_feasible(S4, {0, 0, 0, 0}, {0, 0, 0, 0});
  CHECK_FALSE(z.feasible);
  CHECK_FALSE(z.reason.empty());
  CHECK_THROWS_AS(dressing_feasible(S4, {1}, {1}), InvalidInput);
}

TEST_CASE("feasibility matches hive validity on small boundaries") {
  // every weakly decreasing mu, nu with entries <= 4 against three systems
  int agree = 0;
  for (const char* text : {"1;1,2", "0;2,1", "1;0,1;1,0,1"}) {
    USystem s = parse_usystem(text);
    int n = s.n();
    std::vector<Seq> bounds;
    for (const auto& p : partitions_of(0, n)) bounds.push_back(p.padded(n));
    for (int k = 1; k <= 4 * n; ++k)
      for (const auto& p : partitions_of(k, n, 4)) bounds.push_back(p.padded(n));
    for (const auto& mu : bounds)
      for (const auto& nu : bounds) {
        auto f = dressing_feasible(s, mu, nu);
        Hive h(f.lambda, mu, nu, s.u);
        CHECK(f.feasible == is_lr_hive(h));
        ++agree;
      }
  }
  CHECK(agree > 100);
}

TEST_CASE("shift") {
  Hive h(4, {8, 6, 5, 4}, {6, 5, 2, 0}, {5, 4, 1, 0}, {{1}, {1, 2}, {1, 2, 1}});
  Hive up = shift_dressing(h, 2, 4);
  CHECK(up.lambda == Seq{14, 12, 11, 10});
  CHECK(up.mu == Seq{8, 7, 4, 2});
  CHECK(up.nu == Seq{9, 8, 5, 4});
  CHECK(is_lr_hive(up));
  CHECK(shift_dressing(h, 0, 0) == h);
  Hive down = shift_dressing(h, -2, -4);
  CHECK(down.lambda == Seq{2, 0, -1, -2});
  CHECK(down.mu == Seq{4, 3, 0, -2});
  CHECK(down.nu == Seq{1, 0, -3, -4});
  CHECK(is_rational_hive(down));
  CHECK_FALSE(is_lr_hive(down));
  CHECK(sigma(up).u == sigma(h).u);
}

TEST_CASE("sigma on any dressing gives sigma_u") {
  std::mt19937 rng(3);
  DressingSampler sample(17, 3);
  for (int trial = 0; trial < 500; ++trial) {
    USystem s = random_system(rng, 1 + trial % 5, 2);
    USystem v = sigma_u(s);
    CHECK(sigma(canonical_dressing(s)).u == v.u);
    for (int k = 0; k < 3; ++k) {
      Hive h = sample(s);
      CHECK(h.u == s.u);
      CHECK(is_lr_hive(h));
      CHECK(sigma(h).u == v.u);
    }
  }
}

TEST_CASE("sampler is deterministic per seed") {
  DressingSampler a(42), b(42);
  for (int i = 0; i < 20; ++i) CHECK(a(S4) == b(S4));
}
