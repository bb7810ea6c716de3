#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "lrcomm/deletion.hpp"
#include "oracles.hpp"

using namespace lrcomm;

namespace {
// running four-row example, shape (8,6,5,4)/(6,5,2), weight (5,4,1)
const SkewTableau T4{{0, 0, 0, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 0, 1}, {0, 0, 1, 2, 2}, {1, 2, 2, 3}};
}  // namespace

TEST_CASE("validators on the running example") {
  CHECK(is_semistandard(T4));
  CHECK(is_lattice(T4));
  CHECK(T4.outer() == Partition{8, 6, 5, 4});
  CHECK(T4.inner() == Partition{6, 5, 2});
  CHECK(Partition(T4.weight()) == Partition{5, 4, 1, 0});
}

TEST_CASE("semistandard witnesses") {
  CHECK(is_semistandard(SkewTableau{}));
  auto w = semistandard_check(SkewTableau{{2, 1}});
  CHECK_FALSE(w.ok);
  REQUIRE(w.cell.has_value());
  CHECK(*w.cell == Cell{1, 2});
  auto col = semistandard_check(SkewTableau{{1, 2}, {1}});
  CHECK_FALSE(col.ok);
  CHECK(*col.cell == Cell{2, 1});
}

TEST_CASE("lattice witnesses") {
  CHECK(is_lattice(SkewTableau{{1}, {2}}));
  auto w = lattice_check(SkewTableau{{2}});
  CHECK_FALSE(w.ok);
  CHECK(w.row == 1);
  CHECK(w.letter == 2);
  auto v = lr_validity(SkewTableau{{2}});
  CHECK(v.semistandard);
  CHECK_FALSE(v.lattice);
  CHECK_FALSE(v.first_violation.empty());
}

TEST_CASE("weight") {
  CHECK(SkewTableau{}.weight().empty());
  CHECK(Partition(yamanouchi(Partition{7, 5, 3}).weight()) == Partition{7, 5, 3});
}

TEST_CASE("tableau shape is checked") {
  CHECK_THROWS_AS(SkewTableau({{0, 1}, {0, 0, 1}}), InvalidInput);  // outer not a partition
  CHECK_THROWS_AS(SkewTableau({{1, 0}}), InvalidInput);
  CHECK_THROWS_AS(SkewTableau(Partition{2}, Partition{}, {{0, 1}}), InvalidInput);
}

TEST_CASE("row-prefix lattice test agrees with the reading-word oracle") {
  // every filling of small skew shapes with letters <= 3
  int agree = 0;
  for (int k = 1; k <= 5; ++k)
    for (const auto& o : partitions_of(k, 3))
      for (const auto& in : subpartitions(o)) {
        auto cells = skew_cells(SkewShape(o, in));
        std::size_t m = cells.size();
        if (m == 0 || m > 4) continue;
        std::vector<int> f(m, 1);
        for (;;) {
          std::vector<Seq> rows;
          for (int i = 1; i <= o.length(); ++i) rows.push_back(Seq(in(i), 0));
          for (std::size_t c = 0; c < m; ++c) rows[cells[c].row - 1].push_back(f[c]);
          SkewTableau t(rows);
          if (oracle::semistandard(rows)) {
            CHECK(is_lattice(t) == oracle::lattice_word(rows));
            ++agree;
          }
          CHECK(is_semistandard(t) == oracle::semistandard(rows));
          std::size_t p = 0;
          while (p < m && f[p] == 3) f[p++] = 1;
          if (p == m) break;
          ++f[p];
        }
      }
  CHECK(agree > 100);
}

TEST_CASE("gt_to_ssyt examples") {
  GTPattern beta{{{5, 4, 1, 0}, {4, 2, 0}, {3, 0}, {2}}};
  SkewTableau tb{{1, 1, 2, 3, 4}, {3, 3, 4, 4}, {4}};
  CHECK(gt_to_ssyt(beta) == tb);
  CHECK(ssyt_to_gt(tb, 4) == beta);
  GTPattern alpha{{{6, 5, 2, 0}, {6, 3, 1}, {5, 3}, {4}}};
  SkewTableau ta{{1, 1, 1, 1, 2, 3}, {2, 2, 2, 4, 4}, {3, 4}};
  CHECK(gt_to_ssyt(alpha) == ta);
  CHECK(ssyt_to_gt(ta, 4) == alpha);
  CHECK(gt_weight(alpha) == Seq{4, 4, 2, 3});
  CHECK(gt_weight(GTPattern{{{4}}}) == Seq{4});
  CHECK(gt_to_ssyt(GTPattern{{{4}}}) == SkewTableau{{1, 1, 1, 1}});
  CHECK_THROWS_AS(gt_to_ssyt(GTPattern{{{3, 1}, {0}}}), InvalidInput);
  CHECK_THROWS_AS(ssyt_to_gt(SkewTableau{{0, 1}}, 2), InvalidInput);
  CHECK_THROWS_AS(ssyt_to_gt(SkewTableau{{2, 1}}, 2), InvalidInput);
}

TEST_CASE("GT <-> SSYT round trip on all SSYT of size <= 8, letters <= 4") {
  int count = 0;
  for (int k = 0; k <= 8; ++k)
    for (const auto& sh : partitions_of(k, 4))
      for (const auto& rows : oracle::ssyt(sh.parts(), 4)) {
        SkewTableau t(rows);
        GTPattern p = ssyt_to_gt(t, 4);
        CHECK(gt_violation(p).empty());
        CHECK(gt_to_ssyt(p) == t);
        CHECK(Partition(p.type()) == sh);
        ++count;
      }
  CHECK(count > 1000);
}

TEST_CASE("LR tableaux have partition weight inside the outer shape") {
  for (int k = 0; k <= 7; ++k)
    for (const auto& o : partitions_of(k, 4))
      for (const auto& in : subpartitions(o))
        for (const auto& w : partitions_of(k - in.size(), 4))
          for (const auto& rows : oracle::lr_tableaux(o.parts(), in.padded(o.length()), w.parts())) {
            SkewTableau t(rows);
            CHECK(is_lr(t));
            CHECK(weakly_decreasing(t.weight()));
            CHECK(contains(Partition(t.weight()), o));
          }
}

TEST_CASE("adjoin_cell") {
  CHECK(adjoin_cell(SkewTableau{}, {1, 1}, 1) == SkewTableau{{1}});
  CHECK_THROWS_AS(adjoin_cell(SkewTableau{{1}}, {2, 2}, 2), InvalidInput);
  CHECK_THROWS_AS(adjoin_cell(SkewTableau{{1}}, {1, 3}, 2), InvalidInput);

  // S- is the five-row example without its bottom cell; delta_4 by hand
  // gives the three rows below, and the bottom letter 3 goes back at (4,1).
  SkewTableau s_minus{{0, 0, 0, 0, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 0, 1, 1, 2, 2}, {0, 0, 0, 1, 1, 2}, {1, 2, 2, 3}};
  SkewTableau d4{{0, 0, 0, 0, 0, 0, 1, 1, 1}, {0, 0, 0, 1, 1, 1, 2, 2, 2}, {0, 0, 1, 2, 2, 3}};
  CHECK(full_row_deletion(s_minus, 4).tableau == d4);
  SkewTableau s_star = adjoin_cell(d4, {4, 1}, 3);
  CHECK(s_star.rows().back() == Seq{3});
  CHECK(s_star.outer() == Partition{9, 9, 6, 1});
  CHECK(s_star.inner() == Partition{6, 3, 2});
}
