#include <gtest/gtest.h>

#include <random>

#include <tradeoff/multiparam.hpp>

#include "oracles.hpp"

using namespace tradeoff;

namespace {

const std::vector<Rational> kKinks{Rational(1, 2), Rational(3, 4), Rational(7, 8)};

}

TEST(Grid, UniformAxesAndLines) {
  const auto grid = AlphaGrid<Rational>::uniform(2, Rational(9, 10), 10);
  EXPECT_EQ(grid.axis(0).size(), 11u);
  EXPECT_EQ(grid.axis(1)[1], Rational(9, 100));
  const auto lines = grid.lines(0);
  ASSERT_EQ(lines.size(), 11u);
  EXPECT_EQ(lines[3], std::vector<Rational>{Rational(27, 100)});

  const auto g3 = AlphaGrid<Rational>::uniform(3, Rational(1), 2);
  const auto l3 = g3.lines(1);
  ASSERT_EQ(l3.size(), 9u);
  EXPECT_EQ(l3[1], (std::vector<Rational>{Rational(0), Rational(1, 2)}));
  EXPECT_THROW(AlphaGrid<Rational>({{Rational(1), Rational(0)}}), input_error);
}

TEST(Slices, FoldFixedCoordinatesIntoIntercepts) {
  std::mt19937_64 rng(3);
  const auto t = oracle::random_table(rng, 12, 3);
  const auto lines = oracle::raw(t);
  const std::vector<Rational> fixed{Rational(1, 3), Rational(2)};
  const auto s = slice_table<Rational>(t, 1, fixed);
  for (int k = 0; k < 20; ++k) {
    const Rational a = oracle::random_alpha(rng, 3, 5);
    const std::vector<mpq_class> full{fixed[0].mpq(), a.mpq(), fixed[1].mpq()};
    EXPECT_EQ(build_envelope(s).value(a).mpq(), oracle::brute_min(lines, full));
  }
  EXPECT_THROW(slice_table<Rational>(t, 3, fixed), input_error);
}

TEST(Multiscan, AxisOneLinesCarryTheThreeKinks) {
  const auto t = remark12_fixture_2d(3);
  const auto grid = AlphaGrid<Rational>::uniform(2, Rational(9, 10), 10);
  const auto m = exceptional_measure(t, grid, 0, 2);
  ASSERT_EQ(m.lines.size(), 11u);
  for (const auto& l : m.lines) EXPECT_EQ(l.exceptional, kKinks);
  EXPECT_EQ(m.max_count, 3u);
  EXPECT_EQ(m.measure_estimate, Rational(0));
  EXPECT_EQ(m.cell_fraction(), Rational(3, 10));

  const auto m2 = exceptional_measure(t, grid, 1);
  for (const auto& l : m2.lines) EXPECT_TRUE(l.exceptional.empty());
  EXPECT_EQ(m2.cell_fraction(), Rational(0));
}

TEST(Multiscan, CellFractionShrinksUnderRefinement) {
  const auto t = remark12_fixture_2d(3);
  const std::vector<std::size_t> levels{10, 20, 100};
  const auto fr = cell_fraction_refinement<Rational>(t, Rational(9, 10), 0, levels, 4);
  ASSERT_EQ(fr.size(), 3u);
  EXPECT_EQ(fr[0], Rational(3, 10));
  EXPECT_EQ(fr[2], Rational(3, 100));
  EXPECT_LT(fr[1], fr[0]);
  EXPECT_LT(fr[2], fr[1]);
}

TEST(Multiscan, ThreadCountDoesNotChangeResults) {
  std::mt19937_64 rng(17);
  const auto t = oracle::random_table(rng, 20, 2);
  const auto grid = AlphaGrid<Rational>::uniform(2, Rational(3), 12);
  const auto a = exceptional_measure(t, grid, 0, 1);
  const auto b = exceptional_measure(t, grid, 0, 4);
  ASSERT_EQ(a.lines.size(), b.lines.size());
  for (std::size_t l = 0; l < a.lines.size(); ++l) EXPECT_EQ(a.lines[l].exceptional, b.lines[l].exceptional);
  EXPECT_EQ(a.cells_hit, b.cells_hit);
}

TEST(Multiscan, SliceExceptionalPointsMatchBruteForce) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const auto t = oracle::random_table(rng, 15, 2);
    const auto grid = AlphaGrid<Rational>::uniform(2, Rational(2), 4);
    const auto m = exceptional_measure(t, grid, 1);
    for (const auto& l : m.lines) {
      const auto want = oracle::brute_exceptional(oracle::raw(slice_table<Rational>(t, 1, l.fixed)));
      std::vector<mpq_class> in_range;
      for (const auto& x : want)
        if (x <= 2) in_range.push_back(x);
      ASSERT_EQ(l.exceptional.size(), in_range.size());
      for (std::size_t k = 0; k < in_range.size(); ++k) EXPECT_EQ(l.exceptional[k].mpq(), in_range[k]);
    }
  }
}

TEST(Concavity, MidpointInequalityHolds) {
  const auto t = remark12_fixture_2d(3);
  const auto grid = AlphaGrid<Rational>::uniform(2, Rational(9, 10), 10);
  const auto v = concavity_check(t, grid, 1, 500);
  EXPECT_EQ(v.triples, 500u);

  std::mt19937_64 rng(4);
  const auto r = oracle::random_table(rng, 30, 3);
  EXPECT_NO_THROW(concavity_check(r, AlphaGrid<Rational>::uniform(3, Rational(5), 5), 2, 200));
}

TEST(Semicontinuity, HoldsOnEverySlice) {
  const auto t = remark12_fixture_2d(3);
  const auto grid = AlphaGrid<Rational>::uniform(2, Rational(9, 10), 10);
  const auto v = semicontinuity_check(t, grid, 0);
  EXPECT_EQ(v.lines, 11u);
  EXPECT_EQ(v.breakpoints_checked, 33u);
  EXPECT_EQ(v.bound, Rational(3));
  const auto w = semicontinuity_check(t, grid, 1);
  EXPECT_EQ(w.breakpoints_checked, 0u);
  EXPECT_EQ(w.bound, Rational(0));

  std::mt19937_64 rng(6);
  const auto r = oracle::random_table(rng, 25, 2);
  EXPECT_NO_THROW(semicontinuity_check(r, AlphaGrid<Rational>::uniform(2, Rational(4), 8), 0));
}
