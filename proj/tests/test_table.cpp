#include <gtest/gtest.h>

#include <random>

#include <tradeoff/table.hpp>

#include "oracles.hpp"

using namespace tradeoff;

TEST(Table, EvaluatesTheAffineMap) {
  const auto t = remark12_fixture(3);
  EXPECT_EQ(eval_h(t, 1, Rational(3, 4)), Rational(-1, 4));
  for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(eval_h(t, i, Rational(0)), t.f(i));
}

TEST(Table, FixtureValuesMatchClosedForm) {
  const auto t3 = remark12_fixture(3);
  ASSERT_EQ(t3.size(), 4u);
  EXPECT_EQ(t3.f(0), Rational(0));
  EXPECT_EQ(t3.f(1), Rational(1, 2));
  EXPECT_EQ(t3.f(2), Rational(5, 4));
  EXPECT_EQ(t3.f(3), Rational(17, 8));
  for (std::size_t k = 0; k < t3.size(); ++k) EXPECT_EQ(t3.g(k), Rational(-static_cast<long>(k)));

  const auto t1 = remark12_fixture(1);
  ASSERT_EQ(t1.size(), 2u);
  EXPECT_EQ(t1.f(1), Rational(1, 2));

  EXPECT_EQ(remark12_fixture(8).f(8), Rational(1793, 256));
}

TEST(Table, FixtureIsConvexInU) {
  // F(k+1) - F(k) = 1 - 2^-(k+1) increases with k
  const auto t = remark12_fixture(12);
  for (std::size_t k = 0; k + 1 < t.size(); ++k) {
    const Rational step = t.f(k + 1) - t.f(k);
    Rational expected = 1;
    for (std::size_t i = 0; i <= k; ++i) expected *= Rational(1, 2);
    EXPECT_EQ(step, Rational(1) - expected);
  }
}

TEST(Table, MatchesNaiveEvaluation) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = oracle::random_table(rng, 10, 2);
    const auto lines = oracle::raw(t);
    for (int k = 0; k < 20; ++k) {
      const std::vector<Rational> a{oracle::random_alpha(rng, 5, 7), oracle::random_alpha(rng, 5, 7)};
      const std::vector<mpq_class> qa{a[0].mpq(), a[1].mpq()};
      for (std::size_t i = 0; i < t.size(); ++i)
        EXPECT_EQ(eval_h<Rational>(t, i, a).mpq(), oracle::naive_h(lines[i], qa));
      EXPECT_EQ(direct_min<Rational>(t, a).mpq(), oracle::brute_min(lines, qa));
    }
  }
}

TEST(Table, AffineInAlpha) {
  std::mt19937_64 rng(9);
  const auto t = oracle::random_table(rng, 15);
  for (int k = 0; k < 50; ++k) {
    const Rational a = oracle::random_alpha(rng, 4, 9), b = oracle::random_alpha(rng, 4, 9);
    const Rational theta(static_cast<long>(rng() % 11), 10);
    const Rational mix = theta * a + (Rational(1) - theta) * b;
    for (std::size_t i = 0; i < t.size(); ++i)
      EXPECT_EQ(eval_h(t, i, mix), theta * eval_h(t, i, a) + (Rational(1) - theta) * eval_h(t, i, b));
  }
}

TEST(Table, RejectsMalformedInput) {
  using C = Candidate<Rational>;
  EXPECT_THROW(ObjectiveTable<Rational>(1, {}), input_error);
  EXPECT_THROW(ObjectiveTable<Rational>(0, {C{"a", {}, 1, {}, false}}), input_error);
  EXPECT_THROW(ObjectiveTable<Rational>(2, {C{"a", {}, 1, {Rational(1)}, false}}), input_error);
  EXPECT_THROW(ObjectiveTable<Rational>(1, {C{"a", {}, 0, {Rational(1)}, true}}), input_error);

  const auto t = remark12_fixture(2);
  EXPECT_THROW(eval_h(t, 7, Rational(0)), input_error);
  EXPECT_THROW(eval_h(t, 0, Rational(-1)), input_error);
  const std::vector<Rational> two{Rational(0), Rational(0)};
  EXPECT_THROW(eval_h<Rational>(t, 0, two), input_error);
  EXPECT_THROW(remark12_fixture(0), input_error);
}

TEST(Table, InfiniteCandidatesNeverMinimize) {
  using C = Candidate<Rational>;
  const ObjectiveTable<Rational> t(1, {C{"inf", {}, 0, {Rational(-100)}, true}, C{"a", {}, 3, {Rational(1)}, false}});
  EXPECT_THROW(eval_h(t, 0, Rational(1)), input_error);
  const Rational a(5);
  EXPECT_EQ(direct_min<Rational>(t, std::span<const Rational>(&a, 1)), Rational(8));
}

TEST(Table, RayKinksAndValues) {
  const auto ray = remark12_ray(3);
  ray.validate();
  const auto vals = ray.kink_values();
  ASSERT_EQ(vals.size(), 3u);
  EXPECT_EQ(vals[0], Rational(0));
  EXPECT_EQ(vals[1], Rational(1, 2));
  EXPECT_EQ(vals[2], Rational(5, 4));
  EXPECT_EQ(ray.slopes.back(), Rational(7, 8));

  auto bad = ray;
  bad.slopes[1] = Rational(1, 4);
  EXPECT_THROW(bad.validate(), input_error);
  bad = ray;
  bad.breakpoints[0] = Rational(1, 2);
  EXPECT_THROW(bad.validate(), input_error);
}

TEST(Table, ConvertsBackends) {
  const auto t = convert_table<Approx>(remark12_fixture(3), 1e-12);
  EXPECT_DOUBLE_EQ(t.f(3).value(), 17.0 / 8.0);
  EXPECT_EQ(t.f(3).tolerance(), 1e-12);
}
