#include <gtest/gtest.h>

#include <random>
#include <set>

#include <tradeoff/critpoints.hpp>

using namespace tradeoff;

namespace {

PolynomialPair double_well() {
  return {Polynomial::parse("1,0,-2,0,1"), Polynomial::parse("0,1"), Rational(-2), Rational(2)};
}

Polynomial from_roots(const std::vector<Rational>& roots) {
  Polynomial p(std::vector<Rational>{Rational(1)});
  for (const auto& r : roots) p = p * Polynomial(std::vector<Rational>{-r, Rational(1)});
  return p;
}

}  // namespace

TEST(Polynomial, ParseEvaluateDerive) {
  const auto p = Polynomial::parse("1,0,-2,0,1");
  EXPECT_EQ(p.degree(), 4);
  EXPECT_EQ(p(Rational(1)), Rational(0));
  EXPECT_EQ(p(Rational(1, 2)), Rational(9, 16));
  EXPECT_EQ(p.derivative(), Polynomial::parse("0,-4,0,4"));
  EXPECT_TRUE(Polynomial::parse("0,0").is_zero());
  EXPECT_THROW(Polynomial::parse("1,x"), input_error);
}

TEST(Polynomial, DivisionAndGcd) {
  const auto a = from_roots({Rational(1), Rational(2), Rational(-1, 3)});
  const auto b = from_roots({Rational(2), Rational(5)});
  const auto [q, r] = a.divmod(b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
  EXPECT_EQ(Polynomial::gcd(a, b), from_roots({Rational(2)}));
  const auto sq = from_roots({Rational(1), Rational(1), Rational(3)});
  EXPECT_EQ(sq.squarefree(), from_roots({Rational(1), Rational(3)}));
}

TEST(Polynomial, IntervalEvaluationEncloses) {
  const auto p = Polynomial::parse("1,-3,0,2");
  std::mt19937_64 rng(1);
  for (int k = 0; k < 200; ++k) {
    const Rational lo(static_cast<long>(rng() % 41) - 20, 8);
    const Rational hi = lo + Rational(1 + static_cast<long>(rng() % 8), 16);
    const Interval e = p(Interval{lo, hi});
    for (int s = 0; s <= 4; ++s) {
      const Rational x = lo + (hi - lo) * Rational(s, 4);
      EXPECT_LE(e.lo, p(x));
      EXPECT_LE(p(x), e.hi);
    }
  }
}

TEST(Sturm, CountsDistinctRootsInHalfOpenIntervals) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    std::set<Rational> distinct;
    std::vector<Rational> roots;
    const int n = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) {
      const Rational r(static_cast<long>(rng() % 81) - 40, 1 + static_cast<long>(rng() % 6));
      roots.push_back(r);
      distinct.insert(r);
      if (rng() % 4 == 0) roots.push_back(r);  // repeated root
    }
    const SturmSequence s(from_roots(roots).squarefree());
    for (int k = 0; k < 10; ++k) {
      Rational a(static_cast<long>(rng() % 121) - 60, 3), b(static_cast<long>(rng() % 121) - 60, 3);
      if (b < a) std::swap(a, b);
      int want = 0;
      for (const auto& r : distinct) want += (a < r && r <= b) ? 1 : 0;
      EXPECT_EQ(s.count(a, b), want);
    }
  }
}

TEST(CriticalPoints, IsolatesRootsToTheRequestedWidth) {
  const auto pair = double_well();
  const auto at_zero = critical_points(pair, Rational(0));
  ASSERT_EQ(at_zero.size(), 3u);
  EXPECT_EQ(at_zero[0].lo, Rational(-1));
  EXPECT_TRUE(at_zero[0].is_point());
  EXPECT_EQ(at_zero[1].lo, Rational(0));
  EXPECT_EQ(at_zero[2].hi, Rational(1));

  const auto roots = critical_points(pair, Rational(1, 10));
  ASSERT_EQ(roots.size(), 3u);
  const Polynomial d = pair.h(Rational(1, 10)).derivative();
  for (const auto& r : roots) {
    EXPECT_LE(r.width(), default_root_width());
    EXPECT_LE(d(r.lo).sign() * d(r.hi).sign(), 0);
  }
}

TEST(CriticalPoints, DegenerateDerivativeIsReported) {
  const PolynomialPair pair{Polynomial::parse("0,0,1"), Polynomial::parse("0,0,-1"), Rational(-1), Rational(1)};
  EXPECT_THROW(critical_points(pair, Rational(1)), degenerate_error);
  const PolynomialPair linear_f{Polynomial::parse("0,1"), Polynomial::parse("0,1"), Rational(-1), Rational(1)};
  EXPECT_THROW(critical_points(linear_f, Rational(0)), input_error);
}

TEST(CriticalPoints, DoubleWellIsFlaggedOnlyAtZero) {
  const auto pair = double_well();
  const auto zero = analyze_critical(pair, Rational(0));
  EXPECT_TRUE(zero.flagged());
  EXPECT_EQ(zero.max_gap(), Rational(2));
  for (long k = 1; k <= 10; ++k) EXPECT_FALSE(analyze_critical(pair, Rational(k, 10)).flagged()) << k;
}

TEST(CriticalPoints, EqualHWithEqualGIsNotCertified) {
  // F = u^4 - u^2 is even and G = u^2 too, so the two wells tie in both H and G
  const PolynomialPair pair{Polynomial::parse("0,0,-1,0,1"), Polynomial::parse("0,0,1"), Rational(-2), Rational(2)};
  const auto rep = analyze_critical(pair, Rational(1, 4));
  EXPECT_FALSE(rep.groups.empty());
  EXPECT_FALSE(rep.flagged());
}
