#include "sadic/dimension.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sadic/error.hpp"

using sadic::MoranEquation;

namespace {

constexpr double kAlphaS30 = 0.438017879485942;
constexpr double kAlphaSprime3 = 0.210309917857152;
constexpr double kLog3Of2 = 0.630929753571457;
constexpr double kAlphaS40 = 0.439573210803319;
constexpr double kAlphaS41 = 0.202842615687912;
constexpr double kAlphaTilde4 = 0.688887971527517;

double log_s(double x, int s) { return std::log(x) / std::log(static_cast<double>(s)); }

void expect_certified(const MoranEquation& eq, const sadic::DimensionResult& r, double tol) {
  EXPECT_LE(r.lo, r.alpha);
  EXPECT_LE(r.alpha, r.hi);
  EXPECT_LE(r.hi - r.lo, tol);
  EXPECT_GE(eq.evaluate(r.lo), 1.0 - 1e-15);
  EXPECT_LE(eq.evaluate(r.hi), 1.0 + 1e-15);
  EXPECT_LE(r.residual, 10 * tol);
}

}  // namespace

TEST(MoranEquation, Validation) {
  EXPECT_THROW(MoranEquation(3, {}), sadic::InvalidEquation);
  EXPECT_THROW(MoranEquation(3, {{1, 0}, {2, 0}}), sadic::InvalidEquation);
  EXPECT_THROW(MoranEquation(3, {{0, 1}}), sadic::InvalidEquation);
  EXPECT_THROW(MoranEquation(3, {{1, -1}, {2, 2}}), sadic::InvalidEquation);
  EXPECT_THROW(MoranEquation(1, {{1, 1}}), sadic::InvalidEquation);
  const MoranEquation eq(3, {{1, 1}, {2, 0}, {3, 2}});
  EXPECT_EQ(eq.counts().size(), 2u);
  EXPECT_EQ(eq.total(), 3);
  EXPECT_DOUBLE_EQ(eq.evaluate(0.0), 3.0);
}

TEST(MoranSolve, GoldenRatioCase) {
  const MoranEquation eq(3, {{1, 1}, {2, 1}});
  const auto r = sadic::moran_solve(eq);
  EXPECT_NEAR(r.alpha, kAlphaS30, 1e-9);
  EXPECT_NEAR(r.alpha, log_s((std::sqrt(5.0) + 1) / 2, 3), 1e-9);
  expect_certified(eq, r, sadic::kDefaultTolerance);
  ASSERT_TRUE(r.closed_form.has_value());
  EXPECT_EQ(r.closed_form->expression, "log_3(2/(sqrt(5)-1))");
  EXPECT_NEAR(r.closed_form->value, r.alpha, 1e-9);
}

TEST(MoranSolve, PurePowerCase) {
  const MoranEquation eq(3, {{3, 2}});
  const auto r = sadic::moran_solve(eq);
  EXPECT_NEAR(r.alpha, kAlphaSprime3, 1e-9);
  EXPECT_NEAR(r.alpha, log_s(2.0, 3) / 3, 1e-9);
  ASSERT_TRUE(r.closed_form.has_value());
  EXPECT_EQ(r.closed_form->expression, "(1/3)*log_3(2)");
}

TEST(MoranSolve, CubicAgainstNewtonOracle) {
  const std::map<int, long> counts{{1, 1}, {2, 1}, {3, 1}};
  const auto r = sadic::moran_solve(MoranEquation(4, counts));
  EXPECT_NEAR(r.alpha, kAlphaS40, 1e-9);
  EXPECT_NEAR(r.alpha, oracle::dimension_from_root(oracle::polynomial_root(counts), 4), 1e-9);
  EXPECT_FALSE(r.closed_form.has_value());
}

TEST(MoranSolve, DegenerateCasesAreExact) {
  for (int s = 2; s <= 9; ++s) {
    for (int k = 1; k <= 4; ++k) {
      const auto one = sadic::moran_solve(MoranEquation(s, {{k, 1}}));
      EXPECT_EQ(one.alpha, 0.0);
      EXPECT_EQ(one.closed_form->expression, "0");
    }
    const auto full = sadic::moran_solve(MoranEquation(s, {{1, s}}));
    EXPECT_EQ(full.alpha, 1.0);
    const auto full2 = sadic::moran_solve(MoranEquation(s, {{2, s * s}}));
    EXPECT_EQ(full2.alpha, 1.0);
  }
}

TEST(MoranSolve, RandomEquationsAgainstOracle) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const int s = 2 + static_cast<int>(rng() % 9);
    std::map<int, long> counts;
    const int terms = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < terms; ++i) counts[1 + static_cast<int>(rng() % 6)] += 1 + static_cast<long>(rng() % 5);
    const MoranEquation eq(s, counts);
    if (eq.total() == 1) continue;
    const double tol = trial % 2 ? 1e-12 : 1e-8;
    const auto r = sadic::moran_solve(eq, tol);
    expect_certified(eq, r, tol);
    EXPECT_NEAR(r.alpha, oracle::dimension_from_root(oracle::polynomial_root(counts), s), 2 * tol);
    if (r.closed_form) EXPECT_NEAR(r.closed_form->value, r.alpha, std::max(1e-9, tol));
  }
}

TEST(MoranSolve, DimensionAboveOneWhenOvercounted) {
  const MoranEquation eq(3, {{1, 5}});
  const auto r = sadic::moran_solve(eq);
  EXPECT_NEAR(r.alpha, log_s(5.0, 3), 1e-9);
  expect_certified(eq, r, sadic::kDefaultTolerance);
  EXPECT_THROW(sadic::moran_solve(eq, 0.0), sadic::RangeError);
}

TEST(MoranSolve, AddingWordsNeverLowersDimension) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int s = 3 + static_cast<int>(rng() % 6);
    std::map<int, long> counts{{1 + static_cast<int>(rng() % 4), 1}};
    double prev = sadic::moran_solve(MoranEquation(s, counts)).alpha;
    for (int step = 0; step < 5; ++step) {
      counts[1 + static_cast<int>(rng() % 5)] += 1;
      const double next = sadic::moran_solve(MoranEquation(s, counts)).alpha;
      EXPECT_GE(next, prev - 1e-12);
      prev = next;
    }
  }
}

TEST(DimS, KnownValues) {
  EXPECT_NEAR(sadic::dim_S(3, 0).alpha, kAlphaS30, 1e-9);
  EXPECT_EQ(sadic::dim_S(3, 1).alpha, 0.0);
  EXPECT_EQ(sadic::dim_S(3, 2).alpha, 0.0);
  EXPECT_NEAR(sadic::dim_S(4, 0).alpha, kAlphaS40, 1e-9);
  const auto s41 = sadic::dim_S(4, 1);
  EXPECT_NEAR(s41.alpha, kAlphaS41, 1e-9);
  EXPECT_NEAR(std::pow(4.0, -s41.alpha), 0.754877666246693, 1e-9);
  const double s5[] = {0.40775, 0.23750, 0.29899, 0.34944, 0.37863};
  for (int u = 0; u < 5; ++u) EXPECT_NEAR(sadic::dim_S(5, u).alpha, s5[u], 5e-5) << "u=" << u;
}

TEST(DimTilde, KnownValues) {
  const auto t3 = sadic::dim_tilde(3);
  EXPECT_NEAR(t3.alpha, kLog3Of2, 1e-9);
  ASSERT_TRUE(t3.closed_form.has_value());
  EXPECT_EQ(t3.closed_form->expression, "log_3(2)");
  EXPECT_NEAR(sadic::dim_tilde(4).alpha, kAlphaTilde4, 1e-9);
  const double expected[] = {0.6744981, 0.6536343, 0.6359472, 0.6219977};
  for (int s = 5; s <= 8; ++s) EXPECT_NEAR(sadic::dim_tilde(s).alpha, expected[s - 5], 1e-7);
  EXPECT_THROW(sadic::dim_tilde(2), sadic::RangeError);
}

TEST(DimTilde, DominatesEveryBlockSet) {
  for (int s = 3; s <= 8; ++s) {
    const double t = sadic::dim_tilde(s).alpha;
    for (int u = 0; u < s; ++u) EXPECT_GE(t, sadic::dim_S(s, u).alpha) << "s=" << s << " u=" << u;
  }
}

TEST(DimAlphabet, DependsOnlyOnLengthCounts) {
  const auto a = sadic::dim_alphabet(sadic::sprime3_alphabet());
  const auto b = sadic::dim_alphabet(sadic::ComboAlphabet(3, {{2, 2, 2}, {0, 0, 0}}));
  EXPECT_EQ(a.alpha, b.alpha);
  EXPECT_NEAR(a.alpha, kAlphaSprime3, 1e-9);
  EXPECT_EQ(sadic::dim_alphabet(sadic::block_alphabet(5, 3)).alpha, sadic::dim_S(5, 3).alpha);
}

TEST(CountBoxes, HalfOpenBoxes) {
  const std::vector<sadic::Hull> unit{{sadic::Rational(0), sadic::Rational(1)}};
  EXPECT_EQ(sadic::count_boxes(unit, 3, 2), 10u);  // [0,1] touches box [1, 1+1/9)
  const std::vector<sadic::Hull> point{{sadic::Rational(1, 3), sadic::Rational(1, 3)}};
  EXPECT_EQ(sadic::count_boxes(point, 3, 5), 1u);
  const std::vector<sadic::Hull> two{{sadic::Rational(0), sadic::Rational(1, 10)},
                                     {sadic::Rational(1, 20), sadic::Rational(1, 9)}};
  EXPECT_EQ(sadic::count_boxes(two, 3, 2), 2u);
}

TEST(LeastSquares, ExactLine) {
  const std::vector<double> x{1, 2, 3, 4};
  const std::vector<double> y{3, 5, 7, 9};
  EXPECT_NEAR(sadic::least_squares_slope(x, y), 2.0, 1e-12);
}

TEST(BoxCount, TrivialSets) {
  const std::vector<int> scales{4, 5, 6, 7, 8};
  const std::vector<sadic::Hull> point{{sadic::Rational(1, 2), sadic::Rational(1, 2)}};
  EXPECT_NEAR(sadic::box_count_estimate(point, 3, scales, 12).slope, 0.0, 1e-12);
  const std::vector<sadic::Hull> unit{{sadic::Rational(0), sadic::Rational(1)}};
  EXPECT_NEAR(sadic::box_count_estimate(unit, 3, scales, 12).slope, 1.0, 0.01);
}

TEST(BoxCount, Validation) {
  const std::vector<sadic::Hull> unit{{sadic::Rational(0), sadic::Rational(1)}};
  EXPECT_THROW(sadic::box_count_estimate(unit, 3, std::vector<int>{4, 5}, 12), sadic::RangeError);
  EXPECT_THROW(sadic::box_count_estimate(unit, 3, std::vector<int>{4, 5, 13}, 12), sadic::RangeError);
  EXPECT_THROW(sadic::box_count_estimate(unit, 3, std::vector<int>{4, 4, 5}, 12), sadic::RangeError);
  const auto r = sadic::box_count_estimate(unit, 3, std::vector<int>{2, 3, 4, 5, 6}, 12);
  EXPECT_EQ(r.fitted, 3u);
  EXPECT_EQ(r.counts.size(), 5u);
  const auto all = sadic::box_count_estimate(unit, 3, std::vector<int>{2, 3, 4, 5, 6}, 12, {0, 5});
  EXPECT_EQ(all.fitted, 5u);
}

TEST(BoxCount, AgreesWithMoranRoot) {
  const std::vector<int> scales{4, 5, 6, 7, 8, 9, 10};
  const struct {
    sadic::ComboAlphabet alphabet;
    double target;
  } cases[] = {{sadic::block_alphabet(3, 0), kAlphaS30},
               {sadic::block_alphabet(4, 0), kAlphaS40},
               {sadic::tilde_alphabet(3), kLog3Of2}};
  for (const auto& c : cases) {
    const auto hulls = sadic::prefix_hulls(c.alphabet, 12);
    const auto r = sadic::box_count_estimate(hulls, c.alphabet.base(), scales, 12);
    EXPECT_NEAR(r.slope, c.target, 0.05) << "base " << c.alphabet.base();
  }
}
