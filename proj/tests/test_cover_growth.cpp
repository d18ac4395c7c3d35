#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "markov/cover_growth.hpp"
#include "support.hpp"

using namespace markov;
using namespace testing_support;

namespace {

IntervalList random_pieces(std::mt19937_64& rng, std::size_t n) {
  IntervalList out;
  for (std::size_t k = 0; k < n; ++k) {
    const double l = static_cast<double>(rng() % 64) / 64.0;
    const double w = static_cast<double>(rng() % 8) / 64.0;
    out.emplace_back(l, std::min(1.0, l + w));
  }
  return out;
}

bool brute_contains(const IntervalList& raw, double x) {
  for (const auto& [l, r] : raw)
    if (l <= x && x < r) return true;
  return false;
}

}  // namespace

TEST(Intervals, MergeIntersectContainAgainstBruteForce) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const IntervalList ra = random_pieces(rng, 1 + rng() % 6);
    const IntervalList rb = random_pieces(rng, 1 + rng() % 6);
    const IntervalList a = merge_intervals(ra), b = merge_intervals(rb);
    for (std::size_t k = 1; k < a.size(); ++k) ASSERT_LT(a[k - 1].second, a[k].first);
    const IntervalList ab = intersect(a, b);
    // Grid points at 1/128 probe every piece boundary and interior.
    double len_ab = 0.0;
    for (int g = 0; g < 128; ++g) {
      const double x = (g + 0.5) / 128.0;
      const bool in_a = brute_contains(ra, x), in_b = brute_contains(rb, x);
      ASSERT_EQ(contains(a, x), in_a);
      ASSERT_EQ(contains(ab, x), in_a && in_b);
      len_ab += (in_a && in_b) ? 1.0 / 128 : 0.0;
    }
    EXPECT_NEAR(total_length(ab), len_ab, 1e-12);
    for (int g = 0; g < 60; ++g) {
      const double l = (g % 16) / 16.0, r = l + (1 + g % 5) / 32.0;
      bool brute = false;
      for (const auto& [x, y] : a) brute = brute || (x < r && l < y);
      ASSERT_EQ(overlaps(a, l, r), brute);
    }
  }
}

TEST(Intervals, MergeJoinsTouchingPieces) {
  const IntervalList m = merge_intervals({{0.5, 0.75}, {0.0, 0.25}, {0.25, 0.5}, {0.8, 0.8}});
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0], std::make_pair(0.0, 0.75));
  EXPECT_TRUE(intersect(m, {}).empty());
  EXPECT_FALSE(overlaps(m, 0.75, 0.9));
  EXPECT_FALSE(contains(m, 0.75));
}

TEST(LocateD, AgreesWithExactLocate) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const MarkovMap m = random_map(rng);
    for (int k = 0; k < 200; ++k) {
      const double p = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      ASSERT_EQ(locate_d(m, p, 12), locate(m, Rational(p), 12)) << p;
    }
    // Partition endpoints and dyadic points take the exact fallback.
    for (const auto& e : m.partition().endpoints) {
      const double p = e.get_d();
      if (Rational(p) == e) ASSERT_EQ(locate_d(m, p, 8), locate(m, e, 8));
    }
    for (int k = 0; k <= 16; ++k) ASSERT_EQ(locate_d(m, k / 16.0, 8), locate(m, Rational(k, 16), 8));
  }
}

TEST(Theta, Values) {
  const double l2 = std::log(2.0), l3 = std::log(3.0);
  EXPECT_EQ(theta(1.0, 10, l2), 11u);
  EXPECT_EQ(theta(1.5, 4, l2), 7u);
  EXPECT_EQ(theta(1.0, 3, l3), 2u);
  EXPECT_EQ(theta(0.5, 1, l2), 1u);
}

TEST(CoverGrowth, ParameterChecks) {
  const MarkovMap d = doubling_map();
  const GibbsModel model(bernoulli(d, 0.7));
  auto kind_of = [&](CoverGrowthParams p) {
    SymbolicPoint x(std::make_shared<const ChainTable>(model), 1, 0, 5000);
    try {
      cover_growth(model, x, p, 1.0);
    } catch (const Error& e) {
      return std::optional<ErrorKind>(e.kind());
    }
    return std::optional<ErrorKind>();
  };
  CoverGrowthParams ok{4, 6, 1.0, 0.85, 1.0 / 0.7, 10};
  EXPECT_EQ(kind_of(ok), std::nullopt);
  CoverGrowthParams p = ok;
  p.b = 0.6;
  EXPECT_EQ(kind_of(p), ErrorKind::ParameterOrder);
  p = ok;
  p.b = 1.1;
  EXPECT_EQ(kind_of(p), ErrorKind::ParameterOrder);
  p = ok;
  p.l = 3;
  EXPECT_EQ(kind_of(p), ErrorKind::ParameterOrder);
  p = ok;
  p.i_max = 5;
  EXPECT_EQ(kind_of(p), ErrorKind::ParameterOrder);
  p = ok;
  p.kappa = 0.0;
  EXPECT_EQ(kind_of(p), ErrorKind::InvalidInput);
  p = ok;
  p.i_max = 13;
  EXPECT_EQ(kind_of(p), ErrorKind::HorizonOverflow);
}

TEST(CoverGrowth, RecursionOnBernoulliPoint) {
  const MarkovMap d = doubling_map();
  const GibbsModel model(bernoulli(d, 0.7));
  const CoverGrowthParams p{4, 6, 1.0, 0.85, 1.0 / 0.7, 14};
  SymbolicPoint x(std::make_shared<const ChainTable>(model), 3, 0, cover_growth_length(d, p));
  const CoverGrowth res = cover_growth(model, x, p, 1.0);
  EXPECT_EQ(res.levels.size(), 9u);
  EXPECT_EQ(res.levels.front(), 6u);
  EXPECT_TRUE(res.recursion_holds);
  EXPECT_TRUE(res.l_condition == (12.0 * std::pow(2.0, -p.kappa * 6) < 1.0 / 16));
  EXPECT_NEAR(res.epsilon, std::pow(12.0, 0.85) * std::pow(2.0, (1 - 0.85 / 0.7) * 6), 1e-12);
  EXPECT_GT(res.a_n_length, 0.0);
  EXPECT_LT(res.a_n_length, 1.0);
  EXPECT_TRUE(std::isnan(res.growth.front()));
  for (std::size_t k = 1; k < res.N.size(); ++k) {
    EXPECT_LE(res.N[k], res.N[k - 1] + res.M[k]);
    EXPECT_LE(res.M[k], std::size_t{1} << (res.levels[k] - 1));
  }
  EXPECT_EQ(res.M.front(), 0u);
}

TEST(CoverGrowth, Deterministic) {
  const MarkovMap t = three_symbol_map();
  const GibbsModel model(symbol_potential(t, {-0.4, -1.3, 0.25}));
  const CoverGrowthParams p{3, 5, 1.2, 0.9, 1.25, 11};
  auto run = [&] {
    SymbolicPoint x(std::make_shared<const ChainTable>(model), 5, 0, cover_growth_length(t, p));
    return cover_growth(model, x, p, 2.0);
  };
  const CoverGrowth a = run(), b = run();
  EXPECT_EQ(a.N, b.N);
  EXPECT_EQ(a.M, b.M);
  EXPECT_EQ(a.a_n_length, b.a_n_length);
  EXPECT_TRUE(a.recursion_holds);
}
