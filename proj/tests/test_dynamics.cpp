#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "markov/dynamics.hpp"
#include "markov/sampling.hpp"
#include "support.hpp"

using namespace markov;
using namespace testing_support;

namespace {

Rational brute_iterate(const MarkovMap& m, Rational x, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) x = m.apply(x);
  return x;
}

std::optional<std::size_t> brute_hitting(const MarkovMap& m, Rational x, const Rational& y, const Rational& r,
                                         std::size_t n_max) {
  for (std::size_t n = 1; n <= n_max; ++n) {
    x = m.apply(x);
    Rational d = x - y;
    if (abs(d) < r) return n;
  }
  return std::nullopt;
}

}  // namespace

TEST(Sampling, SymbolFrequencies) {
  const MarkovMap d = doubling_map();
  const GibbsModel model(bernoulli(d, 0.7));
  const Word w = sample_word(model, 20000, 3);
  const double zeros = static_cast<double>(std::count(w.begin(), w.end(), Symbol{0}));
  const double sigma = std::sqrt(20000 * 0.21);
  EXPECT_NEAR(zeros, 14000.0, 3 * sigma);
}

TEST(Sampling, ChainPairFrequencies) {
  const MarkovMap t = three_symbol_map();
  const GibbsModel model(symbol_potential(t, {-0.4, -1.3, 0.25}));
  const std::size_t n = 60000;
  const Word w = sample_word(model, n, 11);
  for (const Word& pair : admissible_words(t, 2)) {
    std::size_t hits = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) hits += w[k] == pair[0] && w[k + 1] == pair[1];
    const double p = model.measure(pair);
    // Pair indicators are 1-dependent; allow for the doubled variance.
    const double sigma = std::sqrt(2.0 * n * p * (1 - p));
    EXPECT_NEAR(static_cast<double>(hits), n * p, 4 * sigma);
  }
  for (std::size_t k = 0; k + 1 < n; ++k) ASSERT_TRUE(t.admissible(w[k], w[k + 1]));
}

TEST(Sampling, DeterministicStreams) {
  const MarkovMap t = three_symbol_map();
  const GibbsModel model(neg_log_deriv(t));
  EXPECT_EQ(sample_word(model, 500, 9, 4), sample_word(model, 500, 9, 4));
  EXPECT_NE(sample_word(model, 500, 9, 4), sample_word(model, 500, 9, 5));
  EXPECT_NE(sample_word(model, 500, 9, 4), sample_word(model, 500, 10, 4));
  const SamplePoint p = sample_point(model, 30, 9, 4);
  EXPECT_EQ(p.value, cylinder_midpoint(t, p.word));
  const Cylinder c = cylinder_of(t, p.word);
  EXPECT_TRUE(c.left < p.value && p.value < c.right);
  // The lazy point draws the same path.
  SymbolicPoint lazy(std::make_shared<const ChainTable>(model), 9, 4, 30);
  const auto s = lazy.symbols(0, 30);
  EXPECT_EQ(Word(s.begin(), s.end()), p.word);
}

TEST(Iterate, Examples) {
  const MarkovMap d = doubling_map();
  EXPECT_EQ(iterate(d, Rational(1, 3), 1), Rational(2, 3));
  EXPECT_EQ(iterate(d, Rational(1, 3), 2), Rational(1, 3));
  EXPECT_EQ(iterate(d, Rational(3, 8), 3), Rational(0));
  EXPECT_EQ(iterate(d, Rational(1), 1), Rational(1));
  const MarkovMap t = three_symbol_map();
  EXPECT_EQ(iterate(t, Rational(5, 6), 1), Rational(1, 3));
  EXPECT_EQ(iterate(t, Rational(1, 7), 5), brute_iterate(t, Rational(1, 7), 5));
}

TEST(Iterate, DenominatorOverflow) {
  PartitionSpec p{{Rational(0), Rational(2, 5), Rational(1)}};
  const MarkovMap m = build_map(p, {BranchSpec{Rational(5, 2), Rational(0), {0, 1}},
                                    BranchSpec{Rational(5, 3), Rational(-2, 3), {0, 1}}});
  try {
    iterate(m, Rational(1, 3), 20000);
    FAIL() << "expected DenominatorOverflow";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DenominatorOverflow);
  }
}

TEST(Hitting, Examples) {
  const MarkovMap d = doubling_map();
  // Orbit of 1/3 alternates 2/3, 1/3.
  EXPECT_EQ(hitting_time(d, Rational(1, 3), Rational(2, 3), Rational(1, 100), 10).tau, 1u);
  EXPECT_EQ(hitting_time(d, Rational(1, 3), Rational(1, 3), Rational(1, 100), 10).tau, 2u);
  // The ball is open: distance exactly r does not count.
  EXPECT_FALSE(hitting_time(d, Rational(1, 3), Rational(1, 2), Rational(1, 6), 10).tau.has_value());
  const HittingRecord rec = hitting_time(d, Rational(1, 5), Rational(0), Rational(1, 100), 50);
  EXPECT_TRUE(rec.exceeded());
  EXPECT_EQ(rec.n_max, 50u);
}

TEST(Hitting, MatchesBruteForceAndIsMonotone) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const MarkovMap m = random_map(rng);
    const Rational x(static_cast<long>(rng() % 997 + 1), 1000L);
    const Rational y(static_cast<long>(rng() % 1000), 1001L);
    std::optional<std::size_t> previous = std::size_t{1};
    for (int j = 1; j <= 9; ++j) {
      Rational r(1, 1L << j);
      const auto tau = hitting_time(m, x, y, r, 400).tau;
      EXPECT_EQ(tau, brute_hitting(m, x, y, r, 400)) << "trial " << trial << " j " << j;
      // Smaller radius never hits earlier; once exceeded it stays exceeded.
      if (previous && tau) EXPECT_GE(*tau, *previous);
      if (!previous) EXPECT_FALSE(tau.has_value());
      previous = tau;
    }
  }
}

TEST(Hitting, ShiftIdentity) {
  // tau(x) = 1 + tau(Tx) whenever Tx is not itself in the ball.
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const MarkovMap m = random_map(rng);
    const Rational x(static_cast<long>(rng() % 99990 + 1), 99991L);
    const Rational y(static_cast<long>(rng() % 1000), 1001L);
    const Rational r(1, 32);
    const auto a = hitting_time(m, x, y, r, 300).tau;
    const auto b = hitting_time(m, m.apply(x), y, r, 299).tau;
    if (a && *a > 1) {
      ASSERT_TRUE(b.has_value());
      EXPECT_EQ(*a, *b + 1);
      ++checked;
    } else if (!a) {
      EXPECT_FALSE(b.has_value());
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(Hitting, RateEstimateQuotients) {
  const MarkovMap d = doubling_map();
  const RateEstimate est = rate_estimate(d, Rational(1, 3), Rational(2, 3), 12, 1000);
  EXPECT_EQ(est.j_min, kRateMinJ);
  EXPECT_EQ(est.j_max, 12u);
  ASSERT_EQ(est.tau.size(), 9u);
  // Tx = y exactly, so every tau is 1 and every quotient 0.
  for (std::size_t k = 0; k < est.tau.size(); ++k) {
    EXPECT_EQ(est.tau[k], 1u);
    EXPECT_EQ(est.quotient[k], 0.0);
  }
  EXPECT_EQ(est.tail_median, 0.0);
  const RateEstimate miss = rate_estimate(d, Rational(1, 5), Rational(0), 8, 40);
  EXPECT_TRUE(std::isinf(miss.quotient.back()));
}

TEST(SymbolicOrbit, AgreesWithExactOrbit) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 8; ++trial) {
    const MarkovMap m = random_map(rng);
    const GibbsModel model(neg_log_deriv(m));
    SymbolicPoint x(std::make_shared<const ChainTable>(model), 5, static_cast<std::uint64_t>(trial), 400);
    SymbolicOrbit orbit(x);
    std::vector<double> approx;
    orbit.fill(0, 100, approx);
    const Rational x0 = x.exact_point(0);
    for (std::size_t n = 0; n < 100; n += 7) {
      const Rational exact = x.exact_point(n);
      EXPECT_EQ(exact, brute_iterate(m, x0, n));
      EXPECT_LE(std::abs(approx[n] - exact.get_d()), orbit.error_bound());
    }
    const Rational y = x.exact_point(10);
    EXPECT_TRUE(orbit.in_open_ball(10, y, Rational(1, 1000000)));
    EXPECT_FALSE(orbit.in_open_ball(10, y + Rational(1, 1000), Rational(1, 1000)));
    EXPECT_TRUE(orbit.in_open_ball(10, y + Rational(1, 1000), Rational(1001, 1000000)));
  }
}

TEST(SymbolicOrbit, HittingMatchesExactPoint) {
  const MarkovMap t = three_symbol_map();
  const GibbsModel model(symbol_potential(t, {-0.4, -1.3, 0.25}));
  const auto table = std::make_shared<const ChainTable>(model);
  for (std::uint64_t s = 0; s < 6; ++s) {
    SymbolicPoint lazy(table, 17, s, 600);
    SymbolicPoint copy(table, 17, s, 600);
    const Rational x0 = copy.exact_point(0);
    const Rational y(1, 2), r(1, 16);
    const auto a = hitting_time(lazy, y, r, 300).tau;
    const auto b = hitting_time(t, x0, y, r, 300).tau;
    EXPECT_EQ(a, b) << "stream " << s;
  }
}

TEST(HittingLaw, SerialAndParallelAgree) {
  const MarkovMap d = doubling_map();
  const GibbsModel mx(bernoulli(d, 0.7)), my(neg_log_deriv(d));
  const auto a = hitting_law_experiment(mx, my, 12, 10, 1u << 14, 5);
  const auto b = hitting_law_experiment_serial(mx, my, 12, 10, 1u << 14, 5);
  ASSERT_EQ(a.trials.size(), b.trials.size());
  for (std::size_t t = 0; t < a.trials.size(); ++t) {
    EXPECT_EQ(a.trials[t].y, b.trials[t].y);
    EXPECT_EQ(a.trials[t].estimate.tau, b.trials[t].estimate.tau);
  }
  EXPECT_EQ(a.median_tail, b.median_tail);
}

TEST(HittingLaw, PredictedRateClosedForms) {
  const MarkovMap d = doubling_map();
  const Potential b7 = bernoulli(d, 0.7), leb = neg_log_deriv(d);
  const double l2 = std::log(2.0);
  EXPECT_NEAR(predicted_rate(b7, leb), -(std::log(0.7) + std::log(0.3)) / (2 * l2), 1e-12);
  EXPECT_NEAR(predicted_rate(b7, b7), -(0.7 * std::log(0.7) + 0.3 * std::log(0.3)) / l2, 1e-12);
  EXPECT_NEAR(predicted_rate(leb, leb), 1.0, 1e-12);
  EXPECT_NEAR(predicted_rate(leb, b7), 1.0, 1e-12);
  const MarkovMap t = three_symbol_map();
  EXPECT_NEAR(predicted_rate(neg_log_deriv(t), symbol_potential(t, {-0.4, -1.3, 0.25})), 1.0, 1e-10);
}

TEST(Median, Basics) {
  EXPECT_EQ(median({3.0}), 3.0);
  EXPECT_EQ(median({4.0, 1.0, 2.0}), 2.0);
  EXPECT_EQ(median({4.0, 1.0, 2.0, 3.0}), 2.5);
}
