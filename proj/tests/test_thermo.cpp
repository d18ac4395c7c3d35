#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "markov/perron.hpp"
#include "markov/thermo.hpp"
#include "support.hpp"

using namespace markov;
using namespace testing_support;

TEST(Pressure, ClosedForms) {
  const MarkovMap d = doubling_map();
  EXPECT_NEAR(pressure(bernoulli(d, 0.7)), 0.0, 1e-14);
  EXPECT_NEAR(pressure(constant_potential(d, 1, 0.25)), std::log(2.0) + 0.25, 1e-14);
  EXPECT_NEAR(pressure(neg_log_deriv(d)), 0.0, 1e-14);
  const MarkovMap t = three_symbol_map();
  // Spectral radius of [[1,1,1],[1,1,1],[1,1,0]] is 1 + sqrt(3).
  EXPECT_NEAR(pressure(constant_potential(t, 1, 0.0)), std::log(1.0 + std::sqrt(3.0)), 1e-13);
  EXPECT_NEAR(pressure(constant_potential(t, 3, 0.0)), std::log(1.0 + std::sqrt(3.0)), 1e-13);
}

TEST(Pressure, NormalizeGivesZero) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    const MarkovMap m = random_map(rng);
    const Potential phi = random_potential(m, 1 + t % 3, rng);
    EXPECT_NEAR(pressure(normalize(phi, pressure(phi))), 0.0, 1e-12);
  }
}

TEST(Potential, LiftCombineShift) {
  std::mt19937_64 rng(5);
  const MarkovMap m = three_symbol_map();
  const Potential phi = random_potential(m, 1, rng);
  const Potential deep = lift(phi, 3);
  EXPECT_NEAR(pressure(deep), pressure(phi), 1e-12);
  EXPECT_DOUBLE_EQ(deep.at(Word{2, 0, 1}), phi.at(Word{2}));
  const Potential psi = random_potential(m, 2, rng);
  const Potential mix = combine(2.0, phi, -1.0, psi);
  EXPECT_EQ(mix.depth(), 2u);
  EXPECT_DOUBLE_EQ(mix.at(Word{1, 2}), 2.0 * phi.at(Word{1}) - psi.at(Word{1, 2}));
  EXPECT_NEAR(pressure(shifted(phi, 0.3)), pressure(phi) + 0.3, 1e-12);
}

TEST(Perron, MatchesDenseEigenSolver) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 20; ++t) {
    const MarkovMap m = random_map(rng);
    const Potential phi = random_potential(m, 1 + t % 2, rng, 3.0);
    const auto w = dense_weights(phi.graph(), phi.values());
    const auto moduli = eigen_moduli(w);
    const PerronData pd = perron(phi.graph(), phi.values());
    EXPECT_NEAR(pd.log_lambda, std::log(moduli[0]), 1e-11);
    // Right and left eigenvector equations.
    Eigen::VectorXd r = Eigen::Map<const Eigen::VectorXd>(pd.right.data(), static_cast<Eigen::Index>(pd.right.size()));
    Eigen::VectorXd l = Eigen::Map<const Eigen::VectorXd>(pd.left.data(), static_cast<Eigen::Index>(pd.left.size()));
    const double lambda = std::exp(pd.log_lambda);
    EXPECT_LT((w * r - lambda * r).norm(), 1e-10 * lambda * r.norm());
    EXPECT_LT((w.transpose() * l - lambda * l).norm(), 1e-10 * lambda * l.norm());
    EXPECT_NEAR(l.dot(r), 1.0, 1e-12);
    if (moduli.size() > 1) {
      const GibbsModel model(phi);
      EXPECT_NEAR(eigen_ratio(model), moduli[1] / moduli[0], 1e-6) << "trial " << t;
    }
  }
}

TEST(Perron, NearlyPeriodicWeightsConverge) {
  // Symbol 2 dominates but 2 -> 2 is forbidden, so lambda_2 is close to -lambda_1.
  const MarkovMap t = three_symbol_map();
  const Potential phi = symbol_potential(t, {-30.0, -30.0, 0.0});
  // Rows 0 and 1 agree, so lambda solves lambda^2 = 2 a lambda + 2 a with a = e^-30.
  const double a = std::exp(-30.0);
  const double root = std::sqrt(a * a + 2 * a);
  EXPECT_NEAR(pressure(phi), std::log(a + root), 1e-12);
  EXPECT_NEAR(eigen_ratio(GibbsModel(phi)), (root - a) / (root + a), 1e-9);
}

TEST(Gibbs, TotalMassAndInvariance) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 8; ++t) {
    const MarkovMap m = random_map(rng);
    const GibbsModel model(random_potential(m, 1 + t % 3, rng));
    for (std::size_t n = 1; n <= 6; ++n) {
      double total = 0.0;
      for (const Word& w : admissible_words(m, n)) {
        const double mu = model.measure(w);
        total += mu;
        double pre = 0.0;
        for (std::size_t s = 0; s < m.symbols(); ++s) {
          Word sw{static_cast<Symbol>(s)};
          sw.insert(sw.end(), w.begin(), w.end());
          if (m.admissible(sw)) pre += model.measure(sw);
        }
        EXPECT_NEAR(mu, pre, 1e-12);
        double post = 0.0;
        for (std::size_t s = 0; s < m.symbols(); ++s) {
          Word ws = w;
          ws.push_back(static_cast<Symbol>(s));
          if (m.admissible(ws)) post += model.measure(ws);
        }
        EXPECT_NEAR(mu, post, 1e-12);
      }
      EXPECT_NEAR(total, 1.0, 1e-12);
    }
  }
}

TEST(Gibbs, BernoulliMeasureIsProduct) {
  const MarkovMap d = doubling_map();
  const GibbsModel model(bernoulli(d, 0.7));
  EXPECT_NEAR(model.measure(Word{0, 0, 1}), 0.7 * 0.7 * 0.3, 1e-15);
  EXPECT_NEAR(model.log_measure(Word{1, 1}), 2 * std::log(0.3), 1e-14);
  EXPECT_NEAR(gibbs_constant(model, 10), 1.0, 1e-12);
  EXPECT_THROW(cylinder_measure(GibbsModel(bernoulli(three_symbol_map(), 0.5)), Word{2, 2}), Error);
}

TEST(Gibbs, SandwichAndQuasiBernoulli) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 6; ++t) {
    const MarkovMap m = random_map(rng);
    const Potential phi = random_potential(m, 1 + t % 2, rng);
    const GibbsModel model(phi);
    const double gamma = gibbs_constant(model, 7);
    EXPECT_DOUBLE_EQ(gamma, gibbs_constant_serial(model, 7));
    EXPECT_GE(gamma, 1.0);
    for (std::size_t n = 1; n <= 7; ++n)
      for (const Word& w : admissible_words(m, n)) {
        const double weight = std::exp(birkhoff_sum(phi, w) - static_cast<double>(n) * model.pressure());
        EXPECT_LE(model.measure(w), gamma * weight * (1 + 1e-12));
        EXPECT_LE(weight, gamma * model.measure(w) * (1 + 1e-12));
      }
    EXPECT_LE(quasi_bernoulli_check(model, 7), std::pow(gamma, 3) * (1 + 1e-12));
  }
}

TEST(Gibbs, TwoStateChainMixing) {
  // Depth-2 potential log P(a -> b) on the doubling map gives the chain
  // [[0.9, 0.1], [0.5, 0.5]] whose second eigenvalue is 0.4.
  const MarkovMap d = doubling_map();
  const double p[2][2] = {{0.9, 0.1}, {0.5, 0.5}};
  std::map<Word, double> table;
  for (Symbol a = 0; a < 2; ++a)
    for (Symbol b = 0; b < 2; ++b) table[Word{a, b}] = std::log(p[a][b]);
  const GibbsModel model(make_potential(d, 2, table));
  EXPECT_NEAR(model.pressure(), 0.0, 1e-13);
  EXPECT_NEAR(eigen_ratio(model), 0.4, 1e-9);
  EXPECT_NEAR(model.measure(Word{0}), 5.0 / 6.0, 1e-13);
  EXPECT_NEAR(model.measure(Word{0, 1, 1}), 5.0 / 6.0 * 0.1 * 0.5, 1e-13);
  std::vector<std::size_t> lags;
  for (std::size_t n = 2; n <= 25; ++n) lags.push_back(n);
  const MixingReport r = mixing_report(model, lags, {Word{0, 0}, Word{1, 0}, Word{0, 1, 1}});
  EXPECT_NEAR(r.fitted_beta, 0.4, 0.02);
  EXPECT_NEAR(r.predicted_beta, 0.4, 1e-9);
  for (std::size_t k = 0; k < r.lags.size(); ++k)
    EXPECT_LE(r.max_ratio[k], r.constant * std::pow(r.fitted_beta, static_cast<double>(r.lags[k])) * (1 + 1e-9));
  EXPECT_THROW(mixing_report(model, {1}, {Word{0, 1, 1}}), Error);
}

TEST(Gibbs, RankTwoWeightsHaveSingleDecayRate) {
  const MarkovMap t = three_symbol_map();
  const GibbsModel model(symbol_potential(t, {-0.4, -1.3, 0.25}));
  const auto moduli = eigen_moduli(dense_weights(model.graph(), model.potential().values()));
  EXPECT_NEAR(moduli[2], 0.0, 1e-12);
  EXPECT_NEAR(eigen_ratio(model), moduli[1] / moduli[0], 1e-9);
  std::vector<std::size_t> lags;
  for (std::size_t n = 2; n <= 30; ++n) lags.push_back(n);
  const MixingReport r = mixing_report(model, lags, admissible_words(t, 2));
  EXPECT_NEAR(r.fitted_beta, moduli[1] / moduli[0], 0.05 * moduli[1] / moduli[0]);
}

TEST(Birkhoff, SumsOverWindows) {
  const MarkovMap t = three_symbol_map();
  std::mt19937_64 rng(3);
  const Potential phi = random_potential(t, 2, rng);
  const Word w{0, 2, 1, 1};
  // Last window is completed with the smallest admissible successor of 1, i.e. 0.
  const double expected = phi.at(Word{0, 2}) + phi.at(Word{2, 1}) + phi.at(Word{1, 1}) + phi.at(Word{1, 0});
  EXPECT_NEAR(birkhoff_sum(phi, w), expected, 1e-14);
  const Potential one = symbol_potential(t, {1.0, 2.0, 3.0});
  EXPECT_DOUBLE_EQ(birkhoff_sum(one, w), 1 + 3 + 2 + 2);
}
