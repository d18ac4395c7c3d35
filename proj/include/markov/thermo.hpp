#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "markov/map.hpp"
#include "markov/perron.hpp"
#include "markov/potential.hpp"

namespace markov {

// S_n phi over a word of length n >= 1. The last k-1 windows are completed
// with the lexicographically smallest admissible continuation.
double birkhoff_sum(const Potential& phi, std::span<const Symbol> word);

double pressure(const Potential& phi);

// phi - P; pressure of the result is 0.
Potential normalize(const Potential& phi, double p);

// Gibbs measure of a locally constant potential as a stationary Markov chain
// on the k-word graph. Immutable; queries are safe from parallel workers.
class GibbsModel {
 public:
  explicit GibbsModel(const Potential& phi);

  const MarkovMap& map() const { return phi_.map(); }
  const BlockGraph& graph() const { return phi_.graph(); }
  std::size_t depth() const { return phi_.depth(); }
  const Potential& potential() const { return phi_; }
  double pressure() const { return pressure_; }
  const PerronData& perron_data() const { return perron_; }

  // Stationary weight of each k-word state, summing to 1.
  const std::vector<double>& stationary() const { return pi_; }
  // P(u -> v) in the order of graph().successors(u).
  const std::vector<double>& transitions(std::size_t u) const { return trans_[u]; }
  // phi(u) - P, the log of the normalized weight of state u.
  double log_weight(std::size_t u) const { return log_weight_[u]; }

  double measure(std::span<const Symbol> word) const;
  double log_measure(std::span<const Symbol> word) const;

 private:
  Potential phi_;
  double pressure_;
  PerronData perron_;
  std::vector<double> log_weight_;
  std::vector<double> pi_;
  std::vector<std::vector<double>> trans_;
};

GibbsModel gibbs_model(const Potential& phi);

// |lambda_2| / lambda_1 of the weight matrix.
double eigen_ratio(const GibbsModel& model);

// Throws Error(InadmissibleWord) for inadmissible words.
double cylinder_measure(const GibbsModel& model, std::span<const Symbol> word);

// Largest max(ratio, 1/ratio), ratio = mu(w) / exp(S_n phi - nP), over all
// admissible words of length 1..n_max.
double gibbs_constant(const GibbsModel& model, std::size_t n_max);
double gibbs_constant_serial(const GibbsModel& model, std::size_t n_max);

// Largest max(r, 1/r), r = mu(I) / (mu(I') mu(I'')), over all admissible
// words I of length 2..n_max split as I = I' I''.
double quasi_bernoulli_check(const GibbsModel& model, std::size_t n_max);

struct MixingReport {
  std::vector<std::size_t> lags;
  std::vector<double> max_ratio;  // per lag
  double fitted_beta = 0.0;
  double constant = 0.0;          // C with max_ratio[n] <= C beta^n
  double predicted_beta = 0.0;    // |lambda_2| / lambda_1
};

// Exact correlations |mu(A n T^-n B) - mu(A) mu(B)| / mu(B) via powers of the
// transition matrix. Each lag must be >= |A| - depth + 1.
MixingReport mixing_report(const GibbsModel& model, const std::vector<std::size_t>& lags,
                           const std::vector<Word>& cylinders);

// All admissible words of the given length in lexicographic order.
std::vector<Word> admissible_words(const MarkovMap& map, std::size_t n);

}  // namespace markov
