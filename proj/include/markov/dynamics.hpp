#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "markov/map.hpp"
#include "markov/rational.hpp"
#include "markov/sampling.hpp"
#include "markov/thermo.hpp"

namespace markov {

inline constexpr std::size_t kMaxDenominatorBits = 4096;

// Exact T^n x. Throws Error(DenominatorOverflow) past kMaxDenominatorBits.
Rational iterate(const MarkovMap& map, const Rational& x, std::size_t n);

// The point x = midpoint of the cylinder of w[0..length), with w a fixed
// word or a lazily sampled chain path. T^n x is the midpoint of the cylinder
// of w[n..length), so orbits are exact without materializing x.
class SymbolicPoint {
 public:
  SymbolicPoint(const MarkovMap& map, Word word);
  SymbolicPoint(std::shared_ptr<const ChainTable> table, std::uint64_t seed, std::uint64_t stream,
                std::size_t length);

  const MarkovMap& map() const { return *map_; }
  std::size_t length() const { return length_; }

  // Symbols w[from..to), sampling further as needed (to <= length()).
  std::span<const Symbol> symbols(std::size_t from, std::size_t to);
  std::size_t generated() const { return word_.size(); }

  // Exact midpoint of the cylinder of w[n..length).
  Rational exact_point(std::size_t n);

 private:
  std::shared_ptr<const MarkovMap> map_;
  std::optional<ChainSampler> sampler_;
  Word word_;
  std::size_t length_;
};

// Double approximations of T^n x with a rigorous error bound, by the
// contracting backward recurrence z_t = psi_{w_t}(z_{t+1}).
class SymbolicOrbit {
 public:
  explicit SymbolicOrbit(SymbolicPoint& x);

  // out[i] ~ T^{from+i} x for from <= n < to; to < x.length().
  void fill(std::size_t from, std::size_t to, std::vector<double>& out);
  double error_bound() const { return error_bound_; }

  // Exact test |T^n x - y| < r, refining cylinders of w[n..).
  bool in_open_ball(std::size_t n, const Rational& y, const Rational& r);

  SymbolicPoint& point() { return *x_; }

 private:
  SymbolicPoint* x_;
  std::size_t lookahead_;
  double error_bound_;
};

// Forward exact orbit of a rational point, served in the same interface.
class ExactOrbit {
 public:
  ExactOrbit(const MarkovMap& map, Rational x);

  void fill(std::size_t from, std::size_t to, std::vector<double>& out);
  double error_bound() const { return 0x1.0p-52; }
  bool in_open_ball(std::size_t n, const Rational& y, const Rational& r);

 private:
  void advance_to(std::size_t n);

  const MarkovMap* map_;
  Rational current_;
  std::size_t index_ = 0;
  std::size_t block_from_ = 0;
  std::vector<Rational> block_;
};

struct HittingRecord {
  Rational radius;
  std::optional<std::size_t> tau;  // empty means exceeded(n_max)
  std::size_t n_max = 0;

  bool exceeded() const { return !tau.has_value(); }
};

HittingRecord hitting_time(const MarkovMap& map, const Rational& x, const Rational& y, const Rational& r,
                           std::size_t n_max);
HittingRecord hitting_time(SymbolicPoint& x, const Rational& y, const Rational& r, std::size_t n_max);

struct RateEstimate {
  std::size_t j_min = 4;
  std::size_t j_max = 0;
  std::vector<std::optional<std::size_t>> tau;  // radius 2^-j at index j - j_min
  std::vector<double> quotient;                 // log tau / (j log 2), +inf when exceeded
  double tail_min = 0.0;
  double tail_median = 0.0;
  double tail_max = 0.0;
};

inline constexpr std::size_t kRateMinJ = 4;

RateEstimate rate_estimate(const MarkovMap& map, const Rational& x, const Rational& y, std::size_t j_max,
                           std::size_t n_max);
RateEstimate rate_estimate(SymbolicPoint& x, const Rational& y, std::size_t j_max, std::size_t n_max);

struct HittingTrial {
  std::size_t trial = 0;
  Rational y;
  RateEstimate estimate;
};

struct HittingLawResult {
  std::vector<HittingTrial> trials;
  double median_tail = 0.0;  // median over trials of the per-trial tail median
  double predicted = 0.0;    // -int phi dmu_psi / int log|T'| dmu_psi
};

inline constexpr std::size_t kTargetPrefix = 64;

double predicted_rate(const Potential& phi, const Potential& psi);

// Trial t draws x ~ mu_phi on stream 2t and y ~ mu_psi on stream 2t+1.
HittingLawResult hitting_law_experiment(const GibbsModel& model_phi, const GibbsModel& model_psi,
                                        std::size_t trials, std::size_t j_max, std::size_t n_max,
                                        std::uint64_t seed);
HittingLawResult hitting_law_experiment_serial(const GibbsModel& model_phi, const GibbsModel& model_psi,
                                               std::size_t trials, std::size_t j_max, std::size_t n_max,
                                               std::uint64_t seed);

double median(std::vector<double> values);

}  // namespace markov
