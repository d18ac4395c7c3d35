#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "markov/dynamics.hpp"
#include "markov/map.hpp"
#include "markov/rational.hpp"
#include "markov/thermo.hpp"

namespace markov {

struct ApproxParams {
  double kappa = 1.0;
  std::size_t start_index = 1;  // i
  std::size_t horizon = 1;      // M
  unsigned resolution = 10;     // m, boxes of width 2^-m
};

void validate(const ApproxParams& p);

// Bitset over the 2^m dyadic boxes [j 2^-m, (j+1) 2^-m) of [0, 1].
class GridIndicator {
 public:
  explicit GridIndicator(unsigned m);

  unsigned resolution() const { return m_; }
  std::size_t boxes() const { return std::size_t{1} << m_; }
  bool test(std::size_t j) const { return (bits_[j >> 6] >> (j & 63)) & 1u; }
  void set(std::size_t j) { bits_[j >> 6] |= std::uint64_t{1} << (j & 63); }
  void reset(std::size_t j) { bits_[j >> 6] &= ~(std::uint64_t{1} << (j & 63)); }
  std::size_t count() const;

  GridIndicator complement() const;
  // Box at resolution m2 < m is set iff any of its sub-boxes is set.
  GridIndicator coarsen(unsigned m2) const;
  bool subset_of(const GridIndicator& other) const;
  GridIndicator& operator&=(const GridIndicator& other);
  GridIndicator& operator|=(const GridIndicator& other);
  bool operator==(const GridIndicator& other) const = default;

 private:
  unsigned m_;
  std::vector<std::uint64_t> bits_;
};

inline constexpr unsigned kMaxResolution = 26;
inline constexpr std::size_t kMaxHorizon = std::size_t{1} << 26;

// Approximations of T^n x for n = 1..M (points[n-1]) with an error bound.
struct OrbitSamples {
  std::vector<double> points;
  double error_bound = 0.0;
};

OrbitSamples orbit_samples(SymbolicPoint& x, std::size_t horizon);
OrbitSamples orbit_samples(const MarkovMap& map, const Rational& x, std::size_t horizon);

// Box b is set iff for every N in [i, M] the closed box meets
// U_{n<=N} B(T^n x, N^-kappa). Record-based single pass.
GridIndicator uniform_cover(const OrbitSamples& orbit, const ApproxParams& p);
// Same set by recomputing every level N; O(M 2^m), for testing.
GridIndicator uniform_cover_reference(const OrbitSamples& orbit, const ApproxParams& p);

// Boxes meeting U_{n=n_min..M} B(T^n x, n^-kappa).
GridIndicator asymptotic_cover(const OrbitSamples& orbit, double kappa, std::size_t n_min, std::size_t horizon,
                               unsigned m);

double lebesgue_fraction(const GridIndicator& ind);

struct BoxFit {
  double slope = 0.0;     // d log2(count) / d m
  double residual = 0.0;  // RMS of the fit in log2 units
  std::vector<unsigned> resolutions;
  std::vector<std::size_t> counts;
};

// Throws Error(DegenerateFit) with fewer than 3 resolutions or an empty indicator.
BoxFit box_dimension_fit(const std::vector<GridIndicator>& indicators);

// Finite form of U(x) \ {Tx} in U(Tx): every box of uniform_cover(x) farther
// than i^-kappa from Tx is also a box of uniform_cover(Tx).
bool inclusion_check(const MarkovMap& map, const Rational& x, double kappa, std::size_t i, std::size_t horizon,
                     unsigned m = 10);

enum class CoverMode { Uniform, Asymptotic, Complement };

struct CoverSample {
  std::size_t x_id = 0;
  double fraction = 0.0;
  std::size_t boxcount = 0;
};

// x_t ~ mu_phi on stream t, t = 0..samples-1, indicator per mode.
std::vector<CoverSample> cover_experiment(const GibbsModel& model, const ApproxParams& p, CoverMode mode,
                                          std::size_t samples, std::uint64_t seed);
std::vector<CoverSample> cover_experiment_serial(const GibbsModel& model, const ApproxParams& p, CoverMode mode,
                                                 std::size_t samples, std::uint64_t seed);

// Uniform-cover indicators of one sampled x at several resolutions.
std::vector<GridIndicator> uniform_cover_levels(const OrbitSamples& orbit, const ApproxParams& p,
                                                const std::vector<unsigned>& resolutions);

}  // namespace markov
