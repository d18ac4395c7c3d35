#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "markov/potential.hpp"
#include "markov/thermo.hpp"

namespace markov {

struct SpectrumPoint {
  double q = 0.0;
  double eta = 0.0;
  double alpha = 0.0;
  double dim = 0.0;     // eta + q * alpha, never clipped
  bool valid = true;    // dim within [0, 1]
};

struct CriticalExponents {
  double alpha_minus = 0.0;
  double alpha_max = 0.0;
  double alpha_plus = 0.0;
  double hdim = 0.0;
  // alpha(+q_big) and alpha(-q_big), the large-|q| cross-check; NaN when
  // eta(+-q_big) leaves the widened bracket.
  double alpha_at_plus_q = 0.0;
  double alpha_at_minus_q = 0.0;
};

inline constexpr double kEtaBracket = 10.0;
inline constexpr double kEtaWidening = 4.0;
inline constexpr int kEtaMaxWidenings = 2;

// Unique eta with P(-eta log|T'| + q phi_0) = 0, phi_0 = phi - P(phi).
// Throws Error(BracketFailure).
double eta(const Potential& phi, double q);

// -int phi_0 dmu_q / int log|T'| dmu_q for the Gibbs measure mu_q of
// -eta(q) log|T'| + q phi_0.
double alpha_of_q(const Potential& phi, double q);

SpectrumPoint spectrum_point(const Potential& phi, double q);
std::vector<SpectrumPoint> spectrum(const Potential& phi, const std::vector<double>& q_grid);
std::vector<SpectrumPoint> spectrum_serial(const Potential& phi, const std::vector<double>& q_grid);

// 81 points on [-20, 20] plus extra points around q = 0 and q = 1.
std::vector<double> default_q_grid();
std::vector<double> linear_grid(double lo, double hi, std::size_t points);

CriticalExponents critical_exponents(const Potential& phi, double q_big = 50.0);

// log mu(I_n) / log |I_n| for n = 1..min(n_max, |word|).
std::vector<double> local_dimension_trace(const GibbsModel& model, std::span<const Symbol> word, std::size_t n_max);

// Largest amount by which a point lies below the chord of its neighbours,
// after sorting by x; 0 when the points are concave. Repeated x are skipped.
double concavity_violation(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace markov
