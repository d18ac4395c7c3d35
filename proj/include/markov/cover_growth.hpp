#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "markov/dynamics.hpp"
#include "markov/map.hpp"
#include "markov/thermo.hpp"

namespace markov {

// Sorted, disjoint [left, right) pieces.
using IntervalList = std::vector<std::pair<double, double>>;

IntervalList merge_intervals(IntervalList pieces, double join_tolerance = 1e-14);
IntervalList intersect(const IntervalList& a, const IntervalList& b);
bool overlaps(const IntervalList& a, double left, double right);
bool contains(const IntervalList& a, double x);
double total_length(const IntervalList& a);

// Itinerary of p to generation n from binary64 descent; falls back to exact
// rational location when p is within the guard of a cylinder boundary.
Word locate_d(const MarkovMap& map, double p, std::size_t n);

struct CoverGrowthParams {
  std::size_t n = 1;        // A_n scale index
  std::size_t l = 1;        // first level
  double a = 1.0;
  double b = 1.0;           // must lie in (1/kappa, a)
  double kappa = 1.0;
  std::size_t i_max = 1;
  std::size_t a_depth = 8;  // dyadic radii 2^-(n+1) .. 2^-(n+a_depth) test A_n
};

struct CoverGrowth {
  CoverGrowthParams params;
  double gamma = 1.0;
  double epsilon = 0.0;       // gamma^3 12^b 2^((1 - b kappa) l)
  bool l_condition = false;   // 12 2^(-kappa l) < 2^-n
  double a_n_length = 0.0;    // Lebesgue length of the A_n approximation
  std::vector<std::size_t> levels;  // i = l..i_max
  std::vector<std::size_t> N;       // N_i
  std::vector<std::size_t> M;       // M_i (entry for i = l is 0)
  std::vector<double> growth;       // N_i / N_{i-1}; entry for i = l is NaN
  bool recursion_holds = true;      // N_{i+1} <= N_i + M_{i+1} at every level
};

std::size_t theta(double kappa, std::size_t j, double log_l1);

// Throws Error(ParameterOrder) unless b in (1/kappa, a) and l >= n. When
// gamma <= 0 it is estimated by gibbs_constant(model, 8).
CoverGrowth cover_growth(const GibbsModel& model, SymbolicPoint& x, const CoverGrowthParams& params,
                         double gamma = 0.0);

// Length the itinerary of x must have for the given parameters.
std::size_t cover_growth_length(const MarkovMap& map, const CoverGrowthParams& params);

}  // namespace markov
