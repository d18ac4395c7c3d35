#pragma once

#include <cstddef>
#include <vector>

#include "markov/block_graph.hpp"

namespace markov {

struct PerronData {
  double log_lambda = 0.0;  // log of the spectral radius
  std::vector<double> left;   // positive, normalized so that left . right = 1
  std::vector<double> right;  // positive, max entry 1
  std::size_t iterations = 0;
};

inline constexpr double kPerronTolerance = 1e-13;
inline constexpr std::size_t kPerronMaxIterations = 100'000;

// Perron data of W[u][v] = exp(log_weight[u]) on the edges of the graph.
// Power iteration from the all-ones vector. Throws Error(ConvergenceFailure).
PerronData perron(const BlockGraph& graph, const std::vector<double>& log_weight);

// Only the spectral radius, as log.
double log_spectral_radius(const BlockGraph& graph, const std::vector<double>& log_weight);

// |lambda_2| / lambda_1 by power iteration on the deflated operator
// W - lambda r l^T. Returns 0 when the deflated operator is numerically nil.
double second_eigen_ratio(const BlockGraph& graph, const std::vector<double>& log_weight, const PerronData& pd);

}  // namespace markov
