#pragma once

#include <cstddef>
#include <vector>

#include "markov/block_graph.hpp"

namespace markov {

struct CycleRatio {
  double ratio = 0.0;
  std::vector<std::size_t> cycle;  // states along the optimal cycle
};

// Minimum over cycles of sum(num) / sum(den), num and den attached to the
// source state of each edge, den > 0. Parametric search with Bellman-Ford
// negative-cycle detection; the reported ratio is that of an actual cycle.
CycleRatio min_cycle_ratio(const BlockGraph& graph, const std::vector<double>& num,
                           const std::vector<double>& den, double tolerance = 1e-12);

CycleRatio max_cycle_ratio(const BlockGraph& graph, const std::vector<double>& num,
                           const std::vector<double>& den, double tolerance = 1e-12);

}  // namespace markov
