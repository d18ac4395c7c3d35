#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "markov/block_graph.hpp"
#include "markov/error.hpp"
#include "markov/map.hpp"
#include "markov/potential.hpp"

namespace testing_support {

using namespace markov;

inline MarkovMap doubling_map() {
  PartitionSpec p{{Rational(0), Rational(1, 2), Rational(1)}};
  return build_map(p, {BranchSpec{Rational(2), Rational(0), {0, 1}}, BranchSpec{Rational(2), Rational(-1), {0, 1}}});
}

// Partition 0, 1/3, 2/3, 1; the last branch maps onto [0, 2/3) so 2 -> 2 is forbidden.
inline MarkovMap three_symbol_map() {
  PartitionSpec p{{Rational(0), Rational(1, 3), Rational(2, 3), Rational(1)}};
  return build_map(p, {BranchSpec{Rational(3), Rational(0), {0, 1, 2}},
                       BranchSpec{Rational(3), Rational(-1), {0, 1, 2}},
                       BranchSpec{Rational(2), Rational(-4, 3), {0, 1}}});
}

inline Potential bernoulli(const MarkovMap& m, double p) { return symbol_potential(m, {std::log(p), std::log(1 - p)}); }

// Random piecewise-affine Markov map: endpoints on a 1/den grid, each branch
// onto a random run of partition intervals with random orientation.
inline std::optional<MarkovMap> try_random_map(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> q_dist(2, 5);
  const int q = q_dist(rng);
  const int den = 12 + 12 * static_cast<int>(rng() % 2);
  std::vector<int> cuts;
  for (int v = 1; v < den; ++v) cuts.push_back(v);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(static_cast<std::size_t>(q - 1));
  std::sort(cuts.begin(), cuts.end());
  PartitionSpec p;
  p.endpoints.push_back(Rational(0));
  for (int c : cuts) p.endpoints.push_back(Rational(c, den));
  p.endpoints.push_back(Rational(1));
  for (auto& e : p.endpoints) e.canonicalize();
  std::vector<BranchSpec> branches;
  for (int k = 0; k < q; ++k) {
    const Rational len = p.endpoints[k + 1] - p.endpoints[k];
    std::vector<std::pair<int, int>> runs;
    for (int j0 = 0; j0 < q; ++j0)
      for (int j1 = j0 + 1; j1 <= q; ++j1)
        if (p.endpoints[j1] - p.endpoints[j0] > len) runs.emplace_back(j0, j1);
    if (runs.empty()) return std::nullopt;
    const auto [j0, j1] = runs[rng() % runs.size()];
    BranchSpec b;
    const Rational image = p.endpoints[j1] - p.endpoints[j0];
    const bool flip = rng() % 3 == 0;
    b.slope = flip ? Rational(-image / len) : Rational(image / len);
    b.intercept = (flip ? p.endpoints[j1] : p.endpoints[j0]) - b.slope * p.endpoints[k];
    for (int j = j0; j < j1; ++j) b.image_symbols.push_back(j);
    branches.push_back(std::move(b));
  }
  try {
    return build_map(p, branches);
  } catch (const Error&) {
    return std::nullopt;
  }
}

inline MarkovMap random_map(std::mt19937_64& rng) {
  while (true)
    if (auto m = try_random_map(rng)) return std::move(*m);
}

inline Potential random_potential(const MarkovMap& m, std::size_t depth, std::mt19937_64& rng, double spread = 2.0) {
  const BlockGraph g(m, depth);
  std::uniform_real_distribution<double> d(-spread, spread);
  std::vector<double> v(g.size());
  for (double& x : v) x = d(rng);
  return Potential(std::make_shared<const BlockGraph>(m, depth), v);
}

// Dense W[u][v] = exp(w[u]) on admissible transitions.
inline Eigen::MatrixXd dense_weights(const BlockGraph& g, const std::vector<double>& log_weight) {
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(g.size()), static_cast<Eigen::Index>(g.size()));
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v : g.successors(u)) w(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = std::exp(log_weight[u]);
  return w;
}

// Eigenvalue moduli in decreasing order.
inline std::vector<double> eigen_moduli(const Eigen::MatrixXd& w) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(w, false);
  std::vector<double> out;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) out.push_back(std::abs(es.eigenvalues()[k]));
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace testing_support
