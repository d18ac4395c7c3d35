#include "markov/cycle_ratio.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "markov/error.hpp"

namespace markov {

namespace {

double ratio_of(const std::vector<std::size_t>& cycle, const std::vector<double>& num,
                const std::vector<double>& den) {
  double a = 0.0, b = 0.0;
  for (std::size_t u : cycle) {
    a += num[u];
    b += den[u];
  }
  return a / b;
}

// A cycle of negative weight under c(u) = num[u] - t den[u], if any.
std::optional<std::vector<std::size_t>> negative_cycle(const BlockGraph& g, const std::vector<double>& num,
                                                       const std::vector<double>& den, double t) {
  const std::size_t n = g.size();
  std::vector<double> cost(n);
  double scale = 0.0;
  for (std::size_t u = 0; u < n; ++u) {
    cost[u] = num[u] - t * den[u];
    scale = std::max(scale, std::abs(cost[u]));
  }
  const double eps = 1e-15 * std::max(scale, 1.0);
  std::vector<double> dist(n, 0.0);
  std::vector<std::size_t> pred(n, n);
  std::size_t last = n;
  for (std::size_t round = 0; round < n; ++round) {
    last = n;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v : g.successors(u))
        if (dist[u] + cost[u] < dist[v] - eps) {
          dist[v] = dist[u] + cost[u];
          pred[v] = u;
          last = v;
        }
    if (last == n) return std::nullopt;
  }
  std::size_t x = last;
  for (std::size_t i = 0; i < n; ++i) x = pred[x];
  std::vector<std::size_t> cycle{x};
  for (std::size_t y = pred[x]; y != x; y = pred[y]) cycle.push_back(y);
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

}  // namespace

CycleRatio min_cycle_ratio(const BlockGraph& graph, const std::vector<double>& num,
                           const std::vector<double>& den, double tolerance) {
  const std::size_t n = graph.size();
  if (num.size() != n || den.size() != n) throw Error(ErrorKind::InvalidInput, "cycle-ratio tables do not match graph");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t u = 0; u < n; ++u) {
    if (!(den[u] > 0.0)) throw Error(ErrorKind::InvalidInput, "cycle-ratio denominators must be positive");
    lo = std::min(lo, num[u] / den[u]);
    hi = std::max(hi, num[u] / den[u]);
  }
  lo -= 1.0;
  hi += 1.0;
  auto best = negative_cycle(graph, num, den, hi);
  if (!best) throw Error(ErrorKind::NotPrimitive, "graph has no cycle");
  double best_ratio = ratio_of(*best, num, den);
  hi = std::min(hi, best_ratio);
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (auto c = negative_cycle(graph, num, den, mid)) {
      const double r = ratio_of(*c, num, den);
      if (r < best_ratio) {
        best = std::move(c);
        best_ratio = r;
      }
      hi = std::min(mid, best_ratio);
    } else {
      lo = mid;
    }
  }
  // Dinkelbach polish: no cycle can beat the one we hold.
  for (int it = 0; it < 64; ++it) {
    auto c = negative_cycle(graph, num, den, best_ratio);
    if (!c) break;
    const double r = ratio_of(*c, num, den);
    if (!(r < best_ratio)) break;
    best = std::move(c);
    best_ratio = r;
  }
  return CycleRatio{best_ratio, std::move(*best)};
}

CycleRatio max_cycle_ratio(const BlockGraph& graph, const std::vector<double>& num,
                           const std::vector<double>& den, double tolerance) {
  std::vector<double> neg(num.size());
  std::transform(num.begin(), num.end(), neg.begin(), [](double v) { return -v; });
  CycleRatio r = min_cycle_ratio(graph, neg, den, tolerance);
  r.ratio = -r.ratio;
  return r;
}

}  // namespace markov
