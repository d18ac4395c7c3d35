#include "markov/perron.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "markov/error.hpp"

namespace markov {

namespace {

std::vector<double> scaled_weights(const std::vector<double>& log_weight, double& shift) {
  shift = *std::max_element(log_weight.begin(), log_weight.end());
  std::vector<double> w(log_weight.size());
  for (std::size_t u = 0; u < w.size(); ++u) w[u] = std::exp(log_weight[u] - shift);
  return w;
}

void apply_right(const BlockGraph& g, const std::vector<double>& w, const std::vector<double>& x,
                 std::vector<double>& y) {
  for (std::size_t u = 0; u < g.size(); ++u) {
    double s = 0.0;
    for (std::size_t v : g.successors(u)) s += x[v];
    y[u] = w[u] * s;
  }
}

void apply_left(const BlockGraph& g, const std::vector<double>& w, const std::vector<double>& x,
                std::vector<double>& y) {
  for (std::size_t v = 0; v < g.size(); ++v) {
    double s = 0.0;
    for (std::size_t u : g.predecessors(v)) s += x[u] * w[u];
    y[v] = s;
  }
}

// Returns the dominant eigenvalue of the scaled operator; x ends max-normalized.
// Iterates A + sigma I with sigma = rho / 2 so that eigenvalues near -rho
// (nearly periodic weightings) do not stall convergence.
template <class Apply>
double power_iterate(std::size_t n, Apply apply, std::vector<double>& x, std::size_t& iterations) {
  x.assign(n, 1.0);
  std::vector<double> y(n);
  double rho = 0.0;
  for (std::size_t it = 1; it <= kPerronMaxIterations; ++it) {
    apply(x, y);
    const double sigma = 0.5 * rho;
    for (std::size_t u = 0; u < n; ++u) y[u] += sigma * x[u];
    const double m = *std::max_element(y.begin(), y.end());
    if (!(m > 0.0) || !std::isfinite(m)) throw Error(ErrorKind::ConvergenceFailure, "power iteration degenerated");
    double diff = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      y[u] /= m;
      diff = std::max(diff, std::abs(y[u] - x[u]));
    }
    x.swap(y);
    const double estimate = m - sigma;
    const bool settled = std::abs(estimate - rho) <= kPerronTolerance * estimate && diff <= kPerronTolerance;
    rho = estimate;
    if (settled) {
      iterations = it;
      return rho;
    }
  }
  throw Error(ErrorKind::ConvergenceFailure,
              "power iteration did not converge in " + std::to_string(kPerronMaxIterations) + " steps");
}

}  // namespace

PerronData perron(const BlockGraph& graph, const std::vector<double>& log_weight) {
  double shift = 0.0;
  const auto w = scaled_weights(log_weight, shift);
  const std::size_t n = graph.size();
  PerronData pd;
  std::size_t it_r = 0, it_l = 0;
  const double rho = power_iterate(
      n, [&](const std::vector<double>& x, std::vector<double>& y) { apply_right(graph, w, x, y); }, pd.right, it_r);
  power_iterate(
      n, [&](const std::vector<double>& x, std::vector<double>& y) { apply_left(graph, w, x, y); }, pd.left, it_l);
  double dot = 0.0;
  for (std::size_t u = 0; u < n; ++u) dot += pd.left[u] * pd.right[u];
  for (double& v : pd.left) v /= dot;
  for (std::size_t u = 0; u < n; ++u)
    if (!(pd.left[u] > 0.0) || !(pd.right[u] > 0.0))
      throw Error(ErrorKind::NotPrimitive, "Perron vector has a non-positive entry");
  pd.log_lambda = std::log(rho) + shift;
  pd.iterations = std::max(it_r, it_l);
  return pd;
}

double log_spectral_radius(const BlockGraph& graph, const std::vector<double>& log_weight) {
  double shift = 0.0;
  const auto w = scaled_weights(log_weight, shift);
  std::vector<double> x;
  std::size_t it = 0;
  const double rho = power_iterate(
      graph.size(), [&](const std::vector<double>& a, std::vector<double>& b) { apply_right(graph, w, a, b); }, x, it);
  return std::log(rho) + shift;
}

double second_eigen_ratio(const BlockGraph& graph, const std::vector<double>& log_weight, const PerronData& pd) {
  double shift = 0.0;
  const auto w = scaled_weights(log_weight, shift);
  const std::size_t n = graph.size();
  if (n == 1) return 0.0;
  const double rho = std::exp(pd.log_lambda - shift);

  auto project = [&](std::vector<double>& x) {
    double c = 0.0;
    for (std::size_t u = 0; u < n; ++u) c += pd.left[u] * x[u];
    for (std::size_t u = 0; u < n; ++u) x[u] -= c * pd.right[u];
  };
  auto dot = [n](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t u = 0; u < n; ++u) s += a[u] * b[u];
    return s;
  };
  // Gram-Schmidt on (a, b); a column that collapses is zeroed.
  auto orthonormalize = [&](std::vector<double>& a, std::vector<double>& b) {
    const double na = std::sqrt(dot(a, a));
    if (!(na > 0.0)) return false;
    for (double& v : a) v /= na;
    const double c = dot(a, b);
    for (std::size_t u = 0; u < n; ++u) b[u] -= c * a[u];
    const double nb = std::sqrt(dot(b, b));
    if (nb > 1e-14 * na)
      for (double& v : b) v /= nb;
    else
      std::fill(b.begin(), b.end(), 0.0);
    return true;
  };

  // Subspace iteration with a two-dimensional block on the deflated operator;
  // the Ritz values of the 2x2 projection resolve complex pairs.
  std::vector<double> x0(n), x1(n), y0(n), y1(n);
  for (std::size_t u = 0; u < n; ++u) {
    x0[u] = 1.0 + 0.5 * std::sin(1.3 * static_cast<double>(u) + 0.7);
    x1[u] = std::cos(2.1 * static_cast<double>(u) + 0.3);
  }
  project(x0);
  project(x1);
  if (!orthonormalize(x0, x1)) return 0.0;

  constexpr std::size_t kWindow = 50;
  constexpr std::size_t kMaxSteps = 40'000;
  double previous = -1.0;
  double modulus = 0.0;
  for (std::size_t step = 1; step <= kMaxSteps; ++step) {
    apply_right(graph, w, x0, y0);
    apply_right(graph, w, x1, y1);
    project(y0);
    project(y1);
    const double h00 = dot(x0, y0), h01 = dot(x0, y1), h10 = dot(x1, y0), h11 = dot(x1, y1);
    const double half_trace = 0.5 * (h00 + h11);
    const double det = h00 * h11 - h01 * h10;
    const double disc = half_trace * half_trace - det;
    modulus = disc >= 0.0 ? std::abs(half_trace) + std::sqrt(disc) : std::sqrt(det);
    if (!(std::sqrt(dot(y0, y0) + dot(y1, y1)) > 1e-13 * rho)) return 0.0;
    x0.swap(y0);
    x1.swap(y1);
    if (!orthonormalize(x0, x1)) return 0.0;
    if (step % kWindow == 0) {
      if (previous >= 0.0 && std::abs(modulus - previous) <= 1e-11 * rho) return modulus / rho;
      previous = modulus;
    }
  }
  return modulus / rho;
}

}  // namespace markov
