#include "markov/multifractal.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <string>

#include "markov/cycle_ratio.hpp"
#include "markov/error.hpp"

namespace markov {

namespace {

struct Tables {
  Potential phi0;               // normalized potential
  std::vector<double> log_deriv;  // log|T'| per state
};

Tables tables(const Potential& phi) {
  Tables t{normalize(phi, pressure(phi)), {}};
  const BlockGraph& g = phi.graph();
  t.log_deriv.resize(g.size());
  for (std::size_t u = 0; u < g.size(); ++u) t.log_deriv[u] = phi.map().log_abs_slope(g.first_symbol(u));
  return t;
}

std::vector<double> mixed(const Tables& t, double eta, double q) {
  std::vector<double> v(t.log_deriv.size());
  for (std::size_t u = 0; u < v.size(); ++u) v[u] = -eta * t.log_deriv[u] + q * t.phi0.at_state(u);
  return v;
}

double solve_eta(const Tables& t, double q) {
  const BlockGraph& g = t.phi0.graph();
  auto f = [&](double e) { return log_spectral_radius(g, mixed(t, e, q)); };
  double bound = kEtaBracket;
  double lo = -bound, hi = bound;
  double f_lo = f(lo), f_hi = f(hi);
  for (int widen = 0; !(f_lo >= 0.0 && f_hi <= 0.0); ++widen) {
    if (widen == kEtaMaxWidenings)
      throw Error(ErrorKind::BracketFailure, "no sign change for eta on [" + std::to_string(lo) + ", " +
                                                 std::to_string(hi) + "] at q = " + std::to_string(q));
    bound *= kEtaWidening;
    lo = -bound;
    hi = bound;
    f_lo = f(lo);
    f_hi = f(hi);
  }
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    (fm > 0.0 ? lo : hi) = mid;
  }
  const double root = 0.5 * (lo + hi);
  const double residual = f(root);
  if (std::abs(residual) > 1e-10)
    throw Error(ErrorKind::ConvergenceFailure, "pressure residual " + std::to_string(residual) + " at eta");
  return root;
}

double solve_alpha(const Tables& t, double eta_q, double q) {
  const Potential psi(t.phi0.graph_ptr(), mixed(t, eta_q, q));
  const GibbsModel mu(psi);
  const auto& pi = mu.stationary();
  double num = 0.0, den = 0.0;
  for (std::size_t u = 0; u < pi.size(); ++u) {
    num += pi[u] * t.phi0.at_state(u);
    den += pi[u] * t.log_deriv[u];
  }
  return -num / den;
}

SpectrumPoint point_from(const Tables& t, double q) {
  SpectrumPoint p;
  p.q = q;
  p.eta = solve_eta(t, q);
  p.alpha = solve_alpha(t, p.eta, q);
  p.dim = p.eta + q * p.alpha;
  p.valid = p.dim >= 0.0 && p.dim <= 1.0;
  return p;
}

}  // namespace

double eta(const Potential& phi, double q) { return solve_eta(tables(phi), q); }

double alpha_of_q(const Potential& phi, double q) {
  const Tables t = tables(phi);
  return solve_alpha(t, solve_eta(t, q), q);
}

SpectrumPoint spectrum_point(const Potential& phi, double q) { return point_from(tables(phi), q); }

std::vector<SpectrumPoint> spectrum_serial(const Potential& phi, const std::vector<double>& q_grid) {
  const Tables t = tables(phi);
  std::vector<SpectrumPoint> out;
  out.reserve(q_grid.size());
  for (double q : q_grid) out.push_back(point_from(t, q));
  return out;
}

std::vector<SpectrumPoint> spectrum(const Potential& phi, const std::vector<double>& q_grid) {
  const Tables t = tables(phi);
  std::vector<SpectrumPoint> out(q_grid.size());
  std::vector<std::exception_ptr> errors(q_grid.size());
  const auto count = static_cast<std::ptrdiff_t>(q_grid.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[i] = point_from(t, q_grid[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t points) {
  std::vector<double> g(points);
  if (points == 1) {
    g[0] = lo;
    return g;
  }
  for (std::size_t i = 0; i < points; ++i)
    g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  return g;
}

std::vector<double> default_q_grid() {
  std::vector<double> g = linear_grid(-20.0, 20.0, 81);
  for (double q : linear_grid(-0.25, 0.25, 11)) g.push_back(q);
  for (double q : linear_grid(0.75, 1.25, 11)) g.push_back(q);
  for (double& q : g) q = std::round(q * 1e12) / 1e12;
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

CriticalExponents critical_exponents(const Potential& phi, double q_big) {
  const Tables t = tables(phi);
  const BlockGraph& g = phi.graph();
  std::vector<double> num(g.size());
  for (std::size_t u = 0; u < g.size(); ++u) num[u] = -t.phi0.at_state(u);
  CriticalExponents c;
  c.alpha_minus = min_cycle_ratio(g, num, t.log_deriv).ratio;
  c.alpha_plus = max_cycle_ratio(g, num, t.log_deriv).ratio;
  c.alpha_max = solve_alpha(t, solve_eta(t, 0.0), 0.0);
  c.hdim = solve_alpha(t, solve_eta(t, 1.0), 1.0);
  auto cross_check = [&](double q) {
    try {
      return solve_alpha(t, solve_eta(t, q), q);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BracketFailure) throw;
      return std::numeric_limits<double>::quiet_NaN();
    }
  };
  c.alpha_at_plus_q = cross_check(q_big);
  c.alpha_at_minus_q = cross_check(-q_big);
  return c;
}

std::vector<double> local_dimension_trace(const GibbsModel& model, std::span<const Symbol> word, std::size_t n_max) {
  const MarkovMap& map = model.map();
  const BlockGraph& g = model.graph();
  const std::size_t k = model.depth();
  const std::size_t n_end = std::min(n_max, word.size());
  std::vector<double> out;
  out.reserve(n_end);
  double log_len = 0.0;
  double acc = 0.0;
  std::size_t u = g.size();
  for (std::size_t n = 1; n <= n_end; ++n) {
    if (n >= 2 && !map.admissible(word[n - 2], word[n - 1]))
      throw Error(ErrorKind::InadmissibleWord, "trace word is not admissible");
    log_len -= map.log_abs_slope(word[n - 1]);
    double log_mu;
    if (n < k) {
      log_mu = model.log_measure(word.first(n));
    } else if (n == k) {
      u = g.index_of(word.first(k));
      acc = std::log(model.perron_data().left[u]);
      log_mu = acc + std::log(model.perron_data().right[u]);
    } else {
      acc += model.log_weight(u);
      u = g.step(u, word[n - 1]);
      log_mu = acc + std::log(model.perron_data().right[u]);
    }
    out.push_back(log_mu / log_len);
  }
  return out;
}

double concavity_violation(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<std::size_t> order(x.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<std::size_t> kept;
  for (std::size_t i : order)
    if (kept.empty() || x[i] > x[kept.back()]) kept.push_back(i);
  double worst = 0.0;
  for (std::size_t k = 1; k + 1 < kept.size(); ++k) {
    const std::size_t a = kept[k - 1], b = kept[k], c = kept[k + 1];
    const double w = (x[b] - x[a]) / (x[c] - x[a]);
    worst = std::max(worst, (1.0 - w) * y[a] + w * y[c] - y[b]);
  }
  return worst;
}

}  // namespace markov
