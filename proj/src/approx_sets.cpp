#include "markov/approx_sets.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>
#include <limits>
#include <memory>
#include <string>

#include "markov/error.hpp"

namespace markov {

namespace {

constexpr std::size_t kSuffix = 64;

double slack_for(const OrbitSamples& orbit) { return 4.0 * orbit.error_bound + 1e-12; }

std::size_t box_of(double p, std::size_t nb) {
  const double s = std::clamp(p, 0.0, 1.0) * static_cast<double>(nb);
  return std::min(static_cast<std::size_t>(s), nb - 1);
}

void check_orbit(const OrbitSamples& orbit, std::size_t horizon) {
  if (horizon > orbit.points.size())
    throw Error(ErrorKind::HorizonOverflow, "horizon " + std::to_string(horizon) + " beyond the computed orbit (" +
                                                std::to_string(orbit.points.size()) + ")");
}

GridIndicator build(const OrbitSamples& orbit, const ApproxParams& p, CoverMode mode) {
  switch (mode) {
    case CoverMode::Uniform: return uniform_cover(orbit, p);
    case CoverMode::Complement: return uniform_cover(orbit, p).complement();
    case CoverMode::Asymptotic: return asymptotic_cover(orbit, p.kappa, p.start_index, p.horizon, p.resolution);
  }
  return GridIndicator(p.resolution);
}

CoverSample one_sample(const std::shared_ptr<const ChainTable>& table, const ApproxParams& p, CoverMode mode,
                       std::size_t t, std::uint64_t seed) {
  SymbolicPoint x(table, seed, t, p.horizon + 1 + kSuffix);
  const OrbitSamples orbit = orbit_samples(x, p.horizon);
  const GridIndicator ind = build(orbit, p, mode);
  return CoverSample{t, lebesgue_fraction(ind), ind.count()};
}

}  // namespace

void validate(const ApproxParams& p) {
  if (!(p.kappa > 0.0) || !std::isfinite(p.kappa)) throw Error(ErrorKind::InvalidInput, "kappa must be positive");
  if (p.start_index < 1 || p.horizon < p.start_index)
    throw Error(ErrorKind::InvalidInput, "need M >= i >= 1");
  if (p.resolution < 4 || p.resolution > kMaxResolution)
    throw Error(ErrorKind::InvalidInput, "resolution must lie in [4, " + std::to_string(kMaxResolution) + "]");
  if (p.horizon > kMaxHorizon) throw Error(ErrorKind::HorizonOverflow, "horizon above the orbit cap");
}

GridIndicator::GridIndicator(unsigned m) : m_(m), bits_(((std::size_t{1} << m) + 63) / 64, 0) {
  if (m > kMaxResolution) throw Error(ErrorKind::InvalidInput, "grid resolution too fine");
}

std::size_t GridIndicator::count() const {
  std::size_t c = 0;
  for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

GridIndicator GridIndicator::complement() const {
  GridIndicator out(m_);
  for (std::size_t j = 0; j < boxes(); ++j)
    if (!test(j)) out.set(j);
  return out;
}

GridIndicator GridIndicator::coarsen(unsigned m2) const {
  if (m2 > m_) throw Error(ErrorKind::InvalidInput, "coarsen needs a coarser resolution");
  GridIndicator out(m2);
  const unsigned shift = m_ - m2;
  for (std::size_t j = 0; j < boxes(); ++j)
    if (test(j)) out.set(j >> shift);
  return out;
}

bool GridIndicator::subset_of(const GridIndicator& other) const {
  if (other.m_ != m_) throw Error(ErrorKind::InvalidInput, "resolution mismatch");
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~other.bits_[i]) return false;
  return true;
}

GridIndicator& GridIndicator::operator&=(const GridIndicator& other) {
  if (other.m_ != m_) throw Error(ErrorKind::InvalidInput, "resolution mismatch");
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= other.bits_[i];
  return *this;
}

GridIndicator& GridIndicator::operator|=(const GridIndicator& other) {
  if (other.m_ != m_) throw Error(ErrorKind::InvalidInput, "resolution mismatch");
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
  return *this;
}

OrbitSamples orbit_samples(SymbolicPoint& x, std::size_t horizon) {
  if (horizon >= x.length()) throw Error(ErrorKind::HorizonOverflow, "horizon beyond the sampled itinerary");
  SymbolicOrbit orbit(x);
  OrbitSamples out;
  out.error_bound = orbit.error_bound();
  if (horizon > 0) orbit.fill(1, horizon + 1, out.points);
  return out;
}

OrbitSamples orbit_samples(const MarkovMap& map, const Rational& x, std::size_t horizon) {
  ExactOrbit orbit(map, x);
  OrbitSamples out;
  out.error_bound = orbit.error_bound();
  if (horizon > 0) orbit.fill(1, horizon + 1, out.points);
  return out;
}

GridIndicator uniform_cover(const OrbitSamples& orbit, const ApproxParams& p) {
  validate(p);
  check_orbit(orbit, p.horizon);
  const std::size_t nb = std::size_t{1} << p.resolution;
  const double h = std::ldexp(1.0, -static_cast<int>(p.resolution));
  const double slack = slack_for(orbit);
  const double inf = std::numeric_limits<double>::infinity();
  auto radius = [&](std::size_t n) { return std::pow(static_cast<double>(n), -p.kappa); };

  // d[b]: distance from the closed box b to the orbit so far.
  std::vector<double> d(nb, inf);
  std::vector<double> lo(nb, inf), hi(nb, -inf);
  std::vector<char> failed(nb, 0);
  auto drop = [&](std::size_t b, double nd, std::size_t n) {
    if (n - 1 >= p.start_index && !(d[b] - slack < radius(n - 1))) failed[b] = 1;
    d[b] = nd;
  };

  for (std::size_t n = 1; n <= p.horizon; ++n) {
    const double x = std::clamp(orbit.points[n - 1], 0.0, 1.0);
    const std::size_t b = box_of(x, nb);
    bool new_max = false, new_min = false;
    if (d[b] > 0.0) drop(b, 0.0, n);
    if (x > hi[b]) {
      hi[b] = x;
      new_max = true;
    }
    if (x < lo[b]) {
      lo[b] = x;
      new_min = true;
    }
    if (new_max)
      for (std::size_t c = b + 1; c < nb; ++c) {
        const double nd = static_cast<double>(c) * h - x;
        if (!(nd < d[c])) break;
        drop(c, nd, n);
      }
    if (new_min)
      for (std::size_t c = b; c-- > 0;) {
        const double nd = x - static_cast<double>(c + 1) * h;
        if (!(nd < d[c])) break;
        drop(c, nd, n);
      }
  }

  GridIndicator out(p.resolution);
  const double r_final = radius(p.horizon);
  for (std::size_t b = 0; b < nb; ++b)
    if (!failed[b] && d[b] - slack < r_final) out.set(b);
  return out;
}

GridIndicator uniform_cover_reference(const OrbitSamples& orbit, const ApproxParams& p) {
  validate(p);
  check_orbit(orbit, p.horizon);
  const std::size_t nb = std::size_t{1} << p.resolution;
  const double h = std::ldexp(1.0, -static_cast<int>(p.resolution));
  const double slack = slack_for(orbit);
  std::vector<double> d(nb, std::numeric_limits<double>::infinity());
  std::vector<char> alive(nb, 1);
  for (std::size_t n = 1; n <= p.horizon; ++n) {
    const double x = std::clamp(orbit.points[n - 1], 0.0, 1.0);
    for (std::size_t b = 0; b < nb; ++b) {
      const double left = static_cast<double>(b) * h;
      const double right = static_cast<double>(b + 1) * h;
      const double dist = x < left ? left - x : (x > right ? x - right : 0.0);
      d[b] = std::min(d[b], dist);
    }
    if (n < p.start_index) continue;
    const double r = std::pow(static_cast<double>(n), -p.kappa);
    for (std::size_t b = 0; b < nb; ++b)
      if (!(d[b] - slack < r)) alive[b] = 0;
  }
  GridIndicator out(p.resolution);
  for (std::size_t b = 0; b < nb; ++b)
    if (alive[b]) out.set(b);
  return out;
}

GridIndicator asymptotic_cover(const OrbitSamples& orbit, double kappa, std::size_t n_min, std::size_t horizon,
                               unsigned m) {
  validate(ApproxParams{kappa, n_min, horizon, m});
  check_orbit(orbit, horizon);
  const std::size_t nb = std::size_t{1} << m;
  const double scale = static_cast<double>(nb);
  const double slack = slack_for(orbit);
  std::vector<std::int64_t> diff(nb + 1, 0);
  const auto last = static_cast<double>(nb - 1);
  for (std::size_t n = n_min; n <= horizon; ++n) {
    const double x = orbit.points[n - 1];
    const double r = std::pow(static_cast<double>(n), -kappa) + slack;
    // Closed box b meets (x - r, x + r) iff (b+1) h > x - r and b h < x + r.
    const double first = std::clamp(std::floor((x - r) * scale), 0.0, last);
    const double end = std::clamp(std::ceil((x + r) * scale) - 1.0, 0.0, last);
    if (end < first) continue;
    diff[static_cast<std::size_t>(first)] += 1;
    diff[static_cast<std::size_t>(end) + 1] -= 1;
  }
  GridIndicator out(m);
  std::int64_t acc = 0;
  for (std::size_t b = 0; b < nb; ++b) {
    acc += diff[b];
    if (acc > 0) out.set(b);
  }
  return out;
}

double lebesgue_fraction(const GridIndicator& ind) {
  return static_cast<double>(ind.count()) / static_cast<double>(ind.boxes());
}

BoxFit box_dimension_fit(const std::vector<GridIndicator>& indicators) {
  if (indicators.size() < 3) throw Error(ErrorKind::DegenerateFit, "box fit needs at least 3 resolutions");
  BoxFit fit;
  std::vector<double> xs, ys;
  for (const auto& ind : indicators) {
    const std::size_t c = ind.count();
    if (c == 0) throw Error(ErrorKind::DegenerateFit, "empty indicator at resolution " + std::to_string(ind.resolution()));
    fit.resolutions.push_back(ind.resolution());
    fit.counts.push_back(c);
    xs.push_back(static_cast<double>(ind.resolution()));
    ys.push_back(std::log2(static_cast<double>(c)));
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i] / n;
    my += ys[i] / n;
  }
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw Error(ErrorKind::DegenerateFit, "box fit needs distinct resolutions");
  fit.slope = sxy / sxx;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (my + fit.slope * (xs[i] - mx));
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

bool inclusion_check(const MarkovMap& map, const Rational& x, double kappa, std::size_t i, std::size_t horizon,
                     unsigned m) {
  const ApproxParams p{kappa, i, horizon, m};
  validate(p);
  const OrbitSamples full = orbit_samples(map, x, horizon + 1);
  OrbitSamples shifted;
  shifted.error_bound = full.error_bound;
  shifted.points.assign(full.points.begin() + 1, full.points.end());
  OrbitSamples head = full;
  head.points.pop_back();

  const GridIndicator ux = uniform_cover(head, p);
  const GridIndicator utx = uniform_cover(shifted, p);
  const std::size_t nb = ux.boxes();
  const double h = std::ldexp(1.0, -static_cast<int>(m));
  const double slack = slack_for(full);
  const double exclusion = std::pow(static_cast<double>(i), -kappa);
  const double tx = std::clamp(full.points[0], 0.0, 1.0);
  for (std::size_t b = 0; b < nb; ++b) {
    if (!ux.test(b)) continue;
    const double left = static_cast<double>(b) * h;
    const double right = static_cast<double>(b + 1) * h;
    const double dist = tx < left ? left - tx : (tx > right ? tx - right : 0.0);
    if (dist - slack < exclusion) continue;
    if (!utx.test(b)) return false;
  }
  return true;
}

std::vector<CoverSample> cover_experiment_serial(const GibbsModel& model, const ApproxParams& p, CoverMode mode,
                                                 std::size_t samples, std::uint64_t seed) {
  validate(p);
  const auto table = std::make_shared<const ChainTable>(model);
  std::vector<CoverSample> out;
  for (std::size_t t = 0; t < samples; ++t) out.push_back(one_sample(table, p, mode, t, seed));
  return out;
}

std::vector<CoverSample> cover_experiment(const GibbsModel& model, const ApproxParams& p, CoverMode mode,
                                          std::size_t samples, std::uint64_t seed) {
  validate(p);
  const auto table = std::make_shared<const ChainTable>(model);
  std::vector<CoverSample> out(samples);
  std::vector<std::exception_ptr> errors(samples);
  const auto count = static_cast<std::ptrdiff_t>(samples);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    try {
      out[t] = one_sample(table, p, mode, static_cast<std::size_t>(t), seed);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<GridIndicator> uniform_cover_levels(const OrbitSamples& orbit, const ApproxParams& p,
                                                const std::vector<unsigned>& resolutions) {
  std::vector<GridIndicator> out;
  for (unsigned m : resolutions) {
    ApproxParams q = p;
    q.resolution = m;
    out.push_back(uniform_cover(orbit, q));
  }
  return out;
}

}  // namespace markov
