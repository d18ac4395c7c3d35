#include "markov/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <string>

#include "markov/error.hpp"

namespace markov {

namespace {

constexpr std::size_t kBlock = 4096;
constexpr std::size_t kRefineStart = 16;
constexpr std::size_t kTargetSuffix = 64;

void check_bits(const Rational& q) {
  if (denominator_bits(q) > kMaxDenominatorBits)
    throw Error(ErrorKind::DenominatorOverflow,
                "denominator exceeds " + std::to_string(kMaxDenominatorBits) + " bits");
}

Cylinder bounded_cylinder(const MarkovMap& map, std::span<const Symbol> word) {
  Rational u = map.left(word.back());
  Rational v = map.right(word.back());
  for (std::size_t i = word.size() - 1; i-- > 0;) {
    u = map.inverse_branch(word[i], u);
    v = map.inverse_branch(word[i], v);
    check_bits(u);
    check_bits(v);
  }
  if (v < u) std::swap(u, v);
  return Cylinder{Word(word.begin(), word.end()), std::move(u), std::move(v)};
}

template <class Orbit>
void scan(Orbit& orbit, const Rational& y, const std::vector<Rational>& radii, std::size_t n_max,
          std::vector<std::optional<std::size_t>>& tau) {
  tau.assign(radii.size(), std::nullopt);
  std::vector<double> radii_d;
  for (const auto& r : radii) radii_d.push_back(r.get_d());
  const double yd = y.get_d();
  const double margin = 64.0 * orbit.error_bound() + 1e-15;
  std::vector<double> buf;
  std::size_t j = 0;
  for (std::size_t from = 1; from <= n_max && j < radii.size(); from += kBlock) {
    const std::size_t to = std::min(n_max + 1, from + kBlock);
    orbit.fill(from, to, buf);
    for (std::size_t n = from; n < to; ++n) {
      const double dist = std::abs(buf[n - from] - yd);
      while (j < radii.size()) {
        bool hit;
        if (dist < radii_d[j] - margin) {
          hit = true;
        } else if (dist > radii_d[j] + margin) {
          hit = false;
        } else {
          hit = orbit.in_open_ball(n, y, radii[j]);
        }
        if (!hit) break;
        tau[j++] = n;
      }
      if (j == radii.size()) return;
    }
  }
}

std::vector<Rational> dyadic_radii(std::size_t j_min, std::size_t j_max) {
  std::vector<Rational> radii;
  for (std::size_t j = j_min; j <= j_max; ++j) {
    Rational r(mpz_class(1), mpz_class(1) << static_cast<mp_bitcnt_t>(j));
    radii.push_back(r);
  }
  return radii;
}

RateEstimate summarize(std::size_t j_max, std::vector<std::optional<std::size_t>> tau) {
  RateEstimate est;
  est.j_min = kRateMinJ;
  est.j_max = j_max;
  est.tau = std::move(tau);
  std::vector<double> tail;
  for (std::size_t i = 0; i < est.tau.size(); ++i) {
    const std::size_t j = est.j_min + i;
    const double q = est.tau[i] ? std::log(static_cast<double>(*est.tau[i])) / (static_cast<double>(j) * std::log(2.0))
                                : std::numeric_limits<double>::infinity();
    est.quotient.push_back(q);
    if (2 * j > j_max) tail.push_back(q);
  }
  est.tail_min = *std::min_element(tail.begin(), tail.end());
  est.tail_max = *std::max_element(tail.begin(), tail.end());
  est.tail_median = median(tail);
  return est;
}

void check_rate_args(std::size_t j_max) {
  if (j_max < kRateMinJ) throw Error(ErrorKind::InvalidInput, "j_max must be >= 4");
}

HittingTrial run_trial(const std::shared_ptr<const ChainTable>& table_x, const GibbsModel& model_psi,
                       std::size_t t, std::size_t j_max, std::size_t n_max, std::uint64_t seed) {
  HittingTrial trial;
  trial.trial = t;
  trial.y = sample_point(model_psi, kTargetPrefix, seed, 2 * t + 1).value;
  SymbolicPoint x(table_x, seed, 2 * t, n_max + 1 + kTargetSuffix);
  trial.estimate = rate_estimate(x, trial.y, j_max, n_max);
  return trial;
}

double finish_median(const std::vector<HittingTrial>& trials) {
  std::vector<double> v;
  for (const auto& t : trials) v.push_back(t.estimate.tail_median);
  return median(v);
}

}  // namespace

double median(std::vector<double> values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  const double a = values[n / 2 - 1], b = values[n / 2];
  if (std::isinf(a) || std::isinf(b)) return std::isinf(a) ? a : b;
  return 0.5 * (a + b);
}

Rational iterate(const MarkovMap& map, const Rational& x, std::size_t n) {
  if (x < 0 || x > 1) throw Error(ErrorKind::InvalidInput, "iterate: x outside [0,1]");
  Rational y = x;
  for (std::size_t i = 0; i < n; ++i) {
    y = map.apply(y);
    check_bits(y);
  }
  return y;
}

SymbolicPoint::SymbolicPoint(const MarkovMap& map, Word word)
    : map_(std::make_shared<const MarkovMap>(map)), word_(std::move(word)), length_(word_.size()) {
  require_admissible(*map_, word_);
}

SymbolicPoint::SymbolicPoint(std::shared_ptr<const ChainTable> table, std::uint64_t seed, std::uint64_t stream,
                             std::size_t length)
    : map_(table->graph->map_ptr()), length_(length) {
  if (length == 0) throw Error(ErrorKind::InvalidInput, "symbolic point needs a positive length");
  sampler_.emplace(std::move(table), seed, stream);
}

std::span<const Symbol> SymbolicPoint::symbols(std::size_t from, std::size_t to) {
  if (to > length_ || from > to) throw Error(ErrorKind::HorizonOverflow, "symbol index beyond the point's length");
  if (word_.size() < to) {
    const std::size_t want = std::min(length_, std::max(to, word_.size() + (word_.size() >> 1) + 1024));
    sampler_->append(word_, want - word_.size());
  }
  return std::span<const Symbol>(word_).subspan(from, to - from);
}

Rational SymbolicPoint::exact_point(std::size_t n) {
  const Cylinder c = bounded_cylinder(*map_, symbols(n, length_));
  Rational mid = (c.left + c.right) / 2;
  return mid;
}

SymbolicOrbit::SymbolicOrbit(SymbolicPoint& x) : x_(&x) {
  const double rho = x.map().min_abs_slope().get_d();
  lookahead_ = static_cast<std::size_t>(std::ceil(14.0 * std::log(10.0) / std::log(rho))) + 2;
  error_bound_ = std::pow(rho, -static_cast<double>(lookahead_)) + 8.0 * std::numeric_limits<double>::epsilon();
}

void SymbolicOrbit::fill(std::size_t from, std::size_t to, std::vector<double>& out) {
  const MarkovMap& map = x_->map();
  if (to >= x_->length() + 1 || from >= to)
    throw Error(ErrorKind::HorizonOverflow, "orbit index beyond the point's length");
  const std::size_t e = std::min(to - 1 + lookahead_, x_->length() - 1);
  const auto w = x_->symbols(from, e + 1);
  out.assign(to - from, 0.0);
  double z = 0.5 * (map.left_d(w[e - from]) + map.right_d(w[e - from]));
  if (e < to) out[e - from] = z;
  for (std::size_t t = e; t-- > from;) {
    z = map.inverse_branch(w[t - from], z);
    if (t < to) out[t - from] = z;
  }
}

bool SymbolicOrbit::in_open_ball(std::size_t n, const Rational& y, const Rational& r) {
  const MarkovMap& map = x_->map();
  const Rational lo = y - r;
  const Rational hi = y + r;
  for (std::size_t k = kRefineStart;; k *= 2) {
    const std::size_t end = std::min(n + k, x_->length());
    const Cylinder c = bounded_cylinder(map, x_->symbols(n, end));
    if (end == x_->length()) {
      const Rational p = (c.left + c.right) / 2;
      return lo < p && p < hi;
    }
    if (c.left >= lo && c.right <= hi) return true;
    if (c.right <= lo || c.left >= hi) return false;
  }
}

ExactOrbit::ExactOrbit(const MarkovMap& map, Rational x) : map_(&map), current_(std::move(x)) {
  if (current_ < 0 || current_ > 1) throw Error(ErrorKind::InvalidInput, "orbit start outside [0,1]");
}

void ExactOrbit::advance_to(std::size_t n) {
  while (index_ < n) {
    current_ = map_->apply(current_);
    check_bits(current_);
    ++index_;
  }
}

void ExactOrbit::fill(std::size_t from, std::size_t to, std::vector<double>& out) {
  if (from < index_) throw Error(ErrorKind::InvalidInput, "exact orbit is forward-only");
  block_from_ = from;
  block_.clear();
  out.clear();
  for (std::size_t n = from; n < to; ++n) {
    advance_to(n);
    block_.push_back(current_);
    out.push_back(current_.get_d());
  }
}

bool ExactOrbit::in_open_ball(std::size_t n, const Rational& y, const Rational& r) {
  const Rational d = abs(block_.at(n - block_from_) - y);
  return d < r;
}

HittingRecord hitting_time(const MarkovMap& map, const Rational& x, const Rational& y, const Rational& r,
                           std::size_t n_max) {
  if (r <= 0 || n_max == 0) throw Error(ErrorKind::InvalidInput, "hitting_time needs r > 0 and n_max >= 1");
  ExactOrbit orbit(map, x);
  std::vector<std::optional<std::size_t>> tau;
  scan(orbit, y, {r}, n_max, tau);
  return HittingRecord{r, tau[0], n_max};
}

HittingRecord hitting_time(SymbolicPoint& x, const Rational& y, const Rational& r, std::size_t n_max) {
  if (r <= 0 || n_max == 0) throw Error(ErrorKind::InvalidInput, "hitting_time needs r > 0 and n_max >= 1");
  if (n_max >= x.length()) throw Error(ErrorKind::HorizonOverflow, "n_max beyond the sampled itinerary");
  SymbolicOrbit orbit(x);
  std::vector<std::optional<std::size_t>> tau;
  scan(orbit, y, {r}, n_max, tau);
  return HittingRecord{r, tau[0], n_max};
}

RateEstimate rate_estimate(const MarkovMap& map, const Rational& x, const Rational& y, std::size_t j_max,
                           std::size_t n_max) {
  check_rate_args(j_max);
  ExactOrbit orbit(map, x);
  std::vector<std::optional<std::size_t>> tau;
  scan(orbit, y, dyadic_radii(kRateMinJ, j_max), n_max, tau);
  return summarize(j_max, std::move(tau));
}

RateEstimate rate_estimate(SymbolicPoint& x, const Rational& y, std::size_t j_max, std::size_t n_max) {
  check_rate_args(j_max);
  if (n_max >= x.length()) throw Error(ErrorKind::HorizonOverflow, "n_max beyond the sampled itinerary");
  SymbolicOrbit orbit(x);
  std::vector<std::optional<std::size_t>> tau;
  scan(orbit, y, dyadic_radii(kRateMinJ, j_max), n_max, tau);
  return summarize(j_max, std::move(tau));
}

double predicted_rate(const Potential& phi, const Potential& psi) {
  const std::size_t k = std::max(phi.depth(), psi.depth());
  const Potential phi0 = lift(normalize(phi, pressure(phi)), k);
  const GibbsModel mu(lift(psi, k));
  const auto& pi = mu.stationary();
  const BlockGraph& g = phi0.graph();
  double num = 0.0, den = 0.0;
  for (std::size_t u = 0; u < pi.size(); ++u) {
    num += pi[u] * phi0.at_state(u);
    den += pi[u] * phi.map().log_abs_slope(g.first_symbol(u));
  }
  return -num / den;
}

HittingLawResult hitting_law_experiment_serial(const GibbsModel& model_phi, const GibbsModel& model_psi,
                                               std::size_t trials, std::size_t j_max, std::size_t n_max,
                                               std::uint64_t seed) {
  check_rate_args(j_max);
  const auto table_x = std::make_shared<const ChainTable>(model_phi);
  HittingLawResult res;
  for (std::size_t t = 0; t < trials; ++t) res.trials.push_back(run_trial(table_x, model_psi, t, j_max, n_max, seed));
  res.median_tail = finish_median(res.trials);
  res.predicted = predicted_rate(model_phi.potential(), model_psi.potential());
  return res;
}

HittingLawResult hitting_law_experiment(const GibbsModel& model_phi, const GibbsModel& model_psi,
                                        std::size_t trials, std::size_t j_max, std::size_t n_max,
                                        std::uint64_t seed) {
  check_rate_args(j_max);
  const auto table_x = std::make_shared<const ChainTable>(model_phi);
  HittingLawResult res;
  res.trials.resize(trials);
  std::vector<std::exception_ptr> errors(trials);
  const auto count = static_cast<std::ptrdiff_t>(trials);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    try {
      res.trials[t] = run_trial(table_x, model_psi, static_cast<std::size_t>(t), j_max, n_max, seed);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  res.median_tail = finish_median(res.trials);
  res.predicted = predicted_rate(model_phi.potential(), model_psi.potential());
  return res;
}

}  // namespace markov
