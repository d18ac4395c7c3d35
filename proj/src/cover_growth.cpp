#include "markov/cover_growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "markov/error.hpp"

namespace markov {

namespace {

constexpr double kLocateGuard = 1e-13;

double down(double v) { return std::nextafter(v, -std::numeric_limits<double>::infinity()); }
double up(double v) { return std::nextafter(v, std::numeric_limits<double>::infinity()); }

// Union of generation-g cylinders meeting (left - delta, right + delta),
// rounded outward.
std::pair<double, double> snap(const MarkovMap& map, double left, double right, double delta, std::size_t g) {
  const double pl = down(left - delta);
  const double pr = up(right + delta);
  const double lo = pl <= 0.0 ? 0.0 : cylinder_bounds_d(map, locate_d(map, pl, g)).first;
  const double hi = pr >= 1.0 ? 1.0 : cylinder_bounds_d(map, locate_d(map, pr, g)).second;
  return {lo, hi};
}

std::size_t generation_for(double t, double log_l1) {
  return static_cast<std::size_t>(std::ceil(t * std::log(2.0) / log_l1 - 1e-12));
}

struct MassTable {
  std::vector<double> left, right, prefix;
};

MassTable mass_table(const GibbsModel& model, std::size_t g) {
  const auto cyl = enumerate_cylinders(model.map(), g, std::size_t{1} << 22);
  struct Row {
    double l, r, m;
  };
  std::vector<Row> rows;
  rows.reserve(cyl.size());
  for (const auto& c : cyl) rows.push_back({c.left.get_d(), c.right.get_d(), model.measure(c.word)});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.l < b.l; });
  MassTable t;
  t.prefix.push_back(0.0);
  for (const auto& r : rows) {
    t.left.push_back(r.l);
    t.right.push_back(r.r);
    t.prefix.push_back(t.prefix.back() + r.m);
  }
  return t;
}

double mass_meeting(const MassTable& t, double a, double b) {
  const auto first = static_cast<std::size_t>(std::upper_bound(t.right.begin(), t.right.end(), a) - t.right.begin());
  const auto last = static_cast<std::size_t>(std::lower_bound(t.left.begin(), t.left.end(), b) - t.left.begin());
  return last > first ? t.prefix[last] - t.prefix[first] : 0.0;
}

IntervalList approximate_a_n(const GibbsModel& model, const CoverGrowthParams& p, double log_l1) {
  const MarkovMap& map = model.map();
  const std::size_t finest = generation_for(static_cast<double>(p.n + p.a_depth), log_l1);
  std::vector<MassTable> tables;
  std::vector<double> radii;
  for (std::size_t t = p.n + 1; t <= p.n + p.a_depth; ++t) {
    tables.push_back(mass_table(model, generation_for(static_cast<double>(t), log_l1)));
    radii.push_back(std::ldexp(1.0, -static_cast<int>(t)));
  }
  IntervalList pieces;
  for (const auto& c : enumerate_cylinders(map, finest, std::size_t{1} << 22)) {
    const double cl = c.left.get_d(), cr = c.right.get_d();
    bool pass = true;
    for (std::size_t i = 0; i < radii.size() && pass; ++i)
      pass = mass_meeting(tables[i], cl - radii[i], cr + radii[i]) < std::pow(radii[i], p.b);
    if (pass) pieces.emplace_back(cl, cr);
  }
  return merge_intervals(std::move(pieces));
}

}  // namespace

IntervalList merge_intervals(IntervalList pieces, double join_tolerance) {
  std::sort(pieces.begin(), pieces.end());
  IntervalList out;
  for (const auto& [l, r] : pieces) {
    if (!(r > l)) continue;
    if (!out.empty() && l <= out.back().second + join_tolerance)
      out.back().second = std::max(out.back().second, r);
    else
      out.emplace_back(l, r);
  }
  return out;
}

IntervalList intersect(const IntervalList& a, const IntervalList& b) {
  IntervalList out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double l = std::max(a[i].first, b[j].first);
    const double r = std::min(a[i].second, b[j].second);
    if (l < r) out.emplace_back(l, r);
    (a[i].second < b[j].second ? i : j)++;
  }
  return out;
}

bool overlaps(const IntervalList& a, double left, double right) {
  auto it = std::upper_bound(a.begin(), a.end(), left,
                             [](double v, const std::pair<double, double>& iv) { return v < iv.second; });
  return it != a.end() && it->first < right && left < it->second;
}

bool contains(const IntervalList& a, double x) {
  auto it = std::upper_bound(a.begin(), a.end(), x,
                             [](double v, const std::pair<double, double>& iv) { return v < iv.second; });
  return it != a.end() && it->first <= x;
}

double total_length(const IntervalList& a) {
  double s = 0.0;
  for (const auto& [l, r] : a) s += r - l;
  return s;
}

Word locate_d(const MarkovMap& map, double p, std::size_t n) {
  p = std::clamp(p, 0.0, 1.0);
  Word w;
  w.reserve(n);
  double alpha = 1.0, beta = 0.0;
  for (std::size_t step = 0; step < n; ++step) {
    bool found = false;
    for (std::size_t s = 0; s < map.symbols() && !found; ++s) {
      const auto sym = static_cast<Symbol>(s);
      if (!w.empty() && !map.admissible(w.back(), sym)) continue;
      double lo = alpha * map.left_d(sym) + beta;
      double hi = alpha * map.right_d(sym) + beta;
      if (hi < lo) std::swap(lo, hi);
      if (p < lo - kLocateGuard || p > hi + kLocateGuard) continue;
      if (std::abs(p - lo) < kLocateGuard || std::abs(p - hi) < kLocateGuard) {
        Rational exact(p);
        return locate(map, exact, n);
      }
      w.push_back(sym);
      const double s_d = map.slope_d(sym), t_d = map.intercept_d(sym);
      beta -= alpha * t_d / s_d;
      alpha /= s_d;
      found = true;
    }
    if (!found) return locate(map, Rational(p), n);
  }
  return w;
}

std::size_t theta(double kappa, std::size_t j, double log_l1) {
  return static_cast<std::size_t>(std::floor(kappa * static_cast<double>(j) * std::log(2.0) / log_l1)) + 1;
}

std::size_t cover_growth_length(const MarkovMap& map, const CoverGrowthParams& p) {
  const double log_l1 = std::log(map.min_abs_slope().get_d());
  return (std::size_t{1} << p.i_max) + theta(p.kappa, p.i_max, log_l1) + 2;
}

CoverGrowth cover_growth(const GibbsModel& model, SymbolicPoint& x, const CoverGrowthParams& p, double gamma) {
  if (!(p.kappa > 0.0)) throw Error(ErrorKind::InvalidInput, "kappa must be positive");
  if (!(p.b > 1.0 / p.kappa && p.b < p.a))
    throw Error(ErrorKind::ParameterOrder, "need 1/kappa < b < a");
  if (p.l < p.n) throw Error(ErrorKind::ParameterOrder, "need l >= n");
  if (p.i_max < p.l) throw Error(ErrorKind::ParameterOrder, "need i_max >= l");
  if (p.i_max > 24) throw Error(ErrorKind::HorizonOverflow, "i_max above 24");
  const MarkovMap& map = model.map();
  const double log_l1 = std::log(map.min_abs_slope().get_d());
  const std::size_t len = cover_growth_length(map, p);
  if (x.length() < len) throw Error(ErrorKind::HorizonOverflow, "itinerary too short for i_max");

  CoverGrowth out;
  out.params = p;
  out.gamma = gamma > 0.0 ? gamma : gibbs_constant(model, 8);
  out.epsilon = std::pow(out.gamma, 3) * std::pow(12.0, p.b) *
                std::pow(2.0, (1.0 - p.b * p.kappa) * static_cast<double>(p.l));
  out.l_condition = 12.0 * std::pow(2.0, -p.kappa * static_cast<double>(p.l)) < std::ldexp(1.0, -static_cast<int>(p.n));

  const IntervalList a_n = approximate_a_n(model, p, log_l1);
  out.a_n_length = total_length(a_n);
  const Word w(x.symbols(0, len).begin(), x.symbols(0, len).end());
  const std::span<const Symbol> ws(w);

  IntervalList g_prev = a_n;
  IntervalList g_hat;
  std::size_t n_prev = 0;
  for (std::size_t i = p.l; i <= p.i_max; ++i) {
    const std::size_t th = theta(p.kappa, i, log_l1);
    const double delta = std::pow(2.0, -p.kappa * static_cast<double>(i));
    const std::size_t k_end = std::size_t{1} << i;

    std::size_t count = 0;
    IntervalList pieces;
    pieces.reserve(k_end);
    for (std::size_t k = 1; k <= k_end; ++k) {
      const auto [cl, cr] = cylinder_bounds_d(map, ws.subspan(k, th));
      const auto nb = snap(map, cl, cr, delta, th);
      if (overlaps(g_prev, nb.first, nb.second)) ++count;
      pieces.push_back(nb);
    }

    std::size_t m_i = 0;
    if (i > p.l) {
      const std::size_t th_prev = theta(p.kappa, i - 1, log_l1);
      for (std::size_t k = (k_end >> 1) + 1; k <= k_end; ++k) {
        const auto [cl, cr] = cylinder_bounds_d(map, ws.subspan(k, th_prev));
        if (contains(g_hat, 0.5 * (cl + cr))) ++m_i;
      }
      if (count > n_prev + m_i) out.recursion_holds = false;
    }

    out.levels.push_back(i);
    out.N.push_back(count);
    out.M.push_back(m_i);
    out.growth.push_back(i > p.l && n_prev > 0 ? static_cast<double>(count) / static_cast<double>(n_prev)
                                               : std::numeric_limits<double>::quiet_NaN());

    const IntervalList g_i = intersect(g_prev, merge_intervals(std::move(pieces)));
    if (i < p.i_max) {
      const double spread = 3.0 * std::pow(2.0, -p.kappa * static_cast<double>(i + 1));
      IntervalList hat;
      for (const auto& [l, r] : g_i) hat.push_back(snap(map, l, r, spread, th));
      g_hat = merge_intervals(std::move(hat));
    }
    g_prev = g_i;
    n_prev = count;
  }
  return out;
}

}  // namespace markov
