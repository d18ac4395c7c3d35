#include "markov/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "markov/approx_sets.hpp"
#include "markov/config.hpp"
#include "markov/dynamics.hpp"
#include "markov/error.hpp"
#include "markov/multifractal.hpp"
#include "markov/report.hpp"
#include "markov/sampling.hpp"
#include "markov/thermo.hpp"

namespace markov {

const char* const kDoublingMapText = R"(
[partition]
endpoints = 0, 1/2, 1
[branch.0]
slope = 2
intercept = 0
images = 0, 1
[branch.1]
slope = 2
intercept = -1
images = 0, 1
)";

const char* const kBernoulli07Text = R"(
[potential]
depth = 1
value.0 = log:7/10
value.1 = log:3/10
)";

const char* const kLebesgueText = R"(
[potential]
builtin = neg-log-deriv
)";

const char* const kThreeSymbolMapText = R"(
[partition]
endpoints = 0, 1/3, 2/3, 1
[branch.0]
slope = 3
intercept = 0
images = 0, 1, 2
[branch.1]
slope = 3
intercept = -1
images = 0, 1, 2
[branch.2]
slope = 2
intercept = -4/3
images = 0, 1
)";

const char* const kThreeSymbolPotText = R"(
[potential]
depth = 1
value.0 = -0.4
value.1 = -1.3
value.2 = 0.25
)";

namespace {

using Clock = std::chrono::steady_clock;

struct Fixture {
  MarkovMap doubling = parse_map(kDoublingMapText);
  Potential bernoulli = parse_potential(doubling, kBernoulli07Text);
  Potential lebesgue = parse_potential(doubling, kLebesgueText);
};

struct ThreeSymbol {
  MarkovMap map = parse_map(kThreeSymbolMapText);
  Potential phi = parse_potential(map, kThreeSymbolPotText);
};

// Collects named checks; the first few failures end up in the detail line.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) {
      ++failed_;
      if (failed_ <= 4) failures_ += (failures_.empty() ? "" : "; ") + what;
    }
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream ss;
    ss << total_ - failed_ << "/" << total_ << " checks";
    if (!ok()) ss << "; failed: " << failures_;
    return ss.str();
  }

 private:
  std::size_t total_ = 0, failed_ = 0;
  std::string failures_;
};

std::string num(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

double log2_of(double v) { return std::log(v) / std::log(2.0); }

template <typename Body>
CriterionResult timed(int id, const char* name, double budget_seconds, Body body) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  const auto t0 = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.verdict = Verdict::Fail;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (r.seconds > budget_seconds) {
    if (r.verdict == Verdict::Pass) r.verdict = Verdict::Fail;
    r.detail += "; runtime " + num(r.seconds, 3) + " s over budget " + num(budget_seconds, 3) + " s";
  }
  return r;
}

// Closed-form spectrum of Bernoulli(p) on the doubling map at local dimension a.
double bernoulli_dimension(double p, double a) {
  const double lo = -log2_of(p), hi = -log2_of(1.0 - p);
  const double f = (hi - a) / (hi - lo);
  return -(f * log2_of(f) + (1.0 - f) * log2_of(1.0 - f));
}

// Least-squares slope of log2 tau against j over the finite tail entries.
double tail_slope(const RateEstimate& e) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t idx = 0; idx < e.tau.size(); ++idx) {
    const std::size_t j = e.j_min + idx;
    if (2 * j <= e.j_max || !e.tau[idx]) continue;
    const double x = static_cast<double>(j), y = log2_of(static_cast<double>(*e.tau[idx]));
    sx += x, sy += y, sxx += x * x, sxy += x * y, ++n;
  }
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  const double nd = static_cast<double>(n);
  return (nd * sxy - sx * sy) / (nd * sxx - sx * sx);
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Warn: return "WARN";
  }
  return "?";
}

std::string format_result(const CriterionResult& r) {
  return "criterion " + std::to_string(r.id) + " " + r.name + ": " + to_string(r.verdict) + " (" + r.detail + ") [" +
         num(r.seconds, 3) + " s]";
}

CriterionResult criterion_spectrum_oracle() {
  return timed(1, "spectrum-oracle", 10.0, [](CriterionResult& r) {
    const Fixture f;
    const double p = 0.7;
    Checks c;
    double eta_err = 0.0;
    for (const auto& pt : spectrum(f.bernoulli, linear_grid(-20.0, 20.0, 81)))
      eta_err = std::max(eta_err, std::abs(pt.eta - log2_of(std::pow(p, pt.q) + std::pow(1 - p, pt.q))));
    c.expect(eta_err <= 1e-8, "eta grid error " + num(eta_err));
    const double a0 = alpha_of_q(f.bernoulli, 0.0);
    const double a0_err = std::abs(a0 - (-log2_of(p * (1 - p)) / 2.0));
    c.expect(a0_err <= 1e-8, "alpha(0) error " + num(a0_err));
    const SpectrumPoint one = spectrum_point(f.bernoulli, 1.0);
    const double bisector = std::abs(one.dim - one.alpha);
    c.expect(bisector <= 1e-8, "bisector error " + num(bisector));
    double dmax = -1.0;
    for (const auto& pt : spectrum(f.bernoulli, default_q_grid())) dmax = std::max(dmax, pt.dim);
    c.expect(std::abs(dmax - 1.0) <= 1e-8, "max D " + num(dmax, 12));
    r.verdict = c.ok() ? Verdict::Pass : Verdict::Fail;
    r.detail = c.summary() + "; max eta error " + num(eta_err, 3) + ", alpha(0) error " + num(a0_err, 3) +
               ", |D(alpha(1)) - alpha(1)| " + num(bisector, 3) + ", max D " + num(dmax, 15);
  });
}

CriterionResult criterion_critical_exponents() {
  return timed(2, "critical-exponents", 5.0, [](CriterionResult& r) {
    const Fixture f;
    const ThreeSymbol t;
    Checks c;
    const CriticalExponents ce = critical_exponents(f.bernoulli);
    const double em = std::abs(ce.alpha_minus + log2_of(0.7));
    const double ep = std::abs(ce.alpha_plus + log2_of(0.3));
    c.expect(em <= 1e-10, "alpha_minus error " + num(em));
    c.expect(ep <= 1e-10, "alpha_plus error " + num(ep));
    c.expect(std::abs(ce.alpha_minus - ce.alpha_at_plus_q) <= 1e-3, "alpha(+50) cross-check");
    c.expect(std::abs(ce.alpha_plus - ce.alpha_at_minus_q) <= 1e-3, "alpha(-50) cross-check");
    double degenerate = 0.0;
    for (const MarkovMap* m : {&f.doubling, &t.map}) {
      const CriticalExponents d = critical_exponents(neg_log_deriv(*m));
      degenerate = std::max({degenerate, std::abs(d.alpha_minus - 1.0), std::abs(d.alpha_max - 1.0),
                             std::abs(d.alpha_plus - 1.0)});
    }
    c.expect(degenerate <= 1e-10, "degenerate case error " + num(degenerate));
    r.verdict = c.ok() ? Verdict::Pass : Verdict::Fail;
    r.detail = c.summary() + "; alpha_minus " + num(ce.alpha_minus, 12) + ", alpha_plus " + num(ce.alpha_plus, 12) +
               ", alpha(+-50) " + num(ce.alpha_at_plus_q, 12) + " / " + num(ce.alpha_at_minus_q, 12) +
               ", degenerate error " + num(degenerate, 3);
  });
}

CriterionResult criterion_gibbs_mixing() {
  return timed(3, "gibbs-quasi-bernoulli-mixing", 60.0, [](CriterionResult& r) {
    const ThreeSymbol t;
    const GibbsModel model = gibbs_model(t.phi);
    Checks c;
    const std::size_t n_max = 12;
    const double gamma = gibbs_constant(model, n_max);
    // Sandwich re-evaluated cylinder by cylinder from the reported gamma.
    std::size_t cylinders = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
      for (const Word& w : admissible_words(t.map, n)) {
        const double mu = cylinder_measure(model, w);
        const double weight = std::exp(birkhoff_sum(t.phi, w) - static_cast<double>(n) * model.pressure());
        const double slack = 1.0 + 1e-12;
        c.expect(mu * gamma * slack >= weight && mu <= gamma * weight * slack, "sandwich fails");
        ++cylinders;
      }
    }
    // For a depth-1 potential the ratio mu(w)/weight is l_{w_1} r_{w_n}.
    const auto& pd = model.perron_data();
    double bound = 1.0;
    for (double l : pd.left)
      for (double rv : pd.right) bound = std::max({bound, l * rv, 1.0 / (l * rv)});
    c.expect(gamma <= bound * (1.0 + 1e-9), "gamma above the Perron-vector bound");
    const double qb = quasi_bernoulli_check(model, n_max);
    c.expect(qb <= std::pow(gamma, 3), "quasi-Bernoulli constant " + num(qb) + " above gamma^3");
    std::vector<std::size_t> lags;
    for (std::size_t n = 2; n <= 30; ++n) lags.push_back(n);
    std::vector<Word> sets = admissible_words(t.map, 1);
    for (const Word& w : admissible_words(t.map, 2)) sets.push_back(w);
    const MixingReport mix = mixing_report(model, lags, sets);
    const double rel = std::abs(mix.fitted_beta - mix.predicted_beta) / mix.predicted_beta;
    c.expect(rel <= 0.05, "fitted beta off by " + num(100 * rel, 3) + "%");
    for (std::size_t k = 0; k < mix.lags.size(); ++k)
      c.expect(mix.max_ratio[k] <= mix.constant * std::pow(mix.fitted_beta, mix.lags[k]) * (1 + 1e-9),
               "C beta^n envelope");
    r.verdict = c.ok() ? Verdict::Pass : Verdict::Fail;
    r.detail = c.summary() + "; " + std::to_string(cylinders) + " cylinders, gamma " + num(gamma) +
               ", quasi-Bernoulli " + num(qb) + " <= gamma^3 " + num(std::pow(gamma, 3)) + ", beta fitted " +
               num(mix.fitted_beta) + " vs |l2|/l1 " + num(mix.predicted_beta) + ", C " + num(mix.constant);
  });
}

CriterionResult criterion_hitting_law(std::uint64_t seed) {
  return timed(4, "hitting-time-law", 600.0, [seed](CriterionResult& r) {
    const Fixture f;
    const GibbsModel mb = gibbs_model(f.bernoulli);
    const GibbsModel ml = gibbs_model(f.lebesgue);
    struct Case {
      const char* label;
      const GibbsModel* x;
      const GibbsModel* y;
      double target;
    };
    const double amax = -log2_of(0.21) / 2.0;
    const double hdim = -(0.7 * log2_of(0.7) + 0.3 * log2_of(0.3));
    const Case cases[] = {{"x~mu0.7,y~Leb", &mb, &ml, amax}, {"x,y~mu0.7", &mb, &mb, hdim}, {"x,y~Leb", &ml, &ml, 1.0}};
    Checks c;
    std::string detail;
    for (std::size_t k = 0; k < 3; ++k) {
      const Case& cs = cases[k];
      const HittingLawResult res =
          hitting_law_experiment(*cs.x, *cs.y, 100, 16, std::size_t{1} << 24, seed + 1000 * k);
      c.expect(std::abs(res.predicted - cs.target) <= 1e-10, std::string(cs.label) + " prediction mismatch");
      const double err = std::abs(res.median_tail - cs.target);
      c.expect(err <= 0.1, std::string(cs.label) + " median off by " + num(err, 3));
      std::vector<double> slopes;
      for (const auto& trial : res.trials) {
        const double s = tail_slope(trial.estimate);
        if (std::isfinite(s)) slopes.push_back(s);
      }
      detail += std::string("; ") + cs.label + ": median tail quotient " + num(res.median_tail, 5) + " vs " +
                num(cs.target, 7) + " (tail log-log slope " + num(median(slopes), 4) + ")";
    }
    r.verdict = c.ok() ? Verdict::Pass : Verdict::Fail;
    r.detail = c.summary() + detail;
  });
}

CriterionResult criterion_measure_dichotomy(std::uint64_t seed) {
  return timed(5, "measure-dichotomy-trend", 600.0, [seed](CriterionResult& r) {
    const Fixture f;
    const GibbsModel mb = gibbs_model(f.bernoulli);
    const double amax = critical_exponents(f.bernoulli).alpha_max;
    const auto median_fraction = [&](double inv_kappa, std::size_t horizon, std::size_t start) {
      const ApproxParams p{1.0 / inv_kappa, start, horizon, 12};
      std::vector<double> fr;
      for (const auto& s : cover_experiment(mb, p, CoverMode::Uniform, 20, seed)) fr.push_back(s.fraction);
      return median(fr);
    };
    const std::size_t m20 = std::size_t{1} << 20;
    const double high = median_fraction(amax + 0.4, m20, 16);
    const double low = median_fraction(amax - 0.3, m20, 16);
    const double low2 = median_fraction(amax - 0.3, 2 * m20, 16);
    Checks c;
    c.expect(high >= 0.95, "median fraction " + num(high, 4) + " < 0.95 at 1/kappa = alpha_max + 0.4");
    c.expect(low <= 0.5, "median fraction " + num(low, 4) + " > 0.5 at 1/kappa = alpha_max - 0.3");
    c.expect(low2 <= low, "fraction grew when M doubled");
    const double high_late = median_fraction(amax + 0.4, m20, 4096);
    r.verdict = c.ok() ? Verdict::Pass : Verdict::Fail;
    r.detail = c.summary() + "; 1/kappa = alpha_max + 0.4: " + num(high, 4) + " (i = 4096: " + num(high_late, 4) +
               "); 1/kappa = alpha_max - 0.3: " + num(low, 4) + " at M = 2^20, " + num(low2, 4) + " at M = 2^21" +
               (low2 < low ? " (strict decrease)" : " (non-increasing, not strict)");
  });
}

CriterionResult criterion_inclusion(std::uint64_t seed) {
  return timed(6, "inclusion-property", 120.0, [seed](CriterionResult& r) {
    const Fixture f;
    const GibbsModel mb = gibbs_model(f.bernoulli);
    const GibbsModel ml = gibbs_model(f.lebesgue);
    auto rng = make_rng(seed, 0x1ac);
    std::uniform_real_distribution<double> kappa_dist(0.3, 2.5);
    std::uniform_int_distribution<std::size_t> i_dist(1, 64), span_dist(0, 3000);
    Checks c;
    for (std::size_t t = 0; t < 50; ++t) {
      const SamplePoint x = sample_point(t % 2 ? mb : ml, 48, seed, t);
      const double kappa = kappa_dist(rng);
      const std::size_t i = i_dist(rng);
      const std::size_t horizon = i + span_dist(rng);
      c.expect(inclusion_check(f.doubling, x.value, kappa, i, horizon, 10),
               "instance " + std::to_string(t) + " (kappa " + num(kappa, 4) + ", i " + std::to_string(i) + ", M " +
                   std::to_string(horizon) + ")");
    }
    r.verdict = c.ok() ? Verdict::Pass : Verdict::Fail;
    r.detail = c.summary();
  });
}

CriterionResult criterion_structural(std::uint64_t seed) {
  return timed(7, "structural-properties", 300.0, [seed](CriterionResult& r) {
    const Fixture f;
    const ThreeSymbol t;
    Checks c;
    std::size_t groups_ok = 0, groups = 0;
    const auto group = [&](const std::string& name, auto body) {
      Checks g;
      body(g);
      ++groups;
      if (g.ok()) ++groups_ok;
      c.expect(g.ok(), name + " (" + g.summary() + ")");
    };

    group("partition of unity", [&](Checks& g) {
      for (const MarkovMap* m : {&f.doubling, &t.map})
        for (std::size_t n = 1; n <= 10; ++n) {
          auto cyl = enumerate_cylinders(*m, n);
          std::sort(cyl.begin(), cyl.end(), [](const Cylinder& a, const Cylinder& b) { return a.left < b.left; });
          Rational total = 0;
          bool tiles = cyl.front().left == 0 && cyl.back().right == 1;
          for (std::size_t k = 0; k < cyl.size(); ++k) {
            total += cyl[k].length();
            if (k + 1 < cyl.size() && cyl[k].right != cyl[k + 1].left) tiles = false;
          }
          g.expect(total == 1 && tiles, "generation " + std::to_string(n));
        }
    });

    group("length bounds", [&](Checks& g) {
      for (const MarkovMap* m : {&f.doubling, &t.map}) {
        Rational lo = 1, hi = 1;
        for (std::size_t n = 1; n <= 10; ++n) {
          lo /= m->max_abs_slope();
          hi /= m->min_abs_slope();
          for (const Cylinder& cy : enumerate_cylinders(*m, n))
            g.expect(lo <= cy.length() && cy.length() <= hi, "generation " + std::to_string(n));
        }
      }
    });

    group("measure total mass and invariance", [&](Checks& g) {
      for (const Potential* phi : {&f.bernoulli, &f.lebesgue, &t.phi}) {
        const GibbsModel model = gibbs_model(*phi);
        const MarkovMap& m = phi->map();
        for (std::size_t n = 1; n <= 10; ++n) {
          double total = 0.0;
          for (const Word& w : admissible_words(m, n)) {
            const double mu = model.measure(w);
            total += mu;
            double pre = 0.0;
            Word sw(w.size() + 1);
            std::copy(w.begin(), w.end(), sw.begin() + 1);
            for (std::size_t s = 0; s < m.symbols(); ++s) {
              sw[0] = static_cast<Symbol>(s);
              if (m.admissible(sw)) pre += model.measure(sw);
            }
            g.expect(std::abs(mu - pre) <= 1e-12, "invariance");
          }
          g.expect(std::abs(total - 1.0) <= 1e-12, "total mass at n = " + std::to_string(n));
        }
        g.expect(std::abs(pressure(normalize(*phi, pressure(*phi)))) <= 1e-12, "pressure of normalized");
      }
    });

    // eta is convex in q (closed form log2(p^q + (1-p)^q)); D is concave in alpha.
    group("eta convexity, D concavity, alpha monotonicity", [&](Checks& g) {
      for (const Potential* phi : {&f.bernoulli, &t.phi}) {
        const auto pts = spectrum(*phi, default_q_grid());
        std::vector<double> q, neg_eta, alpha, dim;
        for (const auto& p : pts) q.push_back(p.q), neg_eta.push_back(-p.eta), alpha.push_back(p.alpha), dim.push_back(p.dim);
        g.expect(concavity_violation(q, neg_eta) <= 1e-8, "eta convexity");
        g.expect(concavity_violation(alpha, dim) <= 1e-8, "D concavity");
        for (std::size_t k = 1; k < pts.size(); ++k) {
          g.expect(pts[k].eta < pts[k - 1].eta, "eta strictly decreasing");
          g.expect(pts[k].alpha <= pts[k - 1].alpha + 1e-9, "alpha nonincreasing");
        }
      }
    });

    group("hitting-time monotonicity and shift", [&](Checks& g) {
      const GibbsModel mb = gibbs_model(f.bernoulli);
      const HittingLawResult res = hitting_law_experiment(mb, mb, 8, 14, std::size_t{1} << 20, seed);
      for (const auto& trial : res.trials) {
        const auto& tau = trial.estimate.tau;
        for (std::size_t k = 1; k < tau.size(); ++k)
          g.expect(!tau[k - 1] || !tau[k] || *tau[k] >= *tau[k - 1], "tau nonincreasing in r");
        for (std::size_t k = 1; k < tau.size(); ++k)
          g.expect(tau[k - 1] || !tau[k], "exceeded at a larger radius only");
      }
      for (std::size_t s = 0; s < 6; ++s) {
        const SamplePoint x = sample_point(mb, 40, seed, 100 + s);
        const SamplePoint y = sample_point(mb, 40, seed, 200 + s);
        const Rational tx = f.doubling.apply(x.value);
        for (int j = 2; j <= 8; ++j) {
          const Rational radius(1, 1u << j);
          const HittingRecord a = hitting_time(f.doubling, x.value, y.value, radius, 4097);
          const HittingRecord b = hitting_time(f.doubling, tx, y.value, radius, 4096);
          if (a.tau && *a.tau >= 2) g.expect(b.tau && *b.tau == *a.tau - 1, "orbit shift");
        }
      }
    });

    group("csv determinism", [&](Checks& g) {
      const auto grid = linear_grid(-5.0, 5.0, 21);
      g.expect(spectrum_table(spectrum(f.bernoulli, grid)).str() ==
                   spectrum_table(spectrum_serial(f.bernoulli, grid)).str(),
               "spectrum parallel vs serial");
      const GibbsModel mb = gibbs_model(f.bernoulli);
      const GibbsModel ml = gibbs_model(f.lebesgue);
      const std::string h1 = hitting_table(hitting_law_experiment(mb, ml, 6, 12, 1 << 18, seed)).str();
      const std::string h2 = hitting_table(hitting_law_experiment(mb, ml, 6, 12, 1 << 18, seed)).str();
      const std::string h3 = hitting_table(hitting_law_experiment_serial(mb, ml, 6, 12, 1 << 18, seed)).str();
      g.expect(h1 == h2 && h1 == h3, "hitting table");
      const ApproxParams p{0.8, 8, 1 << 14, 10};
      const std::string c1 = cover_table(cover_experiment(mb, p, CoverMode::Uniform, 4, seed), p).str();
      const std::string c2 = cover_table(cover_experiment_serial(mb, p, CoverMode::Uniform, 4, seed), p).str();
      g.expect(c1 == c2, "cover table");
    });

    r.verdict = c.ok() ? Verdict::Pass : Verdict::Fail;
    r.detail = std::to_string(groups_ok) + "/" + std::to_string(groups) + " suites" +
               (c.ok() ? std::string() : "; " + c.summary());
  });
}

CriterionResult criterion_box_slope(std::uint64_t seed) {
  return timed(8, "box-count-slope", 600.0, [seed](CriterionResult& r) {
    const Fixture f;
    const GibbsModel mb = gibbs_model(f.bernoulli);
    const double a = 0.7;
    // D(0.7) from the spectrum: alpha(q) decreases in q, so bisect for alpha = a.
    double lo = -50.0, hi = 50.0;
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
      const double mid = 0.5 * (lo + hi);
      (alpha_of_q(f.bernoulli, mid) > a ? lo : hi) = mid;
    }
    const double qa = 0.5 * (lo + hi);
    const double d_spec = eta(f.bernoulli, qa) + qa * a;
    const double d_closed = bernoulli_dimension(0.7, a);
    const ApproxParams p{1.0 / a, 16, std::size_t{1} << 20, 14};
    const std::vector<unsigned> res{6, 7, 8, 9, 10, 11, 12, 13, 14};
    const auto table = std::make_shared<const ChainTable>(mb);
    std::vector<double> slopes;
    for (std::size_t s = 0; s < 5; ++s) {
      SymbolicPoint x(table, seed, s, p.horizon + 1 + 64);
      const OrbitSamples orbit = orbit_samples(x, p.horizon);
      slopes.push_back(box_dimension_fit(uniform_cover_levels(orbit, p, res)).slope);
    }
    const double slope = median(slopes);
    const bool spectrum_ok = std::abs(d_spec - d_closed) <= 1e-8;
    const bool close = std::abs(slope - d_spec) <= 0.15;
    r.verdict = !spectrum_ok ? Verdict::Fail : close ? Verdict::Pass : Verdict::Warn;
    r.detail = "median box-count slope " + num(slope, 4) + " vs D(0.7) = " + num(d_spec, 6) + " (closed form " +
               num(d_closed, 6) + ")" + (close ? "" : "; soft trend outside 0.15, reported as WARN");
  });
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
  switch (id) {
    case 1: return criterion_spectrum_oracle();
    case 2: return criterion_critical_exponents();
    case 3: return criterion_gibbs_mixing();
    case 4: return criterion_hitting_law(seed);
    case 5: return criterion_measure_dichotomy(seed);
    case 6: return criterion_inclusion(seed);
    case 7: return criterion_structural(seed);
    case 8: return criterion_box_slope(seed);
  }
  throw Error(ErrorKind::InvalidInput, "no criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::vector<int>& ids,
                                            const std::function<void(const CriterionResult&)>& report) {
  std::vector<int> which = ids;
  if (which.empty()) which = {1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<CriterionResult> out;
  for (int id : which) {
    out.push_back(run_criterion(id, seed));
    if (report) report(out.back());
  }
  return out;
}

}  // namespace markov
