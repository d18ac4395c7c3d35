#include "markov/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "markov/error.hpp"

namespace markov {

namespace {

Symbol smallest_successor(const MarkovMap& map, Symbol s) {
  for (std::size_t t = 0; t < map.symbols(); ++t)
    if (map.admissible(s, static_cast<Symbol>(t))) return static_cast<Symbol>(t);
  throw Error(ErrorKind::InvalidInput, "symbol without successor");
}

void extend_words(const MarkovMap& map, Word& prefix, std::size_t n, std::vector<Word>& out) {
  if (prefix.size() == n) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t s = 0; s < map.symbols(); ++s) {
    const auto sym = static_cast<Symbol>(s);
    if (!prefix.empty() && !map.admissible(prefix.back(), sym)) continue;
    prefix.push_back(sym);
    extend_words(map, prefix, n, out);
    prefix.pop_back();
  }
}

double gibbs_ratio(const GibbsModel& model, const Word& w) {
  const double log_ratio = model.log_measure(w) -
                           (birkhoff_sum(model.potential(), w) - static_cast<double>(w.size()) * model.pressure());
  return std::exp(std::abs(log_ratio));
}

}  // namespace

std::vector<Word> admissible_words(const MarkovMap& map, std::size_t n) {
  if (count_words(map, n) > kDefaultCylinderCap)
    throw Error(ErrorKind::GenerationTooLarge, "too many words of length " + std::to_string(n));
  std::vector<Word> out;
  Word prefix;
  extend_words(map, prefix, n, out);
  return out;
}

double birkhoff_sum(const Potential& phi, std::span<const Symbol> word) {
  const MarkovMap& map = phi.map();
  require_admissible(map, word);
  const std::size_t k = phi.depth();
  Word ext(word.begin(), word.end());
  for (std::size_t i = 1; i < k; ++i) ext.push_back(smallest_successor(map, ext.back()));
  double s = 0.0;
  for (std::size_t j = 0; j < word.size(); ++j) s += phi.at(std::span<const Symbol>(ext).subspan(j, k));
  return s;
}

double pressure(const Potential& phi) { return log_spectral_radius(phi.graph(), phi.values()); }

Potential normalize(const Potential& phi, double p) { return shifted(phi, -p); }

GibbsModel::GibbsModel(const Potential& phi)
    : phi_(phi), perron_(perron(phi.graph(), phi.values())) {
  pressure_ = perron_.log_lambda;
  const BlockGraph& g = phi_.graph();
  const std::size_t n = g.size();
  log_weight_.resize(n);
  pi_.resize(n);
  trans_.resize(n);
  for (std::size_t u = 0; u < n; ++u) {
    log_weight_[u] = phi_.at_state(u) - pressure_;
    pi_[u] = perron_.left[u] * perron_.right[u];
    const double w = std::exp(log_weight_[u]);
    for (std::size_t v : g.successors(u)) trans_[u].push_back(w * perron_.right[v] / perron_.right[u]);
  }
}

double GibbsModel::log_measure(std::span<const Symbol> word) const {
  const BlockGraph& g = graph();
  require_admissible(map(), word);
  const std::size_t k = depth();
  if (word.size() < k) {
    auto [first, last] = g.prefix_range(word);
    double s = 0.0;
    for (std::size_t u = first; u < last; ++u) s += pi_[u];
    return std::log(s);
  }
  std::size_t u = g.index_of(word.first(k));
  double acc = std::log(perron_.left[u]);
  for (std::size_t t = 1; t + k <= word.size(); ++t) {
    acc += log_weight_[u];
    u = g.step(u, word[t + k - 1]);
  }
  return acc + std::log(perron_.right[u]);
}

double GibbsModel::measure(std::span<const Symbol> word) const { return std::exp(log_measure(word)); }

GibbsModel gibbs_model(const Potential& phi) { return GibbsModel(phi); }

double eigen_ratio(const GibbsModel& model) {
  return second_eigen_ratio(model.graph(), model.potential().values(), model.perron_data());
}

double cylinder_measure(const GibbsModel& model, std::span<const Symbol> word) { return model.measure(word); }

double gibbs_constant_serial(const GibbsModel& model, std::size_t n_max) {
  double gamma = 1.0;
  for (std::size_t n = 1; n <= n_max; ++n)
    for (const Word& w : admissible_words(model.map(), n)) gamma = std::max(gamma, gibbs_ratio(model, w));
  return gamma;
}

double gibbs_constant(const GibbsModel& model, std::size_t n_max) {
  double gamma = 1.0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto words = admissible_words(model.map(), n);
    const auto count = static_cast<std::ptrdiff_t>(words.size());
#pragma omp parallel for reduction(max : gamma) schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) gamma = std::max(gamma, gibbs_ratio(model, words[i]));
  }
  return gamma;
}

double quasi_bernoulli_check(const GibbsModel& model, std::size_t n_max) {
  const MarkovMap& map = model.map();
  std::vector<std::map<Word, double>> mass(n_max + 1);
  for (std::size_t n = 1; n <= n_max; ++n)
    for (Word& w : admissible_words(map, n)) {
      const double m = model.log_measure(w);
      mass[n].emplace(std::move(w), m);
    }
  double worst = 1.0;
  for (std::size_t n = 2; n <= n_max; ++n)
    for (const auto& [w, lm] : mass[n])
      for (std::size_t k = 1; k < n; ++k) {
        const Word head(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
        const Word tail(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
        const double r = lm - mass[k].at(head) - mass[n - k].at(tail);
        worst = std::max(worst, std::exp(std::abs(r)));
      }
  return worst;
}

MixingReport mixing_report(const GibbsModel& model, const std::vector<std::size_t>& lags,
                           const std::vector<Word>& cylinders) {
  const BlockGraph& g = model.graph();
  const std::size_t k = model.depth();
  const std::size_t n_states = g.size();
  MixingReport rep;
  rep.lags = lags;
  rep.max_ratio.assign(lags.size(), 0.0);
  rep.predicted_beta = eigen_ratio(model);
  if (lags.empty() || cylinders.empty()) return rep;

  struct Cyl {
    double mass;
    std::size_t first_state;
    std::size_t last_state;
    std::size_t length;
  };
  std::vector<Cyl> cyl;
  for (const Word& w : cylinders) {
    if (w.size() < k) throw Error(ErrorKind::InvalidInput, "mixing cylinders must be at least as long as the depth");
    const std::span<const Symbol> s(w);
    cyl.push_back({model.measure(w), g.index_of(s.first(k)), g.index_of(s.last(k)), w.size()});
  }

  std::size_t d_max = 0;
  for (std::size_t n : lags)
    for (const Cyl& a : cyl) {
      if (n + k < a.length + 1) throw Error(ErrorKind::InvalidInput, "lag shorter than cylinder length");
      d_max = std::max(d_max, n + k - a.length);
    }

  // Rows of P^d for every distinct source state, d = 0..d_max.
  std::map<std::size_t, std::vector<std::vector<double>>> rows;
  for (const Cyl& a : cyl) {
    if (rows.count(a.last_state)) continue;
    std::vector<std::vector<double>> powers(d_max + 1, std::vector<double>(n_states, 0.0));
    powers[0][a.last_state] = 1.0;
    for (std::size_t d = 1; d <= d_max; ++d)
      for (std::size_t u = 0; u < n_states; ++u) {
        const double x = powers[d - 1][u];
        if (x == 0.0) continue;
        const auto& succ = g.successors(u);
        const auto& p = model.transitions(u);
        for (std::size_t e = 0; e < succ.size(); ++e) powers[d][succ[e]] += x * p[e];
      }
    rows.emplace(a.last_state, std::move(powers));
  }

  const auto& pi = model.stationary();
  for (std::size_t li = 0; li < lags.size(); ++li)
    for (const Cyl& a : cyl)
      for (const Cyl& b : cyl) {
        const std::size_t d = lags[li] + k - a.length;
        const double pd = rows.at(a.last_state)[d][b.first_state];
        const double ratio = a.mass * std::abs(pd / pi[b.first_state] - 1.0);
        rep.max_ratio[li] = std::max(rep.max_ratio[li], ratio);
      }

  std::vector<double> xs, ys;
  for (std::size_t li = 0; li < lags.size(); ++li)
    if (rep.max_ratio[li] > 1e-12) {
      xs.push_back(static_cast<double>(lags[li]));
      ys.push_back(std::log(rep.max_ratio[li]));
    }
  if (xs.size() >= 2) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    rep.fitted_beta = std::exp(slope);
    for (std::size_t li = 0; li < lags.size(); ++li)
      rep.constant = std::max(rep.constant, rep.max_ratio[li] / std::pow(rep.fitted_beta, static_cast<double>(lags[li])));
  } else {
    rep.fitted_beta = 0.0;
    rep.constant = *std::max_element(rep.max_ratio.begin(), rep.max_ratio.end());
  }
  return rep;
}

}  // namespace markov
