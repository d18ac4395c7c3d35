#include "markov/report.hpp"

namespace markov {

CsvTable spectrum_table(const std::vector<SpectrumPoint>& points) {
  CsvTable t({"q", "eta", "alpha", "dim"});
  for (const auto& p : points) {
    t.add(p.q).add(p.eta).add(p.alpha).add(p.dim);
    t.end_row();
  }
  return t;
}

CsvTable critical_table(const CriticalExponents& c) {
  CsvTable t({"alpha_minus", "alpha_max", "alpha_plus", "hdim"});
  t.add(c.alpha_minus).add(c.alpha_max).add(c.alpha_plus).add(c.hdim);
  t.end_row();
  return t;
}

CsvTable hitting_table(const HittingLawResult& result) {
  CsvTable t({"trial", "y", "j", "tau", "quotient"});
  for (const auto& trial : result.trials) {
    const auto& e = trial.estimate;
    for (std::size_t idx = 0; idx < e.tau.size(); ++idx) {
      t.add(trial.trial).add(to_string(trial.y)).add(e.j_min + idx);
      t.add(e.tau[idx] ? std::to_string(*e.tau[idx]) : std::string());
      t.add(e.quotient[idx]);
      t.end_row();
    }
  }
  return t;
}

CsvTable cover_table(const std::vector<CoverSample>& samples, const ApproxParams& p) {
  CsvTable t({"x_id", "kappa", "m", "M", "fraction", "boxcount"});
  for (const auto& s : samples) {
    t.add(s.x_id).add(p.kappa).add(std::size_t{p.resolution}).add(p.horizon).add(s.fraction).add(s.boxcount);
    t.end_row();
  }
  return t;
}

CsvTable cover_growth_table(const CoverGrowth& g) {
  CsvTable t({"i", "N", "M", "growth", "epsilon"});
  for (std::size_t k = 0; k < g.levels.size(); ++k) {
    t.add(g.levels[k]).add(g.N[k]).add(g.M[k]).add(g.growth[k]).add(g.epsilon);
    t.end_row();
  }
  return t;
}

}  // namespace markov
