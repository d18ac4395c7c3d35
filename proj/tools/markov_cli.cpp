#include <omp.h>

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "markov/acceptance.hpp"
#include "markov/approx_sets.hpp"
#include "markov/config.hpp"
#include "markov/cover_growth.hpp"
#include "markov/dynamics.hpp"
#include "markov/error.hpp"
#include "markov/multifractal.hpp"
#include "markov/report.hpp"
#include "markov/thermo.hpp"

namespace {

using namespace markov;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitAcceptance = 3;

struct Globals {
  std::optional<std::uint64_t> seed;
  int workers = 0;
  std::string out;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t require_seed(const Globals& g, const char* command) {
  if (!g.seed) throw UsageError(std::string(command) + " needs --seed");
  return *g.seed;
}

void emit(const Globals& g, const CsvTable& table) {
  if (g.out.empty()) {
    table.write(std::cout);
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file) throw UsageError("cannot write " + g.out);
  table.write(file);
}

CoverMode parse_mode(const std::string& s) {
  if (s == "uniform") return CoverMode::Uniform;
  if (s == "asymptotic") return CoverMode::Asymptotic;
  return CoverMode::Complement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermodynamic formalism and approximation experiments for expanding Markov maps"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "RNG seed (required by stochastic subcommands)");
  app.add_option("--workers", g.workers, "worker threads (default: available parallelism)")->check(CLI::NonNegativeNumber);
  app.add_option("--out", g.out, "CSV output file (default: stdout)");

  std::string map_path, pot_path, pot_x, pot_y;

  auto* validate = app.add_subcommand("validate-map", "check a map file and print its structure");
  validate->add_option("--map", map_path)->required();

  auto* press = app.add_subcommand("pressure", "topological pressure of a potential");
  press->add_option("--map", map_path)->required();
  press->add_option("--potential", pot_path)->required();

  std::size_t gibbs_n = 10, gibbs_lags = 30;
  auto* gibbs = app.add_subcommand("gibbs-check", "Gibbs constant, quasi-Bernoulli constant and mixing report");
  gibbs->add_option("--map", map_path)->required();
  gibbs->add_option("--potential", pot_path)->required();
  gibbs->add_option("--nmax", gibbs_n, "longest cylinder checked")->check(CLI::Range(1, 24));
  gibbs->add_option("--lags", gibbs_lags, "largest mixing lag")->check(CLI::Range(2, 200));

  double q_min = 0, q_max = 0;
  std::size_t q_points = 0;
  auto* spec = app.add_subcommand("spectrum", "q, eta(q), alpha(q), D on a q grid");
  spec->add_option("--map", map_path)->required();
  spec->add_option("--potential", pot_path)->required();
  spec->add_option("--qmin", q_min);
  spec->add_option("--qmax", q_max);
  spec->add_option("--points", q_points, "linear grid size; default grid when omitted");

  auto* crit = app.add_subcommand("critical", "alpha_minus, alpha_max, alpha_plus and hdim");
  crit->add_option("--map", map_path)->required();
  crit->add_option("--potential", pot_path)->required();

  std::size_t trials = 100, j_max = 16, n_max = std::size_t{1} << 24;
  auto* hit = app.add_subcommand("hitting", "hitting-time law experiment");
  hit->add_option("--map", map_path)->required();
  hit->add_option("--potential-x", pot_x)->required();
  hit->add_option("--potential-y", pot_y)->required();
  hit->add_option("--trials", trials)->check(CLI::PositiveNumber);
  hit->add_option("--jmax", j_max)->check(CLI::Range(4, 40));
  hit->add_option("--nmax", n_max)->check(CLI::PositiveNumber);

  ApproxParams ap{1.0, 16, std::size_t{1} << 20, 12};
  std::string mode = "uniform";
  std::size_t samples = 20;
  auto* cover = app.add_subcommand("cover", "finite approximation sets over sampled points");
  cover->add_option("--map", map_path)->required();
  cover->add_option("--potential", pot_path)->required();
  cover->add_option("--kappa", ap.kappa)->required();
  cover->add_option("--i", ap.start_index);
  cover->add_option("--horizon", ap.horizon);
  cover->add_option("--resolution", ap.resolution);
  cover->add_option("--mode", mode)->check(CLI::IsMember({"uniform", "asymptotic", "complement"}));
  cover->add_option("--samples", samples)->check(CLI::PositiveNumber);

  CoverGrowthParams cg;
  auto* growth = app.add_subcommand("cover-growth", "surviving neighbourhood counts N_i for one sampled point");
  growth->add_option("--map", map_path)->required();
  growth->add_option("--potential", pot_path)->required();
  growth->add_option("--kappa", cg.kappa)->required();
  growth->add_option("--a", cg.a)->required();
  growth->add_option("--b", cg.b)->required();
  growth->add_option("--n", cg.n)->required();
  growth->add_option("--l", cg.l)->required();
  growth->add_option("--imax", cg.i_max)->required();

  std::vector<int> criteria;
  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--criteria", criteria, "subset of criteria 1..8")->check(CLI::Range(1, 8))->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (g.workers > 0) omp_set_num_threads(g.workers);

  try {
    if (*validate) {
      const MarkovMap map = load_map(map_path);
      std::cout << "symbols " << map.symbols() << "\nprimitivity_exponent " << map.primitivity_exponent()
                << "\nmin_abs_slope " << to_string(map.min_abs_slope()) << "\nmax_abs_slope "
                << to_string(map.max_abs_slope()) << "\n";
      for (const auto& row : map.admissibility_matrix()) {
        for (std::size_t k = 0; k < row.size(); ++k) std::cout << (k ? " " : "") << row[k];
        std::cout << "\n";
      }
    } else if (*press) {
      const MarkovMap map = load_map(map_path);
      const Potential phi = load_potential(map, pot_path);
      CsvTable t({"pressure"});
      t.add(pressure(phi));
      t.end_row();
      emit(g, t);
    } else if (*gibbs) {
      const MarkovMap map = load_map(map_path);
      const GibbsModel model = gibbs_model(load_potential(map, pot_path));
      const double gamma = gibbs_constant(model, gibbs_n);
      const double qb = quasi_bernoulli_check(model, gibbs_n);
      std::vector<std::size_t> lags;
      for (std::size_t n = 2; n <= gibbs_lags; ++n) lags.push_back(n);
      std::vector<Word> sets = admissible_words(map, 1);
      for (const Word& w : admissible_words(map, 2)) sets.push_back(w);
      const MixingReport mix = mixing_report(model, lags, sets);
      CsvTable t({"n_max", "gamma", "quasi_bernoulli", "gamma_cubed", "beta_fitted", "beta_predicted",
                  "mixing_constant"});
      t.add(gibbs_n).add(gamma).add(qb).add(std::pow(gamma, 3)).add(mix.fitted_beta).add(mix.predicted_beta);
      t.add(mix.constant);
      t.end_row();
      emit(g, t);
    } else if (*spec) {
      const MarkovMap map = load_map(map_path);
      const Potential phi = load_potential(map, pot_path);
      const auto grid = q_points > 0 ? linear_grid(q_min, q_max, q_points) : default_q_grid();
      const auto points = spectrum(phi, grid);
      for (const auto& p : points)
        if (!p.valid) std::cerr << "warning: D = " << format_double(p.dim) << " outside [0,1] at q = " << p.q << "\n";
      emit(g, spectrum_table(points));
    } else if (*crit) {
      const MarkovMap map = load_map(map_path);
      emit(g, critical_table(critical_exponents(load_potential(map, pot_path))));
    } else if (*hit) {
      const std::uint64_t seed = require_seed(g, "hitting");
      const MarkovMap map = load_map(map_path);
      const GibbsModel mx = gibbs_model(load_potential(map, pot_x));
      const GibbsModel my = gibbs_model(load_potential(map, pot_y));
      const HittingLawResult res = hitting_law_experiment(mx, my, trials, j_max, n_max, seed);
      std::cerr << "median tail quotient " << format_double(res.median_tail) << ", predicted "
                << format_double(res.predicted) << "\n";
      emit(g, hitting_table(res));
    } else if (*cover) {
      const std::uint64_t seed = require_seed(g, "cover");
      const MarkovMap map = load_map(map_path);
      const GibbsModel model = gibbs_model(load_potential(map, pot_path));
      const auto result = cover_experiment(model, ap, parse_mode(mode), samples, seed);
      std::vector<double> fr;
      for (const auto& s : result) fr.push_back(s.fraction);
      std::cerr << "median fraction " << format_double(median(fr)) << "\n";
      emit(g, cover_table(result, ap));
    } else if (*growth) {
      const std::uint64_t seed = require_seed(g, "cover-growth");
      const MarkovMap map = load_map(map_path);
      const GibbsModel model = gibbs_model(load_potential(map, pot_path));
      SymbolicPoint x(std::make_shared<const ChainTable>(model), seed, 0, cover_growth_length(map, cg));
      const CoverGrowth res = cover_growth(model, x, cg);
      std::cerr << "gamma " << format_double(res.gamma) << ", epsilon " << format_double(res.epsilon)
                << ", l condition " << (res.l_condition ? "holds" : "fails") << ", recursion "
                << (res.recursion_holds ? "holds" : "fails") << "\n";
      emit(g, cover_growth_table(res));
    } else if (*verify) {
      const std::uint64_t seed = require_seed(g, "verify");
      bool failed = false;
      run_acceptance(seed, criteria, [&](const CriterionResult& r) {
        std::cout << format_result(r) << std::endl;
        failed = failed || r.verdict == Verdict::Fail;
      });
      return failed ? kExitAcceptance : kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_numerical(e.kind()) ? kExitNumerical : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
