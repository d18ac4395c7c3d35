#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace markov {

enum class Verdict { Pass, Fail, Warn };

const char* to_string(Verdict v);

struct CriterionResult {
  int id = 0;
  std::string name;
  Verdict verdict = Verdict::Fail;
  std::string detail;
  double seconds = 0.0;
};

// "criterion <id> <name>: PASS|FAIL|WARN (<detail>) [<seconds> s]"
std::string format_result(const CriterionResult& r);

// Criteria 1..8. Each runs against built-in doubling-map and three-symbol
// oracles and checks its own runtime budget.
CriterionResult criterion_spectrum_oracle();
CriterionResult criterion_critical_exponents();
CriterionResult criterion_gibbs_mixing();
CriterionResult criterion_hitting_law(std::uint64_t seed);
CriterionResult criterion_measure_dichotomy(std::uint64_t seed);
CriterionResult criterion_inclusion(std::uint64_t seed);
CriterionResult criterion_structural(std::uint64_t seed);
CriterionResult criterion_box_slope(std::uint64_t seed);

CriterionResult run_criterion(int id, std::uint64_t seed);

// Runs the given criteria (all when empty), calling `report` after each one.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::vector<int>& ids = {},
                                            const std::function<void(const CriterionResult&)>& report = {});

// Built-in configurations shared with the tests.
extern const char* const kDoublingMapText;
extern const char* const kBernoulli07Text;
extern const char* const kLebesgueText;
extern const char* const kThreeSymbolMapText;
extern const char* const kThreeSymbolPotText;

}  // namespace markov
