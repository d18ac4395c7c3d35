#pragma once

#include <vector>

#include "markov/approx_sets.hpp"
#include "markov/cover_growth.hpp"
#include "markov/csv.hpp"
#include "markov/dynamics.hpp"
#include "markov/multifractal.hpp"

namespace markov {

// CSV layouts shared by the CLI and the determinism checks.
CsvTable spectrum_table(const std::vector<SpectrumPoint>& points);
CsvTable critical_table(const CriticalExponents& c);
// One row per (trial, j); tau is empty and quotient inf when the horizon was exceeded.
CsvTable hitting_table(const HittingLawResult& result);
CsvTable cover_table(const std::vector<CoverSample>& samples, const ApproxParams& p);
CsvTable cover_growth_table(const CoverGrowth& g);

}  // namespace markov
