#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "markov/map.hpp"
#include "markov/rational.hpp"
#include "markov/thermo.hpp"

namespace markov {

// Independent, reproducible stream for (seed, stream index).
std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream);

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Cumulative tables of the stationary chain of a Gibbs model.
struct ChainTable {
  explicit ChainTable(const GibbsModel& model);

  std::shared_ptr<const BlockGraph> graph;
  std::vector<double> initial;                 // cumulative stationary weights
  std::vector<std::vector<double>> transition;  // cumulative, per state
};

// Symbols of a path of the stationary Markov chain on k-words, one at a time.
class ChainSampler {
 public:
  ChainSampler(std::shared_ptr<const ChainTable> table, std::uint64_t seed, std::uint64_t stream);
  ChainSampler(const GibbsModel& model, std::uint64_t seed, std::uint64_t stream);

  Symbol next();
  void append(Word& out, std::size_t n);

 private:
  std::shared_ptr<const ChainTable> table_;
  std::mt19937_64 rng_;
  std::size_t state_;
  std::size_t pending_;  // symbols of the initial state not yet emitted
};

struct SamplePoint {
  Rational value;  // midpoint of the cylinder of `word`
  Word word;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

Word sample_word(const GibbsModel& model, std::size_t m, std::uint64_t seed, std::uint64_t stream = 0);
SamplePoint sample_point(const GibbsModel& model, std::size_t m, std::uint64_t seed, std::uint64_t stream = 0);

Rational cylinder_midpoint(const MarkovMap& map, std::span<const Symbol> word);

}  // namespace markov
