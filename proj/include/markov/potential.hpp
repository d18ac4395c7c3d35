#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "markov/block_graph.hpp"
#include "markov/map.hpp"

namespace markov {

// Locally constant potential of depth k: one value per admissible k-word,
// stored in the state order of the associated BlockGraph.
class Potential {
 public:
  Potential(std::shared_ptr<const BlockGraph> graph, std::vector<double> values);

  std::size_t depth() const { return graph_->depth(); }
  const BlockGraph& graph() const { return *graph_; }
  std::shared_ptr<const BlockGraph> graph_ptr() const { return graph_; }
  const MarkovMap& map() const { return graph_->map(); }

  const std::vector<double>& values() const { return values_; }
  double at_state(std::size_t u) const { return values_[u]; }
  // Value on the cylinder of a k-word.
  double at(std::span<const Symbol> window) const { return values_[graph_->index_of(window)]; }

 private:
  std::shared_ptr<const BlockGraph> graph_;
  std::vector<double> values_;
};

// The table must list exactly the admissible k-words. Throws Error(Config).
Potential make_potential(const MarkovMap& map, std::size_t depth, const std::map<Word, double>& table);

// Depth-1 potential -log|T'|, value -log|s_k| on I(k).
Potential neg_log_deriv(const MarkovMap& map);

// Depth-1 potential with values[k] on I(k).
Potential symbol_potential(const MarkovMap& map, const std::vector<double>& values);

Potential constant_potential(const MarkovMap& map, std::size_t depth, double value);

// Same function on the finer table of a larger depth.
Potential lift(const Potential& phi, std::size_t depth);

// a * phi + b * psi on the deeper of the two tables.
Potential combine(double a, const Potential& phi, double b, const Potential& psi);

Potential shifted(const Potential& phi, double c);

}  // namespace markov
