#include "markov/potential.hpp"

#include <cmath>
#include <string>

#include "markov/error.hpp"

namespace markov {

namespace {

std::string spell(std::span<const Symbol> w) {
  std::string s;
  for (Symbol c : w) {
    if (!s.empty()) s += '_';
    s += std::to_string(c);
  }
  return s;
}

}  // namespace

Potential::Potential(std::shared_ptr<const BlockGraph> graph, std::vector<double> values)
    : graph_(std::move(graph)), values_(std::move(values)) {
  if (values_.size() != graph_->size())
    throw Error(ErrorKind::InvalidInput, "potential table size does not match state count");
  for (double v : values_)
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidInput, "potential values must be finite");
}

Potential make_potential(const MarkovMap& map, std::size_t depth, const std::map<Word, double>& table) {
  auto graph = std::make_shared<const BlockGraph>(map, depth);
  std::vector<double> values(graph->size(), 0.0);
  std::vector<bool> seen(graph->size(), false);
  for (const auto& [word, value] : table) {
    const std::size_t u = graph->find(word);
    if (u == graph->size())
      throw Error(ErrorKind::Config, "potential entry '" + spell(word) + "' is not an admissible " +
                                         std::to_string(depth) + "-word");
    values[u] = value;
    seen[u] = true;
  }
  for (std::size_t u = 0; u < graph->size(); ++u)
    if (!seen[u]) throw Error(ErrorKind::Config, "potential has no value for word '" + spell(graph->state(u)) + "'");
  return Potential(std::move(graph), std::move(values));
}

Potential neg_log_deriv(const MarkovMap& map) {
  auto graph = std::make_shared<const BlockGraph>(map, 1);
  std::vector<double> values(graph->size());
  for (std::size_t u = 0; u < graph->size(); ++u) values[u] = -map.log_abs_slope(graph->first_symbol(u));
  return Potential(std::move(graph), std::move(values));
}

Potential symbol_potential(const MarkovMap& map, const std::vector<double>& values) {
  if (values.size() != map.symbols())
    throw Error(ErrorKind::InvalidInput, "need one potential value per symbol");
  auto graph = std::make_shared<const BlockGraph>(map, 1);
  return Potential(std::move(graph), values);
}

Potential constant_potential(const MarkovMap& map, std::size_t depth, double value) {
  auto graph = std::make_shared<const BlockGraph>(map, depth);
  std::vector<double> values(graph->size(), value);
  return Potential(std::move(graph), std::move(values));
}

Potential lift(const Potential& phi, std::size_t depth) {
  if (depth == phi.depth()) return phi;
  if (depth < phi.depth()) throw Error(ErrorKind::InvalidInput, "cannot lift a potential to a smaller depth");
  auto graph = std::make_shared<const BlockGraph>(phi.map(), depth);
  std::vector<double> values(graph->size());
  for (std::size_t u = 0; u < graph->size(); ++u) values[u] = phi.at(graph->state(u).first(phi.depth()));
  return Potential(std::move(graph), std::move(values));
}

Potential combine(double a, const Potential& phi, double b, const Potential& psi) {
  if (phi.map().symbols() != psi.map().symbols())
    throw Error(ErrorKind::InvalidInput, "potentials live on different maps");
  const std::size_t depth = std::max(phi.depth(), psi.depth());
  Potential x = lift(phi, depth);
  Potential y = lift(psi, depth);
  std::vector<double> values(x.values().size());
  for (std::size_t u = 0; u < values.size(); ++u) values[u] = a * x.at_state(u) + b * y.at_state(u);
  return Potential(x.graph_ptr(), std::move(values));
}

Potential shifted(const Potential& phi, double c) {
  std::vector<double> values = phi.values();
  for (double& v : values) v += c;
  return Potential(phi.graph_ptr(), std::move(values));
}

}  // namespace markov
