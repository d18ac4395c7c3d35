#include "markov/sampling.hpp"

#include <algorithm>

#include "markov/error.hpp"

namespace markov {

namespace {

std::size_t draw(const std::vector<double>& cumulative, double u) {
  const double target = u * cumulative.back();
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
  const auto i = static_cast<std::size_t>(it - cumulative.begin());
  return std::min(i, cumulative.size() - 1);
}

}  // namespace

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

ChainTable::ChainTable(const GibbsModel& model) : graph(model.potential().graph_ptr()) {
  const auto& pi = model.stationary();
  double acc = 0.0;
  for (double p : pi) initial.push_back(acc += p);
  transition.resize(graph->size());
  for (std::size_t u = 0; u < graph->size(); ++u) {
    acc = 0.0;
    for (double p : model.transitions(u)) transition[u].push_back(acc += p);
  }
}

ChainSampler::ChainSampler(std::shared_ptr<const ChainTable> table, std::uint64_t seed, std::uint64_t stream)
    : table_(std::move(table)), rng_(make_rng(seed, stream)) {
  state_ = draw(table_->initial, uniform01(rng_));
  pending_ = table_->graph->depth();
}

ChainSampler::ChainSampler(const GibbsModel& model, std::uint64_t seed, std::uint64_t stream)
    : ChainSampler(std::make_shared<const ChainTable>(model), seed, stream) {}

Symbol ChainSampler::next() {
  const BlockGraph& g = *table_->graph;
  if (pending_ > 0) {
    const Symbol s = g.state(state_)[g.depth() - pending_];
    --pending_;
    return s;
  }
  const std::size_t e = draw(table_->transition[state_], uniform01(rng_));
  state_ = g.successors(state_)[e];
  return g.last_symbol(state_);
}

void ChainSampler::append(Word& out, std::size_t n) {
  out.reserve(out.size() + n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(next());
}

Word sample_word(const GibbsModel& model, std::size_t m, std::uint64_t seed, std::uint64_t stream) {
  if (m < model.depth()) throw Error(ErrorKind::InvalidInput, "sample length shorter than potential depth");
  ChainSampler sampler(model, seed, stream);
  Word w;
  sampler.append(w, m);
  return w;
}

Rational cylinder_midpoint(const MarkovMap& map, std::span<const Symbol> word) {
  const Cylinder c = cylinder_of(map, word);
  Rational mid = (c.left + c.right) / 2;
  return mid;
}

SamplePoint sample_point(const GibbsModel& model, std::size_t m, std::uint64_t seed, std::uint64_t stream) {
  SamplePoint p;
  p.word = sample_word(model, m, seed, stream);
  p.value = cylinder_midpoint(model.map(), p.word);
  p.seed = seed;
  p.stream = stream;
  return p;
}

}  // namespace markov
