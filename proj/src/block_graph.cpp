#include "markov/block_graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "markov/error.hpp"

namespace markov {

BlockGraph::BlockGraph(const MarkovMap& map, std::size_t depth)
    : map_(std::make_shared<const MarkovMap>(map)), depth_(depth) {
  if (depth == 0) throw Error(ErrorKind::InvalidInput, "potential depth must be >= 1");
  const std::size_t q = map.symbols();
  double span = 1.0;
  for (std::size_t i = 0; i < depth; ++i) span *= static_cast<double>(q);
  if (span >= 9.0e18) throw Error(ErrorKind::InvalidInput, "depth too large for this alphabet");
  const auto count = count_words(map, depth);
  if (count > kMaxStates)
    throw Error(ErrorKind::GenerationTooLarge,
                "depth " + std::to_string(depth) + " gives " + std::to_string(count) + " states");

  // Breadth extension in lexicographic order keeps states_ sorted by code.
  std::vector<Word> layer;
  for (std::size_t s = 0; s < q; ++s) layer.push_back(Word{static_cast<Symbol>(s)});
  for (std::size_t len = 1; len < depth; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (std::size_t s = 0; s < q; ++s)
        if (map.admissible(w.back(), static_cast<Symbol>(s))) {
          Word e = w;
          e.push_back(static_cast<Symbol>(s));
          next.push_back(std::move(e));
        }
    layer = std::move(next);
  }
  states_.reserve(layer.size() * depth);
  for (const auto& w : layer) {
    states_.insert(states_.end(), w.begin(), w.end());
    codes_.push_back(code(w));
  }

  const std::size_t n = layer.size();
  succ_.assign(n, {});
  pred_.assign(n, {});
  Word buf(depth);
  for (std::size_t u = 0; u < n; ++u) {
    auto st = state(u);
    std::copy(st.begin() + 1, st.end(), buf.begin());
    for (std::size_t s = 0; s < q; ++s) {
      if (!map.admissible(st.back(), static_cast<Symbol>(s))) continue;
      buf.back() = static_cast<Symbol>(s);
      const std::size_t v = find(buf);
      succ_[u].push_back(v);
      pred_[v].push_back(u);
    }
  }
}

std::uint64_t BlockGraph::code(std::span<const Symbol> word) const {
  std::uint64_t c = 0;
  const std::uint64_t q = map_->symbols();
  for (Symbol s : word) c = c * q + s;
  return c;
}

std::size_t BlockGraph::find(std::span<const Symbol> word) const {
  if (word.size() != depth_) return size();
  for (Symbol s : word)
    if (s >= map_->symbols()) return size();
  const auto c = code(word);
  auto it = std::lower_bound(codes_.begin(), codes_.end(), c);
  if (it == codes_.end() || *it != c) return size();
  return static_cast<std::size_t>(it - codes_.begin());
}

std::size_t BlockGraph::index_of(std::span<const Symbol> word) const {
  const std::size_t u = find(word);
  if (u == size()) throw Error(ErrorKind::InadmissibleWord, "word is not an admissible state");
  return u;
}

std::pair<std::size_t, std::size_t> BlockGraph::prefix_range(std::span<const Symbol> prefix) const {
  if (prefix.size() > depth_) return {size(), size()};
  const std::uint64_t q = map_->symbols();
  std::uint64_t lo = code(prefix);
  std::uint64_t width = 1;
  for (std::size_t i = prefix.size(); i < depth_; ++i) {
    lo *= q;
    width *= q;
  }
  auto first = std::lower_bound(codes_.begin(), codes_.end(), lo);
  auto last = std::lower_bound(first, codes_.end(), lo + width);
  return {static_cast<std::size_t>(first - codes_.begin()), static_cast<std::size_t>(last - codes_.begin())};
}

std::size_t BlockGraph::step(std::size_t u, Symbol s) const {
  for (std::size_t v : succ_[u])
    if (last_symbol(v) == s) return v;
  return size();
}

}  // namespace markov
