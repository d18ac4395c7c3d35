#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "markov/map.hpp"

namespace markov {

// Higher-block presentation: states are the admissible words of length k,
// with an edge u -> v whenever u = s.w and v = w.t for an admissible u.t.
class BlockGraph {
 public:
  static constexpr std::size_t kMaxStates = 1u << 22;

  BlockGraph(const MarkovMap& map, std::size_t depth);

  const MarkovMap& map() const { return *map_; }
  std::shared_ptr<const MarkovMap> map_ptr() const { return map_; }
  std::size_t depth() const { return depth_; }
  std::size_t size() const { return codes_.size(); }

  std::span<const Symbol> state(std::size_t u) const {
    return {states_.data() + u * depth_, depth_};
  }
  Symbol first_symbol(std::size_t u) const { return states_[u * depth_]; }
  Symbol last_symbol(std::size_t u) const { return states_[u * depth_ + depth_ - 1]; }

  const std::vector<std::size_t>& successors(std::size_t u) const { return succ_[u]; }
  const std::vector<std::size_t>& predecessors(std::size_t u) const { return pred_[u]; }

  // Index of the state spelled by `word` (length == depth), or size() if absent.
  std::size_t find(std::span<const Symbol> word) const;
  std::size_t index_of(std::span<const Symbol> word) const;

  // Contiguous range [first, last) of states whose spelling starts with prefix.
  std::pair<std::size_t, std::size_t> prefix_range(std::span<const Symbol> prefix) const;

  // Successor of u obtained by appending symbol s, or size() if inadmissible.
  std::size_t step(std::size_t u, Symbol s) const;

 private:
  std::uint64_t code(std::span<const Symbol> word) const;

  std::shared_ptr<const MarkovMap> map_;
  std::size_t depth_;
  std::vector<Symbol> states_;
  std::vector<std::uint64_t> codes_;
  std::vector<std::vector<std::size_t>> succ_;
  std::vector<std::vector<std::size_t>> pred_;
};

}  // namespace markov
