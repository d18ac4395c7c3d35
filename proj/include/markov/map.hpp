#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "markov/rational.hpp"

namespace markov {

using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;

inline constexpr std::size_t kDefaultCylinderCap = 10'000'000;
inline constexpr std::size_t kMaxSymbols = 255;

struct PartitionSpec {
  std::vector<Rational> endpoints;  // 0 = a_0 < a_1 < ... < a_Q = 1
};

struct BranchSpec {
  Rational slope;
  Rational intercept;
  std::vector<int> image_symbols;
};

// Half-open [left, right) basic interval of the given word.
struct Cylinder {
  Word word;
  Rational left;
  Rational right;

  std::size_t generation() const { return word.size(); }
  Rational length() const { return right - left; }
};

// Piecewise-affine expanding Markov map with rational data. Immutable once
// built; only build_map() constructs a valid instance.
class MarkovMap {
 public:
  std::size_t symbols() const { return branches_.size(); }
  const PartitionSpec& partition() const { return partition_; }
  const std::vector<BranchSpec>& branches() const { return branches_; }
  const BranchSpec& branch(Symbol k) const { return branches_[k]; }

  bool admissible(Symbol from, Symbol to) const { return adjacency_[from * symbols() + to] != 0; }
  bool admissible(std::span<const Symbol> word) const;
  std::vector<std::vector<int>> admissibility_matrix() const;
  std::size_t primitivity_exponent() const { return primitivity_exponent_; }

  // Distortion constants of the affine case: L = 1, L_1 = min|s|, L_2 = max|s|.
  const Rational& min_abs_slope() const { return min_abs_slope_; }
  const Rational& max_abs_slope() const { return max_abs_slope_; }

  const Rational& left(Symbol k) const { return partition_.endpoints[k]; }
  const Rational& right(Symbol k) const { return partition_.endpoints[k + 1u]; }

  // Symbol of the partition interval containing x; intervals are [a_k, a_{k+1})
  // except that x = 1 belongs to the last one.
  Symbol symbol_at(const Rational& x) const;
  Symbol symbol_at(double x) const;

  Rational apply(const Rational& x) const;
  Rational inverse_branch(Symbol k, const Rational& y) const;

  // binary64 mirrors for the floating-point filters.
  double slope_d(Symbol k) const { return slope_d_[k]; }
  double intercept_d(Symbol k) const { return intercept_d_[k]; }
  double left_d(Symbol k) const { return endpoints_d_[k]; }
  double right_d(Symbol k) const { return endpoints_d_[k + 1u]; }
  double log_abs_slope(Symbol k) const { return log_abs_slope_[k]; }
  double inverse_branch(Symbol k, double y) const { return (y - intercept_d_[k]) / slope_d_[k]; }

 private:
  friend MarkovMap build_map(PartitionSpec partition, std::vector<BranchSpec> branches);
  MarkovMap() = default;

  PartitionSpec partition_;
  std::vector<BranchSpec> branches_;
  std::vector<std::uint8_t> adjacency_;
  std::size_t primitivity_exponent_ = 0;
  Rational min_abs_slope_;
  Rational max_abs_slope_;
  std::vector<double> slope_d_;
  std::vector<double> intercept_d_;
  std::vector<double> endpoints_d_;
  std::vector<double> log_abs_slope_;
};

// Validates expansion, Markov images and primitivity of the admissibility
// matrix. Throws Error(NonExpanding | NonMarkovImage | NotCovering |
// InvalidInput).
MarkovMap build_map(PartitionSpec partition, std::vector<BranchSpec> branches);

// Number of admissible words of length n, saturating at UINT64_MAX.
std::uint64_t count_words(const MarkovMap& map, std::size_t n);

// All generation-n cylinders in lexicographic word order with exact endpoints.
// Throws Error(GenerationTooLarge) when the count exceeds cap.
std::vector<Cylinder> enumerate_cylinders(const MarkovMap& map, std::size_t n,
                                          std::size_t cap = kDefaultCylinderCap);
std::vector<Cylinder> enumerate_cylinders_serial(const MarkovMap& map, std::size_t n,
                                                 std::size_t cap = kDefaultCylinderCap);

Cylinder cylinder_of(const MarkovMap& map, std::span<const Symbol> word);

// Same interval in binary64, composed from the innermost symbol outwards.
std::pair<double, double> cylinder_bounds_d(const MarkovMap& map, std::span<const Symbol> word);

Word locate(const MarkovMap& map, const Rational& x, std::size_t n);

// |(T^n)'| on the cylinder of `word`; throws Error(InadmissibleWord).
Rational derivative_product(const MarkovMap& map, std::span<const Symbol> word);

void require_admissible(const MarkovMap& map, std::span<const Symbol> word);

}  // namespace markov
