#include "markov/map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "markov/error.hpp"

namespace markov {

namespace {

using BoolMatrix = std::vector<std::uint8_t>;

BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b, std::size_t q) {
  BoolMatrix c(q * q, 0);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t k = 0; k < q; ++k)
      if (a[i * q + k])
        for (std::size_t j = 0; j < q; ++j) c[i * q + j] |= b[k * q + j];
  return c;
}

std::size_t find_endpoint(const std::vector<Rational>& endpoints, const Rational& v) {
  auto it = std::lower_bound(endpoints.begin(), endpoints.end(), v);
  if (it == endpoints.end() || *it != v) return endpoints.size();
  return static_cast<std::size_t>(it - endpoints.begin());
}

// x -> alpha * x + beta, the composition of inverse branches along a prefix.
struct Affine {
  Rational alpha{1};
  Rational beta{0};

  Affine then_inverse(const BranchSpec& b) const {
    Affine out;
    out.alpha = alpha / b.slope;
    out.beta = beta - alpha * b.intercept / b.slope;
    return out;
  }
};

Cylinder finish(const MarkovMap& map, Word word, const Affine& f) {
  const Symbol last = word.back();
  Rational u = f.alpha * map.left(last) + f.beta;
  Rational v = f.alpha * map.right(last) + f.beta;
  if (v < u) std::swap(u, v);
  return Cylinder{std::move(word), std::move(u), std::move(v)};
}

void enumerate_from(const MarkovMap& map, Word& prefix, const Affine& f, std::size_t n,
                    std::vector<Cylinder>& out) {
  if (prefix.size() == n) {
    out.push_back(finish(map, prefix, f));
    return;
  }
  const std::size_t q = map.symbols();
  for (std::size_t s = 0; s < q; ++s) {
    const auto sym = static_cast<Symbol>(s);
    if (!prefix.empty() && !map.admissible(prefix.back(), sym)) continue;
    // The affine map only needs the inverse branch of every symbol but the last.
    Affine next = prefix.empty() ? f : f.then_inverse(map.branch(prefix.back()));
    prefix.push_back(sym);
    enumerate_from(map, prefix, next, n, out);
    prefix.pop_back();
  }
}

void check_count(const MarkovMap& map, std::size_t n, std::size_t cap) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "generation must be >= 1");
  const auto count = count_words(map, n);
  if (count > cap) {
    throw Error(ErrorKind::GenerationTooLarge, "generation " + std::to_string(n) + " has " +
                                                   std::to_string(count) + " cylinders (cap " +
                                                   std::to_string(cap) + ")");
  }
}

}  // namespace

bool MarkovMap::admissible(std::span<const Symbol> word) const {
  for (Symbol s : word)
    if (s >= symbols()) return false;
  for (std::size_t i = 1; i < word.size(); ++i)
    if (!admissible(word[i - 1], word[i])) return false;
  return true;
}

std::vector<std::vector<int>> MarkovMap::admissibility_matrix() const {
  const std::size_t q = symbols();
  std::vector<std::vector<int>> a(q, std::vector<int>(q, 0));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) a[i][j] = adjacency_[i * q + j];
  return a;
}

Symbol MarkovMap::symbol_at(const Rational& x) const {
  const auto& e = partition_.endpoints;
  auto it = std::upper_bound(e.begin(), e.end(), x);
  auto k = static_cast<std::ptrdiff_t>(it - e.begin()) - 1;
  k = std::clamp<std::ptrdiff_t>(k, 0, static_cast<std::ptrdiff_t>(symbols()) - 1);
  return static_cast<Symbol>(k);
}

Symbol MarkovMap::symbol_at(double x) const {
  auto it = std::upper_bound(endpoints_d_.begin(), endpoints_d_.end(), x);
  auto k = static_cast<std::ptrdiff_t>(it - endpoints_d_.begin()) - 1;
  k = std::clamp<std::ptrdiff_t>(k, 0, static_cast<std::ptrdiff_t>(symbols()) - 1);
  return static_cast<Symbol>(k);
}

Rational MarkovMap::apply(const Rational& x) const {
  const BranchSpec& b = branches_[symbol_at(x)];
  Rational y = b.slope * x + b.intercept;
  return y;
}

Rational MarkovMap::inverse_branch(Symbol k, const Rational& y) const {
  const BranchSpec& b = branches_[k];
  Rational x = (y - b.intercept) / b.slope;
  return x;
}

MarkovMap build_map(PartitionSpec partition, std::vector<BranchSpec> branches) {
  auto& e = partition.endpoints;
  if (e.size() < 3) throw Error(ErrorKind::InvalidInput, "partition needs at least two intervals");
  if (e.front() != 0 || e.back() != 1)
    throw Error(ErrorKind::InvalidInput, "partition must start at 0 and end at 1");
  for (std::size_t i = 1; i < e.size(); ++i)
    if (!(e[i - 1] < e[i])) throw Error(ErrorKind::InvalidInput, "partition endpoints must increase strictly");
  const std::size_t q = e.size() - 1;
  if (q > kMaxSymbols) throw Error(ErrorKind::InvalidInput, "too many partition intervals");
  if (branches.size() != q)
    throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(q) + " branches, got " +
                                             std::to_string(branches.size()));

  MarkovMap m;
  m.adjacency_.assign(q * q, 0);
  for (std::size_t k = 0; k < q; ++k) {
    BranchSpec& b = branches[k];
    const std::string name = "branch " + std::to_string(k);
    if (abs(b.slope) <= 1) throw Error(ErrorKind::NonExpanding, name + " has |slope| <= 1");
    Rational lo = b.slope * e[k] + b.intercept;
    Rational hi = b.slope * e[k + 1] + b.intercept;
    if (hi < lo) std::swap(lo, hi);
    const std::size_t j0 = find_endpoint(e, lo);
    const std::size_t j1 = find_endpoint(e, hi);
    if (j0 == e.size() || j1 == e.size())
      throw Error(ErrorKind::NonMarkovImage, name + " image [" + lo.get_str() + ", " + hi.get_str() +
                                                 "] does not end on partition points");
    std::sort(b.image_symbols.begin(), b.image_symbols.end());
    b.image_symbols.erase(std::unique(b.image_symbols.begin(), b.image_symbols.end()),
                          b.image_symbols.end());
    std::vector<int> expected;
    for (std::size_t j = j0; j < j1; ++j) expected.push_back(static_cast<int>(j));
    if (b.image_symbols != expected)
      throw Error(ErrorKind::NonMarkovImage, name + " declared images do not match its affine image");
    for (int j : expected) m.adjacency_[k * q + static_cast<std::size_t>(j)] = 1;
  }

  // Wielandt: a primitive q x q matrix has A^R > 0 for some R <= (q-1)^2 + 1.
  const std::size_t wielandt = (q - 1) * (q - 1) + 1;
  BoolMatrix power = m.adjacency_;
  std::size_t exponent = 0;
  for (std::size_t r = 1; r <= wielandt; ++r) {
    if (std::all_of(power.begin(), power.end(), [](std::uint8_t v) { return v != 0; })) {
      exponent = r;
      break;
    }
    power = bool_product(power, m.adjacency_, q);
  }
  if (exponent == 0) throw Error(ErrorKind::NotCovering, "admissibility matrix is not primitive");
  m.primitivity_exponent_ = exponent;

  m.min_abs_slope_ = abs(branches[0].slope);
  m.max_abs_slope_ = abs(branches[0].slope);
  for (const auto& b : branches) {
    m.min_abs_slope_ = std::min(m.min_abs_slope_, Rational(abs(b.slope)));
    m.max_abs_slope_ = std::max(m.max_abs_slope_, Rational(abs(b.slope)));
    m.slope_d_.push_back(b.slope.get_d());
    m.intercept_d_.push_back(b.intercept.get_d());
    m.log_abs_slope_.push_back(std::log(std::abs(b.slope.get_d())));
  }
  for (const auto& a : e) m.endpoints_d_.push_back(a.get_d());
  m.partition_ = std::move(partition);
  m.branches_ = std::move(branches);
  return m;
}

std::uint64_t count_words(const MarkovMap& map, std::size_t n) {
  if (n == 0) return 1;
  const std::size_t q = map.symbols();
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> ending(q, 1);
  for (std::size_t step = 1; step < n; ++step) {
    std::vector<std::uint64_t> next(q, 0);
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < q; ++j)
        if (map.admissible(static_cast<Symbol>(i), static_cast<Symbol>(j)))
          next[j] = (kMax - next[j] < ending[i]) ? kMax : next[j] + ending[i];
    ending = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto c : ending) total = (kMax - total < c) ? kMax : total + c;
  return total;
}

std::vector<Cylinder> enumerate_cylinders_serial(const MarkovMap& map, std::size_t n, std::size_t cap) {
  check_count(map, n, cap);
  std::vector<Cylinder> out;
  out.reserve(count_words(map, n));
  Word prefix;
  enumerate_from(map, prefix, Affine{}, n, out);
  return out;
}

std::vector<Cylinder> enumerate_cylinders(const MarkovMap& map, std::size_t n, std::size_t cap) {
  check_count(map, n, cap);
  const std::size_t split = std::min<std::size_t>(n, 3);
  std::vector<Cylinder> seeds;
  {
    Word prefix;
    enumerate_from(map, prefix, Affine{}, split, seeds);
  }
  if (split == n) return seeds;

  std::vector<std::vector<Cylinder>> parts(seeds.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    Word prefix = seeds[i].word;
    Affine f;
    for (std::size_t j = 0; j + 1 < prefix.size(); ++j) f = f.then_inverse(map.branch(prefix[j]));
    enumerate_from(map, prefix, f, n, parts[i]);
  }
  std::vector<Cylinder> out;
  out.reserve(count_words(map, n));
  for (auto& p : parts)
    for (auto& c : p) out.push_back(std::move(c));
  return out;
}

void require_admissible(const MarkovMap& map, std::span<const Symbol> word) {
  if (word.empty()) throw Error(ErrorKind::InadmissibleWord, "empty word");
  if (!map.admissible(word)) throw Error(ErrorKind::InadmissibleWord, "word is not admissible");
}

Cylinder cylinder_of(const MarkovMap& map, std::span<const Symbol> word) {
  require_admissible(map, word);
  Rational u = map.left(word.back());
  Rational v = map.right(word.back());
  for (std::size_t i = word.size() - 1; i-- > 0;) {
    u = map.inverse_branch(word[i], u);
    v = map.inverse_branch(word[i], v);
  }
  if (v < u) std::swap(u, v);
  return Cylinder{Word(word.begin(), word.end()), std::move(u), std::move(v)};
}

std::pair<double, double> cylinder_bounds_d(const MarkovMap& map, std::span<const Symbol> word) {
  double u = map.left_d(word.back());
  double v = map.right_d(word.back());
  for (std::size_t i = word.size() - 1; i-- > 0;) {
    u = map.inverse_branch(word[i], u);
    v = map.inverse_branch(word[i], v);
  }
  if (v < u) std::swap(u, v);
  return {u, v};
}

Word locate(const MarkovMap& map, const Rational& x, std::size_t n) {
  if (x < 0 || x > 1) throw Error(ErrorKind::InvalidInput, "locate: x outside [0,1]");
  Word w;
  w.reserve(n);
  Rational y = x;
  for (std::size_t i = 0; i < n; ++i) {
    const Symbol s = map.symbol_at(y);
    w.push_back(s);
    if (i + 1 < n) y = map.apply(y);
  }
  return w;
}

Rational derivative_product(const MarkovMap& map, std::span<const Symbol> word) {
  require_admissible(map, word);
  Rational p(1);
  for (Symbol s : word) p *= abs(map.branch(s).slope);
  return p;
}

}  // namespace markov
