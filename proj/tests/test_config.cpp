#include <gtest/gtest.h>

#include <cmath>

#include "markov/acceptance.hpp"
#include "markov/config.hpp"
#include "markov/error.hpp"
#include "markov/thermo.hpp"
#include "support.hpp"

using namespace markov;

namespace {

ErrorKind kind_of(auto f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST(Config, ShippedFilesParse) {
  const MarkovMap d = load_map(MARKOV_CONFIGS "/doubling.map");
  const MarkovMap t = load_map(MARKOV_CONFIGS "/three_symbol.map");
  EXPECT_EQ(d.symbols(), 2u);
  EXPECT_EQ(t.symbols(), 3u);
  const Potential b = load_potential(d, MARKOV_CONFIGS "/bernoulli07.pot");
  EXPECT_DOUBLE_EQ(b.at(Word{0}), std::log(0.7));
  EXPECT_DOUBLE_EQ(b.at(Word{1}), std::log(0.3));
  const Potential l = load_potential(d, MARKOV_CONFIGS "/lebesgue.pot");
  EXPECT_DOUBLE_EQ(l.at(Word{1}), -std::log(2.0));
  EXPECT_NO_THROW(load_potential(t, MARKOV_CONFIGS "/three_symbol.pot"));
}

TEST(Config, EmbeddedTextsMatchShippedFiles) {
  const MarkovMap a = parse_map(kDoublingMapText);
  const MarkovMap b = load_map(MARKOV_CONFIGS "/doubling.map");
  EXPECT_EQ(a.partition().endpoints, b.partition().endpoints);
  const MarkovMap c = parse_map(kThreeSymbolMapText);
  const MarkovMap d = load_map(MARKOV_CONFIGS "/three_symbol.map");
  EXPECT_EQ(c.admissibility_matrix(), d.admissibility_matrix());
  EXPECT_EQ(parse_potential(c, kThreeSymbolPotText).values(), load_potential(d, MARKOV_CONFIGS "/three_symbol.pot").values());
}

TEST(Config, RejectsUnknownKeysAndSections) {
  const std::string base = "[partition]\nendpoints = 0, 1/2, 1\n[branch.0]\nslope = 2\nintercept = 0\nimages = 0, 1\n"
                           "[branch.1]\nslope = 2\nintercept = -1\nimages = 0, 1\n";
  EXPECT_NO_THROW(parse_map(base));
  EXPECT_EQ(kind_of([&] { parse_map(base + "colour = red\n"); }), ErrorKind::Config);
  EXPECT_EQ(kind_of([&] { parse_map(base + "[extra]\nx = 1\n"); }), ErrorKind::Config);
  EXPECT_EQ(kind_of([&] { parse_map("[partition]\nendpoints = 0, 1/2, 1\n"); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([&] { parse_map("[branch.0]\nslope = 2\nintercept = 0\nimages = 0\n"); }), ErrorKind::Config);
  EXPECT_EQ(kind_of([&] { parse_map("[partition]\nendpoints = 0, x, 1\n"); }), ErrorKind::Config);
  EXPECT_EQ(kind_of([&] { load_map("/nonexistent/file.map"); }), ErrorKind::Config);
}

TEST(Config, MapErrorsPropagate) {
  EXPECT_EQ(kind_of([] {
              parse_map("[partition]\nendpoints = 0, 1/2, 1\n[branch.0]\nslope = 1\nintercept = 0\nimages = 0\n"
                        "[branch.1]\nslope = 2\nintercept = -1\nimages = 0, 1\n");
            }),
            ErrorKind::NonExpanding);
}

TEST(Config, PotentialForms) {
  const MarkovMap m = parse_map(kThreeSymbolMapText);
  const Potential p = parse_potential(m, "[potential]\ndepth = 2\nvalue.00 = 0\nvalue.01 = 1\nvalue.02 = 2\n"
                                         "value.10 = log:1/2\nvalue.11 = -1.5e-1\nvalue.12 = 5\nvalue.20 = 6\n"
                                         "value.21 = 7\n");
  EXPECT_EQ(p.depth(), 2u);
  EXPECT_DOUBLE_EQ(p.at(Word{1, 0}), std::log(0.5));
  EXPECT_DOUBLE_EQ(p.at(Word{1, 1}), -0.15);
  // Missing word, inadmissible word, wrong length, bad number, unknown key.
  EXPECT_EQ(kind_of([&] { parse_potential(m, "[potential]\ndepth = 1\nvalue.0 = 1\nvalue.1 = 1\n"); }),
            ErrorKind::Config);
  EXPECT_ANY_THROW(parse_potential(m, "[potential]\ndepth = 2\nvalue.22 = 1\n"));
  EXPECT_EQ(kind_of([&] { parse_potential(m, "[potential]\ndepth = 1\nvalue.00 = 1\n"); }), ErrorKind::Config);
  EXPECT_EQ(kind_of([&] { parse_potential(m, "[potential]\ndepth = 1\nvalue.0 = one\n"); }), ErrorKind::Config);
  EXPECT_EQ(kind_of([&] { parse_potential(m, "[potential]\ndepth = 1\nweight = 1\n"); }), ErrorKind::Config);
  EXPECT_EQ(kind_of([&] { parse_potential(m, "[potential]\ndepth = 1\nvalue.0 = log:-1\n"); }), ErrorKind::Config);
  EXPECT_EQ(kind_of([&] { parse_potential(m, "[potential]\nbuiltin = something\n"); }), ErrorKind::Config);
  const Potential b = parse_potential(m, "[potential]\nbuiltin = neg-log-deriv\ndepth = 2\n");
  EXPECT_EQ(b.depth(), 2u);
  EXPECT_DOUBLE_EQ(b.at(Word{2, 0}), -std::log(2.0));
}

TEST(Config, WordsOverTenSymbols) {
  std::string text = "[partition]\nendpoints = 0";
  for (int k = 1; k <= 12; ++k) text += ", " + std::to_string(k) + "/12";
  text += "\n";
  for (int k = 0; k < 12; ++k)
    text += "[branch." + std::to_string(k) + "]\nslope = 12\nintercept = " + std::to_string(-k) +
            "\nimages = 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11\n";
  const MarkovMap m = parse_map(text);
  EXPECT_EQ(parse_word(m, "11_0_3"), (Word{11, 0, 3}));
  EXPECT_EQ(format_word(m, Word{11, 0, 3}), "11_0_3");
  EXPECT_THROW(parse_word(m, "12"), Error);
  const MarkovMap d = parse_map(kDoublingMapText);
  EXPECT_EQ(parse_word(d, "0110"), (Word{0, 1, 1, 0}));
  EXPECT_THROW(parse_word(d, "012"), Error);
}
