#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "markov/map.hpp"
#include "markov/potential.hpp"

namespace markov {

// Map files:
//   [partition]  endpoints = 0, 1/2, 1
//   [branch.k]   slope = 2  intercept = -k  images = 0, 1
// Potential files:
//   [potential]  depth = k  value.<word> = <float | log:p/q>
//   [potential]  builtin = neg-log-deriv
// Words are digit strings, or '_'-separated symbols when the map has more
// than ten symbols. All parse failures throw Error(Config).
MarkovMap parse_map(std::string_view text);
MarkovMap load_map(const std::filesystem::path& path);

Potential parse_potential(const MarkovMap& map, std::string_view text);
Potential load_potential(const MarkovMap& map, const std::filesystem::path& path);

Word parse_word(const MarkovMap& map, std::string_view text);
std::string format_word(const MarkovMap& map, std::span<const Symbol> word);

}  // namespace markov
