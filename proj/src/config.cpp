#include "markov/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "markov/error.hpp"

namespace markov {

namespace {

namespace pt = boost::property_tree;

pt::ptree read_ini(std::string_view text) {
  std::istringstream in{std::string(text)};
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw Error(ErrorKind::Config, e.what());
  }
  for (const auto& [key, node] : tree)
    if (node.empty()) throw Error(ErrorKind::Config, "key outside any section: " + key);
  return tree;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Config, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(trim(std::string_view(s).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() == 1 && out[0].empty()) out.clear();
  return out;
}

Rational rational_field(const std::string& value, const std::string& where) {
  try {
    return parse_rational(trim(value));
  } catch (const Error&) {
    throw Error(ErrorKind::Config, "bad rational '" + value + "' in " + where);
  }
}

double float_field(const std::string& raw, const std::string& where) {
  const std::string value = trim(raw);
  if (value.rfind("log:", 0) == 0) {
    const Rational q = rational_field(value.substr(4), where);
    if (sgn(q) <= 0) throw Error(ErrorKind::Config, "log of non-positive rational in " + where);
    return std::log(q.get_d());
  }
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size() || !std::isfinite(v))
    throw Error(ErrorKind::Config, "bad number '" + value + "' in " + where);
  return v;
}

std::size_t index_field(const std::string& raw, const std::string& where) {
  const std::string value = trim(raw);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size() || value.empty())
    throw Error(ErrorKind::Config, "bad integer '" + value + "' in " + where);
  return v;
}

void require_keys(const pt::ptree& section, const std::string& name, const std::set<std::string>& allowed) {
  for (const auto& [key, node] : section)
    if (!allowed.contains(key)) throw Error(ErrorKind::Config, "unknown key '" + key + "' in [" + name + "]");
}

std::string required(const pt::ptree& section, const std::string& name, const std::string& key) {
  const auto v = section.get_optional<std::string>(pt::ptree::path_type(key, '\0'));
  if (!v) throw Error(ErrorKind::Config, "missing key '" + key + "' in [" + name + "]");
  return *v;
}

}  // namespace

MarkovMap parse_map(std::string_view text) {
  const pt::ptree tree = read_ini(text);
  std::optional<PartitionSpec> partition;
  std::map<std::size_t, BranchSpec> branches;
  for (const auto& [name, section] : tree) {
    if (name == "partition") {
      require_keys(section, name, {"endpoints"});
      PartitionSpec p;
      for (const auto& e : split_list(required(section, name, "endpoints")))
        p.endpoints.push_back(rational_field(e, "[partition]"));
      partition = std::move(p);
    } else if (name.rfind("branch.", 0) == 0) {
      const std::size_t k = index_field(name.substr(7), "section name [" + name + "]");
      if (branches.contains(k)) throw Error(ErrorKind::Config, "duplicate section [" + name + "]");
      require_keys(section, name, {"slope", "intercept", "images"});
      BranchSpec b;
      b.slope = rational_field(required(section, name, "slope"), "[" + name + "]");
      b.intercept = rational_field(required(section, name, "intercept"), "[" + name + "]");
      for (const auto& s : split_list(required(section, name, "images")))
        b.image_symbols.push_back(static_cast<int>(index_field(s, "[" + name + "] images")));
      branches.emplace(k, std::move(b));
    } else {
      throw Error(ErrorKind::Config, "unknown section [" + name + "]");
    }
  }
  if (!partition) throw Error(ErrorKind::Config, "missing [partition] section");
  std::vector<BranchSpec> list;
  for (auto& [k, b] : branches) {
    if (k != list.size()) throw Error(ErrorKind::Config, "branch sections must be numbered 0..Q-1");
    list.push_back(std::move(b));
  }
  return build_map(std::move(*partition), std::move(list));
}

MarkovMap load_map(const std::filesystem::path& path) { return parse_map(read_file(path)); }

Word parse_word(const MarkovMap& map, std::string_view text) {
  Word w;
  const auto bad = [&] { return Error(ErrorKind::Config, "bad word '" + std::string(text) + "'"); };
  if (map.symbols() <= 10) {
    for (char c : text) {
      if (c < '0' || c > '9') throw bad();
      const auto s = static_cast<std::size_t>(c - '0');
      if (s >= map.symbols()) throw bad();
      w.push_back(static_cast<Symbol>(s));
    }
  } else {
    for (const auto& part : split_list([&] {
           std::string s(text);
           for (char& c : s)
             if (c == '_') c = ',';
           return s;
         }())) {
      const std::size_t s = index_field(part, "word");
      if (s >= map.symbols()) throw bad();
      w.push_back(static_cast<Symbol>(s));
    }
  }
  if (w.empty()) throw bad();
  return w;
}

std::string format_word(const MarkovMap& map, std::span<const Symbol> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (map.symbols() > 10 && i > 0) out += '_';
    out += std::to_string(static_cast<unsigned>(word[i]));
  }
  return out;
}

Potential parse_potential(const MarkovMap& map, std::string_view text) {
  const pt::ptree tree = read_ini(text);
  if (tree.size() != 1 || tree.begin()->first != "potential")
    throw Error(ErrorKind::Config, "potential file needs exactly one [potential] section");
  const pt::ptree& section = tree.begin()->second;
  std::optional<std::size_t> depth;
  std::optional<std::string> builtin;
  std::map<Word, double> table;
  for (const auto& [key, node] : section) {
    const std::string value = node.data();
    if (key == "depth") {
      depth = index_field(value, "[potential] depth");
      if (*depth == 0) throw Error(ErrorKind::Config, "depth must be at least 1");
    } else if (key == "builtin") {
      builtin = trim(value);
    } else if (key.rfind("value.", 0) == 0) {
      Word w = parse_word(map, key.substr(6));
      if (table.contains(w)) throw Error(ErrorKind::Config, "duplicate " + key);
      table.emplace(std::move(w), float_field(value, "[potential] " + key));
    } else {
      throw Error(ErrorKind::Config, "unknown key '" + key + "' in [potential]");
    }
  }
  if (builtin) {
    if (*builtin != "neg-log-deriv") throw Error(ErrorKind::Config, "unknown builtin '" + *builtin + "'");
    if (!table.empty()) throw Error(ErrorKind::Config, "builtin potential takes no value lines");
    Potential phi = neg_log_deriv(map);
    return depth && *depth > 1 ? lift(phi, *depth) : phi;
  }
  if (!depth) throw Error(ErrorKind::Config, "missing key 'depth' in [potential]");
  for (const auto& [w, v] : table)
    if (w.size() != *depth) throw Error(ErrorKind::Config, "word length differs from depth");
  return make_potential(map, *depth, table);
}

Potential load_potential(const MarkovMap& map, const std::filesystem::path& path) {
  return parse_potential(map, read_file(path));
}

}  // namespace markov
