#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace markov {

// 17 significant digits; "inf", "-inf", "nan" otherwise.
std::string format_double(double v);

// RFC 4180 quoting: fields with ',', '"' or line breaks are quoted.
std::string csv_escape(std::string_view field);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  CsvTable& add(std::string field);
  CsvTable& add(double v) { return add(format_double(v)); }
  CsvTable& add(std::size_t v) { return add(std::to_string(v)); }
  CsvTable& add(std::int64_t v) { return add(std::to_string(v)); }
  CsvTable& add(bool v) { return add(std::string(v ? "true" : "false")); }
  // Throws std::logic_error when the row width differs from the header.
  void end_row();

  std::size_t rows() const { return rows_.size(); }
  void write(std::ostream& out) const;
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
  std::vector<std::string> pending_;
};

}  // namespace markov
