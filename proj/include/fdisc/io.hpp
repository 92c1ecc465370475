#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fdisc/core.hpp"
#include "fdisc/measure.hpp"

namespace fdisc {

/// 17 significant digits: round-trips any double, locale-free.
inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

/// Reads a measure file: either one decimal value per line with '#' comments,
/// or a single JSON array of numbers.
inline Vector read_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw Error(Errc::ParseError, path + ": empty file");
  if (text[first] == '[') {
    nlohmann::json parsed;
    try {
      parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::ParseError, path + ": " + e.what());
    }
    if (!parsed.is_array()) throw Error(Errc::ParseError, path + ": expected a JSON array");
    Vector v(static_cast<Index>(parsed.size()));
    Index i = 0;
    for (const auto& item : parsed) {
      if (!item.is_number()) {
        throw Error(Errc::ParseError,
                    path + ": array entry " + std::to_string(i) + " is not a number");
      }
      v[i++] = item.get<double>();
    }
    return v;
  }
  std::vector<double> values;
  std::istringstream lines(text);
  std::string line;
  int line_number = 0;
  while (std::getline(lines, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos || line[begin] == '#') continue;
    const std::size_t end = line.find_last_not_of(" \t");
    std::string token = line.substr(begin, end - begin + 1);
    const char* start = token.data();
    if (!token.empty() && token.front() == '+') ++start;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(start, token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(Errc::ParseError, path + ": line " + std::to_string(line_number) +
                                        ": not a number: '" + token + "'");
    }
    values.push_back(value);
  }
  if (values.empty()) throw Error(Errc::ParseError, path + ": no values");
  Vector v(static_cast<Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v[static_cast<Index>(i)] = values[i];
  return v;
}

inline ProbabilityMeasure read_probability(const std::string& path) {
  return ProbabilityMeasure(read_values(path));
}

inline NullSumMeasure read_null_sum(const std::string& path) {
  return NullSumMeasure(read_values(path));
}

inline void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot open " + path + " for writing");
  out << contents;
  out.flush();
  if (!out) throw Error(Errc::IoError, "failed writing " + path);
}

}  // namespace fdisc
