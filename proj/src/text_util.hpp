#ifndef TRIGONAL_TEXT_UTIL_HPP
#define TRIGONAL_TEXT_UTIL_HPP

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "trigonal/errors.hpp"

namespace trigonal::detail {

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InputError("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return value;
}

inline std::vector<int> parse_int_list(std::string_view s, std::string_view what) {
  std::vector<int> values;
  for (std::string_view part : split(s, ',')) values.push_back(parse_int(part, what));
  return values;
}

inline std::string join_ints(const std::vector<int>& values, char sep) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(values[k]);
  }
  return out;
}

}  // namespace trigonal::detail

#endif  // TRIGONAL_TEXT_UTIL_HPP
