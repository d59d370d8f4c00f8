#pragma once

// Shared line handling for the Cayley-table and relation-grid text formats.

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ccm/error.hpp"

namespace ccm::detail {

struct ContentLine {
  std::size_t number;  // 1-based line number in the input
  std::string_view text;
};

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

/// Non-blank lines that do not start with '#'.
inline std::vector<ContentLine> content_lines(std::string_view text) {
  std::vector<ContentLine> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    const auto end = text.find('\n');
    auto line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++number;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    lines.push_back({number, line});
  }
  return lines;
}

inline std::vector<std::uint64_t> parse_numbers(const ContentLine& line) {
  std::vector<std::uint64_t> values;
  auto rest = line.text;
  while (true) {
    const auto start = rest.find_first_not_of(" \t");
    if (start == std::string_view::npos) break;
    rest.remove_prefix(start);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc{} || (ptr != rest.data() + rest.size() && *ptr != ' ' && *ptr != '\t'))
      throw Error(ErrorKind::kParse, "line " + std::to_string(line.number) +
                                         ": expected non-negative integers, got '" +
                                         std::string(line.text) + "'");
    values.push_back(value);
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
  }
  return values;
}

}  // namespace ccm::detail
