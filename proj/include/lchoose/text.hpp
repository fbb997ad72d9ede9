#pragma once

// Line-oriented helpers shared by the text formats.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace lchoose::text {

/// Calls `fn(line_number, tokens)` for every non-blank line with '#'
/// comments stripped. Line numbers are 1-based.
void for_each_line(std::string_view text,
                   const std::function<void(std::size_t, const std::vector<std::string>&)>& fn);

std::uint64_t parse_uint(const std::string& token, std::size_t line, const char* what);
std::int64_t parse_int(const std::string& token, std::size_t line, const char* what);
double parse_double(const std::string& token, std::size_t line, const char* what);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& body);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double x);

}  // namespace lchoose::text
