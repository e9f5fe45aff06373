#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace shoulderx {

/// Thrown when inputs, files, or configuration fail validation. The CLI maps
/// this to exit code 2; other exceptions map to exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Formats a floating-point value with `sig_digits` significant digits
/// (printf "%.*g"). 9 digits round-trip any float, 17 any double.
std::string format_sig(double value, int sig_digits);

/// Splits one CSV line on commas. No quoting; fields may not contain commas.
std::vector<std::string> split_csv_line(std::string_view line);

/// Splits text into lines, dropping a trailing '\r' on each (CRLF tolerance).
std::vector<std::string> split_lines(std::string_view text);

std::string read_text_file(const std::string& path);

/// Writes `content` to `path` via a temp file in the same directory followed
/// by an atomic rename, so a partial file is never left under the final name.
void write_text_file_atomic(const std::string& path, std::string_view content);

/// Parses a finite double; throws ValidationError on garbage, NaN, or Inf.
double parse_finite_double(std::string_view token, std::string_view context);

/// Parses a base-10 integer; throws ValidationError on garbage or overflow.
long long parse_int(std::string_view token, std::string_view context);

} // namespace shoulderx
