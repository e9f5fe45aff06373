#include "shoulderx/util.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace shoulderx {

std::string format_sig(double value, int sig_digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", sig_digits, value);
    return buf;
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.emplace_back(line.substr(start));
            break;
        }
        fields.emplace_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line = nl == std::string_view::npos
                                    ? text.substr(start)
                                    : text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.emplace_back(line);
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    // A trailing newline produces one empty final entry; drop it.
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    if (in.bad()) throw std::runtime_error("read failed: " + path);
    return out.str();
}

void write_text_file_atomic(const std::string& path, std::string_view content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for write: " + tmp);
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw std::runtime_error("write failed: " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw std::runtime_error("rename failed for: " + path);
    }
}

double parse_finite_double(std::string_view token, std::string_view context) {
    std::string s(token);
    if (s.empty())
        throw ValidationError(std::string(context) + ": empty numeric field");
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || errno == ERANGE)
        throw ValidationError(std::string(context) + ": bad numeric value '" + s + "'");
    if (!std::isfinite(v))
        throw ValidationError(std::string(context) + ": non-finite value '" + s + "'");
    return v;
}

long long parse_int(std::string_view token, std::string_view context) {
    std::string s(token);
    if (s.empty()) throw ValidationError(std::string(context) + ": empty integer field");
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size() || errno == ERANGE)
        throw ValidationError(std::string(context) + ": bad integer '" + s + "'");
    return v;
}

} // namespace shoulderx
