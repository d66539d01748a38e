#pragma once

#include <string>
#include <vector>

namespace eegdur {

// Split one CSV line. Handles double-quoted cells with "" escapes; no
// multi-line cells (none of our formats produce them).
std::vector<std::string> split_csv_line(const std::string& line);

// Quote a cell if it contains a comma, quote or newline.
std::string csv_quote(const std::string& cell);

// Shortest round-trip decimal form of a double (repr-exact re-parse).
std::string format_double(double v);

// Fixed significant-digit form for plot coordinates.
std::string format_double_g(double v, int digits);

// Strict double parse of a whole cell; returns false on trailing junk,
// empty cell, or range error.
bool parse_double(const std::string& cell, double& out);

// Write `content` to path atomically (temp file in the same directory,
// then rename).
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace eegdur
