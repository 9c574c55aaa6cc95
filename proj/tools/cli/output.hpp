#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "config.hpp"

namespace strichartz::cli {

struct Table {
  std::string units;  // written as the leading '#' line
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Shortest round-trip decimal form; "inf", "-inf" and "nan" for non-finite.
std::string format_double(double v);
std::string format_int(long long v);

// Comma separated, '.' decimal, LF line endings.
std::string to_csv(const Table& table);

// Writes <dir>/<stem>.csv and <dir>/<stem>.json, creating dir if needed.
// Throws IoError.
void write_outputs(const std::filesystem::path& dir, const std::string& stem, const Table& table, const Json& sidecar);

}  // namespace strichartz::cli
