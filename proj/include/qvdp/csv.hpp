#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace qvdp {

using Cell = std::variant<double, std::string>;

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

/// 17 significant digits; NaN renders as "nan" regardless of sign bit.
std::string format_double(double value);

/// Comma-delimited, header row first, '\n' line endings. String cells
/// containing a comma, quote or newline are quoted.
std::string format_csv(const CsvTable& table);

/// Throws ErrorCode::precondition for a table without rows and
/// ErrorCode::io when the file cannot be written.
void emit_csv(const CsvTable& table, const std::filesystem::path& path);

}  // namespace qvdp
