#include "qvdp/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "qvdp/error.hpp"

namespace qvdp {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

std::string quote_if_needed(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void append_line(std::string& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += quote_if_needed(fields[i]);
  }
  out += '\n';
}

}  // namespace

std::string format_csv(const CsvTable& table) {
  std::string out;
  append_line(out, table.header);
  std::vector<std::string> fields;
  for (const auto& row : table.rows) {
    fields.clear();
    for (const Cell& cell : row) {
      if (const double* v = std::get_if<double>(&cell)) {
        fields.push_back(format_double(*v));
      } else {
        fields.push_back(std::get<std::string>(cell));
      }
    }
    append_line(out, fields);
  }
  return out;
}

void emit_csv(const CsvTable& table, const std::filesystem::path& path) {
  if (table.rows.empty()) {
    throw Error(ErrorCode::precondition, "emit_csv: table has no rows");
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw Error(ErrorCode::io, "emit_csv: cannot open " + path.string());
  }
  file << format_csv(table);
  file.flush();
  if (!file) {
    throw Error(ErrorCode::io, "emit_csv: write failed for " + path.string());
  }
}

}  // namespace qvdp
