#include "xxc/table.hpp"

#include <cstdio>
#include <cstdlib>

#include "xxc/errors.hpp"

#include <json.hpp>

namespace xxc {

std::string format_sig(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value);
  return buffer;
}

void Table::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns_.size())
    throw ConfigError("row width does not match the header");
  rows_.push_back(std::move(cells));
}

namespace {

// Cells that parse fully as numbers are emitted as JSON numbers.
nlohmann::json cell_to_json(const std::string& cell) {
  if (cell.empty() || cell == "nan" || cell == "-nan" || cell == "inf" || cell == "-inf")
    return nullptr;
  char* end = nullptr;
  const double value = std::strtod(cell.c_str(), &end);
  if (end && *end == '\0') return value;
  return cell;
}

}  // namespace

void Table::write(std::ostream& out, TableFormat format) const {
  if (format == TableFormat::Csv) {
    out << "# " << kToolName << " " << kToolVersion << "\n";
    for (const auto& line : meta_) out << "# " << line << "\n";
    for (std::size_t i = 0; i < columns_.size(); ++i)
      out << (i ? "," : "") << columns_[i];
    out << "\n";
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
      out << "\n";
    }
    return;
  }

  nlohmann::json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["meta"] = meta_;
  doc["columns"] = columns_;
  auto rows = nlohmann::json::array();
  for (const auto& row : rows_) {
    auto cells = nlohmann::json::array();
    for (const auto& cell : row) cells.push_back(cell_to_json(cell));
    rows.push_back(std::move(cells));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << "\n";
}

}  // namespace xxc
