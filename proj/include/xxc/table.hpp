#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace xxc {

inline constexpr const char* kToolName = "xxcurrent";
inline constexpr const char* kToolVersion = "0.1.0";

enum class TableFormat { Csv, Json };

/// Formats with `digits` significant decimal digits ("%.{digits}g").
std::string format_sig(double value, int digits = 12);

/// Column-oriented result table. CSV output carries '#'-prefixed metadata
/// lines before the header; JSON carries the same metadata in a "meta"
/// object and emits numeric-looking cells as numbers. Cells are preformatted
/// strings, so identical configs produce byte-identical files.
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add_meta(const std::string& line) { meta_.push_back(line); }
  void add_row(std::vector<std::string> cells);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  void write(std::ostream& out, TableFormat format) const;

 private:
  std::vector<std::string> meta_;
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace xxc
