#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chartforge {

/// A cell value; std::nullopt marks a missing point.
using Cell = std::optional<double>;

struct DataRow {
  std::string name;
  std::vector<Cell> values;

  bool operator==(const DataRow&) const = default;
};

/// Header-row-first data table. The corner cell titles the row axis, the
/// remaining header cells label the columns, and each row is one named line
/// of values.
struct DataTable {
  std::string corner;
  std::vector<std::string> columns;
  std::vector<DataRow> rows;

  bool operator==(const DataTable&) const = default;

  std::size_t row_count() const { return rows.size(); }
  std::size_t column_count() const { return columns.size(); }

  /// Index of the row named `name`, if any.
  std::optional<std::size_t> find_row(std::string_view name) const;
  std::optional<std::size_t> find_column(std::string_view name) const;

  /// Throws Error{RaggedRow | EmptyTable | SchemaViolation} on a broken invariant.
  void validate() const;

  DataTable transposed() const;

  /// True when every present value is >= 0.
  bool non_negative() const;
};

/// Shortest round-trip decimal form; "-0" prints as "0", missing as "nan".
std::string format_number(double value);
std::string format_cell(const Cell& cell);

/// Parses a full-string number ("23.66", "-1e3"); "nan" and "" yield a missing cell.
std::optional<Cell> parse_cell(std::string_view text);

/// "a | b <0x0A> r | 1 <0x0A> " form. Throws on invalid tables.
std::string encode_table(const DataTable& table);

/// Inverse of encode_table. Tolerant to spacing around separators and to
/// raw newlines inside the separator token.
DataTable decode_table(std::string_view text);

std::string trim(std::string_view text);

}  // namespace chartforge
