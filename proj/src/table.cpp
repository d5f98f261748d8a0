#include "chartforge/table.hpp"

#include <charconv>
#include <cmath>
#include <set>

#include "chartforge/error.hpp"

namespace chartforge {

namespace {

constexpr std::string_view kCellSep = " | ";
constexpr std::string_view kRowSep = " <0x0A> ";
constexpr std::string_view kRowToken = "<0x0A>";

std::vector<std::string> split_cells(std::string_view row) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    auto bar = row.find('|', start);
    if (bar == std::string_view::npos) {
      cells.push_back(trim(row.substr(start)));
      break;
    }
    cells.push_back(trim(row.substr(start, bar - start)));
    start = bar + 1;
  }
  return cells;
}

bool bad_label(std::string_view s) {
  return s.find('|') != std::string_view::npos || s.find(kRowToken) != std::string_view::npos ||
         s.find('\n') != std::string_view::npos || trim(s) != s;
}

}  // namespace

std::string trim(std::string_view text) {
  auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  auto end = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(begin, end - begin + 1));
}

std::optional<std::size_t> DataTable::find_row(std::string_view name) const {
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> DataTable::find_column(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  return std::nullopt;
}

void DataTable::validate() const {
  if (rows.empty() || columns.empty()) throw Error(ErrorKind::EmptyTable, "table needs at least one row and one column");
  std::set<std::string_view> names;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.values.size() != columns.size())
      throw Error(ErrorKind::RaggedRow, "row " + std::to_string(i + 1) + " has " + std::to_string(row.values.size()) +
                                            " values, expected " + std::to_string(columns.size()),
                  std::to_string(i + 1));
    if (row.name.empty() || bad_label(row.name))
      throw Error(ErrorKind::SchemaViolation, "invalid series name '" + row.name + "'", "rows[" + std::to_string(i) + "]");
    if (!names.insert(row.name).second)
      throw Error(ErrorKind::SchemaViolation, "duplicate series name '" + row.name + "'", "rows[" + std::to_string(i) + "]");
    for (const auto& v : row.values)
      if (v && !std::isfinite(*v)) throw Error(ErrorKind::InvalidNumber, "non-finite value in row '" + row.name + "'");
  }
  std::set<std::string_view> headers;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].empty() || bad_label(columns[j]))
      throw Error(ErrorKind::SchemaViolation, "invalid column header '" + columns[j] + "'", "columns[" + std::to_string(j) + "]");
    if (!headers.insert(columns[j]).second)
      throw Error(ErrorKind::SchemaViolation, "duplicate column header '" + columns[j] + "'", "columns[" + std::to_string(j) + "]");
  }
  if (bad_label(corner)) throw Error(ErrorKind::SchemaViolation, "invalid corner label '" + corner + "'", "corner");
}

DataTable DataTable::transposed() const {
  DataTable out;
  out.corner = corner;
  for (const auto& row : rows) out.columns.push_back(row.name);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    DataRow row{columns[j], {}};
    for (const auto& r : rows) row.values.push_back(j < r.values.size() ? r.values[j] : std::nullopt);
    out.rows.push_back(std::move(row));
  }
  return out;
}

bool DataTable::non_negative() const {
  for (const auto& row : rows)
    for (const auto& v : row.values)
      if (v && *v < 0) return false;
  return true;
}

std::string format_number(double value) {
  if (value == 0) value = 0;  // folds -0
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

std::string format_cell(const Cell& cell) { return cell ? format_number(*cell) : "nan"; }

std::optional<Cell> parse_cell(std::string_view text) {
  auto s = trim(text);
  if (s.empty() || s == "nan" || s == "NaN") return Cell{};
  std::string_view view = s;
  if (view.front() == '+') view.remove_prefix(1);
  double value = 0;
  auto [ptr, ec] = std::from_chars(view.data(), view.data() + view.size(), value);
  if (ec != std::errc{} || ptr != view.data() + view.size() || !std::isfinite(value)) return std::nullopt;
  return Cell{value};
}

std::string encode_table(const DataTable& table) {
  table.validate();
  std::string out = table.corner;
  for (const auto& c : table.columns) {
    out += kCellSep;
    out += c;
  }
  out += kRowSep;
  for (const auto& row : table.rows) {
    out += row.name;
    for (const auto& v : row.values) {
      out += kCellSep;
      out += format_cell(v);
    }
    out += kRowSep;
  }
  return out;
}

DataTable decode_table(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto pos = text.find(kRowToken, start);
    auto piece = trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (!piece.empty()) lines.push_back(std::move(piece));
    if (pos == std::string_view::npos) break;
    start = pos + kRowToken.size();
  }
  if (lines.size() < 2) throw Error(ErrorKind::EmptyTable, "table needs a header row and at least one data row");

  DataTable table;
  auto header = split_cells(lines.front());
  if (header.size() < 2) throw Error(ErrorKind::EmptyTable, "header row has no columns");
  table.corner = header.front();
  table.columns.assign(header.begin() + 1, header.end());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto cells = split_cells(lines[i]);
    if (cells.size() != header.size())
      throw Error(ErrorKind::RaggedRow,
                  "row " + std::to_string(i) + " has " + std::to_string(cells.size()) + " cells, header has " +
                      std::to_string(header.size()),
                  std::to_string(i));
    DataRow row{cells.front(), {}};
    for (std::size_t j = 1; j < cells.size(); ++j) {
      auto cell = parse_cell(cells[j]);
      if (!cell)
        throw Error(ErrorKind::InvalidNumber, "cell '" + cells[j] + "' in row " + std::to_string(i) + " is not a number",
                    std::to_string(i));
      row.values.push_back(*cell);
    }
    table.rows.push_back(std::move(row));
  }
  table.validate();
  return table;
}

}  // namespace chartforge
