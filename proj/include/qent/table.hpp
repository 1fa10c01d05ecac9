#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace qent {

using Cell = std::variant<double, std::int64_t, std::string>;

/// Experiment output: ordered metadata plus a rectangular table.
struct ResultTable {
  std::vector<std::pair<std::string, Cell>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Appends, or replaces an existing key in place.
  void set_meta(std::string key, Cell value);
  const Cell* find_meta(std::string_view key) const;
  /// Numeric metadata value; throws Error when absent or non-numeric.
  double meta_number(std::string_view key) const;
  /// Throws Error for an unknown column.
  std::size_t column_index(std::string_view name) const;
  double number(std::size_t row, std::string_view column) const;
};

/// 12 significant digits, shortest of fixed/scientific, '.' decimal point,
/// independent of the global locale.
std::string format_number(double v);

/// `#`-prefixed `key=value` metadata lines, a header row, then rows; '\n' line ends.
std::string to_csv(const ResultTable& table);

/// {"metadata": {...}, "rows": [{column: value, ...}, ...]}.
std::string to_json(const ResultTable& table);

}  // namespace qent
