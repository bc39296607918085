#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace slowspin::cli {

inline constexpr const char* kSchemaVersion = "v1";

using Cell = std::variant<double, std::int64_t, std::string>;

/// Result table shared by all subcommands. Numeric cells that could not be
/// computed hold NaN; the row's "status" column then carries the reason.
struct Table {
  std::string command;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  // Plot hints for the svg writer: column names for x, y and the series key.
  std::string plot_x;
  std::string plot_y;
  std::string plot_series;

  void note(std::string key, std::string value) {
    metadata.emplace_back(std::move(key), std::move(value));
  }
  std::size_t column(const std::string& name) const;
};

enum class Format { Csv, Json, Svg };

Format parse_format(const std::string& name);

std::string format_number(double v);

void write_table(const Table& t, Format f, std::ostream& out);

}  // namespace slowspin::cli
