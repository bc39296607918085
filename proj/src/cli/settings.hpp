#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace slowspin::cli {

/// Resolved option values for one invocation: command-line flags layered
/// over config-file entries. Presets are applied by each command for keys
/// that are still missing.
class Settings {
 public:
  std::map<std::string, std::string> values;
  bool include_trivial = false;

  bool has(const std::string& key) const { return values.count(key) != 0; }
  std::optional<std::string> text(const std::string& key) const;
  std::optional<double> number(const std::string& key) const;
  double number_or(const std::string& key, double fallback) const;
  std::optional<int> integer(const std::string& key) const;
  int integer_or(const std::string& key, int fallback) const;
};

/// "start:stop:steps" (each part may be an expression) -> uniform grid.
std::vector<double> parse_grid(const std::string& spec);

/// "lo:hi" -> pair.
std::pair<double, double> parse_range(const std::string& spec);

/// Reads a flat "key = value" document; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path);

}  // namespace slowspin::cli
