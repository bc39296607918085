#include "settings.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "expr.hpp"
#include "slowspin/errors.hpp"

namespace slowspin::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::optional<std::string> Settings::text(const std::string& key) const {
  const auto it = values.find(key);
  if (it == values.end()) return std::nullopt;
  return it->second;
}

std::optional<double> Settings::number(const std::string& key) const {
  const auto t = text(key);
  if (!t) return std::nullopt;
  try {
    return eval_expression(*t);
  } catch (const InvalidArgument& e) {
    throw InvalidArgument("--" + key + ": " + e.what());
  }
}

double Settings::number_or(const std::string& key, double fallback) const {
  return number(key).value_or(fallback);
}

std::optional<int> Settings::integer(const std::string& key) const {
  const auto v = number(key);
  if (!v) return std::nullopt;
  if (std::abs(*v - std::round(*v)) > 1e-9 || std::abs(*v) > 2e9) {
    throw InvalidArgument("--" + key + " must be an integer");
  }
  return static_cast<int>(std::lround(*v));
}

int Settings::integer_or(const std::string& key, int fallback) const {
  return integer(key).value_or(fallback);
}

std::vector<double> parse_grid(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) throw InvalidArgument("grid must look like start:stop:steps, got '" + spec + "'");
  const double start = eval_expression(parts[0]);
  const double stop = eval_expression(parts[1]);
  const double steps_d = eval_expression(parts[2]);
  if (steps_d < 1 || std::abs(steps_d - std::round(steps_d)) > 1e-9 || steps_d > 1e7) {
    throw InvalidArgument("grid steps must be a positive integer");
  }
  const long steps = std::lround(steps_d);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  if (steps == 1) {
    out.push_back(start);
    return out;
  }
  for (long i = 0; i < steps; ++i) {
    out.push_back(i == steps - 1 ? stop : start + (stop - start) * static_cast<double>(i) / (steps - 1));
  }
  return out;
}

std::pair<double, double> parse_range(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 2) throw InvalidArgument("range must look like lo:hi, got '" + spec + "'");
  return {eval_expression(parts[0]), eval_expression(parts[1])};
}

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgument(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    out[key] = value;
  }
  return out;
}

}  // namespace slowspin::cli
