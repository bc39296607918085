#include "table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include "json.hpp"
#include <ostream>

#include "slowspin/errors.hpp"

namespace slowspin::cli {

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_csv(const Table& t, std::ostream& out) {
  out << "# slowspin-csv " << kSchemaVersion << "\n";
  out << "# command: " << t.command << "\n";
  for (const auto& [k, v] : t.metadata) out << "# " << k << ": " << v << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(cell_text(row[i]));
    out << "\n";
  }
}

void write_json(const Table& t, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["schema"] = std::string("slowspin-json ") + kSchemaVersion;
  doc["command"] = t.command;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.metadata) meta[k] = v;
  doc["metadata"] = meta;
  doc["columns"] = t.columns;
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json rec = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Cell& c = row[i];
      if (const auto* d = std::get_if<double>(&c)) {
        if (std::isfinite(*d)) {
          rec[t.columns[i]] = *d;
        } else {
          rec[t.columns[i]] = nullptr;
        }
      } else if (const auto* n = std::get_if<std::int64_t>(&c)) {
        rec[t.columns[i]] = *n;
      } else {
        rec[t.columns[i]] = std::get<std::string>(c);
      }
    }
    records.push_back(std::move(rec));
  }
  doc["records"] = std::move(records);
  out << doc.dump(2) << "\n";
}

double numeric(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
  return std::numeric_limits<double>::quiet_NaN();
}

char* fixed(char* buf, std::size_t n, double v) {
  std::snprintf(buf, n, "%.3f", v);
  return buf;
}

// One polyline per series, scaled into a 800x500 frame with y pointing up.
void write_svg(const Table& t, std::ostream& out) {
  constexpr double kW = 800.0, kH = 500.0, kPad = 40.0;
  const std::size_t xi = t.column(t.plot_x);
  const std::size_t yi = t.column(t.plot_y);
  const bool has_series = !t.plot_series.empty();
  const std::size_t si = has_series ? t.column(t.plot_series) : 0;

  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::vector<std::pair<double, double>>>> series;
  for (const auto& row : t.rows) {
    const std::string key = has_series ? cell_text(row[si]) : "all";
    auto& strokes = series[key];
    if (strokes.empty()) {
      order.push_back(key);
      strokes.emplace_back();
    }
    const double x = numeric(row[xi]), y = numeric(row[yi]);
    if (!std::isfinite(x) || !std::isfinite(y)) {
      if (!strokes.back().empty()) strokes.emplace_back();
      continue;
    }
    strokes.back().emplace_back(x, y);
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  if (!(xmax > xmin)) xmax = xmin + 1.0;
  if (!(ymax > ymin)) ymax = ymin + 1.0;
  if (!std::isfinite(xmin)) xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;

  char a[64], b[64];
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kW << " " << kH << "\">\n";
  out << "<!-- slowspin-svg " << kSchemaVersion << " command: " << t.command << " x: " << t.plot_x
      << " [" << format_number(xmin) << ", " << format_number(xmax) << "] y: " << t.plot_y << " ["
      << format_number(ymin) << ", " << format_number(ymax) << "] -->\n";
  static const char* kColors[] = {"#1f4e9c", "#c0392b", "#2e8b57", "#8e44ad", "#d35400"};
  std::size_t color = 0;
  for (const auto& key : order) {
    for (const auto& stroke : series[key]) {
      if (stroke.empty()) continue;
      out << "<polyline data-series=\"" << key << "\" fill=\"none\" stroke=\""
          << kColors[color % 5] << "\" points=\"";
      for (std::size_t i = 0; i < stroke.size(); ++i) {
        const double px = kPad + (stroke[i].first - xmin) / (xmax - xmin) * (kW - 2 * kPad);
        const double py = kH - kPad - (stroke[i].second - ymin) / (ymax - ymin) * (kH - 2 * kPad);
        out << (i ? " " : "") << fixed(a, sizeof a, px) << "," << fixed(b, sizeof b, py);
      }
      out << "\"/>\n";
    }
    ++color;
  }
  out << "</svg>\n";
}

}  // namespace

std::size_t Table::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw InvalidArgument("no column named '" + name + "'");
  return static_cast<std::size_t>(it - columns.begin());
}

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "svg" || name == "svg-polyline") return Format::Svg;
  throw InvalidArgument("unknown format '" + name + "' (csv|json|svg)");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

void write_table(const Table& t, Format f, std::ostream& out) {
  switch (f) {
    case Format::Csv:
      write_csv(t, out);
      return;
    case Format::Json:
      write_json(t, out);
      return;
    case Format::Svg:
      write_svg(t, out);
      return;
  }
}

}  // namespace slowspin::cli
