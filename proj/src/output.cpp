#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cubicprimes/cli.hpp"
#include "json.hpp"

namespace cubic::cli {

namespace {

std::string csv_cell(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, double>) {
          if (std::isnan(x)) return "nan";
          char buf[64];
          std::snprintf(buf, sizeof buf, "%.15g", x);
          return buf;
        } else if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else {
          return std::to_string(x);
        }
      },
      v);
}

nlohmann::json json_cell(const Value& v) {
  return std::visit(
      [](const auto& x) -> nlohmann::json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(x)) return nullptr;
          return x;
        } else {
          return x;
        }
      },
      v);
}

}  // namespace

void OutputTable::add_row(std::vector<Value> row) {
  if (row.size() != header.size()) {
    throw std::logic_error("row width " + std::to_string(row.size()) + " != header width " +
                           std::to_string(header.size()));
  }
  rows.push_back(std::move(row));
}

void write_csv(const OutputTable& t, std::ostream& os) {
  os << "# command=" << t.command << '\n';
  for (const auto& [k, v] : t.parameters) os << "# param." << k << '=' << v << '\n';
  os << "# version=" << kVersion << '\n';
  for (const auto& [k, v] : t.report) os << "# report." << k << '=' << csv_cell(v) << '\n';
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", t.wall_time);
  os << "# wall_time=" << buf << '\n';

  for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << '\n';
  }
}

void write_json(const OutputTable& t, std::ostream& os) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : t.parameters) params[k] = v;
  nlohmann::json report = nlohmann::json::object();
  for (const auto& [k, v] : t.report) report[k] = json_cell(v);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(json_cell(v));
    rows.push_back(std::move(r));
  }
  const nlohmann::json doc = {
      {"metadata",
       {{"command", t.command}, {"parameters", params}, {"version", kVersion}, {"report", report},
        {"wall_time", t.wall_time}}},
      {"header", t.header},
      {"rows", rows},
  };
  os << doc.dump(2) << '\n';
}

std::string csv_body(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) {
    if (!line.empty() && line.front() == '#') continue;
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace cubic::cli
