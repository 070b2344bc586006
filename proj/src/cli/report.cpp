#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "spin1bell/cli.hpp"
#include "spin1bell/kernels.hpp"

namespace spin1bell::cli {

double round10(double v) {
  if (!std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  const double r = std::stod(buf);
  return r == 0.0 ? 0.0 : r;  // drop negative zero
}

nlohmann::json num(double v) { return round10(v); }

std::string csv_cell(const nlohmann::json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

void write_json(std::ostream& os, const Report& report, std::uint64_t seed) {
  nlohmann::json doc = {
      {"command", report.command},
      {"inputs", report.inputs},
      {"result", report.result},
      {"meta",
       {{"version", kVersion},
        {"seed", seed},
        {"backend", std::string(kernels::backend_name(kernels::best_backend()))}}},
  };
  os << doc.dump(2) << '\n';
}

void write_csv(std::ostream& os, const Report& report) {
  for (std::size_t i = 0; i < report.csv_header.size(); ++i)
    os << (i ? "," : "") << report.csv_header[i];
  os << '\n';
  for (const auto& row : report.csv_rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << '\n';
  }
}

}  // namespace spin1bell::cli
