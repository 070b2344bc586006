#pragma once

// Report rendering shared by all subcommands. Every real number is rounded to
// 10 significant digits once, and both renderings print that rounded value,
// so json and csv payloads agree digit for digit.

#include <json.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace spin1bell::cli {

/// v rounded to 10 significant digits.
double round10(double v);

/// JSON number holding round10(v).
nlohmann::json num(double v);

/// CSV cell text of a JSON scalar; numbers use the JSON spelling.
std::string csv_cell(const nlohmann::json& value);

struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  std::vector<std::string> csv_header = {};
  std::vector<std::vector<nlohmann::json>> csv_rows = {};
};

void write_json(std::ostream& os, const Report& report, std::uint64_t seed);
void write_csv(std::ostream& os, const Report& report);

}  // namespace spin1bell::cli
