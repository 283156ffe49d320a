#pragma once

// Command-line surface: every operation as a batch computation emitting a
// CSV or JSON table.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace cubic::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kCapacity = 3,
  kConsistency = 4,
};

/// Empty cell, signed, unsigned, real or bare token.
using Value = std::variant<std::monostate, std::int64_t, std::uint64_t, double, std::string>;

struct OutputTable {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;  // replay set
  std::vector<std::pair<std::string, Value>> report;             // fitted quantities
  double wall_time = 0.0;
  std::vector<std::string> header;
  std::vector<std::vector<Value>> rows;

  void add_row(std::vector<Value> row);  // throws if the width differs from header
};

/// Metadata as leading "# key=value" lines, then the header and rows.
/// Reals use 15 significant digits; LF line endings; no quoting.
void write_csv(const OutputTable& t, std::ostream& os);
/// {"metadata": {...}, "header": [...], "rows": [[...]]}
void write_json(const OutputTable& t, std::ostream& os);

/// Lines of a CSV document that are not metadata comments.
std::string csv_body(const std::string& csv);

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace cubic::cli
