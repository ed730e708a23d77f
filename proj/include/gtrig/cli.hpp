#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gtrig::cli {

// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kIoError = 3,
};

// Flag defaults shared by all subcommands.
struct Defaults {
  std::int64_t samples = 1000;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string format = "csv";
};

enum class TableFunction { sin, cos, arcsin };
enum class OutputFormat { csv, json };

struct TableRequest {
  double p = 2.0;
  double q = 2.0;
  TableFunction fn = TableFunction::sin;
  double from = 0.0;
  double to = 1.0;
  double step = 0.1;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::string> out;
};

struct TableRow {
  double x;
  double value;
};

// Evaluates a table request. Throws gtrig::DomainError on invalid ranges or parameters.
std::vector<TableRow> evaluate_table(const TableRequest& req);

// Shortest decimal string that parses back to the same double.
std::string shortest(double v);

// Runs the command line `args` (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gtrig::cli
