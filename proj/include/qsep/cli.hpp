#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qsep::cli {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;        // flag parse or domain error
inline constexpr int kExitCheckFailed = 3;  // a contract check did not hold

/// A single envelope value: integers stay integers, reals keep full precision.
using Value = std::variant<long long, double, std::string>;

/// Machine-readable command result. Serializes to JSON losslessly (doubles
/// round-trip bit-exactly) and to two-line CSV keyed by the result names.
struct Envelope {
  std::string command;
  std::map<std::string, Value> inputs;
  std::map<std::string, Value> results;
  std::string version = kVersion;
  std::optional<std::uint64_t> seed;

  std::string to_json_string() const;
  std::string to_csv_string() const;
};

/// Formats a double with enough digits to round-trip exactly
/// (locale-independent).
std::string format_number(double v);

/// Parses argv and runs one subcommand, writing the envelope (or scan table)
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qsep::cli
