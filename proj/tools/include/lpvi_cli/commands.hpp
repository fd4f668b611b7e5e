#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lpvi/error.hpp"

namespace lpvi::cli {

/// Process exit codes, one per failure class.
enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kConfigError = 2,
  kIterationLimit = 3,
  kDivergence = 4,
  kUnsupported = 5,
};

int exit_code_for(ErrorKind kind) noexcept;

/// Seed used when --seed is absent: $LPVI_SEED if set, else 1.
std::uint64_t default_seed();

struct SolveCommandOptions {
  std::string config;
  std::string out;      // trace CSV; empty = no trace file
  std::string summary;  // summary JSON; empty = standard output
  std::optional<double> tol;
  std::optional<std::size_t> max_iter;
  std::optional<std::string> lambda;  // number or "auto"
};

struct CheckMapOptions {
  std::string config;
  std::uint64_t seed = 1;
  std::optional<std::size_t> samples;
};

struct VerifyOptions {
  std::string suite;  // duality | retraction | pairing | remark
  std::uint64_t seed = 1;
  std::optional<std::size_t> count;
  std::optional<double> p;
};

struct OracleOptions {
  std::string config;
  std::vector<std::size_t> grid;  // empty = 41 per axis
  std::string out;                // accepted-set CSV; empty = standard output
  std::optional<double> lambda;
};

// Each command writes results to `out`, diagnostics to `err`, and returns an
// ExitCode. Library errors are caught and mapped through exit_code_for.
int cmd_solve(const SolveCommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_check_map(const CheckMapOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_oracle(const OracleOptions& opts, std::ostream& out, std::ostream& err);

/// Parses "41x41" or "41,41".
std::vector<std::size_t> parse_grid(const std::string& text);

}  // namespace lpvi::cli
