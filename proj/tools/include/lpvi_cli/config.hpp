#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include "lpvi/convex_sets.hpp"
#include "lpvi/mappings.hpp"
#include "lpvi/vi_solver.hpp"

namespace lpvi::cli {

struct SolverConfig {
  std::optional<double> lambda;  // nullopt means "auto"
  double tol = 1e-10;
  std::size_t max_iter = 1'000'000;
  std::optional<Point> x0;
};

struct CheckConfig {
  std::size_t samples = 10'000;
  std::optional<Box> bounds;  // needed when the set is unbounded
};

/// Parsed experiment file. Every failure is an lpvi::Error whose message
/// starts with "<source>:<line>:<column>: <field>:".
struct ProblemConfig {
  ProblemSpec problem;
  SolverConfig solver;
  CheckConfig check;
};

ProblemConfig parse_config(const std::string& text, const std::string& source_name = "<config>");
ProblemConfig load_config(const std::filesystem::path& path);

}  // namespace lpvi::cli
