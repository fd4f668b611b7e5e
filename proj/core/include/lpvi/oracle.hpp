#pragma once

#include <cstddef>
#include <vector>

#include "lpvi/lp_space.hpp"
#include "lpvi/vi_solver.hpp"

namespace lpvi {

/// Brute-force grid over the bounding box of a bounded set.
struct GridSpec {
  std::vector<std::size_t> counts;  // points per axis, each >= 2
  /// c in the acceptance tolerance c * h * (1 + ||Bu||_p), h the largest
  /// grid spacing.
  double acceptance_constant = 0.5;
};

inline constexpr std::size_t kMaxGridPoints = 1'000'000;
inline constexpr std::size_t kMaxOracleDim = 3;

struct GridPoint {
  Point point;
  double worst_pairing;  // min over grid v in C of <Bu, j(v - u)>
};

struct GridResult {
  std::vector<GridPoint> accepted;
  std::vector<double> spacing;  // per axis
  double cell = 0.0;            // max spacing
  std::size_t points_in_set = 0;
};

/// Enumerates grid points u in C and accepts those with
/// min_v <Bu, j(v - u)> >= -c h (1 + ||Bu||_p) over all grid points v in C.
/// Needs a bounded set (Box or Ball) and n <= 3.
GridResult grid_vi_solve(const ProblemSpec& problem, const GridSpec& grid);

struct OracleAgreement {
  double nearest_accepted;   // l_inf distance from the solution to the closest accepted point
  double farthest_accepted;  // l_inf distance to the farthest accepted point
  double diameter;           // l_inf diameter of the accepted set
  bool within_one_cell;
  bool all_within_two_cells;
  bool singleton_scale;      // diameter <= 2 cells

  bool passed() const noexcept { return within_one_cell && all_within_two_cells && singleton_scale; }
};

/// Compares a solver answer against the accepted set. Throws InvalidInput
/// when the accepted set is empty.
OracleAgreement compare_with_solution(const GridResult& grid, const Point& solution);

/// l_inf diameter of the accepted set (0 when it has fewer than two points).
double accepted_diameter(const GridResult& grid);

Point accepted_centroid(const GridResult& grid);

}  // namespace lpvi
