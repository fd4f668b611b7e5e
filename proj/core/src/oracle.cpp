#include "lpvi/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lpvi/error.hpp"

namespace lpvi {
namespace {

constexpr double kCellSlack = 1e-9;

Box bounding_box(const ProblemSpec& problem) {
  const ConvexSetSpec& set = problem.set();
  if (!set.bounded()) {
    fail(ErrorKind::UnsupportedOracle,
         "grid oracle needs a bounded set (box or ball), got " + std::string(set.name()));
  }
  return sampling_box(set, Point::zeros(problem.n()), 0.0);
}

}  // namespace

GridResult grid_vi_solve(const ProblemSpec& problem, const GridSpec& grid) {
  const std::size_t n = problem.n();
  const double p = problem.p();
  if (n > kMaxOracleDim) {
    fail(ErrorKind::UnsupportedOracle,
         "grid oracle is limited to n <= 3, got n = " + std::to_string(n));
  }
  const Box box = bounding_box(problem);
  check_same_dim(grid.counts.size(), n, "grid counts");
  std::size_t total = 1;
  for (std::size_t c : grid.counts) {
    if (c < 2) fail(ErrorKind::InvalidInput, "grid needs at least 2 points per axis");
    if (total > kMaxGridPoints / c) {
      fail(ErrorKind::Resource, "grid exceeds " + std::to_string(kMaxGridPoints) + " points");
    }
    total *= c;
  }
  if (!(grid.acceptance_constant > 0.0)) {
    fail(ErrorKind::InvalidInput, "grid acceptance constant must be positive");
  }

  GridResult result;
  result.spacing.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    result.spacing[i] = (box.hi[i] - box.lo[i]) / static_cast<double>(grid.counts[i] - 1);
  }
  result.cell = *std::max_element(result.spacing.begin(), result.spacing.end());

  std::vector<Point> nodes;
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      // The last node sits exactly on the upper bound.
      x[i] = idx[i] + 1 == grid.counts[i]
                 ? box.hi[i]
                 : box.lo[i] + static_cast<double>(idx[i]) * result.spacing[i];
    }
    Point pt(std::move(x));
    if (contains(problem.set(), pt, p, 1e-12)) nodes.push_back(std::move(pt));
    for (std::size_t i = 0; i < n && ++idx[i] == grid.counts[i]; ++i) idx[i] = 0;
  }
  result.points_in_set = nodes.size();

  for (const Point& u : nodes) {
    const Point bu = eval(problem.map(), u);
    const double bu_norm = p_norm(bu, p);
    double worst = 0.0;
    for (const Point& v : nodes) {
      const DualVector j = duality_map(v - u, p);
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += bu[i] * j[i];
      worst = std::min(worst, s);
    }
    const double tolerance = grid.acceptance_constant * result.cell * (1.0 + bu_norm);
    if (worst >= -tolerance) result.accepted.push_back({u, worst});
  }
  return result;
}

double accepted_diameter(const GridResult& grid) {
  double d = 0.0;
  for (std::size_t i = 0; i < grid.accepted.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.accepted.size(); ++j) {
      d = std::max(d, linf_distance(grid.accepted[i].point, grid.accepted[j].point));
    }
  }
  return d;
}

Point accepted_centroid(const GridResult& grid) {
  if (grid.accepted.empty()) fail(ErrorKind::InvalidInput, "accepted set is empty");
  const std::size_t n = grid.accepted.front().point.dim();
  std::vector<double> c(n, 0.0);
  for (const GridPoint& g : grid.accepted) {
    for (std::size_t i = 0; i < n; ++i) c[i] += g.point[i];
  }
  for (double& ci : c) ci /= static_cast<double>(grid.accepted.size());
  return Point(std::move(c));
}

OracleAgreement compare_with_solution(const GridResult& grid, const Point& solution) {
  if (grid.accepted.empty()) fail(ErrorKind::InvalidInput, "accepted set is empty");
  OracleAgreement a{};
  a.nearest_accepted = std::numeric_limits<double>::infinity();
  for (const GridPoint& g : grid.accepted) {
    const double d = linf_distance(g.point, solution);
    a.nearest_accepted = std::min(a.nearest_accepted, d);
    a.farthest_accepted = std::max(a.farthest_accepted, d);
  }
  a.diameter = accepted_diameter(grid);
  const double one = grid.cell * (1.0 + kCellSlack);
  a.within_one_cell = a.nearest_accepted <= one;
  a.all_within_two_cells = a.farthest_accepted <= 2.0 * one;
  a.singleton_scale = a.diameter <= 2.0 * one;
  return a;
}

}  // namespace lpvi
