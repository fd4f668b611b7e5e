#include <cmath>

#include "doctest.h"
#include "lpvi/error.hpp"
#include "lpvi/oracle.hpp"

using namespace lpvi;

namespace {

ConvexSetSpec box2(double lo, double hi) {
  return ConvexSetSpec::box(Point{lo, lo}, Point{hi, hi});
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an lpvi::Error");
  return ErrorKind::InvalidInput;
}

bool has_point(const GridResult& g, const Point& x) {
  for (const auto& a : g.accepted) {
    if (linf_distance(a.point, x) < 1e-12) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("identity map on [1,2]^2: only the corner neighbourhood is accepted") {
  const ProblemSpec problem(SpaceSpec(2, 2.0), box2(1, 2), MappingSpec::identity(2));
  const GridResult g = grid_vi_solve(problem, {{41, 41}});
  CHECK(g.cell == doctest::Approx(0.025));
  CHECK(g.points_in_set == 41 * 41);
  CHECK(has_point(g, Point{1, 1}));
  for (const auto& a : g.accepted) CHECK(linf_distance(a.point, Point{1, 1}) <= g.cell * (1 + 1e-9));

  const SolveReport r = picard_solve(problem, 0.5, Point{2, 2});
  CHECK(compare_with_solution(g, r.final_point).passed());
}

TEST_CASE("B = 0 accepts the whole grid") {
  const ProblemSpec problem(SpaceSpec(2, 2.0), box2(0, 1),
                            MappingSpec::linear(Matrix(2, {0, 0, 0, 0})));
  const GridResult g = grid_vi_solve(problem, {{11, 11}});
  CHECK(g.accepted.size() == 121);
  for (const auto& a : g.accepted) CHECK(a.worst_pairing == 0.0);
}

TEST_CASE("interior zero of B") {
  const ProblemSpec problem(SpaceSpec(2, 2.0), box2(1, 2),
                            MappingSpec::affine(Matrix::identity(2), Point{-1.5, -1.5}));
  const GridResult g = grid_vi_solve(problem, {{41, 41}});
  CHECK(has_point(g, Point{1.5, 1.5}));
  for (const auto& a : g.accepted) {
    CHECK(linf_distance(a.point, Point{1.5, 1.5}) <= g.cell * (1 + 1e-9));
  }
}

TEST_CASE("oracle agrees with the solver in l_3 too") {
  const auto b = MappingSpec::residual_of_contraction(
      MappingSpec::affine(Matrix(2, {0.5, 0, 0, 0.25}), Point{-1, 0.2}), 0.5);
  const ProblemSpec problem(SpaceSpec(2, 3.0), box2(0, 1), b);
  const GridResult g = grid_vi_solve(problem, {{41, 41}});
  const SolveReport r = picard_solve(problem, 0.8, Point{0.5, 0.5}, {.tol = 1e-12});
  REQUIRE(r.status == SolveStatus::Converged);
  const OracleAgreement a = compare_with_solution(g, r.final_point);
  CHECK(a.within_one_cell);
  // The l_3 pairing is flatter than the Euclidean one, so the accepted band is
  // wider than the two-cell singleton scale seen at p = 2.
  CHECK(a.farthest_accepted <= 4 * g.cell);
}

TEST_CASE("ball domain at p = 2") {
  // B x = x - (2, 0): the solution on the unit disc is (1, 0).
  const ProblemSpec problem(SpaceSpec(2, 2.0), ConvexSetSpec::ball(1.0),
                            MappingSpec::affine(Matrix::identity(2), Point{-2, 0}));
  const GridResult g = grid_vi_solve(problem, {{41, 41}});
  CHECK(g.points_in_set < 41 * 41);
  CHECK(has_point(g, Point{1, 0}));
  const SolveReport r = picard_solve(problem, 0.5, Point{0, 0}, {.tol = 1e-12});
  CHECK(compare_with_solution(g, r.final_point).within_one_cell);
}

TEST_CASE("refining the grid keeps the accepted centroid in place") {
  const auto b = MappingSpec::affine(Matrix(2, {2, 1, -1, 2}), Point{-3, -2});
  const ProblemSpec problem(SpaceSpec(2, 2.0), box2(0, 1), b);
  const GridResult coarse = grid_vi_solve(problem, {{21, 21}});
  const GridResult fine = grid_vi_solve(problem, {{41, 41}});
  REQUIRE_FALSE(coarse.accepted.empty());
  REQUIRE_FALSE(fine.accepted.empty());
  CHECK(linf_distance(accepted_centroid(coarse), accepted_centroid(fine)) <= 2 * coarse.cell);
}

TEST_CASE("three-dimensional grid") {
  const ProblemSpec problem(SpaceSpec(3, 2.0),
                            ConvexSetSpec::box(Point{1, -1, 0}, Point{2, 1, 1}),
                            MappingSpec::identity(3));
  const GridResult g = grid_vi_solve(problem, {{11, 11, 11}});
  CHECK(has_point(g, Point{1, 0, 0}));
  CHECK(accepted_diameter(g) <= 2 * g.cell * (1 + 1e-9));
}

TEST_CASE("oracle preconditions") {
  const ProblemSpec unbounded(SpaceSpec(2, 2.0), ConvexSetSpec::whole_space(),
                              MappingSpec::identity(2));
  CHECK(kind_of([&] { grid_vi_solve(unbounded, {{5, 5}}); }) == ErrorKind::UnsupportedOracle);
  const ProblemSpec half(SpaceSpec(2, 2.0), ConvexSetSpec::halfspace(Point{1, 0}, 0),
                         MappingSpec::identity(2));
  CHECK(kind_of([&] { grid_vi_solve(half, {{5, 5}}); }) == ErrorKind::UnsupportedOracle);

  const ProblemSpec four(SpaceSpec(4, 2.0),
                         ConvexSetSpec::box(Point{0, 0, 0, 0}, Point{1, 1, 1, 1}),
                         MappingSpec::identity(4));
  CHECK(kind_of([&] { grid_vi_solve(four, {{3, 3, 3, 3}}); }) == ErrorKind::UnsupportedOracle);

  const ProblemSpec ok(SpaceSpec(2, 2.0), box2(0, 1), MappingSpec::identity(2));
  CHECK(kind_of([&] { grid_vi_solve(ok, {{1001, 1001}}); }) == ErrorKind::Resource);
  CHECK(kind_of([&] { grid_vi_solve(ok, {{1, 5}}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([&] { grid_vi_solve(ok, {{5}}); }) == ErrorKind::Shape);
}
