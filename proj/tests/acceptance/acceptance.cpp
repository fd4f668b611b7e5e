// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances and runtime limits are fixed here.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lpvi/oracle.hpp"
#include "lpvi/sampling.hpp"
#include "lpvi/verification.hpp"
#include "lpvi/vi_solver.hpp"

using namespace lpvi;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // <= 0 means no limit
  std::function<Outcome()> run;
};

std::string num(double x) {
  std::ostringstream s;
  s << std::setprecision(6) << x;
  return s.str();
}

constexpr std::uint64_t kSeed = 20241;

// 1. duality identities
Outcome duality_identities() {
  std::size_t checked = 0, failures = 0;
  double worst = 1e-9;
  for (double p : {1.5, 2.0, 3.0, 4.0}) {
    for (std::size_t n : {2, 10, 50}) {
      const SweepResult r = sweep_duality(p, n, 1000, kSeed + n);
      checked += r.checked;
      failures += r.violations.size();
      worst = std::min(worst, r.worst_margin);
    }
  }
  return {failures == 0, std::to_string(checked) + " identity checks, worst normalized margin " +
                             num(worst)};
}

// 2. J = identity at p = 2, absolute 1e-12 componentwise
Outcome hilbert_degeneration() {
  double worst = 0.0;
  std::size_t vectors = 0;
  for (std::size_t n : {2, 10, 50}) {
    for (std::size_t i = 0; i < 1000; ++i) {
      Rng rng = indexed_rng(kSeed + n, i);
      const Point x = random_scaled_vector(n, rng);
      const DualVector j = duality_map(x, 2.0);
      for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(j[k] - x[k]));
      ++vectors;
    }
  }
  return {worst <= 1e-12, std::to_string(vectors) + " vectors, max |Jx - x|_inf = " + num(worst)};
}

// 3. box retraction: sunny, nonexpansive, characterization
Outcome box_retraction() {
  BoxRetractionSweepOptions opt;
  opt.n = 3;
  opt.instances = 20;
  opt.nonexpansive_pairs = 10'000;
  opt.characterization_samples = 500;
  std::size_t checked = 0, failures = 0;
  for (double p : {1.5, 2.0, 3.0}) {
    const SweepResult r = sweep_box_retraction(p, opt, kSeed);
    checked += r.checked;
    failures += r.violations.size();
    for (const auto& v : r.violations) std::cerr << "  p=" << p << ' ' << v.detail << '\n';
  }
  return {failures == 0, std::to_string(checked) + " checks (sunny t in {0,0.5,1,2} exact, " +
                             "1e4 nonexpansive pairs and 20x500-sample characterizations per p)"};
}

// 4. pairing inequality
Outcome pairing_inequality() {
  std::size_t checked = 0, failures = 0;
  double worst = 1e-9;
  for (double p : {1.5, 3.0, 4.0}) {
    for (std::size_t n : {2, 5, 20}) {
      const SweepResult r = sweep_pairing_inequality(p, n, 10'000, kSeed + n);
      checked += r.checked;
      failures += r.violations.size();
      worst = std::min(worst, r.worst_margin);
      for (const auto& v : r.violations) {
        std::cerr << "  p=" << p << " n=" << n << " seed=" << v.seed << " index=" << v.index
                  << ": " << v.detail << '\n';
      }
    }
  }
  return {failures == 0, std::to_string(checked) + " pairs, " + std::to_string(failures) +
                             " violations, worst normalized slack " + num(worst)};
}

// 5. remark arithmetic
Outcome remark() {
  const double f = reproduce_remark();
  std::ostringstream s;
  s << std::setprecision(17) << "factor = " << f << " (bit-equal to -0.97: "
    << (f == -0.97 ? "yes" : "no") << ')';
  return {f == -0.97 && f < 0.0, s.str()};
}

struct Instance {
  std::string name;
  ProblemSpec problem;
};

std::vector<Instance> oracle_instances() {
  const SpaceSpec e(2, 2.0);
  auto box = [](double x0, double y0) {
    return ConvexSetSpec::box(Point{x0, y0}, Point{x0 + 1, y0 + 1});
  };
  const Matrix rot(2, {2, 1, -1, 2});  // <Md, d> = 2 |d|^2, |M| = sqrt 5
  const Point c{1.25, 1.6};
  const std::vector<double> mc = rot.apply(c.coords());
  std::vector<Instance> out;
  out.push_back({"identity on [1,2]^2", ProblemSpec(e, box(1, 1), MappingSpec::identity(2),
                                                    Certificate(0.1, 1.0, 1.0))});
  out.push_back({"I - 0.25 I on [1,2]^2",
                 ProblemSpec(e, box(1, 1),
                             MappingSpec::residual_of_contraction(MappingSpec::scaled_identity(2, 0.25), 0.25),
                             Certificate(0.1, 0.75, 0.75))});
  out.push_back({"I - 0.5 I on [0.5,1.5]x[1,2]",
                 ProblemSpec(e, box(0.5, 1),
                             MappingSpec::residual_of_contraction(MappingSpec::scaled_identity(2, 0.5), 0.5),
                             Certificate(0.1, 0.5, 0.5))});
  out.push_back({"x - (1.5,1.5) on [1,2]^2",
                 ProblemSpec(e, box(1, 1), MappingSpec::affine(Matrix::identity(2), Point{-1.5, -1.5}),
                             Certificate(0.1, 1.0, 1.0))});
  out.push_back({"M (x - (1.25,1.6)) on [1,2]^2",
                 ProblemSpec(e, box(1, 1), MappingSpec::affine(rot, Point{-mc[0], -mc[1]}),
                             Certificate(0.1, 2.0, std::sqrt(5.0)))});
  return out;
}

Point seeded_start(const ProblemSpec& problem, std::uint64_t index) {
  const Box& b = std::get<Box>(problem.set().variant());
  Rng rng = indexed_rng(kSeed, index);
  // start outside C as well as inside
  const Point lo = b.lo - Point{1, 1}, hi = b.hi + Point{1, 1};
  return uniform_in_box(lo, hi, rng);
}

// 6. solver vs brute-force oracle
Outcome solver_oracle_agreement() {
  std::ostringstream detail;
  bool ok = true;
  std::size_t idx = 0;
  for (const Instance& inst : oracle_instances()) {
    const GridResult g = grid_vi_solve(inst.problem, {{41, 41}});
    const LambdaSelection sel = select_lambda(inst.problem);
    const SolveReport r = picard_solve(inst.problem, sel.lambda, seeded_start(inst.problem, idx++),
                                       {}, sel);
    const OracleAgreement a = compare_with_solution(g, r.final_point);
    const bool pass = r.status == SolveStatus::Converged && a.within_one_cell &&
                      a.nearest_accepted <= 0.025 * (1 + 1e-9) && a.singleton_scale &&
                      a.all_within_two_cells;
    ok &= pass;
    if (!pass) {
      std::cerr << "  " << inst.name << ": nearest " << a.nearest_accepted << " diameter "
                << a.diameter << " farthest " << a.farthest_accepted << '\n';
    }
    detail << (idx > 1 ? "; " : "") << inst.name << ": d=" << num(a.nearest_accepted)
           << " diam=" << num(a.diameter / g.cell) << " cells";
  }
  return {ok, detail.str()};
}

// 7. uniqueness and geometric rate
Outcome uniqueness_and_rate() {
  const double tol = 1e-10;
  std::ostringstream detail;
  bool ok = true;
  std::size_t certified = 0;
  std::uint64_t idx = 100;
  for (const Instance& inst : oracle_instances()) {
    const LambdaSelection sel = select_lambda(inst.problem);
    if (sel.status != Certification::HilbertCertified) continue;
    ++certified;
    const double q = std::sqrt(std::clamp(*sel.contraction_factor_sq, 0.0, 1.0));
    const SolveReport a = picard_solve(inst.problem, sel.lambda, seeded_start(inst.problem, idx++),
                                       {.tol = tol}, sel);
    const SolveReport b = picard_solve(inst.problem, sel.lambda, seeded_start(inst.problem, idx++),
                                       {.tol = tol}, sel);
    const double gap = p_norm(a.final_point - b.final_point, 2.0);
    double worst_ratio = 0.0;
    // Late trace: the second half of the steps, skipping exact zeros.
    for (std::size_t k = std::max<std::size_t>(1, a.trace.size() / 2); k < a.trace.size(); ++k) {
      if (a.trace[k - 1].step_norm <= 0.0) continue;
      worst_ratio = std::max(worst_ratio, a.trace[k].step_norm / a.trace[k - 1].step_norm);
    }
    const bool pass = a.status == SolveStatus::Converged && b.status == SolveStatus::Converged &&
                      gap <= 10 * tol && worst_ratio <= q + 0.05;
    ok &= pass;
    detail << (certified > 1 ? "; " : "") << inst.name << ": gap=" << num(gap)
           << " ratio=" << num(worst_ratio) << " q=" << num(q);
  }
  return {ok && certified > 0, std::to_string(certified) + " HilbertCertified instances; " + detail.str()};
}

// 8. feasibility analyzer and the vacuity scan
Outcome feasibility() {
  const bool a = certificate_feasibility(Certificate(1, 10, 1)).verdict == Verdict::Inconsistent;
  const bool b = certificate_feasibility(Certificate(0.1, 0.5, 0.5)).verdict == Verdict::HilbertOnly;
  std::size_t uniqueness = 0, both = 0;
  std::uniform_real_distribution<double> log10(-3.0, 3.0);
  for (std::size_t i = 0; i < 10'000; ++i) {
    Rng rng = indexed_rng(kSeed, i);
    const Certificate c(std::pow(10.0, log10(rng)), std::pow(10.0, log10(rng)),
                        std::pow(10.0, log10(rng)));
    const FeasibilityVerdict f = certificate_feasibility(c);
    uniqueness += f.uniqueness_condition_holds;
    both += f.uniqueness_condition_holds && f.consistency_bound_ok;
  }
  return {a && b && both == 0,
          "(1,10,1) Inconsistent: " + std::string(a ? "yes" : "no") +
              ", (0.1,0.5,0.5) HilbertOnly: " + (b ? "yes" : "no") + ", 10000 certificates: " +
              std::to_string(uniqueness) + " satisfy v > u mu^2 + 5 mu, " + std::to_string(both) +
              " of them consistent"};
}

// 9. step-range endpoints
Outcome step_range() {
  const StepRange r = paper_step_range(Certificate(1, 10, 1));
  if (r.size() != 2) return {false, "expected two intervals, got " + std::to_string(r.size())};
  const double s3 = std::sqrt(3.0);
  const double err = std::max({std::abs(r[0].lo - 0.0), std::abs(r[0].hi - (2 - s3)),
                               std::abs(r[1].lo - (2 + s3)), std::abs(r[1].hi - 4.0)});
  return {err <= 1e-12, "(0, " + num(r[0].hi) + ") U (" + num(r[1].lo) + ", " + num(r[1].hi) +
                            "), max endpoint error " + num(err)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "duality identities", 1.0, duality_identities},
      {2, "Hilbert degeneration of J", 0.0, hilbert_degeneration},
      {3, "box retraction suite", 5.0, box_retraction},
      {4, "pairing inequality", 10.0, pairing_inequality},
      {5, "remark reproduction", 0.0, remark},
      {6, "solver-oracle agreement", 10.0, solver_oracle_agreement},
      {7, "uniqueness and geometric rate", 5.0, uniqueness_and_rate},
      {8, "feasibility analyzer", 0.0, feasibility},
      {9, "step-range arithmetic", 0.0, step_range},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.passed;
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      pass = false;
      o.detail += " [runtime limit " + num(c.time_limit_s) + " s exceeded]";
    }
    failed += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << num(secs)
              << " s): " << o.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
