#include "lpvi_cli/commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "lpvi/oracle.hpp"
#include "lpvi/verification.hpp"
#include "lpvi_cli/config.hpp"

namespace lpvi::cli {
namespace {

using nlohmann::ordered_json;

std::string fmt17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string point_text(const Point& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (i) s += ", ";
    s += fmt17(x[i]);
  }
  return s + ")";
}

ordered_json point_json(const Point& x) {
  return ordered_json(std::vector<double>(x.coords().begin(), x.coords().end()));
}

void write_trace(const std::string& path, const std::vector<TraceEntry>& trace) {
  std::ofstream csv(path);
  if (!csv) throw Error(ErrorKind::Configuration, "cannot write trace file " + path);
  csv << "iter,step_norm,residual\n";
  for (const TraceEntry& t : trace) {
    csv << t.iter << ',' << fmt17(t.step_norm) << ',' << fmt17(t.residual) << '\n';
  }
}

std::ofstream open_output(const std::string& path, const char* what) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::Configuration, std::string("cannot write ") + what + " " + path);
  return f;
}

double parse_lambda(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(v > 0.0)) {
    throw Error(ErrorKind::Configuration, "--lambda: expected a positive number or 'auto', got '" + text + "'");
  }
  return v;
}

/// Runs `body` and maps library errors onto exit codes.
template <class F>
int run_guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

void print_sweep(std::ostream& out, const SweepResult& r, const std::string& label) {
  out << (r.passed() ? "PASS " : "FAIL ") << r.name << ' ' << label << " checked=" << r.checked
      << " worst_margin=" << fmt17(r.worst_margin) << '\n';
  for (const SweepViolation& v : r.violations) {
    out << "  violation seed=" << v.seed << " index=" << v.index << ": " << v.detail << '\n';
  }
}

}  // namespace

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::UnsupportedSpace:
    case ErrorKind::UnsupportedRetraction:
    case ErrorKind::UnsupportedOracle:
      return kUnsupported;
    case ErrorKind::Divergence:
    case ErrorKind::Evaluation:
      return kDivergence;
    case ErrorKind::InvalidInput:
    case ErrorKind::Shape:
    case ErrorKind::Configuration:
    case ErrorKind::Estimation:
    case ErrorKind::Resource:
      return kConfigError;
  }
  return kConfigError;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LPVI_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 1;
}

std::vector<std::size_t> parse_grid(const std::string& text) {
  std::vector<std::size_t> counts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, text.find('x') != std::string::npos ? 'x' : ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != token.size()) {
      throw Error(ErrorKind::Configuration, "--grid: expected counts like 41x41, got '" + text + "'");
    }
    counts.push_back(v);
  }
  if (counts.empty()) throw Error(ErrorKind::Configuration, "--grid: no counts given");
  return counts;
}

int cmd_solve(const SolveCommandOptions& opts, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    ProblemConfig cfg = load_config(opts.config);
    if (opts.tol) cfg.solver.tol = *opts.tol;
    if (opts.max_iter) cfg.solver.max_iter = *opts.max_iter;
    if (opts.lambda) {
      cfg.solver.lambda = *opts.lambda == "auto" ? std::nullopt
                                                 : std::optional<double>(parse_lambda(*opts.lambda));
    }
    const ProblemSpec& problem = cfg.problem;
    const LambdaSelection sel = select_lambda(problem, cfg.solver.lambda);
    const Point x0 = cfg.solver.x0.value_or(Point::zeros(problem.n()));

    SolveReport report = [&] {
      try {
        return picard_solve(problem, sel.lambda, x0,
                            {.tol = cfg.solver.tol, .max_iter = cfg.solver.max_iter}, sel);
      } catch (const DivergenceError& e) {
        if (!opts.out.empty()) write_trace(opts.out, e.trace());
        throw;
      }
    }();
    if (!opts.out.empty()) write_trace(opts.out, report.trace);

    ordered_json summary;
    summary["status"] = std::string(to_string(report.status));
    summary["final_point"] = point_json(report.final_point);
    summary["lambda"] = report.lambda;
    summary["certification"] = std::string(to_string(report.certification));
    if (sel.feasibility) summary["certificate_verdict"] = std::string(to_string(sel.feasibility->verdict));
    summary["contraction_factor_sq"] =
        report.contraction_factor_sq ? ordered_json(*report.contraction_factor_sq) : ordered_json(nullptr);
    summary["iterations"] = report.iterations;
    summary["final_residual"] = report.final_residual;
    if (opts.summary.empty()) {
      out << summary.dump(2) << '\n';
    } else {
      open_output(opts.summary, "summary file") << summary.dump(2) << '\n';
    }
    if (report.status != SolveStatus::Converged) {
      err << "iteration limit reached after " << report.iterations << " iterations (residual "
          << fmt17(report.final_residual) << ")\n";
      return static_cast<int>(kIterationLimit);
    }
    return static_cast<int>(kOk);
  });
}

int cmd_check_map(const CheckMapOptions& opts, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    const ProblemConfig cfg = load_config(opts.config);
    const ProblemSpec& problem = cfg.problem;
    const double p = problem.p();
    const std::size_t samples = opts.samples.value_or(cfg.check.samples);
    const SampleRegion region{problem.set(), cfg.check.bounds};
    if (!problem.set().bounded() && !region.bounds) {
      throw Error(ErrorKind::Configuration,
                  "check.bounds is required to sample the unbounded set '" +
                      std::string(problem.set().name()) + "'");
    }
    bool violated = false;

    const LipschitzEstimate lip = estimate_lipschitz(problem.map(), region, p, samples, opts.seed);
    out << "lipschitz_estimate: " << fmt17(lip.mu_hat) << " (lower bound; " << lip.evaluated
        << " pairs, " << lip.degenerate << " degenerate skipped)\n";

    if (const auto* rc = std::get_if<ResidualOfContraction>(&problem.map().variant())) {
      const double inner = estimate_lipschitz(*rc->inner, region, p, samples, opts.seed).mu_hat;
      const bool ok = inner <= rc->alpha * (1 + 1e-9) + 1e-12;
      out << "inner_contraction: estimate " << fmt17(inner) << " vs declared alpha "
          << fmt17(rc->alpha) << (ok ? " - no violation found\n" : " - VIOLATED\n");
      violated |= !ok;
    }

    const auto& cert = problem.certificate();
    if (!cert) {
      out << "certificate: none (estimates only)\n";
      return static_cast<int>(kOk);
    }

    const bool lip_ok = lip.mu_hat <= cert->mu() * (1 + 1e-9);
    out << "lipschitz_claim: mu = " << fmt17(cert->mu())
        << (lip_ok ? " - no violation found\n" : " - VIOLATED by sampled ratio\n");
    violated |= !lip_ok;

    const SlackReport coc =
        check_relaxed_cocoercive(problem.map(), region, cert->u(), cert->v(), p, samples, opts.seed);
    out << "relaxed_cocoercive(u=" << fmt17(cert->u()) << ", v=" << fmt17(cert->v())
        << "): worst_slack " << fmt17(coc.worst_slack);
    if (coc.violation_found) {
      out << " - VIOLATED at x = " << point_text(coc.witness->x)
          << ", y = " << point_text(coc.witness->y) << '\n';
    } else {
      out << " - no violation found\n";
    }
    violated |= coc.violation_found;

    const SlackReport mono = check_strongly_monotone(problem.map(), region, cert->v(), p, samples, opts.seed);
    out << "strongly_monotone(v=" << fmt17(cert->v()) << "): worst_slack "
        << fmt17(mono.worst_slack)
        << (mono.violation_found ? " - not v-strongly monotone (informational)\n"
                                 : " - no violation found\n");

    const FeasibilityVerdict f = certificate_feasibility(*cert);
    out << "uniqueness_condition (v > u mu^2 + 5 mu): "
        << (f.uniqueness_condition_holds ? "holds" : "fails") << '\n';
    out << "consistency_bound (v <= mu + u mu^2): " << (f.consistency_bound_ok ? "ok" : "violated")
        << '\n';
    out << "verdict: " << to_string(f.verdict) << '\n';
    if (f.verdict == Verdict::Inconsistent) {
      err << "certificate is Inconsistent: no mu-Lipschitz map on a set with two points satisfies it\n";
      violated = true;
    }
    if (violated) err << "violation found (seed " << opts.seed << ")\n";
    return static_cast<int>(violated ? kViolation : kOk);
  });
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    auto exponents = [&](std::vector<double> defaults) {
      if (opts.p) {
        check_exponent(*opts.p);
        return std::vector<double>{*opts.p};
      }
      return defaults;
    };
    bool ok = true;
    if (opts.suite == "remark") {
      const double f = reproduce_remark();
      ok = f == -0.97;
      out << (ok ? "PASS" : "FAIL") << " remark factor(r=1, gamma=1, s=1, mu=1/10) = " << fmt17(f)
          << " (expected -0.97, negative)\n";
    } else if (opts.suite == "duality") {
      for (double p : exponents({1.5, 2.0, 3.0, 4.0})) {
        for (std::size_t n : {2, 10, 50}) {
          const SweepResult r = sweep_duality(p, n, opts.count.value_or(1000), opts.seed);
          print_sweep(out, r, "p=" + fmt17(p) + " n=" + std::to_string(n));
          ok &= r.passed();
        }
      }
    } else if (opts.suite == "pairing") {
      for (double p : exponents({1.5, 3.0, 4.0})) {
        for (std::size_t n : {2, 5, 20}) {
          const SweepResult r = sweep_pairing_inequality(p, n, opts.count.value_or(10'000), opts.seed);
          print_sweep(out, r, "p=" + fmt17(p) + " n=" + std::to_string(n));
          ok &= r.passed();
        }
      }
    } else if (opts.suite == "retraction") {
      BoxRetractionSweepOptions sweep;
      if (opts.count) sweep.nonexpansive_pairs = *opts.count;
      for (double p : exponents({1.5, 2.0, 3.0})) {
        const SweepResult r = sweep_box_retraction(p, sweep, opts.seed);
        print_sweep(out, r, "p=" + fmt17(p) + " n=" + std::to_string(sweep.n));
        ok &= r.passed();
      }
    } else {
      throw Error(ErrorKind::Configuration,
                  "unknown verify suite '" + opts.suite + "' (duality, retraction, pairing, remark)");
    }
    if (!ok) err << "verification failed; reproduce with --seed " << opts.seed << '\n';
    return static_cast<int>(ok ? kOk : kViolation);
  });
}

int cmd_oracle(const OracleOptions& opts, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&] {
    const ProblemConfig cfg = load_config(opts.config);
    const ProblemSpec& problem = cfg.problem;
    GridSpec grid;
    grid.counts = opts.grid.empty() ? std::vector<std::size_t>(problem.n(), 41) : opts.grid;
    const GridResult g = grid_vi_solve(problem, grid);

    std::ofstream file;
    if (!opts.out.empty()) file = open_output(opts.out, "accepted-set file");
    std::ostream& listing = opts.out.empty() ? out : file;
    listing << "# accepted " << g.accepted.size() << " of " << g.points_in_set
            << " grid points in C, cell " << fmt17(g.cell) << '\n';
    for (std::size_t i = 0; i < problem.n(); ++i) listing << 'x' << i << ',';
    listing << "worst_pairing\n";
    for (const GridPoint& a : g.accepted) {
      for (double c : a.point.coords()) listing << fmt17(c) << ',';
      listing << fmt17(a.worst_pairing) << '\n';
    }
    if (g.accepted.empty()) {
      err << "oracle accepted no grid point\n";
      return static_cast<int>(kViolation);
    }
    const double diameter = accepted_diameter(g);
    if (diameter > 2.0 * g.cell * (1 + 1e-9)) {
      out << "notice: accepted set spans " << fmt17(diameter / g.cell)
          << " cells, so the solution is not unique at grid scale; agreement check skipped\n";
      return static_cast<int>(kOk);
    }

    const std::optional<double> lambda = opts.lambda ? opts.lambda : cfg.solver.lambda;
    const LambdaSelection sel = select_lambda(problem, lambda);
    const SolveReport r = picard_solve(
        problem, sel.lambda, cfg.solver.x0.value_or(Point::zeros(problem.n())),
        {.tol = cfg.solver.tol, .max_iter = cfg.solver.max_iter}, sel);
    const OracleAgreement a = compare_with_solution(g, r.final_point);
    out << "solver: " << point_text(r.final_point) << " (" << to_string(r.status) << ", "
        << r.iterations << " iterations, " << to_string(r.certification) << ")\n";
    out << "agreement: " << (a.passed() ? "PASS" : "FAIL")
        << " nearest=" << fmt17(a.nearest_accepted / g.cell) << " cells"
        << " farthest=" << fmt17(a.farthest_accepted / g.cell) << " cells"
        << " diameter=" << fmt17(a.diameter / g.cell) << " cells\n";
    return static_cast<int>(a.passed() ? kOk : kViolation);
  });
}

}  // namespace lpvi::cli
