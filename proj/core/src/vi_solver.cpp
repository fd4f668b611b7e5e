#include "lpvi/vi_solver.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace lpvi {
namespace {

/// G(x) = Q_C(x - lambda B x). Non-finite intermediate values surface as
/// std::nullopt so the caller can attach its trace.
std::optional<Point> fixed_point_map(const ProblemSpec& problem, const Point& x, double lambda) {
  std::vector<double> y = eval_raw(problem.map(), x);
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = x[i] - lambda * y[i];
    if (!std::isfinite(y[i])) return std::nullopt;
  }
  return retract(problem.set(), Point(std::move(y)), problem.p());
}

void check_lambda(double lambda) {
  if (!(std::isfinite(lambda) && lambda > 0.0)) {
    fail(ErrorKind::Configuration, "step size lambda must be positive and finite");
  }
}

double uniqueness_bound(const Certificate& c) {
  const double mu_sq = c.mu() * c.mu();
  return (c.v() - c.u() * mu_sq - 5.0 * c.mu()) / mu_sq;
}

double hilbert_bound(const Certificate& c) {
  const double mu_sq = c.mu() * c.mu();
  return 2.0 * (c.v() - c.u() * mu_sq) / mu_sq;
}

}  // namespace

ProblemSpec::ProblemSpec(SpaceSpec space, ConvexSetSpec set, MappingSpec map,
                         std::optional<Certificate> cert)
    : space_(space), set_(std::move(set)), map_(std::move(map)), cert_(cert) {
  if (auto d = set_.dim()) check_same_dim(*d, space_.n(), "problem set");
  check_same_dim(map_.dim(), space_.n(), "problem map");
  require_retraction(set_, space_.p());
}

bool range_contains(const StepRange& range, double lambda) noexcept {
  for (const Interval& i : range) {
    if (i.contains(lambda)) return true;
  }
  return false;
}

StepRange paper_step_range(const Certificate& cert) {
  const double b = uniqueness_bound(cert);
  if (!(b > 0.0)) return {};
  const double mu_sq = cert.mu() * cert.mu();
  // Roots of mu^2 l^2 - mu^2 b l + 1; their product is 1 / mu^2.
  const double disc = b * b - 4.0 / mu_sq;
  if (disc < 0.0) return {Interval{0.0, b}};
  const double upper = 0.5 * (b + std::sqrt(disc));
  const double lower = 1.0 / (mu_sq * upper);
  StepRange r;
  if (lower > 0.0) r.push_back({0.0, lower});
  if (upper < b) r.push_back({upper, b});
  return r;
}

StepRange hilbert_step_range(const Certificate& cert) {
  const double bound = hilbert_bound(cert);
  if (!(bound > 0.0)) return {};
  return {Interval{0.0, bound}};
}

double contraction_factor_sq(const Certificate& cert, double lambda) {
  return 1.0 - lambda * cert.mu() * cert.mu() * (uniqueness_bound(cert) - lambda);
}

double hilbert_contraction_factor_sq(const Certificate& cert, double lambda) {
  return 1.0 - lambda * cert.mu() * cert.mu() * (hilbert_bound(cert) - lambda);
}

std::string_view to_string(Certification c) noexcept {
  switch (c) {
    case Certification::PaperCertified: return "PaperCertified";
    case Certification::HilbertCertified: return "HilbertCertified";
    case Certification::Uncertified: return "Uncertified";
  }
  return "unknown";
}

std::string_view to_string(SolveStatus s) noexcept {
  return s == SolveStatus::Converged ? "converged" : "iteration_limit";
}

LambdaSelection select_lambda(const ProblemSpec& problem, std::optional<double> user_lambda) {
  if (user_lambda) check_lambda(*user_lambda);
  const auto& cert = problem.certificate();
  if (!cert) {
    if (!user_lambda) {
      fail(ErrorKind::Configuration,
           "no certificate (u, v, mu) given: an explicit lambda is required");
    }
    return {*user_lambda, Certification::Uncertified, std::nullopt, std::nullopt};
  }

  const FeasibilityVerdict feas = certificate_feasibility(*cert);
  const StepRange paper = paper_step_range(*cert);
  const StepRange hilbert = problem.space().is_hilbert() ? hilbert_step_range(*cert) : StepRange{};
  const bool paper_ok = feas.verdict == Verdict::PaperCertified && !paper.empty();
  const bool hilbert_ok = feas.verdict != Verdict::Inconsistent && !hilbert.empty();

  if (user_lambda) {
    const double l = *user_lambda;
    if (paper_ok && range_contains(paper, l)) {
      return {l, Certification::PaperCertified, feas, contraction_factor_sq(*cert, l)};
    }
    if (hilbert_ok && range_contains(hilbert, l)) {
      return {l, Certification::HilbertCertified, feas, hilbert_contraction_factor_sq(*cert, l)};
    }
    return {l, Certification::Uncertified, feas, std::nullopt};
  }

  if (feas.verdict == Verdict::Inconsistent) {
    std::ostringstream msg;
    msg << "certificate (u=" << cert->u() << ", v=" << cert->v() << ", mu=" << cert->mu()
        << ") is Inconsistent: v > mu + u mu^2, so no mu-Lipschitz map satisfies it; "
        << "refusing to auto-select lambda, pass an explicit lambda";
    fail(ErrorKind::Configuration, msg.str());
  }
  if (paper_ok) {
    const double l = paper.front().midpoint();
    return {l, Certification::PaperCertified, feas, contraction_factor_sq(*cert, l)};
  }
  if (hilbert_ok) {
    const double l = hilbert.front().midpoint();
    return {l, Certification::HilbertCertified, feas, hilbert_contraction_factor_sq(*cert, l)};
  }
  fail(ErrorKind::Configuration,
       std::string("no admissible step rule for certificate with verdict ") +
           std::string(to_string(feas.verdict)) +
           (problem.space().is_hilbert() ? "" : " at p != 2") + "; pass an explicit lambda");
}

double vi_residual(const ProblemSpec& problem, const Point& x, double lambda) {
  check_lambda(lambda);
  check_same_dim(problem.n(), x.dim(), "vi_residual");
  auto g = fixed_point_map(problem, x, lambda);
  if (!g) fail(ErrorKind::Divergence, "x - lambda B x is not finite");
  return p_norm(x - *g, problem.p());
}

SolveReport picard_solve(const ProblemSpec& problem, double lambda, const Point& x0,
                         const SolveOptions& options,
                         const std::optional<LambdaSelection>& selection) {
  check_lambda(lambda);
  check_same_dim(problem.n(), x0.dim(), "initial point");
  if (!(options.tol > 0.0)) fail(ErrorKind::Configuration, "tolerance must be positive");
  if (options.max_iter == 0) fail(ErrorKind::Configuration, "max_iter must be positive");

  const double p = problem.p();
  SolveReport report{.final_point = retract(problem.set(), x0, p),
                     .iterations = 0,
                     .final_residual = 0.0,
                     .lambda = lambda,
                     .contraction_factor_sq = std::nullopt,
                     .certification = Certification::Uncertified,
                     .status = SolveStatus::IterationLimit,
                     .trace = {},
                     .iterates = {}};
  if (selection) {
    report.certification = selection->status;
    report.contraction_factor_sq = selection->contraction_factor_sq;
  }
  if (options.record_iterates) report.iterates.push_back(report.final_point);

  auto diverged = [&](std::size_t iter) -> DivergenceError {
    return DivergenceError("iterate " + std::to_string(iter) + " is not finite (lambda = " +
                               std::to_string(lambda) + ")",
                           report.trace);
  };

  // `next` is always G(x); its distance to x is both the coming step and the
  // residual of x, so each iteration costs one evaluation of B.
  Point x = report.final_point;
  auto next = fixed_point_map(problem, x, lambda);
  if (!next) throw diverged(1);
  for (std::size_t k = 1; k <= options.max_iter; ++k) {
    Point x_new = std::move(*next);
    next = fixed_point_map(problem, x_new, lambda);
    if (!next) throw diverged(k + 1);
    const double step = p_norm(x_new - x, p);
    const double residual = p_norm(x_new - *next, p);
    report.trace.push_back({k, step, residual});
    if (options.record_iterates) report.iterates.push_back(x_new);
    const double scale = 1.0 + p_norm(x, p);
    x = std::move(x_new);
    report.iterations = k;
    if (step <= options.tol * scale) {
      report.status = SolveStatus::Converged;
      break;
    }
  }
  report.final_residual = report.trace.empty() ? 0.0 : report.trace.back().residual;
  report.final_point = std::move(x);
  return report;
}

}  // namespace lpvi
