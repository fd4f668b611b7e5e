#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "lpvi/convex_sets.hpp"
#include "lpvi/error.hpp"
#include "lpvi/lp_space.hpp"
#include "lpvi/mappings.hpp"

namespace lpvi {

/// The triple (E, C, B) plus an optional certificate for B. Construction
/// checks dimensions and that Q_C is available for (C, p).
class ProblemSpec {
 public:
  ProblemSpec(SpaceSpec space, ConvexSetSpec set, MappingSpec map,
              std::optional<Certificate> cert = std::nullopt);

  const SpaceSpec& space() const noexcept { return space_; }
  const ConvexSetSpec& set() const noexcept { return set_; }
  const MappingSpec& map() const noexcept { return map_; }
  const std::optional<Certificate>& certificate() const noexcept { return cert_; }
  double p() const noexcept { return space_.p(); }
  std::size_t n() const noexcept { return space_.n(); }

 private:
  SpaceSpec space_;
  ConvexSetSpec set_;
  MappingSpec map_;
  std::optional<Certificate> cert_;
};

/// Open interval (lo, hi).
struct Interval {
  double lo;
  double hi;

  bool contains(double x) const noexcept { return lo < x && x < hi; }
  double midpoint() const noexcept { return 0.5 * (lo + hi); }
};

/// Union of disjoint open intervals in increasing order; empty when no step
/// size is admissible.
using StepRange = std::vector<Interval>;

bool range_contains(const StepRange& range, double lambda) noexcept;

/// Steps for which Q_C(I - lambda B) is a contraction under the uniqueness
/// hypothesis v > u mu^2 + 5 mu:
///   0 < lambda < b  and  lambda mu^2 (b - lambda) < 1,  b = (v - u mu^2 - 5 mu) / mu^2.
/// The second constraint removes the band between the roots of
/// mu^2 lambda^2 - mu^2 b lambda + 1 when they are real.
StepRange paper_step_range(const Certificate& cert);

/// Hilbert-space rule 0 < lambda < 2 (v - u mu^2) / mu^2, empty unless v > u mu^2.
StepRange hilbert_step_range(const Certificate& cert);

/// 1 - lambda mu^2 (b - lambda). Not clipped; values outside [0, 1) flag an
/// inadmissible step.
double contraction_factor_sq(const Certificate& cert, double lambda);

/// 1 - lambda mu^2 (2 (v - u mu^2) / mu^2 - lambda), the Hilbert-rule analogue.
double hilbert_contraction_factor_sq(const Certificate& cert, double lambda);

enum class Certification { PaperCertified, HilbertCertified, Uncertified };

std::string_view to_string(Certification c) noexcept;

struct LambdaSelection {
  double lambda;
  Certification status;
  std::optional<FeasibilityVerdict> feasibility;
  std::optional<double> contraction_factor_sq;  // of the rule that certified lambda
};

/// Picks lambda from the certificate, or classifies a user-supplied one.
/// Auto-selection takes the midpoint of the lowest interval of the uniqueness
/// rule when the certificate is PaperCertified, else (p = 2) the midpoint of
/// the Hilbert interval. Throws Configuration when neither applies and no
/// explicit lambda was given, and refuses Inconsistent certificates outright.
LambdaSelection select_lambda(const ProblemSpec& problem,
                              std::optional<double> user_lambda = std::nullopt);

struct SolveOptions {
  double tol = 1e-10;
  std::size_t max_iter = 1'000'000;
  bool record_iterates = false;
};

struct TraceEntry {
  std::size_t iter;
  double step_norm;  // ||x_iter - x_{iter-1}||_p
  double residual;   // vi_residual(x_iter)
};

enum class SolveStatus { Converged, IterationLimit };

std::string_view to_string(SolveStatus s) noexcept;

struct SolveReport {
  Point final_point;
  std::size_t iterations = 0;
  double final_residual = 0.0;
  double lambda = 0.0;
  std::optional<double> contraction_factor_sq;
  Certification certification = Certification::Uncertified;
  SolveStatus status = SolveStatus::IterationLimit;
  std::vector<TraceEntry> trace;
  std::vector<Point> iterates;  // x_0 .. x_k, only with record_iterates
};

/// Raised when an iterate stops being finite. Carries the trace up to the
/// failure.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& message, std::vector<TraceEntry> trace)
      : Error(ErrorKind::Divergence, message), trace_(std::move(trace)) {}

  const std::vector<TraceEntry>& trace() const noexcept { return trace_; }

 private:
  std::vector<TraceEntry> trace_;
};

/// ||x - Q_C(x - lambda B x)||_p; zero exactly at solutions of VI(C, B).
double vi_residual(const ProblemSpec& problem, const Point& x, double lambda);

/// Picard iteration x_{k+1} = Q_C(x_k - lambda B x_k) from Q_C x0 until
/// ||x_{k+1} - x_k|| <= tol (1 + ||x_k||) or max_iter steps.
/// `selection` only labels the report.
SolveReport picard_solve(const ProblemSpec& problem, double lambda, const Point& x0,
                         const SolveOptions& options = {},
                         const std::optional<LambdaSelection>& selection = std::nullopt);

}  // namespace lpvi
