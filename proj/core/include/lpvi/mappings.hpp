#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lpvi/convex_sets.hpp"
#include "lpvi/lp_space.hpp"

namespace lpvi {

/// Dense row-major square matrix.
class Matrix {
 public:
  Matrix(std::size_t n, std::vector<double> row_major);
  static Matrix identity(std::size_t n, double scale = 1.0);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * n_ + c]; }
  std::vector<double> apply(std::span<const double> x) const;

 private:
  std::size_t n_;
  std::vector<double> data_;
};

class MappingSpec;

/// B x = M x + q
struct Affine {
  Matrix matrix;
  Point shift;
};

/// B = I - T for a (declared) alpha-contraction T.
struct ResidualOfContraction {
  std::shared_ptr<const MappingSpec> inner;
  double alpha;
};

/// Arbitrary evaluator. Must be reentrant; the checkers may call it from
/// several threads.
struct BlackBox {
  std::size_t dim;
  std::function<Point(const Point&)> evaluate;
};

/// A nonlinear map B : C -> E.
class MappingSpec {
 public:
  using Variant = std::variant<Affine, ResidualOfContraction, BlackBox>;

  static MappingSpec affine(Matrix matrix, Point shift);
  static MappingSpec linear(Matrix matrix);
  static MappingSpec scaled_identity(std::size_t n, double scale);
  static MappingSpec identity(std::size_t n) { return scaled_identity(n, 1.0); }
  static MappingSpec residual_of_contraction(MappingSpec inner, double alpha);
  static MappingSpec black_box(std::size_t dim, std::function<Point(const Point&)> evaluate);

  const Variant& variant() const noexcept { return map_; }
  std::string_view name() const noexcept;
  std::size_t dim() const noexcept;

 private:
  explicit MappingSpec(Variant map) : map_(std::move(map)) {}
  Variant map_;
};

/// B(x). Throws Evaluation when the evaluator fails or returns a non-finite
/// or wrongly sized result.
Point eval(const MappingSpec& map, const Point& x);

/// B(x) without the finiteness check, for callers that classify overflow
/// themselves. Evaluator failures still throw Evaluation.
std::vector<double> eval_raw(const MappingSpec& map, const Point& x);

/// Sampling domain for the checkers: the region itself when bounded,
/// otherwise `bounds` intersected with the region.
struct SampleRegion {
  ConvexSetSpec set;
  std::optional<Box> bounds;
};

struct SamplePair {
  Point x;
  Point y;
};

/// The index-th pair of a seeded stream. Pair i depends only on (seed, i).
SamplePair sample_pair(const SampleRegion& region, std::size_t n, double p, std::uint64_t seed,
                       std::size_t index);

/// Pairs closer than this are skipped by the ratio and slack statistics.
inline constexpr double kDegeneratePairDistance = 1e-12;

struct LipschitzEstimate {
  double mu_hat = 0.0;  // a lower bound on the true constant
  std::size_t evaluated = 0;
  std::size_t degenerate = 0;
};

/// max over sampled pairs of ||Bx - By||_p / ||x - y||_p.
LipschitzEstimate estimate_lipschitz(const MappingSpec& map, const SampleRegion& region,
                                     double p, std::size_t sample_pairs, std::uint64_t seed);

/// Outcome of a sample-based falsifier. A nonnegative worst slack means no
/// violation was found; it never certifies the property.
struct SlackReport {
  double worst_slack = 0.0;
  std::optional<SamplePair> witness;  // pair attaining worst_slack
  bool violation_found = false;       // some slack below -1e-9 (1 + scale)
  std::size_t evaluated = 0;
  std::size_t degenerate = 0;
};

/// <Bx - By, j(x - y)> + u ||Bx - By||^2 - v ||x - y||^2 for one pair.
double relaxed_cocoercive_slack(const MappingSpec& map, const Point& x, const Point& y, double u,
                                double v, double p);

/// <Bx - By, j(x - y)> - v ||x - y||^2 for one pair.
double strongly_monotone_slack(const MappingSpec& map, const Point& x, const Point& y, double v,
                               double p);

SlackReport check_relaxed_cocoercive(const MappingSpec& map, const SampleRegion& region, double u,
                                     double v, double p, std::size_t sample_pairs,
                                     std::uint64_t seed);

SlackReport check_strongly_monotone(const MappingSpec& map, const SampleRegion& region, double v,
                                    double p, std::size_t sample_pairs, std::uint64_t seed);

/// Claimed constants (u, v, mu) for B: relaxed (u, v)-cocoercive, mu-Lipschitz.
class Certificate {
 public:
  Certificate(double u, double v, double mu);

  double u() const noexcept { return u_; }
  double v() const noexcept { return v_; }
  double mu() const noexcept { return mu_; }

 private:
  double u_, v_, mu_;
};

enum class Verdict { PaperCertified, HilbertOnly, Uncertified, Inconsistent };

std::string_view to_string(Verdict verdict) noexcept;

struct FeasibilityVerdict {
  bool uniqueness_condition_holds;  // v > u mu^2 + 5 mu
  bool consistency_bound_ok;        // v <= mu + u mu^2
  Verdict verdict;
};

/// Classifies a certificate. Any mu-Lipschitz map that is relaxed
/// (u, v)-cocoercive on a set with two points satisfies v <= mu + u mu^2, so
/// a certificate above that bound describes no map. The two conditions can
/// never hold together for mu > 0, hence PaperCertified is unreachable.
FeasibilityVerdict certificate_feasibility(const Certificate& cert);

}  // namespace lpvi
