#include "lpvi/mappings.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>

#include "lpvi/error.hpp"

namespace lpvi {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void check_positive(double value, const char* name) {
  if (!(std::isfinite(value) && value > 0.0)) {
    fail(ErrorKind::InvalidInput, std::string(name) + " must be positive and finite");
  }
}

struct PairMeasures {
  double gap_norm;  // ||x - y||
  double image_norm;  // ||Bx - By||
  double pairing;  // <Bx - By, j(x - y)>
};

PairMeasures measure_pair(const MappingSpec& map, const Point& x, const Point& y, double p) {
  const Point d = x - y;
  const Point image = eval(map, x) - eval(map, y);
  return {p_norm(d, p), p_norm(image, p), pairing(duality_map(d, p), image)};
}

template <class SlackFn>
SlackReport run_slack_check(const MappingSpec& map, const SampleRegion& region, double p,
                            std::size_t sample_pairs, std::uint64_t seed, SlackFn slack_of) {
  SlackReport report;
  bool first = true;
  for (std::size_t i = 0; i < sample_pairs; ++i) {
    SamplePair pair = sample_pair(region, map.dim(), p, seed, i);
    const PairMeasures m = measure_pair(map, pair.x, pair.y, p);
    if (m.gap_norm < kDegeneratePairDistance) {
      ++report.degenerate;
      continue;
    }
    ++report.evaluated;
    const double slack = slack_of(m);
    const double scale = 1.0 + m.gap_norm * m.gap_norm + m.image_norm * m.image_norm;
    if (slack < -1e-9 * scale) report.violation_found = true;
    if (first || slack < report.worst_slack) {
      report.worst_slack = slack;
      report.witness = std::move(pair);
      first = false;
    }
  }
  return report;
}

}  // namespace

Matrix::Matrix(std::size_t n, std::vector<double> row_major) : n_(n), data_(std::move(row_major)) {
  if (n == 0) fail(ErrorKind::InvalidInput, "matrix dimension must be positive");
  if (data_.size() != n * n) {
    fail(ErrorKind::Shape, "matrix needs " + std::to_string(n * n) + " entries, got " +
                               std::to_string(data_.size()));
  }
  for (double a : data_) {
    if (!std::isfinite(a)) fail(ErrorKind::InvalidInput, "matrix entries must be finite");
  }
}

Matrix Matrix::identity(std::size_t n, double scale) {
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = scale;
  return Matrix(n, std::move(d));
}

std::vector<double> Matrix::apply(std::span<const double> x) const {
  std::vector<double> r(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n_; ++j) s += data_[i * n_ + j] * x[j];
    r[i] = s;
  }
  return r;
}

MappingSpec MappingSpec::affine(Matrix matrix, Point shift) {
  check_same_dim(matrix.size(), shift.dim(), "affine map");
  return MappingSpec(Affine{std::move(matrix), std::move(shift)});
}

MappingSpec MappingSpec::linear(Matrix matrix) {
  const std::size_t n = matrix.size();
  return affine(std::move(matrix), Point::zeros(n));
}

MappingSpec MappingSpec::scaled_identity(std::size_t n, double scale) {
  return linear(Matrix::identity(n, scale));
}

MappingSpec MappingSpec::residual_of_contraction(MappingSpec inner, double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    fail(ErrorKind::InvalidInput, "contraction constant alpha must lie in [0, 1)");
  }
  return MappingSpec(
      ResidualOfContraction{std::make_shared<const MappingSpec>(std::move(inner)), alpha});
}

MappingSpec MappingSpec::black_box(std::size_t dim, std::function<Point(const Point&)> evaluate) {
  if (dim == 0) fail(ErrorKind::InvalidInput, "black-box map dimension must be positive");
  if (!evaluate) fail(ErrorKind::InvalidInput, "black-box map needs an evaluator");
  return MappingSpec(BlackBox{dim, std::move(evaluate)});
}

std::string_view MappingSpec::name() const noexcept {
  return std::visit(
      overloaded{[](const Affine&) { return std::string_view("affine"); },
                 [](const ResidualOfContraction&) { return std::string_view("residual"); },
                 [](const BlackBox&) { return std::string_view("black_box"); }},
      map_);
}

std::size_t MappingSpec::dim() const noexcept {
  return std::visit(overloaded{[](const Affine& a) { return a.matrix.size(); },
                               [](const ResidualOfContraction& r) { return r.inner->dim(); },
                               [](const BlackBox& b) { return b.dim; }},
                    map_);
}

std::vector<double> eval_raw(const MappingSpec& map, const Point& x) {
  check_same_dim(map.dim(), x.dim(), "map evaluation");
  return std::visit(
      overloaded{[&](const Affine& a) {
                   std::vector<double> r = a.matrix.apply(x.coords());
                   for (std::size_t i = 0; i < r.size(); ++i) r[i] += a.shift[i];
                   return r;
                 },
                 [&](const ResidualOfContraction& rc) {
                   const std::vector<double> t = eval_raw(*rc.inner, x);
                   std::vector<double> r(x.dim());
                   for (std::size_t i = 0; i < r.size(); ++i) r[i] = x[i] - t[i];
                   return r;
                 },
                 [&](const BlackBox& b) {
                   Point r = [&] {
                     try {
                       return b.evaluate(x);
                     } catch (const Error&) {
                       throw;
                     } catch (const std::exception& e) {
                       fail(ErrorKind::Evaluation, std::string("evaluator failed: ") + e.what());
                     }
                   }();
                   if (r.dim() != x.dim()) {
                     fail(ErrorKind::Evaluation, "evaluator returned a vector of dimension " +
                                                     std::to_string(r.dim()));
                   }
                   return std::vector<double>(r.coords().begin(), r.coords().end());
                 }},
      map.variant());
}

Point eval(const MappingSpec& map, const Point& x) {
  std::vector<double> out = eval_raw(map, x);
  for (double v : out) {
    if (!std::isfinite(v)) fail(ErrorKind::Evaluation, "map produced a non-finite value");
  }
  return Point(std::move(out));
}

SamplePair sample_pair(const SampleRegion& region, std::size_t n, double p, std::uint64_t seed,
                       std::size_t index) {
  if (!region.bounds && !region.set.bounded()) {
    fail(ErrorKind::InvalidInput,
         "sampling an unbounded region needs an explicit bounding box");
  }
  if (auto d = region.set.dim()) check_same_dim(*d, n, "sample region");
  const Box bounds = region.bounds ? *region.bounds
                                   : sampling_box(region.set, Point::zeros(n), 1.0);
  check_same_dim(bounds.lo.dim(), n, "sample bounds");
  Rng rng = indexed_rng(seed, index);
  Point x = sample_in_set(region.set, bounds, p, rng);
  Point y = sample_in_set(region.set, bounds, p, rng);
  return {std::move(x), std::move(y)};
}

LipschitzEstimate estimate_lipschitz(const MappingSpec& map, const SampleRegion& region,
                                     double p, std::size_t sample_pairs, std::uint64_t seed) {
  check_exponent(p);
  LipschitzEstimate est;
  for (std::size_t i = 0; i < sample_pairs; ++i) {
    const SamplePair pair = sample_pair(region, map.dim(), p, seed, i);
    const double gap = p_norm(pair.x - pair.y, p);
    if (gap < kDegeneratePairDistance) {
      ++est.degenerate;
      continue;
    }
    ++est.evaluated;
    est.mu_hat = std::max(est.mu_hat, p_norm(eval(map, pair.x) - eval(map, pair.y), p) / gap);
  }
  if (est.evaluated == 0) {
    fail(ErrorKind::Estimation, "every sampled pair was degenerate; no Lipschitz estimate");
  }
  return est;
}

double relaxed_cocoercive_slack(const MappingSpec& map, const Point& x, const Point& y, double u,
                                double v, double p) {
  const PairMeasures m = measure_pair(map, x, y, p);
  return m.pairing + u * m.image_norm * m.image_norm - v * m.gap_norm * m.gap_norm;
}

double strongly_monotone_slack(const MappingSpec& map, const Point& x, const Point& y, double v,
                               double p) {
  const PairMeasures m = measure_pair(map, x, y, p);
  return m.pairing - v * m.gap_norm * m.gap_norm;
}

SlackReport check_relaxed_cocoercive(const MappingSpec& map, const SampleRegion& region, double u,
                                     double v, double p, std::size_t sample_pairs,
                                     std::uint64_t seed) {
  check_positive(u, "u");
  check_positive(v, "v");
  check_exponent(p);
  return run_slack_check(map, region, p, sample_pairs, seed, [&](const PairMeasures& m) {
    return m.pairing + u * m.image_norm * m.image_norm - v * m.gap_norm * m.gap_norm;
  });
}

SlackReport check_strongly_monotone(const MappingSpec& map, const SampleRegion& region, double v,
                                    double p, std::size_t sample_pairs, std::uint64_t seed) {
  check_positive(v, "v");
  check_exponent(p);
  return run_slack_check(map, region, p, sample_pairs, seed, [&](const PairMeasures& m) {
    return m.pairing - v * m.gap_norm * m.gap_norm;
  });
}

Certificate::Certificate(double u, double v, double mu) : u_(u), v_(v), mu_(mu) {
  check_positive(u, "certificate u");
  check_positive(v, "certificate v");
  check_positive(mu, "certificate mu");
}

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::PaperCertified: return "PaperCertified";
    case Verdict::HilbertOnly: return "HilbertOnly";
    case Verdict::Uncertified: return "Uncertified";
    case Verdict::Inconsistent: return "Inconsistent";
  }
  return "unknown";
}

FeasibilityVerdict certificate_feasibility(const Certificate& cert) {
  const double u_mu_sq = cert.u() * cert.mu() * cert.mu();
  FeasibilityVerdict f{};
  f.uniqueness_condition_holds = cert.v() > u_mu_sq + 5.0 * cert.mu();
  f.consistency_bound_ok = cert.v() <= cert.mu() + u_mu_sq;
  if (!f.consistency_bound_ok) {
    f.verdict = Verdict::Inconsistent;
  } else if (f.uniqueness_condition_holds) {
    // v > a + 5 mu and v <= a + mu contradict each other for mu > 0, and
    // monotone rounding keeps the contradiction in floating point.
    assert(false && "certificate both uniqueness-certified and consistent");
    throw std::logic_error("unreachable: certificate both uniqueness-certified and consistent");
  } else if (cert.v() > u_mu_sq) {
    f.verdict = Verdict::HilbertOnly;
  } else {
    f.verdict = Verdict::Uncertified;
  }
  return f;
}

}  // namespace lpvi
