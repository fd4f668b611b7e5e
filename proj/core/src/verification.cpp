#include "lpvi/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "lpvi/convex_sets.hpp"
#include "lpvi/sampling.hpp"

namespace lpvi {
namespace {

std::string describe(const char* what, double observed, double allowed) {
  std::ostringstream s;
  s.precision(17);
  s << what << ": observed " << observed << ", allowed " << allowed;
  return s.str();
}

/// Records one check: `error` must not exceed `allowed`; the margin is taken
/// relative to `scale`.
void record(SweepResult& r, std::uint64_t seed, std::size_t index, const char* what, double error,
            double allowed, double scale) {
  ++r.checked;
  r.worst_margin = std::min(r.worst_margin, (allowed - error) / scale);
  if (error > allowed) r.violations.push_back({seed, index, describe(what, error, allowed)});
}

}  // namespace

double check_pairing_inequality(const Point& x, const Point& y, double p) {
  const Point d = x - y;
  const double lhs = pairing(duality_map(x, p) - duality_map(y, p), d);
  return lhs + 4.0 * p_norm(x, p) * p_norm(y, p) - pairing(duality_map(d, p), d);
}

double hilbert_rule_factor(double r, double gamma, double s, double mu_sq) {
  return 1.0 - s * mu_sq * (2.0 * (r - gamma * mu_sq) / mu_sq - s);
}

double reproduce_remark() {
  // mu = 1/10, so mu^2 = 1/100, whose nearest double is the literal 0.01.
  return hilbert_rule_factor(1.0, 1.0, 1.0, 0.01);
}

SweepResult sweep_duality(double p, std::size_t n, std::size_t count, std::uint64_t seed) {
  check_exponent(p);
  SweepResult r;
  r.name = "duality";
  r.worst_margin = 1e-9;
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = indexed_rng(seed, i);
    const Point x = random_scaled_vector(n, rng);
    const DualVector j = duality_map(x, p);
    const double norm = p_norm(x, p);
    const double sq = norm * norm;
    record(r, seed, i, "|<x, Jx> - ||x||^2|", std::abs(pairing(j, x) - sq), 1e-9 * (1.0 + sq),
           1.0 + sq);
    record(r, seed, i, "| ||Jx||_q - ||x||_p |", std::abs(q_norm(j) - norm), 1e-9 * (1.0 + norm),
           1.0 + norm);
    if (p == 2.0) {
      double dev = 0.0;
      for (std::size_t k = 0; k < n; ++k) dev = std::max(dev, std::abs(j[k] - x[k]));
      record(r, seed, i, "||Jx - x||_inf at p = 2", dev, 1e-12, 1.0);
    }
  }
  return r;
}

SweepResult sweep_pairing_inequality(double p, std::size_t n, std::size_t count,
                                     std::uint64_t seed) {
  check_exponent(p);
  SweepResult r;
  r.name = "pairing";
  r.worst_margin = 1e-9;
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = indexed_rng(seed, i);
    const Point x = random_scaled_vector(n, rng);
    // Every eighth pair probes nearly parallel vectors, where the slack is
    // tightest.
    const Point y = i % 8 == 7 ? x + random_scaled_vector(n, rng, -6.0, -1.0)
                               : random_scaled_vector(n, rng);
    const double scale = 1.0 + p_norm(x, p) * p_norm(y, p);
    const double slack = check_pairing_inequality(x, y, p);
    record(r, seed, i, "pairing inequality deficit", -slack, 1e-9 * scale, scale);
  }
  return r;
}

SweepResult sweep_box_retraction(double p, const BoxRetractionSweepOptions& options,
                                 std::uint64_t seed) {
  check_exponent(p);
  SweepResult r;
  r.name = "retraction";
  r.worst_margin = 1e-9;
  constexpr std::array<double, 4> kTs{0.0, 0.5, 1.0, 2.0};
  const std::size_t n = options.n;
  std::uniform_real_distribution<double> coord(-5.0, 5.0);

  for (std::size_t inst = 0; inst < options.instances; ++inst) {
    Rng rng = indexed_rng(seed, inst);
    std::vector<double> lo(n), hi(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double a = coord(rng), b = coord(rng);
      lo[k] = std::min(a, b);
      hi[k] = std::max(a, b);
    }
    const ConvexSetSpec box = ConvexSetSpec::box(Point(lo), Point(hi));
    const Point x = random_scaled_vector(n, rng, 0.0, 1.5);
    const double xsq = p_norm(x, p) * p_norm(x, p);

    record(r, seed, inst, "sunny deviation", verify_sunny(box, x, p, kTs), 0.0, 1.0);
    const double worst = verify_characterization(box, x, p, options.characterization_samples,
                                                 seed ^ (0x9e3779b97f4a7c15ULL + inst));
    record(r, seed, inst, "characterization violation", -worst, 1e-9 * (1.0 + xsq), 1.0 + xsq);
  }

  const Box bounds{Point(std::vector<double>(n, -5.0)), Point(std::vector<double>(n, 5.0))};
  const ConvexSetSpec unit = ConvexSetSpec::box(Point(std::vector<double>(n, -1.0)),
                                                Point(std::vector<double>(n, 1.0)));
  for (std::size_t i = 0; i < options.nonexpansive_pairs; ++i) {
    Rng rng = indexed_rng(seed + 1, i);
    const Point x = uniform_in_box(bounds.lo, bounds.hi, rng);
    const Point y = uniform_in_box(bounds.lo, bounds.hi, rng);
    const double gap = p_norm(x - y, p);
    const double image = p_norm(retract(unit, x, p) - retract(unit, y, p), p);
    record(r, seed + 1, i, "nonexpansiveness excess", image - gap, 1e-12 * (1.0 + gap),
           1.0 + gap);
  }
  return r;
}

}  // namespace lpvi
