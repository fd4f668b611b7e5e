#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lpvi/lp_space.hpp"

namespace lpvi {

/// <J x - J y, x - y> + 4 ||x|| ||y|| - <J(x - y), x - y>. Nonnegative for
/// every x, y in a Banach space with normalized duality map J.
double check_pairing_inequality(const Point& x, const Point& y, double p);

/// 1 - s mu^2 (2 (r - gamma mu^2) / mu^2 - s), the contraction factor claimed
/// for the Hilbert step rule. Takes mu^2 directly so rational mu can be passed
/// without squaring a rounded value.
double hilbert_rule_factor(double r, double gamma, double s, double mu_sq);

/// The factor at r = gamma = s = 1, mu = 1/10: exactly -0.97, i.e. negative,
/// so the rule does not yield a contraction bound there.
double reproduce_remark();

struct SweepViolation {
  std::uint64_t seed;
  std::size_t index;
  std::string detail;
};

struct SweepResult {
  std::string name;
  std::size_t checked = 0;
  /// Smallest normalized margin seen; negative means a violation.
  double worst_margin = 0.0;
  std::vector<SweepViolation> violations;

  bool passed() const noexcept { return violations.empty(); }
};

/// <x, Jx> = ||x||^2 and ||Jx||_q = ||x||_p on seeded vectors, each to
/// 1e-9 (1 + scale); at p = 2 also ||Jx - x||_inf <= 1e-12.
SweepResult sweep_duality(double p, std::size_t n, std::size_t count, std::uint64_t seed);

/// Pairing inequality slack >= -1e-9 (1 + ||x|| ||y||) on seeded pairs.
SweepResult sweep_pairing_inequality(double p, std::size_t n, std::size_t count,
                                     std::uint64_t seed);

struct BoxRetractionSweepOptions {
  std::size_t n = 3;
  std::size_t instances = 20;
  std::size_t nonexpansive_pairs = 10'000;
  std::size_t characterization_samples = 500;
};

/// Box clamp: exact sunniness for t in {0, 0.5, 1, 2}, nonexpansiveness, and
/// the characterization inequality on seeded boxes.
SweepResult sweep_box_retraction(double p, const BoxRetractionSweepOptions& options,
                                 std::uint64_t seed);

}  // namespace lpvi
