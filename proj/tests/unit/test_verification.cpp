#include <cmath>

#include "doctest.h"
#include "lpvi/sampling.hpp"
#include "lpvi/verification.hpp"

using namespace lpvi;

TEST_CASE("pairing inequality closed cases") {
  for (double p : {1.5, 2.0, 3.0}) {
    const Point x{0.3, -2.0, 1.0};
    const double n = p_norm(x, p);
    CHECK(check_pairing_inequality(x, x, p) == doctest::Approx(4 * n * n).epsilon(1e-12));
  }
  for (std::size_t i = 0; i < 200; ++i) {
    Rng rng = indexed_rng(51, i);
    const Point x = random_scaled_vector(4, rng), y = random_scaled_vector(4, rng);
    const double expect = 4 * p_norm(x, 2.0) * p_norm(y, 2.0);
    CHECK(check_pairing_inequality(x, y, 2.0) ==
          doctest::Approx(expect).epsilon(1e-9).scale(1 + p_norm(x - y, 2.0) * p_norm(x - y, 2.0)));
  }
}

TEST_CASE("pairing inequality sweep finds no violation") {
  for (double p : {1.5, 3.0, 4.0}) {
    for (std::size_t n : {2, 5, 20}) {
      const SweepResult r = sweep_pairing_inequality(p, n, 2000, 3);
      CHECK(r.passed());
      CHECK(r.checked == 2000);
    }
  }
}

TEST_CASE("remark arithmetic") {
  CHECK(reproduce_remark() == -0.97);
  CHECK(hilbert_rule_factor(1, 1, 1e-12, 0.01) == doctest::Approx(1.0));
  // r = gamma mu^2: the interval is empty and the factor is 1 + s^2
  for (double s : {0.5, 1.0, 2.0}) {
    CHECK(hilbert_rule_factor(1, 1, s, 1.0) == doctest::Approx(1 + s * s).epsilon(1e-15));
  }
}

TEST_CASE("duality sweep") {
  for (double p : {1.5, 2.0, 3.0, 4.0}) {
    const SweepResult r = sweep_duality(p, 10, 500, 7);
    CHECK(r.passed());
    CHECK(r.worst_margin >= 0.0);
  }
}

TEST_CASE("box retraction sweep") {
  BoxRetractionSweepOptions opt;
  opt.instances = 5;
  opt.nonexpansive_pairs = 1000;
  opt.characterization_samples = 100;
  for (double p : {1.5, 2.0, 3.0}) CHECK(sweep_box_retraction(p, opt, 9).passed());
}
