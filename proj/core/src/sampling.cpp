#include "lpvi/sampling.hpp"

#include <cmath>
#include <vector>

namespace lpvi {

Rng indexed_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

Point uniform_in_box(const Point& lo, const Point& hi, Rng& rng) {
  check_same_dim(lo.dim(), hi.dim(), "uniform_in_box");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> x(lo.dim());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = lo[i] + unit(rng) * (hi[i] - lo[i]);
  return Point(std::move(x));
}

Point random_scaled_vector(std::size_t n, Rng& rng, double min_exp10, double max_exp10) {
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::uniform_real_distribution<double> exponent(min_exp10, max_exp10);
  const double scale = std::pow(10.0, exponent(rng));
  std::vector<double> x(n);
  for (double& xi : x) xi = scale * coord(rng);
  return Point(std::move(x));
}

}  // namespace lpvi
