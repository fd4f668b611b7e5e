#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "lpvi/lp_space.hpp"

namespace lpvi {

using Rng = std::mt19937_64;

/// Generator for the index-th sample of a seeded stream. Every sample owns its
/// generator, so results do not depend on evaluation order or thread count
/// and a longer stream is an extension of a shorter one.
Rng indexed_rng(std::uint64_t seed, std::uint64_t index);

/// Uniform point in the axis-aligned box [lo, hi].
Point uniform_in_box(const Point& lo, const Point& hi, Rng& rng);

/// Random vector with coordinates uniform in [-1, 1] scaled by a log-uniform
/// magnitude in [10^min_exp10, 10^max_exp10]. Used by the property sweeps.
Point random_scaled_vector(std::size_t n, Rng& rng, double min_exp10 = -3.0,
                           double max_exp10 = 3.0);

}  // namespace lpvi
