#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "lpvi/lp_space.hpp"
#include "lpvi/sampling.hpp"

namespace lpvi {

struct WholeSpace {};

/// {x : lo_i <= x_i <= hi_i}
struct Box {
  Point lo;
  Point hi;
};

/// {x : ||x||_p <= radius}, centered at the origin. The norm is the one of the
/// ambient space.
struct Ball {
  double radius;
};

/// {x : <normal, x> <= offset}
struct Halfspace {
  Point normal;
  double offset;
};

/// A nonempty closed convex set C. Constructed through the factories, which
/// reject empty or degenerate descriptions.
class ConvexSetSpec {
 public:
  using Variant = std::variant<WholeSpace, Box, Ball, Halfspace>;

  static ConvexSetSpec whole_space();
  static ConvexSetSpec box(Point lo, Point hi);
  static ConvexSetSpec ball(double radius);
  static ConvexSetSpec halfspace(Point normal, double offset);

  const Variant& variant() const noexcept { return set_; }
  std::string_view name() const noexcept;

  /// Dimension fixed by the description, if any (Box and Halfspace).
  std::optional<std::size_t> dim() const noexcept;
  bool bounded() const noexcept;

 private:
  explicit ConvexSetSpec(Variant set) : set_(std::move(set)) {}
  Variant set_;
};

enum class RetractionMode { ExactSunny, MetricProjection, Unsupported };

std::string_view to_string(RetractionMode mode) noexcept;

/// Where the sunny nonexpansive retraction Q_C is available in closed form.
struct RetractionSupport {
  std::string_view set_variant;
  double p;
  RetractionMode mode;
  std::string reason;  // empty unless mode == Unsupported

  bool supported() const noexcept { return mode != RetractionMode::Unsupported; }
};

RetractionSupport retraction_support(const ConvexSetSpec& set, double p);

/// Throws UnsupportedRetraction (with the reason) when Q_C is not available.
void require_retraction(const ConvexSetSpec& set, double p);

/// Membership up to `tol`: coordinatewise for boxes, in the p-norm for balls,
/// through the pairing for halfspaces.
bool contains(const ConvexSetSpec& set, const Point& x, double p, double tol = 0.0);

/// Q_C x. Boxes clamp componentwise (sunny and nonexpansive in every l_p);
/// balls and halfspaces use the Euclidean projection and are only offered at
/// p = 2, where Q_C coincides with the metric projection.
Point retract(const ConvexSetSpec& set, const Point& x, double p);

/// Axis-aligned box used to sample C: the set's own bounds when it is
/// bounded, otherwise a cube of half-width `half_width` around `center`.
Box sampling_box(const ConvexSetSpec& set, const Point& center, double half_width);

/// A point of C drawn from `bounds` (points outside C are pulled into C).
Point sample_in_set(const ConvexSetSpec& set, const Box& bounds, double p, Rng& rng);

/// min over sampled y in C of <J(Q_C x - y), x - Q_C x>. A sunny nonexpansive
/// retraction gives a nonnegative value. Box samples include all 2^n vertices
/// when n <= 10.
double verify_characterization(const ConvexSetSpec& set, const Point& x, double p,
                               std::size_t sample_count, std::uint64_t seed);

/// max over t of ||Q(Qx + t (x - Qx)) - Qx||_p.
double verify_sunny(const ConvexSetSpec& set, const Point& x, double p,
                    std::span<const double> ts);

}  // namespace lpvi
