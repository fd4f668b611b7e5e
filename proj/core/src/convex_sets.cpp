#include "lpvi/convex_sets.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "lpvi/error.hpp"

namespace lpvi {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

double dot(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

void check_set_dim(const ConvexSetSpec& set, const Point& x, const char* what) {
  if (auto d = set.dim()) check_same_dim(*d, x.dim(), what);
}

Point clamp(const Box& box, const Point& x) {
  std::vector<double> r(x.dim());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::clamp(x[i], box.lo[i], box.hi[i]);
  return Point(std::move(r));
}

Point project_halfspace(const Halfspace& h, const Point& x) {
  const double excess = dot(h.normal, x) - h.offset;
  if (excess <= 0.0) return x;
  return x - (excess / dot(h.normal, h.normal)) * h.normal;
}

}  // namespace

ConvexSetSpec ConvexSetSpec::whole_space() { return ConvexSetSpec(WholeSpace{}); }

ConvexSetSpec ConvexSetSpec::box(Point lo, Point hi) {
  check_same_dim(lo.dim(), hi.dim(), "box bounds");
  for (std::size_t i = 0; i < lo.dim(); ++i) {
    if (lo[i] > hi[i]) {
      fail(ErrorKind::InvalidInput,
           "box is empty: lo[" + std::to_string(i) + "] > hi[" + std::to_string(i) + "]");
    }
  }
  return ConvexSetSpec(Box{std::move(lo), std::move(hi)});
}

ConvexSetSpec ConvexSetSpec::ball(double radius) {
  if (!(std::isfinite(radius) && radius > 0.0)) {
    fail(ErrorKind::InvalidInput, "ball radius must be positive and finite");
  }
  return ConvexSetSpec(Ball{radius});
}

ConvexSetSpec ConvexSetSpec::halfspace(Point normal, double offset) {
  if (sup_norm(normal) == 0.0) fail(ErrorKind::InvalidInput, "halfspace normal must be nonzero");
  if (!std::isfinite(offset)) fail(ErrorKind::InvalidInput, "halfspace offset must be finite");
  return ConvexSetSpec(Halfspace{std::move(normal), offset});
}

std::string_view ConvexSetSpec::name() const noexcept {
  return std::visit(overloaded{[](const WholeSpace&) { return std::string_view("whole_space"); },
                               [](const Box&) { return std::string_view("box"); },
                               [](const Ball&) { return std::string_view("ball"); },
                               [](const Halfspace&) { return std::string_view("halfspace"); }},
                    set_);
}

std::optional<std::size_t> ConvexSetSpec::dim() const noexcept {
  if (auto* b = std::get_if<Box>(&set_)) return b->lo.dim();
  if (auto* h = std::get_if<Halfspace>(&set_)) return h->normal.dim();
  return std::nullopt;
}

bool ConvexSetSpec::bounded() const noexcept {
  return std::holds_alternative<Box>(set_) || std::holds_alternative<Ball>(set_);
}

std::string_view to_string(RetractionMode mode) noexcept {
  switch (mode) {
    case RetractionMode::ExactSunny: return "exact_sunny";
    case RetractionMode::MetricProjection: return "metric_projection";
    case RetractionMode::Unsupported: return "unsupported";
  }
  return "unknown";
}

RetractionSupport retraction_support(const ConvexSetSpec& set, double p) {
  check_exponent(p);
  RetractionSupport s{set.name(), p, RetractionMode::Unsupported, {}};
  if (std::holds_alternative<WholeSpace>(set.variant()) ||
      std::holds_alternative<Box>(set.variant())) {
    s.mode = RetractionMode::ExactSunny;
  } else if (p == 2.0) {
    s.mode = RetractionMode::MetricProjection;
  } else {
    s.reason = "no closed-form sunny nonexpansive retraction onto a " +
               std::string(set.name()) + " in l_p for p != 2 (radial or affine " +
               "projection is not nonexpansive outside Hilbert space)";
  }
  return s;
}

void require_retraction(const ConvexSetSpec& set, double p) {
  auto s = retraction_support(set, p);
  if (!s.supported()) fail(ErrorKind::UnsupportedRetraction, s.reason);
}

bool contains(const ConvexSetSpec& set, const Point& x, double p, double tol) {
  check_set_dim(set, x, "contains");
  return std::visit(
      overloaded{[](const WholeSpace&) { return true; },
                 [&](const Box& b) {
                   for (std::size_t i = 0; i < x.dim(); ++i) {
                     if (x[i] < b.lo[i] - tol || x[i] > b.hi[i] + tol) return false;
                   }
                   return true;
                 },
                 [&](const Ball& b) { return p_norm(x, p) <= b.radius + tol; },
                 [&](const Halfspace& h) { return dot(h.normal, x) <= h.offset + tol; }},
      set.variant());
}

Point retract(const ConvexSetSpec& set, const Point& x, double p) {
  require_retraction(set, p);
  check_set_dim(set, x, "retract");
  return std::visit(overloaded{[&](const WholeSpace&) { return x; },
                               [&](const Box& b) { return clamp(b, x); },
                               [&](const Ball& b) {
                                 const double norm = p_norm(x, 2.0);
                                 return norm <= b.radius ? x : (b.radius / norm) * x;
                               },
                               [&](const Halfspace& h) { return project_halfspace(h, x); }},
                    set.variant());
}

Box sampling_box(const ConvexSetSpec& set, const Point& center, double half_width) {
  if (auto* b = std::get_if<Box>(&set.variant())) return *b;
  if (auto* b = std::get_if<Ball>(&set.variant())) {
    return Box{Point(std::vector<double>(center.dim(), -b->radius)),
               Point(std::vector<double>(center.dim(), b->radius))};
  }
  std::vector<double> lo(center.dim()), hi(center.dim());
  for (std::size_t i = 0; i < lo.size(); ++i) {
    lo[i] = center[i] - half_width;
    hi[i] = center[i] + half_width;
  }
  return Box{Point(std::move(lo)), Point(std::move(hi))};
}

Point sample_in_set(const ConvexSetSpec& set, const Box& bounds, double p, Rng& rng) {
  Point z = uniform_in_box(bounds.lo, bounds.hi, rng);
  return std::visit(
      overloaded{[&](const WholeSpace&) { return z; },
                 [&](const Box& b) { return clamp(b, z); },
                 [&](const Ball& b) {
                   const double norm = p_norm(z, p);
                   if (norm <= b.radius) return z;
                   // Pull onto a random radius so the interior is populated in
                   // high dimension too.
                   std::uniform_real_distribution<double> unit(0.0, 1.0);
                   const double r =
                       b.radius * std::pow(unit(rng), 1.0 / static_cast<double>(z.dim()));
                   return (r / norm) * z;
                 },
                 [&](const Halfspace& h) { return project_halfspace(h, z); }},
      set.variant());
}

double verify_characterization(const ConvexSetSpec& set, const Point& x, double p,
                               std::size_t sample_count, std::uint64_t seed) {
  const Point x0 = retract(set, x, p);
  const Point residual = x - x0;
  auto value_at = [&](const Point& y) { return pairing(duality_map(x0 - y, p), residual); };

  double worst = 0.0;  // y = x0 is always admissible and gives 0
  const Box bounds = sampling_box(set, x0, 1.0 + sup_norm(x));
  for (std::size_t i = 0; i < sample_count; ++i) {
    Rng rng = indexed_rng(seed, i);
    worst = std::min(worst, value_at(sample_in_set(set, bounds, p, rng)));
  }
  if (auto* b = std::get_if<Box>(&set.variant()); b != nullptr && x.dim() <= 10) {
    const std::size_t n = x.dim();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<double> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1U ? b->hi[i] : b->lo[i];
      worst = std::min(worst, value_at(Point(std::move(v))));
    }
  }
  return worst;
}

double verify_sunny(const ConvexSetSpec& set, const Point& x, double p,
                    std::span<const double> ts) {
  const Point qx = retract(set, x, p);
  const Point ray = x - qx;
  double worst = 0.0;
  for (double t : ts) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
      fail(ErrorKind::InvalidInput, "sunny check needs finite t >= 0");
    }
    worst = std::max(worst, p_norm(retract(set, qx + t * ray, p) - qx, p));
  }
  return worst;
}

}  // namespace lpvi
