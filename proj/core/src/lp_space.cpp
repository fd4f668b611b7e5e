#include "lpvi/lp_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lpvi/error.hpp"

namespace lpvi {
namespace {

void check_coords(std::span<const double> coords, const char* what) {
  if (coords.empty()) {
    fail(ErrorKind::InvalidInput, std::string(what) + " must have dimension >= 1");
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!std::isfinite(coords[i])) {
      fail(ErrorKind::InvalidInput, std::string(what) + " coordinate " +
                                        std::to_string(i) + " is not finite");
    }
  }
}

}  // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  check_coords(coords_, "point");
}

Point::Point(std::initializer_list<double> coords)
    : Point(std::vector<double>(coords)) {}

Point Point::zeros(std::size_t dim) { return Point(std::vector<double>(dim, 0.0)); }

DualVector::DualVector(std::vector<double> coords, double source_p)
    : coords_(std::move(coords)), source_p_(source_p) {
  check_coords(coords_, "dual vector");
}

SpaceSpec::SpaceSpec(std::size_t n, double p) : n_(n), p_(p) {
  if (n == 0) fail(ErrorKind::InvalidInput, "space dimension must be positive");
  check_exponent(p);
}

void check_exponent(double p) {
  if (!(std::isfinite(p) && p > 1.0)) {
    fail(ErrorKind::UnsupportedSpace,
         "exponent p = " + std::to_string(p) +
             " is outside (1, inf); l_1 and l_inf are not smooth");
  }
}

void check_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    fail(ErrorKind::Shape, std::string(what) + ": dimension mismatch (" +
                               std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

double p_norm(std::span<const double> x, double p) {
  check_exponent(p);
  double scale = 0.0;
  for (double xi : x) {
    if (!std::isfinite(xi)) fail(ErrorKind::InvalidInput, "p_norm of a non-finite vector");
    scale = std::max(scale, std::abs(xi));
  }
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  if (p == 2.0) {
    for (double xi : x) sum += (xi / scale) * (xi / scale);
    return scale * std::sqrt(sum);
  }
  for (double xi : x) sum += std::pow(std::abs(xi) / scale, p);
  return scale * std::pow(sum, 1.0 / p);
}

double p_norm(const Point& x, double p) { return p_norm(x.coords(), p); }

double q_norm(const DualVector& f) {
  return p_norm(f.coords(), dual_exponent(f.source_p()));
}

double sup_norm(const Point& x) noexcept {
  double m = 0.0;
  for (double xi : x.coords()) m = std::max(m, std::abs(xi));
  return m;
}

double dual_exponent(double p) {
  check_exponent(p);
  return p / (p - 1.0);
}

double pairing(const DualVector& f, const Point& x) {
  check_same_dim(f.dim(), x.dim(), "pairing");
  double s = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) s += f[i] * x[i];
  return s;
}

DualVector duality_map(const Point& x, double p) {
  check_exponent(p);
  std::vector<double> f(x.coords().begin(), x.coords().end());
  if (p == 2.0) return DualVector(std::move(f), p);
  const double norm = p_norm(x, p);
  if (norm == 0.0) return DualVector(std::vector<double>(x.dim(), 0.0), p);
  // ||x||^(2-p) |x_i|^(p-1) == ||x|| (|x_i| / ||x||)^(p-1), which cannot overflow.
  for (double& fi : f) {
    const double a = std::abs(fi);
    fi = a == 0.0 ? 0.0 : std::copysign(norm * std::pow(a / norm, p - 1.0), fi);
  }
  return DualVector(std::move(f), p);
}

Point operator+(const Point& a, const Point& b) {
  check_same_dim(a.dim(), b.dim(), "point addition");
  std::vector<double> r(a.dim());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
  return Point(std::move(r));
}

Point operator-(const Point& a, const Point& b) {
  check_same_dim(a.dim(), b.dim(), "point subtraction");
  std::vector<double> r(a.dim());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
  return Point(std::move(r));
}

Point operator*(double t, const Point& x) {
  std::vector<double> r(x.dim());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = t * x[i];
  return Point(std::move(r));
}

DualVector operator-(const DualVector& a, const DualVector& b) {
  check_same_dim(a.dim(), b.dim(), "dual vector subtraction");
  std::vector<double> r(a.dim());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
  return DualVector(std::move(r), a.source_p());
}

double linf_distance(const Point& a, const Point& b) {
  check_same_dim(a.dim(), b.dim(), "linf_distance");
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace lpvi
