#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace lpvi {

/// A coordinate vector of R^n. Coordinates are always finite and n >= 1.
class Point {
 public:
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  static Point zeros(std::size_t dim);

  std::size_t dim() const noexcept { return coords_.size(); }
  std::span<const double> coords() const noexcept { return coords_; }
  double operator[](std::size_t i) const noexcept { return coords_[i]; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

/// A functional on R^n acting through the coordinate pairing.
/// `source_p` records the exponent of the primal space it was built for.
class DualVector {
 public:
  DualVector(std::vector<double> coords, double source_p);

  std::size_t dim() const noexcept { return coords_.size(); }
  std::span<const double> coords() const noexcept { return coords_; }
  double operator[](std::size_t i) const noexcept { return coords_[i]; }
  double source_p() const noexcept { return source_p_; }

 private:
  std::vector<double> coords_;
  double source_p_;
};

/// (R^n, ||.||_p) with 1 < p < inf, the range where the space is smooth,
/// strictly convex and reflexive.
class SpaceSpec {
 public:
  SpaceSpec(std::size_t n, double p);

  std::size_t n() const noexcept { return n_; }
  double p() const noexcept { return p_; }
  bool is_hilbert() const noexcept { return p_ == 2.0; }

 private:
  std::size_t n_;
  double p_;
};

/// Throws UnsupportedSpace unless 1 < p < inf.
void check_exponent(double p);

double p_norm(std::span<const double> x, double p);
double p_norm(const Point& x, double p);
double q_norm(const DualVector& f);
double sup_norm(const Point& x) noexcept;

/// Conjugate exponent q with 1/p + 1/q = 1.
double dual_exponent(double p);

/// <f, x> = sum f_i x_i.
double pairing(const DualVector& f, const Point& x);

/// Normalized duality map of l_p: the unique f with <f, x> = ||x||_p^2 and
/// ||f||_q = ||x||_p. Componentwise f_i = ||x||^(2-p) |x_i|^(p-1) sign(x_i),
/// J(0) = 0, and J is the identity when p = 2.
DualVector duality_map(const Point& x, double p);

// Vector arithmetic. Results are validated Points, so an overflow throws
// InvalidInput.
Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(double t, const Point& x);
DualVector operator-(const DualVector& a, const DualVector& b);

/// max_i |a_i - b_i|
double linf_distance(const Point& a, const Point& b);

/// Throws Shape when the dimensions differ.
void check_same_dim(std::size_t a, std::size_t b, const char* what);

}  // namespace lpvi
