#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

#include "origami/errors.hpp"

namespace origami {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Comparison thresholds shared by every module. All downstream equality
/// decisions flow through these; they are configuration, not hidden constants.
struct Tolerance {
  double eps_angle = 1e-10;   // radians
  double eps_point = 1e-9;    // plane distance
  double eps_scalar = 1e-9;   // dimensionless

  void validate() const {
    if (!(eps_angle > 0.0 && eps_point > 0.0 && eps_scalar > 0.0))
      raise(Errc::out_of_range, "tolerances must be strictly positive");
  }
};

/// A fold direction modulo pi. Either an exact rational multiple of pi
/// (kept in lowest terms with 0 <= num < den) or a plain radian value in
/// [0, pi). A rational angle never silently degrades to a real one.
class Angle {
public:
  Angle() = default;  // the zero angle

  static Angle zero() { return Angle(); }

  // (num/den)*pi, reduced modulo pi into [0, pi). den must be positive.
  static Angle rational_pi(std::int64_t num, std::int64_t den);

  // A radian value, reduced modulo pi into [0, pi). Must be finite.
  static Angle radians(double value);

  bool is_rational() const { return rational_; }
  bool is_zero() const { return rational_ ? num_ == 0 : value_ == 0.0; }

  // Only meaningful for rational angles.
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double value() const { return value_; }  // radians in [0, pi)

  // (cos, sin) of the represented direction; sin >= 0 since the angle lies
  // in [0, pi). Small standard denominators (1, 2, 3, 4, 6) come from a
  // fixed constant table so repeated evaluations are bit-identical.
  std::pair<double, double> cos_sin() const;

  Angle operator+(const Angle& rhs) const;
  Angle operator-(const Angle& rhs) const;
  Angle times(std::int64_t k) const;

private:
  bool rational_ = true;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  double value_ = 0.0;
};

// Distance between two directions modulo pi (both inputs in [0, pi)).
double circular_distance_mod_pi(double a, double b);

// Exact for rational/rational pairs; within eps_angle (mod pi) otherwise.
bool angle_equal(const Angle& a, const Angle& b, const Tolerance& tol = {});

// Strict order on the normalized radian value; exact for rational pairs.
bool angle_less(const Angle& a, const Angle& b);

Angle normalize_angle(double raw);

/// A point of the complex plane.
struct Point {
  double re = 0.0;
  double im = 0.0;

  Point operator+(const Point& r) const { return {re + r.re, im + r.im}; }
  Point operator-(const Point& r) const { return {re - r.re, im - r.im}; }
  Point operator-() const { return {-re, -im}; }
  Point operator*(double s) const { return {re * s, im * s}; }
  double norm() const { return std::hypot(re, im); }
  bool finite() const { return std::isfinite(re) && std::isfinite(im); }
};

inline double distance(const Point& a, const Point& b) { return (a - b).norm(); }

inline bool point_equal(const Point& a, const Point& b, const Tolerance& tol = {}) {
  return distance(a, b) <= tol.eps_point;
}

}  // namespace origami
