#include "origami/numeric.hpp"

#include <algorithm>
#include <numeric>

namespace origami {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_angle: return "InvalidAngle";
    case Errc::invalid_angle_set: return "InvalidAngleSet";
    case Errc::parallel_lines: return "ParallelLines";
    case Errc::near_parallel: return "NearParallel";
    case Errc::too_few_angles: return "TooFewAngles";
    case Errc::wrong_arity: return "WrongArity";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::invalid_index: return "InvalidIndex";
    case Errc::degenerate_rebase: return "DegenerateRebase";
    case Errc::unreachable_group: return "UnreachableGroup";
    case Errc::empty_render: return "EmptyRender";
    case Errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

namespace {

constexpr double kHalfSqrt3 = 0.86602540378443864676372317075293618;
constexpr double kHalfSqrt2 = 0.70710678118654752440084436210484904;

// Residual of normalization this small is collapsed to the zero angle.
constexpr double kWrapSnap = 1e-12;

}  // namespace

Angle Angle::rational_pi(std::int64_t num, std::int64_t den) {
  if (den <= 0) raise(Errc::invalid_angle, "denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  Angle a;
  a.rational_ = true;
  a.num_ = num / g;
  a.den_ = den / g;
  a.value_ = static_cast<double>(a.num_) * kPi / static_cast<double>(a.den_);
  return a;
}

Angle Angle::radians(double value) {
  if (!std::isfinite(value)) raise(Errc::invalid_angle, "angle must be finite");
  double r = std::fmod(value, kPi);
  if (r < 0.0) r += kPi;
  if (r < kWrapSnap || kPi - r < kWrapSnap) r = 0.0;
  Angle a;
  a.rational_ = false;
  a.num_ = 0;
  a.den_ = 1;
  a.value_ = r;
  return a;
}

std::pair<double, double> Angle::cos_sin() const {
  if (rational_) {
    switch (den_) {
      case 1: return {1.0, 0.0};  // num_ == 0
      case 2: return {0.0, 1.0};
      case 3: return num_ == 1 ? std::pair{0.5, kHalfSqrt3} : std::pair{-0.5, kHalfSqrt3};
      case 4: return num_ == 1 ? std::pair{kHalfSqrt2, kHalfSqrt2}
                               : std::pair{-kHalfSqrt2, kHalfSqrt2};
      case 6: return num_ == 1 ? std::pair{kHalfSqrt3, 0.5} : std::pair{-kHalfSqrt3, 0.5};
      default: break;
    }
  }
  return {std::cos(value_), std::sin(value_)};
}

Angle Angle::operator+(const Angle& rhs) const {
  if (rational_ && rhs.rational_)
    return rational_pi(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  return radians(value_ + rhs.value_);
}

Angle Angle::operator-(const Angle& rhs) const {
  if (rational_ && rhs.rational_)
    return rational_pi(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
  return radians(value_ - rhs.value_);
}

Angle Angle::times(std::int64_t k) const {
  if (rational_) return rational_pi(num_ * k, den_);
  return radians(value_ * static_cast<double>(k));
}

double circular_distance_mod_pi(double a, double b) {
  double d = std::fabs(a - b);
  return std::min(d, kPi - d);
}

bool angle_equal(const Angle& a, const Angle& b, const Tolerance& tol) {
  if (a.is_rational() && b.is_rational())
    return a.num() == b.num() && a.den() == b.den();
  return circular_distance_mod_pi(a.value(), b.value()) <= tol.eps_angle;
}

bool angle_less(const Angle& a, const Angle& b) {
  if (a.is_rational() && b.is_rational())
    return a.num() * b.den() < b.num() * a.den();
  return a.value() < b.value();
}

Angle normalize_angle(double raw) { return Angle::radians(raw); }

}  // namespace origami
