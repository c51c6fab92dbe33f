#include "origami/geometry.hpp"

#include <cmath>

namespace origami {

namespace {

// Signed perpendicular offset of p from the line through the origin with
// direction angle (c, s).
double perp_offset(const Point& p, double c, double s) {
  return -s * p.re + c * p.im;
}

}  // namespace

bool line_equal(const Line& a, const Line& b, const Tolerance& tol) {
  if (!angle_equal(a.dir, b.dir, tol)) return false;
  auto [c, s] = a.dir.cos_sin();
  return std::fabs(perp_offset(a.base, c, s) - perp_offset(b.base, c, s)) <= tol.eps_point;
}

Point apply(const Isometry& iso, const Point& p) {
  if (const auto* r = std::get_if<Rotation>(&iso)) return rotate(p, r->theta, r->center);
  if (const auto* f = std::get_if<Reflection>(&iso)) return reflect(p, f->axis_angle);
  return p + std::get<Translation>(iso).by;
}

std::array<double, 4> linear_part(const Isometry& iso) {
  if (const auto* r = std::get_if<Rotation>(&iso)) {
    const double c = std::cos(r->theta), s = std::sin(r->theta);
    return {c, -s, s, c};
  }
  if (const auto* f = std::get_if<Reflection>(&iso)) {
    const double c2 = std::cos(2.0 * f->axis_angle), s2 = std::sin(2.0 * f->axis_angle);
    return {c2, s2, s2, -c2};
  }
  return {1.0, 0.0, 0.0, 1.0};
}

double linear_determinant(const Isometry& iso) {
  const auto m = linear_part(iso);
  return m[0] * m[3] - m[1] * m[2];
}

Point intersect(const Point& p, const Point& q, const Angle& alpha,
                const Angle& beta, const Tolerance& tol) {
  if (angle_equal(alpha, beta, tol))
    raise(Errc::parallel_lines, "equal direction angles");

  const auto [ca, sa] = alpha.cos_sin();
  const auto [cb, sb] = beta.cos_sin();
  // | ca  -cb | (r)   (q.re - p.re)
  // | sa  -sb | (s) = (q.im - p.im)
  const double det = cb * sa - ca * sb;  // = sin(alpha - beta)
  if (!(alpha.is_rational() && beta.is_rational()) && std::fabs(det) < tol.eps_scalar)
    raise(Errc::near_parallel, "|sin(beta - alpha)| below eps_scalar");

  const double dx = q.re - p.re;
  const double dy = q.im - p.im;
  const double r = (cb * dy - sb * dx) / det;
  return {p.re + r * ca, p.im + r * sa};
}

double project_to_real(const Point& q, const Angle& beta, const Tolerance& tol) {
  if (angle_equal(beta, Angle::zero(), tol)) {
    if (std::fabs(q.im) <= tol.eps_point) return q.re;
    raise(Errc::parallel_lines, "projection angle 0 with point off the real axis");
  }
  const auto [cb, sb] = beta.cos_sin();
  return q.re - q.im * cb / sb;
}

Point rotate(const Point& p, double theta, const Point& center) {
  const double c = std::cos(theta), s = std::sin(theta);
  const Point d = p - center;
  return {center.re + c * d.re - s * d.im, center.im + s * d.re + c * d.im};
}

Point reflect(const Point& p, double axis_angle) {
  const double c2 = std::cos(2.0 * axis_angle), s2 = std::sin(2.0 * axis_angle);
  return {c2 * p.re + s2 * p.im, s2 * p.re - c2 * p.im};
}

Angle reflect_angle(const Angle& eta, const Angle& theta) {
  return theta.times(2) - eta;
}

}  // namespace origami
