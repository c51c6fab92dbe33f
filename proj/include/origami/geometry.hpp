#pragma once

#include <array>
#include <variant>

#include "origami/numeric.hpp"

namespace origami {

/// The line {base + t*(cos dir + i sin dir) : t real}.
struct Line {
  Point base;
  Angle dir;
};

bool line_equal(const Line& a, const Line& b, const Tolerance& tol = {});

struct Rotation {
  double theta = 0.0;  // radians, [0, 2pi)
  Point center{};
};

struct Reflection {
  double axis_angle = 0.0;  // axis through the origin, [0, pi)
};

struct Translation {
  Point by{};
};

using Isometry = std::variant<Rotation, Reflection, Translation>;

Point apply(const Isometry& iso, const Point& p);

// Row-major 2x2 linear part; identity for translations.
std::array<double, 4> linear_part(const Isometry& iso);
double linear_determinant(const Isometry& iso);

// Intersection of the line through p at angle alpha with the line through q
// at angle beta, by solving the 2x2 linear system in the ray parameters.
// Equal angles are rejected as parallel; real-angle pairs whose determinant
// |sin(beta - alpha)| falls below eps_scalar are rejected as near-parallel
// rather than producing huge coordinates.
Point intersect(const Point& p, const Point& q, const Angle& alpha,
                const Angle& beta, const Tolerance& tol = {});

// Real part of the point where the line through q at angle beta meets the
// real axis: q.re - q.im * cos(beta) / sin(beta). beta = 0 with q on the
// axis returns q.re; off the axis it is an error.
double project_to_real(const Point& q, const Angle& beta, const Tolerance& tol = {});

// Raw radian arguments: symmetry checks need angles outside [0, pi),
// e.g. 2*theta for reflection images.
Point rotate(const Point& p, double theta, const Point& center = {});
Point reflect(const Point& p, double axis_angle);

// Image of the direction eta under reflection across the axis theta:
// normalize(2*theta - eta). Exact when both are rational.
Angle reflect_angle(const Angle& eta, const Angle& theta);

}  // namespace origami
