#pragma once

#include <optional>
#include <vector>

#include "origami/construction.hpp"

namespace origami {

/// Interior angles (alpha, rho, gamma) of the tiling triangles of a 3-angle
/// structure: rho = beta - alpha, gamma = pi - beta. They sum to pi.
struct TriangleAngles {
  Angle alpha;
  Angle rho;
  Angle gamma;
};

enum class WallpaperClass { P2, CMM, P6M };

/// Symmetry group modulo translations. Cyclic orders are always even (the
/// pi-rotation is present in every structure). KleinFour is kept distinct
/// from Dihedral(2).
struct PointGroup {
  enum class Kind { Cyclic, Dihedral, KleinFour };

  Kind kind = Kind::Cyclic;
  int n = 2;  // order parameter; 2 for KleinFour

  static PointGroup cyclic(int n) { return {Kind::Cyclic, n}; }
  static PointGroup dihedral(int n) { return {Kind::Dihedral, n}; }
  static PointGroup klein_four() { return {Kind::KleinFour, 2}; }

  bool operator==(const PointGroup&) const = default;
};

// The abstract dihedral view: KleinFour maps to Dihedral(2), everything
// else is unchanged.
PointGroup as_dihedral(const PointGroup& g);

/// Proven: a covering theorem applies to the input exactly.
/// Depth-certified: membership was only searched up to a finite depth.
struct Certification {
  bool is_proven = false;
  int depth = 0;  // meaningful when !is_proven

  static Certification proven() { return {true, 0}; }
  static Certification depth_certified(int d) { return {false, d}; }
  bool operator==(const Certification&) const = default;
};

TriangleAngles triangle_angles(const AngleSet& u, const Tolerance& tol = {});

struct WallpaperResult {
  WallpaperClass wallpaper = WallpaperClass::P2;
  TriangleAngles triangle;
  std::vector<double> reflection_axes;  // sorted, in [0, pi)
  int rotation_order = 2;
  bool ambiguous = false;  // some comparison sat near the eps_angle boundary
};

// Counts equalities among the triangle angles: 0 -> p2, 1 -> cmm, 3 -> p6m.
// Two equalities cannot occur (they force the third).
WallpaperResult classify_wallpaper(const AngleSet& u, const Tolerance& tol = {});

// Reflection axes mandated by the triangle-angle equalities of a 3-angle
// set: alpha = gamma gives {0, pi/2}; alpha = rho gives {beta/2, beta/2 +
// pi/2}; rho = gamma gives {alpha/2, alpha/2 + pi/2}; unions when several
// equalities hold (six axes for the equilateral case).
std::vector<double> reflection_axes_3(const AngleSet& u, const Tolerance& tol = {});

// Whether u maps into itself under alpha -> alpha + theta (mod pi).
bool angle_set_rotation_closed(const AngleSet& u, const Angle& theta,
                               const Tolerance& tol = {});

// Whether u maps into itself under alpha -> 2*theta_axis - alpha (mod pi).
bool angle_set_reflection_closed(const AngleSet& u, double theta_axis,
                                 const Tolerance& tol = {});

/// Result of a point-membership query against the origami set.
struct Membership {
  bool member = false;
  bool exact = false;                 // decided by lattice arithmetic
  std::optional<int> found_depth;     // set when located by snapshot search
  int searched_depth = 0;             // bound used when not decided exactly

  static Membership found(int depth, bool exact_decision) {
    return {true, exact_decision, depth, depth};
  }
};

// For 3-angle sets, decides membership exactly through lattice coordinates
// (the search only locates the witness depth). Otherwise searches the
// bounded closure up to max_depth inside an automatic box around p; a miss
// is reported as not-found-up-to-depth, never as non-membership.
Membership point_in_M(const Point& p, const AngleSet& u, int max_depth,
                      const Tolerance& tol = {});

// Point group of the uniform set {k*pi/n}: Dihedral(2n) for odd n,
// Dihedral(n) for even n. Requires n >= 3.
PointGroup uniform_point_group(int n);

struct PointGroupResult {
  PointGroup group;
  Certification certification;
  int rotation_order = 2;
  std::vector<double> reflection_axes;  // sorted, in [0, pi)
  bool ambiguous = false;
};

struct ClassifyOptions {
  int max_depth = 3;
  Tolerance tol{};
  // Test hook: disable the covering-theorem shortcut for uniform sets so
  // the search path can be cross-checked against it.
  bool allow_uniform_fast_path = true;
};

// Uniform rational sets and 3-angle sets are classified by the covering
// theorems (proven). Anything else is classified by verified rotation and
// reflection closures: a symmetry counts only when the angle set is closed
// under it and its seed-image witness is found in the bounded closure.
PointGroupResult classify_point_group(const AngleSet& u, const ClassifyOptions& opts = {});

// An angle set whose point group is the target. KleinFour -> {0, pi/4,
// pi/2}; Cyclic(n), n even -> the uniform n-set with an extra offset
// pi/(4n) on the even positions; Dihedral(n) -> the uniform n-set (n
// divisible by 4) or the uniform n/2-set (n twice an odd number). Targets
// outside that list are unreachable.
AngleSet inverse_construct(const PointGroup& target);

}  // namespace origami
