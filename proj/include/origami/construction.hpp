#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "origami/geometry.hpp"

namespace origami {

/// Sorted, deduplicated set of fold directions; always contains the angle 0.
class AngleSet {
public:
  // Sorts, removes duplicates (exact for rational pairs, eps_angle
  // otherwise; rational representatives win over equal reals) and checks
  // that 0 is present.
  static AngleSet of(std::vector<Angle> angles, const Tolerance& tol = {});

  // {k*pi/n : 0 <= k < n}.
  static AngleSet uniform(int n);

  std::size_t size() const { return angles_.size(); }
  const Angle& operator[](std::size_t i) const { return angles_[i]; }
  const std::vector<Angle>& angles() const { return angles_; }
  auto begin() const { return angles_.begin(); }
  auto end() const { return angles_.end(); }

  bool contains(const Angle& a, const Tolerance& tol = {}) const;

private:
  AngleSet() = default;
  std::vector<Angle> angles_;
};

struct Rect {
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  bool contains(const Point& p) const {
    return p.re >= x0 && p.re <= x1 && p.im >= y0 && p.im <= y1;
  }
};

struct SnapshotPoint {
  Point pt;
  int depth_found = 0;
};

/// Points of the origami set up to a given iteration depth, with the
/// iteration depth at which each point first appeared.
struct OrigamiSnapshot {
  std::vector<Angle> angle_set;
  int depth = 0;
  bool truncated = false;
  std::optional<Rect> bbox;
  std::vector<SnapshotPoint> points;

  std::optional<std::size_t> find(const Point& p, const Tolerance& tol = {}) const;
};

struct GenerateOptions {
  std::optional<Rect> bbox;
  std::optional<std::size_t> cap;
  Tolerance tol{};
};

// Applied when a dense set (more than 3 angles) is generated with neither
// bbox nor cap; the closure would otherwise grow without bound.
inline constexpr std::size_t kDefaultDenseCap = 200000;

// Iterates the closure from the seed points 0 and 1: each level intersects
// every pair of previous-level points under every ordered pair of distinct
// angles. Deterministic: points are visited in insertion order, angles in
// sorted order. Requires at least 3 angles and depth >= 1.
OrigamiSnapshot generate(const AngleSet& u, int depth, const GenerateOptions& opts = {});

// The set S of first-generation intersections {[[0,1]] : alpha < beta},
// deduplicated. Requires at least 2 angles.
std::vector<Point> initial_intersections(const AngleSet& u, const Tolerance& tol = {});

// The set P: real-axis projections of the points of s via every nonzero
// angle of u, deduplicated.
std::vector<double> projections(std::span<const Point> s, const AngleSet& u,
                                const Tolerance& tol = {});

/// Basis (1, tau) of the lattice generated by a 3-angle set.
struct LatticeBasis {
  Point tau;
};

// tau = [[0,1]] at the two nonzero angles. Requires exactly 3 angles.
LatticeBasis lattice_basis(const AngleSet& u, const Tolerance& tol = {});

// Real (m, n) with p = m + n*tau; p is a lattice member iff both are
// integers (within eps_scalar).
std::pair<double, double> lattice_coords(const Point& p, const LatticeBasis& basis);

// More than 3 angles force a dense point set; exactly 3 give a lattice.
bool is_dense(const AngleSet& u);

/// Module generators S and ring generators P of the origami set.
struct RingDescription {
  std::vector<Point> initial_intersections;
  std::vector<double> projections;
};

RingDescription ring_description(const AngleSet& u, const Tolerance& tol = {});

}  // namespace origami
