#include "origami/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace origami {

namespace {

struct Frac {
  std::int64_t num = 1;
  std::int64_t den = 1;
};

Frac reduce(Frac f) {
  const std::int64_t g = std::gcd(f.num, f.den);
  return {f.num / g, f.den / g};
}

// gcd of two positive rationals.
Frac frac_gcd(Frac a, Frac b) {
  Frac r;
  r.num = std::gcd(a.num * b.den, b.num * a.den);
  r.den = a.den * b.den;
  return reduce(r);
}

// The angle as a fraction of pi in [0, 1): exact for rationals, continued
// fractions (denominator <= 4096) for reals. Empty when no small rational
// fits within eps_angle.
std::optional<Frac> pi_fraction(const Angle& a, const Tolerance& tol) {
  if (a.is_rational()) return Frac{a.num(), a.den()};
  const double x = a.value() / kPi;
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double xx = x;
  for (int it = 0; it < 64; ++it) {
    const auto ai = static_cast<std::int64_t>(std::floor(xx));
    const std::int64_t p2 = ai * p1 + p0;
    const std::int64_t q2 = ai * q1 + q0;
    if (q2 > 4096 || q2 <= 0) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    if (std::fabs(x - static_cast<double>(p1) / static_cast<double>(q1)) * kPi
        <= tol.eps_angle)
      return reduce(Frac{p1, q1});
    const double frac = xx - static_cast<double>(ai);
    if (frac < 1e-15) break;
    xx = 1.0 / frac;
  }
  return std::nullopt;
}

// Triangle-angle comparison that also reports near-threshold margins.
bool tri_equal(const Angle& a, const Angle& b, const Tolerance& tol, bool& ambiguous) {
  if (!(a.is_rational() && b.is_rational())) {
    const double margin = circular_distance_mod_pi(a.value(), b.value());
    if (margin > tol.eps_angle / 16.0 && margin < tol.eps_angle * 16.0) ambiguous = true;
  }
  return angle_equal(a, b, tol);
}

void add_axis(std::vector<double>& axes, double theta, const Tolerance& tol) {
  theta = Angle::radians(theta).value();
  for (double t : axes)
    if (circular_distance_mod_pi(t, theta) <= tol.eps_angle) return;
  axes.push_back(theta);
}

// Closure of u under the reflection whose doubled axis angle is two_theta
// (mod pi): every angle a must map to two_theta - a inside u.
bool reflection_closed_2theta(const AngleSet& u, const Angle& two_theta,
                              const Tolerance& tol) {
  for (const Angle& a : u)
    if (!u.contains(two_theta - a, tol)) return false;
  return true;
}

// n when u is exactly the uniform rational set {k*pi/n}, nothing otherwise.
std::optional<int> uniform_order(const AngleSet& u) {
  const int n = static_cast<int>(u.size());
  if (n < 3) return std::nullopt;
  for (int k = 0; k < n; ++k) {
    if (!u[static_cast<std::size_t>(k)].is_rational()) return std::nullopt;
    const Angle want = Angle::rational_pi(k, n);
    if (u[static_cast<std::size_t>(k)].num() != want.num() ||
        u[static_cast<std::size_t>(k)].den() != want.den())
      return std::nullopt;
  }
  return n;
}

PointGroupResult uniform_result(int n) {
  PointGroupResult r;
  r.group = uniform_point_group(n);
  r.rotation_order = r.group.n;
  r.certification = Certification::proven();
  const int lines = r.group.n;  // a regular m-gon has m mirror lines mod pi
  r.reflection_axes.reserve(static_cast<std::size_t>(lines));
  for (int k = 0; k < lines; ++k)
    r.reflection_axes.push_back(static_cast<double>(k) * kPi / lines);
  return r;
}

PointGroupResult classify_general(const AngleSet& u, const ClassifyOptions& opts) {
  const Tolerance& tol = opts.tol;
  PointGroupResult r;
  r.certification = Certification::depth_certified(opts.max_depth);

  // One bounded snapshot answers every witness query; all witnesses lie on
  // the unit circle, the box keeps the seeds and some slack around them.
  GenerateOptions gen;
  gen.bbox = Rect{-2.0, -2.0, 3.0, 2.0};
  gen.cap = kDefaultDenseCap;
  gen.tol = tol;
  const OrigamiSnapshot snap = generate(u, opts.max_depth, gen);
  const auto member = [&](const Point& w) { return snap.find(w, tol).has_value(); };

  // Rotations. Candidates are the nonzero angles and their pi-shifts; the
  // pi-rotation (negation) is always present. Every verified rotation
  // enters a gcd, so composite orders (e.g. 2pi/3 with pi giving pi/3)
  // come out right; with pi in the mix the order is always even.
  std::vector<Frac> found = {{1, 1}};
  for (std::size_t k = 1; k < u.size(); ++k) {
    const Angle& a = u[k];
    if (!angle_set_rotation_closed(u, a, tol)) continue;
    const auto [c, s] = a.cos_sin();
    const auto frac = pi_fraction(a, tol);
    for (int shift = 0; shift <= 1; ++shift) {
      const Point witness = shift == 0 ? Point{c, s} : Point{-c, -s};
      if (!member(witness)) continue;
      if (frac)
        found.push_back(reduce(Frac{frac->num + shift * frac->den, frac->den}));
      else
        r.ambiguous = true;  // verified but not expressible over pi
    }
  }
  Frac g{1, 1};
  for (const Frac& f : found) {
    g = frac_gcd(g, f);
    if (g.den > (std::int64_t{1} << 40)) {  // runaway lcm: bail out of this candidate
      r.ambiguous = true;
      g = Frac{1, 1};
      break;
    }
  }
  const int order = static_cast<int>(2 * g.den / g.num);
  r.rotation_order = order;

  // Reflections. An axis theta needs 2*theta congruent to some angle of u
  // (the image of 0), so the candidates are u[k]/2 and u[k]/2 + pi/2.
  for (std::size_t k = 0; k < u.size(); ++k) {
    const Angle& two_theta = u[k];
    if (!reflection_closed_2theta(u, two_theta, tol)) continue;
    const auto [c, s] = two_theta.cos_sin();
    if (member(Point{c, s})) add_axis(r.reflection_axes, two_theta.value() / 2.0, tol);
    if (member(Point{-c, -s}))
      add_axis(r.reflection_axes, two_theta.value() / 2.0 + kPi / 2.0, tol);
  }
  std::sort(r.reflection_axes.begin(), r.reflection_axes.end());

  if (r.reflection_axes.empty())
    r.group = PointGroup::cyclic(order);
  else if (order == 2)
    r.group = PointGroup::klein_four();
  else
    r.group = PointGroup::dihedral(order);
  return r;
}

}  // namespace

PointGroup as_dihedral(const PointGroup& g) {
  if (g.kind == PointGroup::Kind::KleinFour) return PointGroup::dihedral(2);
  return g;
}

TriangleAngles triangle_angles(const AngleSet& u, const Tolerance& tol) {
  if (u.size() != 3) raise(Errc::wrong_arity, "triangle angles need exactly 3 angles");
  (void)tol;
  TriangleAngles t;
  t.alpha = u[1];
  t.rho = u[2] - u[1];
  t.gamma = Angle::zero() - u[2];  // pi - beta, modulo pi
  return t;
}

WallpaperResult classify_wallpaper(const AngleSet& u, const Tolerance& tol) {
  WallpaperResult r;
  r.triangle = triangle_angles(u, tol);

  const int eq_ar = tri_equal(r.triangle.alpha, r.triangle.rho, tol, r.ambiguous);
  const int eq_ag = tri_equal(r.triangle.alpha, r.triangle.gamma, tol, r.ambiguous);
  const int eq_rg = tri_equal(r.triangle.rho, r.triangle.gamma, tol, r.ambiguous);
  const int count = eq_ar + eq_ag + eq_rg;

  switch (count) {
    case 0: r.wallpaper = WallpaperClass::P2; break;
    case 1: r.wallpaper = WallpaperClass::CMM; break;
    case 3: r.wallpaper = WallpaperClass::P6M; break;
    default:
      throw std::logic_error("two triangle-angle equalities without the third");
  }
  r.reflection_axes = reflection_axes_3(u, tol);
  r.rotation_order = count == 3 ? 6 : 2;
  return r;
}

std::vector<double> reflection_axes_3(const AngleSet& u, const Tolerance& tol) {
  const TriangleAngles t = triangle_angles(u, tol);
  bool ambiguous = false;
  std::vector<double> axes;
  if (tri_equal(t.alpha, t.gamma, tol, ambiguous)) {
    add_axis(axes, 0.0, tol);
    add_axis(axes, kPi / 2.0, tol);
  }
  if (tri_equal(t.alpha, t.rho, tol, ambiguous)) {
    const double half = (t.alpha.value() + t.rho.value()) / 2.0;
    add_axis(axes, half, tol);
    add_axis(axes, half + kPi / 2.0, tol);
  }
  if (tri_equal(t.rho, t.gamma, tol, ambiguous)) {
    const double half = t.alpha.value() / 2.0;
    add_axis(axes, half, tol);
    add_axis(axes, half + kPi / 2.0, tol);
  }
  std::sort(axes.begin(), axes.end());
  return axes;
}

bool angle_set_rotation_closed(const AngleSet& u, const Angle& theta, const Tolerance& tol) {
  for (const Angle& a : u)
    if (!u.contains(a + theta, tol)) return false;
  return true;
}

bool angle_set_reflection_closed(const AngleSet& u, double theta_axis, const Tolerance& tol) {
  return reflection_closed_2theta(u, normalize_angle(2.0 * theta_axis), tol);
}

Membership point_in_M(const Point& p, const AngleSet& u, int max_depth, const Tolerance& tol) {
  if (u.size() < 3) raise(Errc::too_few_angles, "membership needs at least 3 angles");
  if (max_depth < 1) raise(Errc::out_of_range, "max_depth must be >= 1");

  GenerateOptions gen;
  const double pad = 1.5;
  gen.bbox = Rect{std::min(0.0, p.re) - pad, std::min(0.0, p.im) - pad,
                  std::max(1.0, p.re) + pad, std::max(0.0, p.im) + pad};
  gen.cap = kDefaultDenseCap;
  gen.tol = tol;

  if (u.size() == 3) {
    const LatticeBasis basis = lattice_basis(u, tol);
    const auto [m, n] = lattice_coords(p, basis);
    const bool integral = std::fabs(m - std::round(m)) <= tol.eps_scalar &&
                          std::fabs(n - std::round(n)) <= tol.eps_scalar;
    Membership r;
    r.exact = true;
    r.searched_depth = max_depth;
    r.member = integral;
    if (integral) {
      const OrigamiSnapshot snap = generate(u, max_depth, gen);
      if (const auto idx = snap.find(p, tol))
        r.found_depth = snap.points[*idx].depth_found;
    }
    return r;
  }

  const OrigamiSnapshot snap = generate(u, max_depth, gen);
  Membership r;
  r.searched_depth = max_depth;
  if (const auto idx = snap.find(p, tol)) {
    r.member = true;
    r.found_depth = snap.points[*idx].depth_found;
  }
  return r;
}

PointGroup uniform_point_group(int n) {
  if (n < 3) raise(Errc::out_of_range, "uniform point groups start at n = 3");
  return n % 2 == 1 ? PointGroup::dihedral(2 * n) : PointGroup::dihedral(n);
}

PointGroupResult classify_point_group(const AngleSet& u, const ClassifyOptions& opts) {
  if (u.size() < 3) raise(Errc::too_few_angles, "classification needs at least 3 angles");

  if (opts.allow_uniform_fast_path) {
    if (const auto n = uniform_order(u)) return uniform_result(*n);
  }

  if (u.size() == 3) {
    const WallpaperResult w = classify_wallpaper(u, opts.tol);
    PointGroupResult r;
    r.certification = Certification::proven();
    r.reflection_axes = w.reflection_axes;
    r.rotation_order = w.rotation_order;
    r.ambiguous = w.ambiguous;
    switch (w.wallpaper) {
      case WallpaperClass::P2: r.group = PointGroup::cyclic(2); break;
      case WallpaperClass::CMM: r.group = PointGroup::klein_four(); break;
      case WallpaperClass::P6M: r.group = PointGroup::dihedral(6); break;
    }
    return r;
  }

  return classify_general(u, opts);
}

AngleSet inverse_construct(const PointGroup& target) {
  switch (target.kind) {
    case PointGroup::Kind::KleinFour:
      return AngleSet::of({Angle::zero(), Angle::rational_pi(1, 4), Angle::rational_pi(1, 2)});

    case PointGroup::Kind::Cyclic: {
      const int n = target.n;
      if (n < 2 || n % 2 != 0)
        raise(Errc::unreachable_group, "cyclic point groups exist only for even order");
      // Uniform n-set plus the offset pi/(4n) on even positions: the offset
      // kills every reflection while the order-n rotation survives.
      std::vector<Angle> angles;
      for (int k = 0; k < n; ++k) {
        angles.push_back(Angle::rational_pi(k, n));
        if (k % 2 == 0) angles.push_back(Angle::rational_pi(1 + 4 * k, 4 * n));
      }
      return AngleSet::of(std::move(angles));
    }

    case PointGroup::Kind::Dihedral: {
      const int n = target.n;
      if (n < 4 || n % 2 != 0)
        raise(Errc::unreachable_group,
              "dihedral targets need even order >= 4 (order 2 is the Klein four-group)");
      if (n % 4 == 2) return AngleSet::uniform(n / 2);  // odd half: D_{2m} from m angles
      return AngleSet::uniform(n);
    }
  }
  raise(Errc::unreachable_group, "unknown point-group kind");
}

}  // namespace origami
