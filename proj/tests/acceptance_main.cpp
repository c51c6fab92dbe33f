// Acceptance suite: every criterion prints one pass/fail line; the process
// exits with the number of failures. `--write-golden` regenerates the
// committed reference SVG.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "origami/algebra.hpp"
#include "origami/serialize.hpp"
#include "origami/svg_render.hpp"
#include "origami/symmetry.hpp"

using namespace origami;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, double seconds,
            const std::string& detail = "") {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " C" << id << " " << name << " ("
            << std::fixed << seconds << std::defaultfloat << "s)";
  if (!ok && !detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  if (!ok) ++failures;
}

void run(int id, const std::string& name, const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto t0 = Clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  report(id, name, ok, seconds, detail);
}

AngleSet p6m_set() {
  return AngleSet::of({Angle::zero(), Angle::rational_pi(1, 3), Angle::rational_pi(2, 3)});
}

AngleSet cmm_set() {
  return AngleSet::of({Angle::zero(), Angle::rational_pi(1, 4), Angle::rational_pi(1, 2)});
}

AngleSet p2_set() {
  return AngleSet::of({Angle::zero(), Angle::radians(std::asin(2.0 * std::sqrt(5.0) / 5.0)),
                       Angle::rational_pi(1, 2)});
}

bool integral(double v, double eps) { return std::fabs(v - std::round(v)) <= eps; }

Angle random_nonzero_angle(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(1, 11);
  std::uniform_int_distribution<int> den(2, 12);
  std::uniform_real_distribution<double> real(0.08, kPi - 0.08);
  std::bernoulli_distribution coin(0.5);
  if (coin(rng)) return Angle::rational_pi(num(rng), den(rng));
  return Angle::radians(real(rng));
}

AngleSet random_triple_mixed(std::mt19937& rng) {
  std::uniform_int_distribution<int> shape(0, 9);
  for (;;) {
    const int kind = shape(rng);
    Angle a = random_nonzero_angle(rng);
    Angle b;
    if (kind == 0) {
      return p6m_set();
    } else if (kind <= 2) {
      if (a.value() >= kPi / 2.0 - 0.05) continue;
      b = a.times(2);  // alpha = rho
    } else if (kind <= 4) {
      if (a.value() >= kPi / 2.0 - 0.05) continue;
      b = Angle::zero() - a;  // alpha = gamma
    } else if (kind <= 6) {
      if (a.is_rational())  // rho = gamma
        b = Angle::rational_pi(a.num() + a.den(), 2 * a.den());
      else
        b = Angle::radians((a.value() + kPi) / 2.0);
    } else {
      b = random_nonzero_angle(rng);
    }
    if (b.is_zero() || a.is_zero()) continue;
    if (circular_distance_mod_pi(a.value(), b.value()) < 0.05) continue;
    if (std::min(a.value(), b.value()) < 0.05) continue;
    if (std::max(a.value(), b.value()) > kPi - 0.05) continue;
    return AngleSet::of({Angle::zero(), a, b});
  }
}

// Independent verifier for criterion 12: candidate axes and the order-6
// rotation checked directly against angle-set and lattice closure.
WallpaperClass brute_force_wallpaper(const AngleSet& u, const Tolerance& tol) {
  const LatticeBasis basis = lattice_basis(u, tol);
  const Point one{1.0, 0.0};

  const auto lattice_closed = [&](auto&& map) {
    const auto in_lattice = [&](const Point& p) {
      const auto [m, n] = lattice_coords(p, basis);
      return integral(m, tol.eps_scalar) && integral(n, tol.eps_scalar);
    };
    return in_lattice(map(one)) && in_lattice(map(basis.tau));
  };
  const auto angles_reflection_closed = [&](double axis) {
    for (const Angle& a : u)
      if (!u.contains(normalize_angle(2.0 * axis - a.value()), tol)) return false;
    return true;
  };

  const bool rot6 = angle_set_rotation_closed(u, Angle::rational_pi(1, 3), tol) &&
                    lattice_closed([](const Point& p) { return rotate(p, kPi / 3.0); });

  const double alpha = u[1].value();
  const double beta = u[2].value();
  const double candidates[6] = {0.0,        kPi / 2.0,
                                beta / 2.0,  beta / 2.0 + kPi / 2.0,
                                alpha / 2.0, alpha / 2.0 + kPi / 2.0};
  int axes = 0;
  for (double theta : candidates)
    if (angles_reflection_closed(theta) &&
        lattice_closed([theta](const Point& p) { return reflect(p, theta); }))
      ++axes;

  if (rot6) return WallpaperClass::P6M;
  return axes > 0 ? WallpaperClass::CMM : WallpaperClass::P2;
}

std::string golden_render() {
  const OrigamiSnapshot snap = generate(p6m_set(), 2);
  return render_svg(snap, Rect{-1.5, -2.0, 2.5, 2.0}, RenderStyle{});
}

std::string golden_path() { return std::string(ORIGAMI_GOLDEN_DIR) + "/p6m_depth2.svg"; }

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1 && std::strcmp(argv[1], "--write-golden") == 0) {
    std::ofstream f(golden_path(), std::ios::binary);
    f << golden_render();
    std::cout << "wrote " << golden_path() << "\n";
    return 0;
  }

  run(1, "wallpaper classes of the three worked sets", [](std::string& detail) {
    const auto t0 = Clock::now();
    const bool ok = classify_wallpaper(p2_set()).wallpaper == WallpaperClass::P2 &&
                    classify_wallpaper(cmm_set()).wallpaper == WallpaperClass::CMM &&
                    classify_wallpaper(p6m_set()).wallpaper == WallpaperClass::P6M;
    const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    if (dt >= 1.0) detail = "took too long";
    if (!ok) detail = "class mismatch";
    return ok && dt < 1.0;
  });

  run(2, "hexagonal lattice basis", [](std::string& detail) {
    const LatticeBasis b = lattice_basis(p6m_set());
    const bool ok = std::fabs(b.tau.re - 0.5) < 1e-12 &&
                    std::fabs(b.tau.im - std::sqrt(3.0) / 2.0) < 1e-12;
    if (!ok) detail = "tau off target";
    return ok;
  });

  run(3, "lattice integrality at depth 3 (hexagonal + 100 random triples)",
      [](std::string& detail) {
        const auto t0 = Clock::now();
        const auto all_integral = [&](const AngleSet& u) {
          const LatticeBasis basis = lattice_basis(u);
          const OrigamiSnapshot snap = generate(u, 3);
          for (const SnapshotPoint& p : snap.points) {
            const auto [m, n] = lattice_coords(p.pt, basis);
            if (!integral(m, 1e-9) || !integral(n, 1e-9)) return false;
          }
          return true;
        };
        if (!all_integral(p6m_set())) {
          detail = "hexagonal set leaked off the lattice";
          return false;
        }
        std::mt19937 rng(101);
        for (int i = 0; i < 100; ++i) {
          const AngleSet u = random_triple_mixed(rng);
          if (!all_integral(u)) {
            detail = "random triple " + std::to_string(i) + " leaked off the lattice";
            return false;
          }
        }
        const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
        if (dt >= 30.0) {
          detail = "took too long";
          return false;
        }
        return true;
      });

  run(4, "claimed symmetries preserve the lattice", [](std::string& detail) {
    {
      const AngleSet u = p6m_set();
      const LatticeBasis basis = lattice_basis(u);
      for (const SnapshotPoint& p : generate(u, 3).points) {
        const auto [m, n] = lattice_coords(rotate(p.pt, kPi / 3.0), basis);
        if (!integral(m, 1e-9) || !integral(n, 1e-9)) {
          detail = "rotation by pi/3 broke hexagonal membership";
          return false;
        }
      }
    }
    const AngleSet u = cmm_set();
    const LatticeBasis basis = lattice_basis(u);
    for (const SnapshotPoint& p : generate(u, 3).points) {
      for (double axis : {kPi / 4.0, 3.0 * kPi / 4.0}) {
        const auto [m, n] = lattice_coords(reflect(p.pt, axis), basis);
        if (!integral(m, 1e-9) || !integral(n, 1e-9)) {
          detail = "reflection broke square-lattice membership";
          return false;
        }
      }
    }
    return true;
  });

  run(5, "uniform point groups for n = 3..8", [](std::string& detail) {
    const std::pair<int, PointGroup> table[] = {
        {3, PointGroup::dihedral(6)},  {4, PointGroup::dihedral(4)},
        {5, PointGroup::dihedral(10)}, {6, PointGroup::dihedral(6)},
        {7, PointGroup::dihedral(14)}, {8, PointGroup::dihedral(8)}};
    for (const auto& [n, want] : table) {
      if (!(uniform_point_group(n) == want)) {
        detail = "n = " + std::to_string(n);
        return false;
      }
      const PointGroupResult r = classify_point_group(AngleSet::uniform(n));
      if (!(r.group == want) || !r.certification.is_proven) {
        detail = "classify of uniform n = " + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  run(6, "pentagon rotation witness appears by depth 2", [](std::string& detail) {
    const Membership m = point_in_M({std::cos(kPi / 5.0), std::sin(kPi / 5.0)},
                                    AngleSet::uniform(5), 2);
    if (!m.member || !m.found_depth || *m.found_depth > 2) {
      detail = "witness not found";
      return false;
    }
    return true;
  });

  run(7, "chebyshev recurrence, ratio identity and parity", [](std::string& detail) {
    if (chebyshev_u(0).coeffs != std::vector<std::int64_t>{1} ||
        chebyshev_u(1).coeffs != std::vector<std::int64_t>{0, 2}) {
      detail = "base cases";
      return false;
    }
    std::mt19937 rng(103);
    std::uniform_real_distribution<double> dist(0.1, kPi - 0.1);
    for (int k = 0; k <= 20; ++k) {
      const IntPoly u = chebyshev_u(k);
      for (int s = 0; s < 100; ++s) {
        const double theta = dist(rng);
        const double want = std::sin((k + 1) * theta) / std::sin(theta);
        if (std::fabs(eval_poly(u, std::cos(theta)) - want) >= 1e-9) {
          detail = "trig identity at k = " + std::to_string(k);
          return false;
        }
      }
    }
    for (int k = 0; k <= 50; ++k)
      if (!chebyshev_parity_holds(k)) {
        detail = "parity at k = " + std::to_string(k);
        return false;
      }
    return true;
  });

  run(8, "projection sequence endpoints and chebyshev ratio", [](std::string& detail) {
    for (int n = 3; n <= 12; ++n) {
      const double c = Angle::rational_pi(1, n).cos_sin().first;
      if (projection_xk(n, 0) != 0.0 || projection_xk(n, 1) != 1.0 ||
          projection_xk(n, n - 2) != 4.0 * c * c) {
        detail = "endpoints at n = " + std::to_string(n);
        return false;
      }
      for (int k = 2; k <= n - 2; ++k) {
        const double via_ratio =
            1.0 + eval_poly(chebyshev_u(k - 2), c) / eval_poly(chebyshev_u(k), c);
        if (std::fabs(projection_xk(n, k) - via_ratio) >= 1e-12) {
          detail = "ratio identity at n = " + std::to_string(n) + ", k = " + std::to_string(k);
          return false;
        }
      }
    }
    return true;
  });

  run(9, "ring generators of the square and hexagonal sets", [](std::string& detail) {
    const RingDescription square = ring_description(AngleSet::uniform(4));
    const bool has_half =
        std::any_of(square.projections.begin(), square.projections.end(),
                    [](double v) { return std::fabs(v - 0.5) < 1e-12; });
    if (!has_half) {
      detail = "square set lost 1/2";
      return false;
    }
    const RingDescription hex = ring_description(p6m_set());
    if (hex.projections.size() != 2) {
      detail = "hexagonal projections are not {0, 1}";
      return false;
    }
    for (double want : {0.0, 1.0}) {
      if (!std::any_of(hex.projections.begin(), hex.projections.end(),
                       [&](double v) { return std::fabs(v - want) < 1e-12; })) {
        detail = "hexagonal projections are not {0, 1}";
        return false;
      }
    }
    return true;
  });

  run(10, "six-angle example: order-6 rotations, no mirrors", [](std::string& detail) {
    const auto t0 = Clock::now();
    const AngleSet u = AngleSet::of(
        {Angle::zero(), Angle::rational_pi(1, 4), Angle::rational_pi(1, 3),
         Angle::rational_pi(7, 12), Angle::rational_pi(2, 3), Angle::rational_pi(11, 12)});
    const PointGroupResult r = classify_point_group(u);
    const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    if (!(r.group == PointGroup::cyclic(6))) {
      detail = "group is " + point_group_name(r.group);
      return false;
    }
    if (!r.reflection_axes.empty()) {
      detail = "spurious mirror axes";
      return false;
    }
    if (r.certification.is_proven || r.certification.depth > 3) {
      detail = "wrong certification";
      return false;
    }
    if (dt >= 60.0) {
      detail = "took too long";
      return false;
    }
    return true;
  });

  run(11, "inverse construction round-trips", [](std::string& detail) {
    const PointGroup targets[] = {PointGroup::klein_four(),  PointGroup::cyclic(4),
                                  PointGroup::cyclic(6),     PointGroup::dihedral(4),
                                  PointGroup::dihedral(6),   PointGroup::dihedral(10)};
    for (const PointGroup& g : targets) {
      const PointGroupResult r = classify_point_group(inverse_construct(g));
      if (!(r.group == g)) {
        detail = point_group_name(g) + " came back as " + point_group_name(r.group);
        return false;
      }
    }
    return true;
  });

  run(12, "independent 3-angle verifier agrees on 200 random triples",
      [](std::string& detail) {
        std::mt19937 rng(107);
        const Tolerance tol;
        for (int i = 0; i < 200; ++i) {
          const AngleSet u = random_triple_mixed(rng);
          if (classify_wallpaper(u, tol).wallpaper != brute_force_wallpaper(u, tol)) {
            detail = "disagreement on triple " + std::to_string(i);
            return false;
          }
        }
        return true;
      });

  run(13, "render determinism against the committed reference", [](std::string& detail) {
    const std::string a = golden_render();
    const std::string b = golden_render();
    if (a != b) {
      detail = "two renders differ";
      return false;
    }
    std::ifstream f(golden_path(), std::ios::binary);
    if (!f) {
      detail = "missing golden file " + golden_path();
      return false;
    }
    std::stringstream buf;
    buf << f.rdbuf();
    if (buf.str() != a) {
      detail = "render differs from the committed reference";
      return false;
    }
    return true;
  });

  std::cout << (failures == 0 ? "all criteria passed" : "criteria failed: ")
            << (failures == 0 ? "" : std::to_string(failures)) << "\n";
  return failures;
}
