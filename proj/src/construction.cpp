#include "origami/construction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace origami {

namespace {

// Intersections drifting this far out are dropped: they destroy the
// fixed-cell dedup grid and carry no classification signal.
constexpr double kMaxCoordinate = 1e9;

// Spatial hash over plane points, open addressing. Cells are 2*eps wide, so
// every point within eps of p lies in one of the four cells around p's
// quadrant; a lookup probes exactly those.
class PointIndex {
public:
  explicit PointIndex(double eps) : eps_(eps), inv_cell_(1.0 / (2.0 * eps)) {
    slots_.assign(kInitialSlots, Slot{});
  }

  std::optional<std::size_t> find(const Point& p,
                                  const std::vector<SnapshotPoint>& store) const {
    const double fx = p.re * inv_cell_;
    const double fy = p.im * inv_cell_;
    const std::int64_t cx = static_cast<std::int64_t>(std::floor(fx));
    const std::int64_t cy = static_cast<std::int64_t>(std::floor(fy));
    const std::int64_t sx = (fx - static_cast<double>(cx) < 0.5) ? -1 : 1;
    const std::int64_t sy = (fy - static_cast<double>(cy) < 0.5) ? -1 : 1;
    for (const std::int64_t x : {cx, cx + sx}) {
      for (const std::int64_t y : {cy, cy + sy}) {
        const std::uint64_t key = mix(x, y);
        for (std::size_t i = key & mask(); slots_[i].id != kEmpty; i = (i + 1) & mask()) {
          if (slots_[i].key == key && distance(store[slots_[i].id].pt, p) <= eps_)
            return slots_[i].id;
        }
      }
    }
    return std::nullopt;
  }

  void insert(const Point& p, std::size_t id) {
    if ((count_ + 1) * 5 > slots_.size() * 3) grow();
    const std::uint64_t key = mix(cell(p.re), cell(p.im));
    place(key, static_cast<std::uint32_t>(id));
    ++count_;
  }

private:
  static constexpr std::uint32_t kEmpty = 0xFFFFFFFFu;
  static constexpr std::size_t kInitialSlots = 1024;

  struct Slot {
    std::uint64_t key = 0;
    std::uint32_t id = kEmpty;
  };

  std::size_t mask() const { return slots_.size() - 1; }

  std::int64_t cell(double v) const {
    return static_cast<std::int64_t>(std::floor(v * inv_cell_));
  }

  static std::uint64_t mix(std::int64_t x, std::int64_t y) {
    std::uint64_t h = static_cast<std::uint64_t>(x) * 0x9E3779B97F4A7C15ull;
    h ^= static_cast<std::uint64_t>(y) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    h *= 0xFF51AFD7ED558CCDull;
    return h;
  }

  void place(std::uint64_t key, std::uint32_t id) {
    std::size_t i = key & mask();
    while (slots_[i].id != kEmpty) i = (i + 1) & mask();
    slots_[i] = Slot{key, id};
  }

  void grow() {
    std::vector<Slot> old = std::move(slots_);
    slots_.assign(old.size() * 2, Slot{});
    for (const Slot& s : old)
      if (s.id != kEmpty) place(s.key, s.id);
  }

  double eps_;
  double inv_cell_;
  std::size_t count_ = 0;
  std::vector<Slot> slots_;
};

}  // namespace

AngleSet AngleSet::of(std::vector<Angle> angles, const Tolerance& tol) {
  std::vector<Angle> kept;
  for (const Angle& a : angles) {
    bool dup = false;
    for (Angle& k : kept) {
      if (angle_equal(k, a, tol)) {
        if (a.is_rational() && !k.is_rational()) k = a;  // exact form wins
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(a);
  }
  std::sort(kept.begin(), kept.end(), angle_less);

  AngleSet set;
  set.angles_ = std::move(kept);
  if (set.angles_.empty() || !angle_equal(set.angles_.front(), Angle::zero(), tol))
    raise(Errc::invalid_angle_set, "angle set must contain the angle 0");
  return set;
}

AngleSet AngleSet::uniform(int n) {
  if (n < 1) raise(Errc::out_of_range, "uniform angle set needs n >= 1");
  std::vector<Angle> angles;
  angles.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) angles.push_back(Angle::rational_pi(k, n));
  return of(std::move(angles));
}

bool AngleSet::contains(const Angle& a, const Tolerance& tol) const {
  for (const Angle& x : angles_)
    if (angle_equal(x, a, tol)) return true;
  return false;
}

std::optional<std::size_t> OrigamiSnapshot::find(const Point& p, const Tolerance& tol) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (point_equal(points[i].pt, p, tol)) return i;
  return std::nullopt;
}

OrigamiSnapshot generate(const AngleSet& u, int depth, const GenerateOptions& opts) {
  if (u.size() < 3) raise(Errc::too_few_angles, "generation needs at least 3 angles");
  if (depth < 1) raise(Errc::out_of_range, "depth must be >= 1");

  std::size_t cap = opts.cap.value_or(
      (u.size() > 3 && !opts.bbox) ? kDefaultDenseCap : SIZE_MAX);
  if (cap == 0) cap = 1;

  OrigamiSnapshot snap;
  snap.angle_set = u.angles();
  snap.depth = depth;
  snap.bbox = opts.bbox;

  PointIndex index(opts.tol.eps_point);
  bool cap_reached = false;  // stops iteration; bbox pruning does not
  const auto admit = [&](const Point& p, int found_at) {
    if (opts.bbox && !opts.bbox->contains(p)) {
      snap.truncated = true;
      return;
    }
    if (std::fabs(p.re) > kMaxCoordinate || std::fabs(p.im) > kMaxCoordinate) {
      snap.truncated = true;
      return;
    }
    if (index.find(p, snap.points)) return;
    if (snap.points.size() >= cap) {
      snap.truncated = true;
      cap_reached = true;
      return;
    }
    index.insert(p, snap.points.size());
    snap.points.push_back({p, found_at});
  };

  admit(Point{0.0, 0.0}, 0);
  admit(Point{1.0, 0.0}, 0);

  // The 2x2 solve constants per ordered angle pair never change; hoisting
  // them (and the near-parallel rejections) out of the point loops keeps
  // the hot path free of trig and exceptions.
  struct SolvedPair {
    double ca, sa, inv_det_cb, inv_det_sb;
  };
  std::vector<SolvedPair> pairs;
  for (std::size_t a = 0; a < u.size(); ++a) {
    const auto [ca, sa] = u[a].cos_sin();
    for (std::size_t b = 0; b < u.size(); ++b) {
      if (a == b) continue;
      const auto [cb, sb] = u[b].cos_sin();
      const double det = cb * sa - ca * sb;  // sin(alpha - beta)
      if (!(u[a].is_rational() && u[b].is_rational()) &&
          std::fabs(det) < opts.tol.eps_scalar)
        continue;  // near-parallel real pair: no usable intersection
      pairs.push_back({ca, sa, cb / det, sb / det});
    }
  }

  for (int level = 1; level <= depth && !cap_reached; ++level) {
    const std::size_t n_prev = snap.points.size();
    for (std::size_t i = 0; i < n_prev && !cap_reached; ++i) {
      for (std::size_t j = i + 1; j < n_prev && !cap_reached; ++j) {
        const Point pi = snap.points[i].pt;
        const Point pj = snap.points[j].pt;
        const double dx = pj.re - pi.re;
        const double dy = pj.im - pi.im;
        for (const SolvedPair& sp : pairs) {
          const double r = sp.inv_det_cb * dy - sp.inv_det_sb * dx;
          admit(Point{pi.re + r * sp.ca, pi.im + r * sp.sa}, level);
          if (cap_reached) break;
        }
      }
    }
  }
  return snap;
}

std::vector<Point> initial_intersections(const AngleSet& u, const Tolerance& tol) {
  if (u.size() < 2) raise(Errc::too_few_angles, "need at least 2 angles");
  const Point zero{0.0, 0.0};
  const Point one{1.0, 0.0};
  std::vector<Point> s;
  for (std::size_t a = 0; a + 1 < u.size(); ++a) {
    for (std::size_t b = a + 1; b < u.size(); ++b) {
      const Point x = intersect(zero, one, u[a], u[b], tol);
      bool dup = false;
      for (const Point& e : s)
        if (point_equal(e, x, tol)) { dup = true; break; }
      if (!dup) s.push_back(x);
    }
  }
  return s;
}

std::vector<double> projections(std::span<const Point> s, const AngleSet& u,
                                const Tolerance& tol) {
  std::vector<double> p;
  for (const Point& q : s) {
    for (const Angle& beta : u) {
      if (angle_equal(beta, Angle::zero(), tol)) continue;
      const double x = project_to_real(q, beta, tol);
      bool dup = false;
      for (double e : p)
        if (std::fabs(e - x) <= tol.eps_scalar) { dup = true; break; }
      if (!dup) p.push_back(x);
    }
  }
  return p;
}

LatticeBasis lattice_basis(const AngleSet& u, const Tolerance& tol) {
  if (u.size() != 3) raise(Errc::wrong_arity, "lattice basis needs exactly 3 angles");
  return {intersect(Point{0.0, 0.0}, Point{1.0, 0.0}, u[1], u[2], tol)};
}

std::pair<double, double> lattice_coords(const Point& p, const LatticeBasis& basis) {
  const double n = p.im / basis.tau.im;
  const double m = p.re - n * basis.tau.re;
  return {m, n};
}

bool is_dense(const AngleSet& u) {
  if (u.size() < 3) raise(Errc::too_few_angles, "density needs at least 3 angles");
  return u.size() > 3;
}

RingDescription ring_description(const AngleSet& u, const Tolerance& tol) {
  if (u.size() < 3) raise(Errc::too_few_angles, "ring description needs at least 3 angles");
  RingDescription r;
  r.initial_intersections = initial_intersections(u, tol);
  r.projections = projections(r.initial_intersections, u, tol);
  return r;
}

}  // namespace origami
