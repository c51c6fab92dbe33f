#include "origami/svg_render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace origami {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

// Clips base + t*dir to the box; false when the line misses it.
bool clip_line(const Point& base, double dx, double dy, const Rect& box,
               Point& a, Point& b) {
  double t0 = -1e18, t1 = 1e18;
  const double p[4] = {-dx, dx, -dy, dy};
  const double q[4] = {base.re - box.x0, box.x1 - base.re,
                       base.im - box.y0, box.y1 - base.im};
  for (int i = 0; i < 4; ++i) {
    if (std::fabs(p[i]) < 1e-15) {
      if (q[i] < 0.0) return false;  // parallel and outside the slab
      continue;
    }
    const double t = q[i] / p[i];
    if (p[i] < 0.0)
      t0 = std::max(t0, t);
    else
      t1 = std::min(t1, t);
  }
  if (t0 > t1) return false;
  a = {base.re + t0 * dx, base.im + t0 * dy};
  b = {base.re + t1 * dx, base.im + t1 * dy};
  return true;
}

}  // namespace

std::string render_svg(const OrigamiSnapshot& snap, const Rect& bbox,
                       const RenderStyle& style, const Tolerance& tol) {
  if (snap.points.empty()) raise(Errc::empty_render, "snapshot has no points");
  if (!(bbox.width() > 0.0 && bbox.height() > 0.0))
    raise(Errc::out_of_range, "bbox must have positive area");
  if (style.width_px < 64 || style.height_px < 64)
    raise(Errc::out_of_range, "pixel dimensions must be at least 64");
  if (!(style.stroke_width > 0.0 && style.point_radius > 0.0))
    raise(Errc::out_of_range, "stroke width and point radius must be positive");
  if (style.palette.empty()) raise(Errc::out_of_range, "palette must be non-empty");

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(style.width_px) + "\" height=\"" +
         std::to_string(style.height_px) + "\" viewBox=\"" + fmt(bbox.x0) + " " +
         fmt(-bbox.y1) + " " + fmt(bbox.width()) + " " + fmt(bbox.height()) + "\">\n";

  // Line identity is (angle index, signed perpendicular offset from the
  // origin); every point on a structure line reproduces the same key, so
  // each line is emitted once. Keys are sorted for stable output.
  for (std::size_t ai = 0; ai < snap.angle_set.size(); ++ai) {
    const auto [c, s] = snap.angle_set[ai].cos_sin();
    std::vector<double> offsets;
    for (const SnapshotPoint& p : snap.points)
      offsets.push_back(-s * p.pt.re + c * p.pt.im);
    std::sort(offsets.begin(), offsets.end());

    const std::string& color = style.palette[ai % style.palette.size()];
    double last = 0.0;
    bool have_last = false;
    for (double off : offsets) {
      if (have_last && off - last <= tol.eps_scalar) continue;
      last = off;
      have_last = true;
      const Point base{-s * off, c * off};  // closest point of the line to the origin
      Point a, b;
      if (!clip_line(base, c, s, bbox, a, b)) continue;
      svg += "  <line x1=\"" + fmt(a.re) + "\" y1=\"" + fmt(-a.im) + "\" x2=\"" +
             fmt(b.re) + "\" y2=\"" + fmt(-b.im) + "\" stroke=\"" + color +
             "\" stroke-width=\"" + fmt(style.stroke_width) + "\"/>\n";
    }
  }

  std::vector<Point> circles;
  for (const SnapshotPoint& p : snap.points)
    if (bbox.contains(p.pt)) circles.push_back(p.pt);
  std::sort(circles.begin(), circles.end(), [](const Point& a, const Point& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });
  for (const Point& p : circles)
    svg += "  <circle cx=\"" + fmt(p.re) + "\" cy=\"" + fmt(-p.im) + "\" r=\"" +
           fmt(style.point_radius) + "\" fill=\"#222222\"/>\n";

  svg += "</svg>\n";
  return svg;
}

}  // namespace origami
