#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "origami/svg_render.hpp"

using namespace origami;

namespace {

AngleSet p6m_set() {
  return AngleSet::of({Angle::zero(), Angle::rational_pi(1, 3), Angle::rational_pi(2, 3)});
}

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++count;
  return count;
}

// The renderer's line identity, recomputed independently: distinct
// (angle index, perpendicular offset) classes over the snapshot.
std::vector<std::pair<std::size_t, double>> distinct_lines(const OrigamiSnapshot& snap,
                                                           double eps) {
  std::vector<std::pair<std::size_t, double>> keys;
  for (std::size_t ai = 0; ai < snap.angle_set.size(); ++ai) {
    const auto [c, s] = snap.angle_set[ai].cos_sin();
    for (const SnapshotPoint& p : snap.points) {
      const double off = -s * p.pt.re + c * p.pt.im;
      bool dup = false;
      for (const auto& [k, o] : keys)
        if (k == ai && std::fabs(o - off) <= eps) { dup = true; break; }
      if (!dup) keys.emplace_back(ai, off);
    }
  }
  return keys;
}

}  // namespace

TEST_CASE("first-generation hexagonal render has 7 lines and 4 circles") {
  // 4 points (seeds, tau, its mirror) x 3 angles, minus the five shared
  // incidences, leaves 7 distinct lines; all points sit inside the box.
  const OrigamiSnapshot snap = generate(p6m_set(), 1);
  const Rect box{-1.0, -1.0, 2.0, 2.0};
  const std::string svg = render_svg(snap, box);
  CHECK(count_occurrences(svg, "<line ") == 7);
  CHECK(count_occurrences(svg, "<circle ") == 4);
  CHECK(distinct_lines(snap, 1e-9).size() == 7);
}

TEST_CASE("a far-away box renders nothing") {
  const OrigamiSnapshot snap = generate(p6m_set(), 1);
  const std::string svg = render_svg(snap, Rect{100.0, 100.0, 101.0, 101.0});
  CHECK(count_occurrences(svg, "<line ") == 0);
  CHECK(count_occurrences(svg, "<circle ") == 0);
}

TEST_CASE("rendering is byte-stable") {
  const OrigamiSnapshot snap = generate(p6m_set(), 2);
  const Rect box{-1.5, -2.0, 2.5, 2.0};
  CHECK(render_svg(snap, box) == render_svg(snap, box));
}

TEST_CASE("every circle sits on at least two rendered lines") {
  const OrigamiSnapshot snap = generate(p6m_set(), 2);
  const Rect box{-1.5, -2.0, 2.5, 2.0};
  const auto lines = distinct_lines(snap, 1e-9);
  for (const SnapshotPoint& p : snap.points) {
    if (!box.contains(p.pt)) continue;
    int incident = 0;
    for (const auto& [ai, off] : lines) {
      const auto [c, s] = snap.angle_set[ai].cos_sin();
      if (std::fabs(-s * p.pt.re + c * p.pt.im - off) <= 1e-9) ++incident;
    }
    CHECK(incident >= 2);
  }
}

TEST_CASE("svg rejects bad inputs") {
  const OrigamiSnapshot snap = generate(p6m_set(), 1);
  OrigamiSnapshot empty = snap;
  empty.points.clear();
  CHECK_THROWS_AS(render_svg(empty, Rect{0, 0, 1, 1}), Error);
  CHECK_THROWS_AS(render_svg(snap, Rect{0, 0, 0, 1}), Error);

  RenderStyle tiny;
  tiny.width_px = 32;
  CHECK_THROWS_AS(render_svg(snap, Rect{0, 0, 1, 1}, tiny), Error);
}

TEST_CASE("the viewBox flips the imaginary axis upward") {
  const OrigamiSnapshot snap = generate(p6m_set(), 1);
  const std::string svg = render_svg(snap, Rect{-1.0, -1.0, 2.0, 2.0});
  CHECK(svg.find("viewBox=\"-1.000000 -2.000000 3.000000 3.000000\"") != std::string::npos);
}
