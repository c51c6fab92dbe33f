#pragma once

#include <string>
#include <vector>

#include "origami/construction.hpp"

namespace origami {

struct RenderStyle {
  double stroke_width = 0.02;   // plane units
  double point_radius = 0.06;   // plane units
  std::vector<std::string> palette = {"#1f6fb2", "#7a3fa8", "#2f9e44",
                                      "#c0392b", "#b8860b", "#2f7f7f"};
  int width_px = 800;
  int height_px = 800;
};

// One <line> per distinct structure line (lines carrying several points are
// emitted once; identity is the pair (angle, signed offset from the
// origin)), clipped to bbox, plus one <circle> per point inside bbox.
// Element order is fixed by sorted keys, so equal inputs give byte-equal
// output. The y axis is flipped so the positive imaginary axis points up.
std::string render_svg(const OrigamiSnapshot& snap, const Rect& bbox,
                       const RenderStyle& style = {}, const Tolerance& tol = {});

}  // namespace origami
