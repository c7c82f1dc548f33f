#pragma once

#include <string>

#include "quadell/minecc.hpp"
#include "quadell/quad.hpp"

namespace quadell {

struct SvgOptions {
  int ellipse_segments = 256;
  double padding = 0.10;      // fraction of the bounding box
  double marker_radius = 0.005;  // fraction of the larger bounding-box side
  int width_px = 800;
};

/// Figure in input coordinates: the quad, both diagonals, the Newton
/// segment, the minimal ellipse and its four contact points.
std::string render_svg(const CanonicalQuad& cq, const MinEccResult& result,
                       const SvgOptions& opts = {});

}  // namespace quadell
