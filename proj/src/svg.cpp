#include "quadell/svg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "quadell/family.hpp"

namespace quadell {

namespace {

class SvgWriter {
 public:
  explicit SvgWriter(const Isometry2& to_input) : to_input_(to_input) { os_.precision(10); }

  // Canonical point -> SVG user space (input frame, y pointing up).
  Point2 map(Point2 canonical) const {
    const Point2 p = to_input_.apply(canonical);
    return {p.x, -p.y};
  }

  std::ostringstream& out() { return os_; }

 private:
  Isometry2 to_input_;
  std::ostringstream os_;
};

}  // namespace

std::string render_svg(const CanonicalQuad& cq, const MinEccResult& r, const SvgOptions& opts) {
  SvgWriter svg(cq.iso.inverse());
  const Quad verts = cq.vertices();

  double min_x = INFINITY, min_y = INFINITY, max_x = -INFINITY, max_y = -INFINITY;
  for (const Point2& v : verts) {
    const Point2 p = svg.map(v);
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double w = max_x - min_x, h = max_y - min_y;
  const double pad = opts.padding * std::max(w, h);
  const double span = std::max(w, h);
  const double stroke = 0.004 * span;
  const double marker = opts.marker_radius * span;

  auto& os = svg.out();
  const double vb_w = w + 2 * pad, vb_h = h + 2 * pad;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << min_x - pad << " " << min_y - pad
     << " " << vb_w << " " << vb_h << "\" width=\"" << opts.width_px << "\" height=\""
     << static_cast<int>(std::lround(opts.width_px * vb_h / vb_w)) << "\">\n";

  os << "  <polygon class=\"quad\" fill=\"none\" stroke=\"black\" stroke-width=\"" << stroke
     << "\" points=\"";
  for (int i = 0; i < 4; ++i) {
    const Point2 p = svg.map(verts[i]);
    os << (i ? " " : "") << p.x << "," << p.y;
  }
  os << "\"/>\n";

  auto line = [&](const char* cls, const char* color, Point2 a, Point2 b) {
    const Point2 pa = svg.map(a), pb = svg.map(b);
    os << "  <line class=\"" << cls << "\" x1=\"" << pa.x << "\" y1=\"" << pa.y << "\" x2=\""
       << pb.x << "\" y2=\"" << pb.y << "\" stroke=\"" << color << "\" stroke-width=\""
       << stroke / 2 << "\"/>\n";
  };
  line("diagonal", "gray", verts[0], verts[2]);
  line("diagonal", "gray", verts[1], verts[3]);
  const NewtonSegment seg = newton_segment(cq);
  line("newton", "green", seg.m1, seg.m2);

  os << "  <path class=\"ellipse\" fill=\"none\" stroke=\"blue\" stroke-width=\"" << stroke
     << "\" d=\"";
  for (int k = 0; k < opts.ellipse_segments; ++k) {
    const Point2 p = svg.map(r.geom.trace(2 * std::numbers::pi * k / opts.ellipse_segments));
    os << (k ? " L " : "M ") << p.x << " " << p.y;
  }
  os << " Z\"/>\n";

  for (const TangencyPoint& tp : tangency_points(cq, r.h_star)) {
    const Point2 p = svg.map(tp.point);
    os << "  <circle class=\"tangency\" cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"" << marker
       << "\" fill=\"red\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace quadell
