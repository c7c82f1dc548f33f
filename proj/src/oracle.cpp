#include "quadell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "quadell/error.hpp"
#include "quadell/family.hpp"

namespace quadell::oracle {

OracleReport make_report(std::string name, double worst, double tolerance, std::string location) {
  return {std::move(name), worst <= tolerance, worst, tolerance, std::move(location)};
}

double fd_gradient(const ScalarFn& f, double h, double step) {
  return (f(h + step) - f(h - step)) / (2 * step);
}

GridMax grid_argmax(const ScalarFn& f, double lo, double hi, int n) {
  GridMax best{lo + (hi - lo) / (n + 1), -std::numeric_limits<double>::infinity()};
  for (int k = 1; k <= n; ++k) {
    const double h = lo + k * (hi - lo) / (n + 1);
    const double value = f(h);
    if (value > best.value) best = {h, value};
  }
  return best;
}

namespace {

// Side lines as unit normals pointing into the quad: n.p + c >= 0 inside.
struct SideLine {
  Point2 normal;
  double offset;
  double distance(Point2 p) const { return dot(normal, p) + offset; }
};

std::array<SideLine, 4> side_lines(const CanonicalQuad& cq) {
  const Quad q = cq.vertices();
  Point2 centroid{};
  for (const Point2& p : q) centroid = centroid + 0.25 * p;
  std::array<SideLine, 4> out;
  // S1..S4 as (0,0)-(v,w), (0,0)-(0,u), (0,u)-(s,t), (s,t)-(v,w)
  const std::array<std::pair<Point2, Point2>, 4> sides{
      {{q[0], q[3]}, {q[0], q[1]}, {q[1], q[2]}, {q[2], q[3]}}};
  for (int i = 0; i < 4; ++i) {
    const auto [a, b] = sides[i];
    const Point2 d = b - a;
    Point2 n{-d.y, d.x};
    n = (1.0 / norm(n)) * n;
    SideLine line{n, -dot(n, a)};
    if (line.distance(centroid) < 0.0) line = {-1.0 * n, dot(n, a)};
    out[i] = line;
  }
  return out;
}

std::string describe(Point2 p) {
  std::ostringstream os;
  os.precision(10);
  os << "(" << p.x << ", " << p.y << ")";
  return os.str();
}

}  // namespace

OracleReport containment(const Conic& conic, const CanonicalQuad& cq, int n, double tol) {
  const EllipseGeometry g = geometry(conic);
  const auto lines = side_lines(cq);
  double worst = -std::numeric_limits<double>::infinity();
  Point2 where{};
  for (int k = 0; k < n; ++k) {
    const Point2 p = g.trace(2 * std::numbers::pi * k / n);
    for (const SideLine& line : lines) {
      const double excursion = -line.distance(p);
      if (excursion > worst) {
        worst = excursion;
        where = p;
      }
    }
  }
  return make_report("containment", worst / cq.diameter(), tol, "ellipse point " + describe(where));
}

OracleReport side_tangency(const Conic& conic, const CanonicalQuad& cq, double tol) {
  const Conic c = conic.normalized();
  const Quad q = cq.vertices();
  const std::array<std::pair<Point2, Point2>, 4> sides{
      {{q[0], q[3]}, {q[0], q[1]}, {q[1], q[2]}, {q[2], q[3]}}};
  double worst = 0.0;
  int worst_side = 1;
  for (int i = 0; i < 4; ++i) {
    const LineTangency lt = line_tangency(c, Line2::through(sides[i].first, sides[i].second), tol);
    if (lt.relative > worst) {
      worst = lt.relative;
      worst_side = i + 1;
    }
  }
  return make_report("side_tangency", worst, tol, "side S" + std::to_string(worst_side));
}

Incircle incircle(const CanonicalQuad& cq, double tol) {
  const Quad q = cq.vertices();
  auto unit = [](Point2 p) { return (1.0 / norm(p)) * p; };
  // Bisector directions at (0,0) and (0,u).
  const Point2 d0 = unit(q[1] - q[0]) + unit(q[3] - q[0]);
  const Point2 d1 = unit(q[0] - q[1]) + unit(q[2] - q[1]);
  // q0 + a d0 = q1 + b d1
  const double det = cross(d0, d1);
  const double a = cross(q[1] - q[0], d1) / det;
  const Point2 center = q[0] + a * d0;

  const auto lines = side_lines(cq);
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (const SideLine& line : lines) {
    const double d = line.distance(center);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  if (hi - lo > tol * cq.diameter())
    throw GeometryError(ErrorCode::kNotTangential, "quadrilateral has no incircle");
  return {center, lines[0].distance(center)};
}

std::vector<OracleReport> verify_solution(const CanonicalQuad& cq, const MinEccResult& r,
                                          const VerifyOptions& opts) {
  std::vector<OracleReport> out;
  const double width = cq.h_width();
  out.push_back(containment(r.conic, cq, opts.containment_samples));
  out.push_back(side_tangency(r.conic, cq));

  const ScalarFn g = [&](double h) { return g_value(cq, h); };
  if (!r.tangential_circle) {
    const double slope = fd_gradient(g, r.h_star, 1e-6 * width);
    out.push_back(make_report("stationarity", std::abs(slope) * width / r.g_at_h, 1e-6,
                              "finite-difference G' at h*, scaled by |I|/G"));
  }

  const GridMax grid = grid_argmax(g, cq.h_lo(), cq.h_hi(), opts.grid_samples);
  out.push_back(make_report("grid_argmax", std::abs(grid.h - r.h_star) / width,
                            2.0 / opts.grid_samples, "grid maximizer vs h*, fraction of |I|"));

  if (r.numeric_h) {
    out.push_back(make_report("closed_vs_numeric", std::abs(*r.numeric_h - r.h_star) / width,
                              1e-9, "numeric maximizer vs closed form, fraction of |I|"));
  }
  if (r.classification.is_mdq()) {
    out.push_back(make_report("angle_theorem", r.residual, 1e-8, "|Gamma - alpha| in radians"));
  }
  if (r.tangential_circle) {
    double gap = std::numeric_limits<double>::infinity();
    try {
      const Incircle ic = incircle(cq);
      gap = std::max(distance(ic.center, r.geom.center),
                     std::abs(ic.radius - r.geom.a)) / cq.diameter();
    } catch (const GeometryError&) {
    }
    out.push_back(make_report("incircle", gap, 1e-6, "incircle vs minimal ellipse, fraction of diameter"));
  }
  return out;
}

}  // namespace quadell::oracle
