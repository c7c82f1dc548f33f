#include "quadell/conic.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "quadell/error.hpp"

namespace quadell {

double Conic::norm() const {
  return std::sqrt(A * A + B * B + C * C + D * D + E * E + F * F);
}

Conic Conic::normalized() const {
  const double n = norm();
  const double sign = (A + C) < 0.0 ? -1.0 : 1.0;
  return scaled(sign / n);
}

Conic Conic::transformed(const Isometry2& iso) const {
  // Substitute p = M q + c where (M, c) is the inverse motion.
  const Isometry2 inv = iso.inverse();
  const Point2 c = inv.translation;
  const Point2 ex = inv.apply(Point2{1, 0}) - c;
  const Point2 ey = inv.apply(Point2{0, 1}) - c;

  Eigen::Matrix2d Q;
  Q << A, B / 2, B / 2, C;
  Eigen::Matrix2d M;
  M << ex.x, ey.x, ex.y, ey.y;
  const Eigen::Vector2d lin(D, E);
  const Eigen::Vector2d off(c.x, c.y);

  const Eigen::Matrix2d Qn = M.transpose() * Q * M;
  const Eigen::Vector2d ln = M.transpose() * (2 * Q * off + lin);
  const double fn = off.dot(Q * off) + lin.dot(off) + F;
  return {Qn(0, 0), Qn(0, 1) + Qn(1, 0), Qn(1, 1), ln(0), ln(1), fn};
}

EllipseTest is_ellipse(const Conic& raw) {
  const Conic c = (raw.A + raw.C) < 0.0 ? raw.scaled(-1.0) : raw;
  // Both sums cancel heavily for thin ellipses; extended precision keeps the
  // error down to what the rounding of the coefficients themselves allows.
  using L = long double;
  const L A = c.A, B = c.B, C = c.C, D = c.D, E = c.E, F = c.F;
  const L disc = 4 * A * C - B * B;
  EllipseTest t;
  t.discriminant = static_cast<double>(disc);
  t.nondegeneracy = static_cast<double>(C * D * D + A * E * E - B * D * E - F * disc);
  t.ellipse = t.discriminant > 0.0 && t.nondegeneracy > 0.0;
  return t;
}

Point2 EllipseGeometry::trace(double phi) const {
  const double th = major_axis_angle.value_or(0.0);
  const double x = a * std::cos(phi);
  const double y = b * std::sin(phi);
  return {center.x + x * std::cos(th) - y * std::sin(th),
          center.y + x * std::sin(th) + y * std::cos(th)};
}

EllipseGeometry geometry(const Conic& raw) {
  const EllipseTest test = is_ellipse(raw);
  if (!test.ellipse) throw GeometryError(ErrorCode::kNotAnEllipse, "conic is not an ellipse");
  const Conic c = (raw.A + raw.C) < 0.0 ? raw.scaled(-1.0) : raw;
  const double disc = test.discriminant;

  EllipseGeometry g;
  g.delta = 4 * test.nondegeneracy / (disc * disc);
  const double j = c.A + c.C;
  const double root = std::hypot(c.A - c.C, c.B);
  g.a = std::sqrt(g.delta * (j + root) / 2);
  // j - root == disc / (j + root); avoids cancellation for thin ellipses.
  g.b = std::sqrt(g.delta * (disc / (j + root)) / 2);
  g.axis_ratio_sq = (j - root) / (j + root);
  g.eccentricity = std::sqrt(2 * root / (j + root));
  {
    using L = long double;
    const L A = c.A, B = c.B, C = c.C, D = c.D, E = c.E;
    const L d = 4 * A * C - B * B;
    g.center = {static_cast<double>((B * E - 2 * C * D) / d), static_cast<double>((B * D - 2 * A * E) / d)};
  }

  if (root * root > 1e-24 * j * j) {
    Eigen::Matrix2d q;
    q << c.A, c.B / 2, c.B / 2, c.C;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es;
    es.computeDirect(q);
    // Eigenvalues come sorted ascending; the smaller one spans the major axis.
    const Eigen::Vector2d dir = es.eigenvectors().col(0);
    double th = std::atan2(dir(1), dir(0));
    if (th > std::numbers::pi / 2) th -= std::numbers::pi;
    if (th <= -std::numbers::pi / 2) th += std::numbers::pi;
    g.major_axis_angle = th;
  }
  return g;
}

double conjugate_diameter_angle(const EllipseGeometry& g) {
  const double ratio = g.b / g.a;
  if (ratio >= 1.0 - 1e-12) return std::numbers::pi / 2;
  return 2 * std::atan(ratio);
}

Line2 Line2::through(Point2 p, Point2 q) {
  if (p.x == q.x) return vertical_at(p.x);
  const double m = (q.y - p.y) / (q.x - p.x);
  return slope_intercept(m, p.y - m * p.x);
}

namespace {

double coefficient_scale(const Conic& c) {
  return std::max({std::abs(c.A), std::abs(c.B), std::abs(c.C), std::abs(c.D), std::abs(c.E),
                   std::abs(c.F)});
}

}  // namespace

Line2 tangent_line(const Conic& c, Point2 p, double tol) {
  const double scale = coefficient_scale(c) * std::max(1.0, p.x * p.x + p.y * p.y);
  if (std::abs(c(p)) > tol * scale)
    throw GeometryError(ErrorCode::kNotOnConic, "point is not on the conic");
  const Point2 g = c.gradient(p);
  const double gscale = coefficient_scale(c) * std::max(1.0, norm(p));
  if (norm(g) <= 1e-14 * gscale)
    throw GeometryError(ErrorCode::kSingularPoint, "conic gradient vanishes");
  if (std::abs(g.y) <= 1e-14 * gscale) return Line2::vertical_at(p.x);
  const double m = -g.x / g.y;
  return Line2::slope_intercept(m, p.y - m * p.x);
}

LineTangency line_tangency(const Conic& c, const Line2& line, double tol) {
  // Reduce to q2 z^2 + q1 z + q0 = 0 along the line.
  double q2, q1, q0;
  if (line.vertical) {
    const double x = line.x0;  // z = y
    q2 = c.C;
    q1 = c.B * x + c.E;
    q0 = c.A * x * x + c.D * x + c.F;
  } else {
    const double m = line.m, k = line.k;  // z = x
    q2 = c.A + c.B * m + c.C * m * m;
    q1 = c.B * k + 2 * c.C * m * k + c.D + c.E * m;
    q0 = c.C * k * k + c.E * k + c.F;
  }
  LineTangency out;
  out.discriminant = q1 * q1 - 4 * q2 * q0;
  const double scale = std::max({std::abs(q2), std::abs(q1), std::abs(q0)});
  out.relative = scale > 0.0 ? std::abs(out.discriminant) / (scale * scale) : 0.0;
  if (out.relative <= tol)
    out.kind = Tangency::kTangent;
  else
    out.kind = out.discriminant > 0.0 ? Tangency::kSecant : Tangency::kDisjoint;
  const double z = q2 != 0.0 ? -q1 / (2 * q2) : 0.0;
  out.touch = line.vertical ? Point2{line.x0, z} : Point2{z, line.m * z + line.k};
  return out;
}

}  // namespace quadell
