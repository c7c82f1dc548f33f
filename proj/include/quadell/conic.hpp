#pragma once

#include <optional>

#include "quadell/point.hpp"

namespace quadell {

/// A x^2 + B xy + C y^2 + D x + E y + F = 0
struct Conic {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double D = 0.0;
  double E = 0.0;
  double F = 0.0;

  double operator()(Point2 p) const {
    return A * p.x * p.x + B * p.x * p.y + C * p.y * p.y + D * p.x + E * p.y + F;
  }
  Point2 gradient(Point2 p) const {
    return {2 * A * p.x + B * p.y + D, B * p.x + 2 * C * p.y + E};
  }

  /// Euclidean norm of the six coefficients.
  double norm() const;

  /// Unit coefficient norm with A + C > 0.
  Conic normalized() const;

  Conic scaled(double k) const { return {k * A, k * B, k * C, k * D, k * E, k * F}; }

  /// The same curve expressed in the coordinates produced by `iso`, i.e. the
  /// returned conic vanishes at iso.apply(p) exactly when *this vanishes at p.
  Conic transformed(const Isometry2& iso) const;
};

struct EllipseTest {
  bool ellipse = false;
  double discriminant = 0.0;    // 4AC - B^2
  double nondegeneracy = 0.0;   // CD^2 + AE^2 - BDE - F(4AC - B^2), with A + C > 0
};

EllipseTest is_ellipse(const Conic& c);

struct EllipseGeometry {
  Point2 center;
  double a = 0.0;  // semi-major
  double b = 0.0;  // semi-minor
  double eccentricity = 0.0;
  /// Direction of the major axis in (-pi/2, pi/2]; empty for a circle.
  std::optional<double> major_axis_angle;
  double delta = 0.0;
  /// b^2/a^2 evaluated without forming a and b.
  double axis_ratio_sq = 0.0;

  /// Point at parameter phi on the ellipse.
  Point2 trace(double phi) const;
};

/// Throws GeometryError(kNotAnEllipse) unless is_ellipse(c).
EllipseGeometry geometry(const Conic& c);

/// Angle between the two equal conjugate diameters, 2 atan(b/a), in (0, pi/2];
/// exactly pi/2 for circles.
double conjugate_diameter_angle(const EllipseGeometry& g);

/// y = m x + k, or x = x0 when vertical.
struct Line2 {
  bool vertical = false;
  double m = 0.0;
  double k = 0.0;
  double x0 = 0.0;

  static Line2 slope_intercept(double m, double k) { return {false, m, k, 0.0}; }
  static Line2 vertical_at(double x0) { return {true, 0.0, 0.0, x0}; }
  static Line2 through(Point2 p, Point2 q);
};

/// Slope of the conic's tangent at p: -Psi_x / Psi_y, or a vertical line.
/// Throws kNotOnConic if |Psi(p)| exceeds tol times the coefficient scale,
/// and kSingularPoint when the gradient vanishes.
Line2 tangent_line(const Conic& c, Point2 p, double tol = 1e-9);

enum class Tangency { kDisjoint, kTangent, kSecant };

struct LineTangency {
  Tangency kind = Tangency::kDisjoint;
  double discriminant = 0.0;
  /// Relative discriminant, |disc| / (coefficient scale)^2.
  double relative = 0.0;
  /// Foot of the double root (meaningful when tangent).
  Point2 touch;
};

LineTangency line_tangency(const Conic& c, const Line2& line, double tol = 1e-9);

}  // namespace quadell
