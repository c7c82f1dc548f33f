#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quadell/point.hpp"

namespace quadell {

/// Default relative tolerance for every classification comparison.
inline constexpr double kDefaultTolerance = 1e-9;

/// A convex quadrilateral placed by an isometry so that its vertices, going
/// clockwise, are (0,0), (0,u), (s,t), (v,w), with s,v,u > 0 and t > w.
///
/// Sides: S1 = (0,0)-(v,w), S2 = (0,0)-(0,u), S3 = (0,u)-(s,t),
/// S4 = (s,t)-(v,w). Diagonals: D1 = (0,0)-(s,t), D2 = (0,u)-(v,w).
struct CanonicalQuad {
  double s = 0.0;
  double t = 0.0;
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
  /// Maps raw input coordinates to canonical coordinates.
  Isometry2 iso{};

  /// Canonical vertices in clockwise order (0,0), (0,u), (s,t), (v,w).
  Quad vertices() const { return {{{0.0, 0.0}, {0.0, u}, {s, t}, {v, w}}}; }

  /// Lower and upper end of the open interval of admissible h.
  double h_lo() const { return 0.5 * std::min(s, v); }
  double h_hi() const { return 0.5 * std::max(s, v); }
  double h_width() const { return h_hi() - h_lo(); }
  double diameter() const;
};

/// Builds a CanonicalQuad straight from parameters (identity isometry) after
/// checking the placement inequalities and the non-parallel conditions.
/// Throws GeometryError(kNoValidLabeling / kTrapezoid) when violated.
CanonicalQuad make_canonical(double s, double t, double u, double v, double w,
                             double tol = kDefaultTolerance);

/// Reorders four points clockwise, keeping the first vertex in place.
/// Throws GeometryError(kDegenerate) for repeated/collinear points and
/// GeometryError(kNotConvex) when no convex ordering exists.
Quad validate(std::span<const Point2> raw);

/// Places the quadrilateral canonically. The input's own clockwise labeling
/// is kept when it is admissible; otherwise the admissible labeling (out of
/// the 8 dihedral ones) with the largest t - w wins, ties going to larger s.
CanonicalQuad canonicalize(std::span<const Point2> raw, double tol = kDefaultTolerance);

/// Every admissible labeling of the clockwise quad, in enumeration order
/// (start vertex 0..3, then clockwise before mirrored). Trapezoids are not
/// filtered here.
std::vector<CanonicalQuad> admissible_labelings(const Quad& clockwise);

enum class QuadKind { kGeneral, kMdqType1, kMdqType2 };

std::string to_string(QuadKind kind);

struct QuadClass {
  QuadKind kind = QuadKind::kGeneral;
  bool tangential = false;
  bool orthodiagonal = false;
  /// Named residuals, always reported (kept in a fixed order).
  std::vector<std::pair<std::string, double>> residuals;

  bool is_mdq() const { return kind != QuadKind::kGeneral; }
  double residual(const std::string& name) const;
};

QuadClass classify(const CanonicalQuad& cq, double tol = kDefaultTolerance);

/// Segment joining the midpoints of the diagonals; it carries the centers of
/// all inscribed ellipses.
struct NewtonSegment {
  Point2 m1;  // midpoint of D2
  Point2 m2;  // midpoint of D1
  double lo = 0.0;
  double hi = 0.0;
  double slope = 0.0;
  double intercept = 0.0;

  double at(double x) const { return slope * x + intercept; }
};

NewtonSegment newton_segment(const CanonicalQuad& cq);

/// Slopes of D1 and D2 in canonical coordinates.
std::pair<double, double> diagonal_slopes(const CanonicalQuad& cq);

/// Smallest non-negative angle between the diagonals, in [0, pi/2].
double diagonal_angle(const CanonicalQuad& cq);

/// tan(alpha) through the type-1 closed form 2s(vt-ws)/|(t^2-s^2)v-2wts|.
double tan_diagonal_angle_type1(const CanonicalQuad& cq);

struct TangentialResiduals {
  double z = 0.0;           // the quartic-in-squares tangency quantity
  double z_relative = 0.0;  // |z| over the magnitude of its two terms
  double pitot = 0.0;       // |S1| + |S3| - |S2| - |S4|
  double type1_condition = 0.0;  // v(t^2-s^2) - 2wst
  double type2_condition = 0.0;  // 2(vs+wt) - (s^2+t^2)
};

TangentialResiduals tangential_residuals(const CanonicalQuad& cq);

/// If some other labeling of the same quadrilateral is an admissible type-1
/// placement, returns it together with the isometry taking `cq`'s canonical
/// coordinates to the new canonical coordinates.
struct Relabeling {
  CanonicalQuad quad;
  Isometry2 from_original;
};
std::optional<Relabeling> relabel_to_type1(const CanonicalQuad& cq,
                                           double tol = kDefaultTolerance);

}  // namespace quadell
