#include "quadell/quad.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "quadell/error.hpp"

namespace quadell {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotConvex: return "not_convex";
    case ErrorCode::kDegenerate: return "degenerate";
    case ErrorCode::kTrapezoid: return "trapezoid";
    case ErrorCode::kNoValidLabeling: return "no_valid_labeling";
    case ErrorCode::kNotAnEllipse: return "not_an_ellipse";
    case ErrorCode::kNotOnConic: return "not_on_conic";
    case ErrorCode::kSingularPoint: return "singular_point";
    case ErrorCode::kHOutOfRange: return "h_out_of_range";
    case ErrorCode::kCircularPoint: return "circular_point";
    case ErrorCode::kNotType1: return "not_type1";
    case ErrorCode::kNotTangential: return "not_tangential";
  }
  return "unknown";
}

namespace {

double diameter_of(std::span<const Point2> pts) {
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, distance(pts[i], pts[j]));
  return d;
}

double signed_area(const Quad& q) {
  double a = 0.0;
  for (int i = 0; i < 4; ++i) a += cross(q[i], q[(i + 1) % 4]);
  return 0.5 * a;
}

bool strictly_inside_triangle(Point2 p, Point2 a, Point2 b, Point2 c) {
  const double d1 = cross(b - a, p - a);
  const double d2 = cross(c - b, p - b);
  const double d3 = cross(a - c, p - c);
  return (d1 > 0 && d2 > 0 && d3 > 0) || (d1 < 0 && d2 < 0 && d3 < 0);
}

// Sine of the angle between two direction vectors.
double parallel_sine(Point2 a, Point2 b) { return std::abs(cross(a, b)) / (norm(a) * norm(b)); }

// Opposite sides parallel (within tol, as a sine) for a clockwise quad.
bool has_parallel_sides(const Quad& q, double tol) {
  const Point2 e0 = q[1] - q[0], e1 = q[2] - q[1], e2 = q[3] - q[2], e3 = q[0] - q[3];
  return parallel_sine(e0, e2) <= tol || parallel_sine(e1, e3) <= tol;
}

CanonicalQuad place(const Quad& cw, int start, bool mirrored) {
  Quad q;
  for (int k = 0; k < 4; ++k) {
    const int idx = mirrored ? (start - k + 4) % 4 : (start + k) % 4;
    q[k] = cw[idx];
  }
  Point2 q0 = q[0], q1 = q[1];
  if (mirrored) {
    q0.x = -q0.x;
    q1.x = -q1.x;
  }
  const Point2 e = q1 - q0;
  const double phi = std::numbers::pi / 2 - std::atan2(e.y, e.x);
  Isometry2 iso{phi, {}, mirrored};
  iso.translation = -1.0 * iso.apply(q[0]) + Point2{0.0, 0.0};  // no -0

  CanonicalQuad cq;
  cq.iso = iso;
  cq.u = norm(e);
  const Point2 p2 = iso.apply(q[2]);
  const Point2 p3 = iso.apply(q[3]);
  cq.s = p2.x;
  cq.t = p2.y;
  cq.v = p3.x;
  cq.w = p3.y;
  return cq;
}

bool satisfies_placement(const CanonicalQuad& cq, double margin) {
  return cq.s > margin && cq.v > margin && cq.u > margin && cq.t - cq.w > margin;
}

}  // namespace

double CanonicalQuad::diameter() const {
  const Quad q = vertices();
  return diameter_of(q);
}

CanonicalQuad make_canonical(double s, double t, double u, double v, double w, double tol) {
  CanonicalQuad cq{s, t, u, v, w, Isometry2::identity()};
  if (!(std::isfinite(s) && std::isfinite(t) && std::isfinite(u) && std::isfinite(v) &&
        std::isfinite(w)))
    throw GeometryError(ErrorCode::kDegenerate, "non-finite canonical parameter");
  if (!satisfies_placement(cq, 0.0))
    throw GeometryError(ErrorCode::kNoValidLabeling, "parameters violate s,v,u > 0, t > w");
  if (!(v * (t - u) + (u - w) * s > 0.0 && v * t - w * s > 0.0))
    throw GeometryError(ErrorCode::kNotConvex, "parameters do not describe a convex quadrilateral");
  if (has_parallel_sides(cq.vertices(), tol))
    throw GeometryError(ErrorCode::kTrapezoid, "trapezoid/parallelogram unsupported");
  return cq;
}

Quad validate(std::span<const Point2> raw) {
  if (raw.size() != 4)
    throw GeometryError(ErrorCode::kDegenerate, "a quadrilateral needs exactly 4 vertices");
  for (const Point2& p : raw)
    if (!is_finite(p)) throw GeometryError(ErrorCode::kDegenerate, "non-finite vertex");

  const double diam = diameter_of(raw);
  const double eps = 1e-12;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (distance(raw[i], raw[j]) <= eps * diam)
        throw GeometryError(ErrorCode::kDegenerate, "repeated vertex");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (std::size_t k = j + 1; k < 4; ++k)
        if (std::abs(cross(raw[j] - raw[i], raw[k] - raw[i])) <= eps * diam * diam)
          throw GeometryError(ErrorCode::kDegenerate, "three collinear vertices");

  for (std::size_t i = 0; i < 4; ++i) {
    std::array<Point2, 3> others;
    std::size_t n = 0;
    for (std::size_t j = 0; j < 4; ++j)
      if (j != i) others[n++] = raw[j];
    if (strictly_inside_triangle(raw[i], others[0], others[1], others[2]))
      throw GeometryError(ErrorCode::kNotConvex, "a vertex lies inside the triangle of the others");
  }

  // Points are in convex position: sort them around the centroid, clockwise,
  // then rotate the cycle so the first input vertex stays first.
  Point2 c{};
  for (const Point2& p : raw) c = c + 0.25 * p;
  std::array<std::size_t, 4> order{0, 1, 2, 3};
  auto angle_of = [&](std::size_t i) { return std::atan2(raw[i].y - c.y, raw[i].x - c.x); };
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return angle_of(a) > angle_of(b); });
  const auto first = std::find(order.begin(), order.end(), std::size_t{0});
  std::rotate(order.begin(), first, order.end());

  Quad out;
  for (int k = 0; k < 4; ++k) out[k] = raw[order[k]];
  if (signed_area(out) >= 0.0)
    throw GeometryError(ErrorCode::kNotConvex, "could not orient quadrilateral clockwise");
  return out;
}

std::vector<CanonicalQuad> admissible_labelings(const Quad& clockwise) {
  const double margin = 1e-12 * diameter_of(clockwise);
  std::vector<CanonicalQuad> out;
  for (int start = 0; start < 4; ++start) {
    for (bool mirrored : {false, true}) {
      CanonicalQuad cq = place(clockwise, start, mirrored);
      if (satisfies_placement(cq, margin)) out.push_back(cq);
    }
  }
  return out;
}

CanonicalQuad canonicalize(std::span<const Point2> raw, double tol) {
  const Quad cw = validate(raw);
  if (has_parallel_sides(cw, tol))
    throw GeometryError(ErrorCode::kTrapezoid, "trapezoid/parallelogram unsupported");

  const std::vector<CanonicalQuad> candidates = admissible_labelings(cw);
  if (candidates.empty())
    throw GeometryError(ErrorCode::kNoValidLabeling, "no labeling satisfies s,v,u > 0, t > w");

  // The input's own labeling is the first candidate when it is admissible.
  const CanonicalQuad own = place(cw, 0, false);
  if (satisfies_placement(own, 1e-12 * diameter_of(cw))) return own;

  const double tie = 1e-9 * diameter_of(cw);
  const CanonicalQuad* best = &candidates.front();
  for (const CanonicalQuad& cq : candidates) {
    const double gap = (cq.t - cq.w) - (best->t - best->w);
    if (gap > tie || (std::abs(gap) <= tie && cq.s > best->s + tie)) best = &cq;
  }
  return *best;
}

std::string to_string(QuadKind kind) {
  switch (kind) {
    case QuadKind::kGeneral: return "general";
    case QuadKind::kMdqType1: return "mdq_type1";
    case QuadKind::kMdqType2: return "mdq_type2";
  }
  return "general";
}

double QuadClass::residual(const std::string& name) const {
  for (const auto& [key, value] : residuals)
    if (key == name) return value;
  return std::nan("");
}

namespace {

double relative_gap(double lhs, double rhs, double scale) {
  return scale > 0.0 ? std::abs(lhs - rhs) / scale : std::abs(lhs - rhs);
}

double perimeter(const CanonicalQuad& cq) {
  const Quad q = cq.vertices();
  double p = 0.0;
  for (int i = 0; i < 4; ++i) p += distance(q[i], q[(i + 1) % 4]);
  return p;
}

}  // namespace

QuadClass classify(const CanonicalQuad& cq, double tol) {
  const auto [s, t, u, v, w] = std::tuple{cq.s, cq.t, cq.u, cq.v, cq.w};
  const double target = v * t - w * s;

  const double r1 = relative_gap(u * s, target,
                                 std::max({std::abs(u * s), std::abs(v * t), std::abs(w * s)}));
  const double r2 = relative_gap(u * (2 * v - s), target,
                                 std::max({std::abs(2 * u * v), std::abs(u * s), std::abs(v * t),
                                           std::abs(w * s)}));

  const TangentialResiduals tr = tangential_residuals(cq);
  const double pitot_rel = std::abs(tr.pitot) / perimeter(cq);

  const auto [m1, m2] = diagonal_slopes(cq);
  const double ortho = std::abs(m1 * m2 + 1.0) / std::max(1.0, std::abs(m1 * m2));

  QuadClass qc;
  if (r1 <= tol && (r1 <= r2 || r2 > tol))
    qc.kind = QuadKind::kMdqType1;
  else if (r2 <= tol)
    qc.kind = QuadKind::kMdqType2;
  qc.tangential = pitot_rel <= tol;
  qc.orthodiagonal = ortho <= tol;
  qc.residuals = {{"type1", r1},
                  {"type2", r2},
                  {"pitot", pitot_rel},
                  {"z_relative", tr.z_relative},
                  {"orthodiagonal", ortho}};
  return qc;
}

NewtonSegment newton_segment(const CanonicalQuad& cq) {
  NewtonSegment seg;
  seg.m1 = {0.5 * cq.v, 0.5 * (cq.w + cq.u)};
  seg.m2 = {0.5 * cq.s, 0.5 * cq.t};
  seg.lo = cq.h_lo();
  seg.hi = cq.h_hi();
  seg.slope = (cq.w + cq.u - cq.t) / (cq.v - cq.s);
  seg.intercept = 0.5 * cq.t - seg.slope * 0.5 * cq.s;
  return seg;
}

std::pair<double, double> diagonal_slopes(const CanonicalQuad& cq) {
  return {cq.t / cq.s, (cq.w - cq.u) / cq.v};
}

double diagonal_angle(const CanonicalQuad& cq) {
  // Same as atan2(|m2 - m1|, |1 + m1 m2|) scaled through by s*v > 0.
  const Point2 d1{cq.s, cq.t};
  const Point2 d2{cq.v, cq.w - cq.u};
  return std::atan2(std::abs(cross(d1, d2)), std::abs(dot(d1, d2)));
}

double tan_diagonal_angle_type1(const CanonicalQuad& cq) {
  const auto [s, t, u, v, w] = std::tuple{cq.s, cq.t, cq.u, cq.v, cq.w};
  (void)u;
  return 2 * s * (v * t - w * s) / std::abs((t * t - s * s) * v - 2 * w * t * s);
}

TangentialResiduals tangential_residuals(const CanonicalQuad& cq) {
  const auto [s, t, u, v, w] = std::tuple{cq.s, cq.t, cq.u, cq.v, cq.w};
  const double sq4 = (s - v) * (s - v) + (t - w) * (t - w);
  const double k = t * u - v * s - w * t;
  const double x = (v * v + w * w) * (s * s + (t - u) * (t - u)) - k * k - u * u * sq4;
  const double y = (u * k) * (u * k) * sq4;

  // Scale by the terms before any cancellation, inside x as well; x and y can
  // both vanish on a tangential quad, so max(x^2, 4y) is no yardstick.
  const double x_terms = (v * v + w * w) * (s * s + (t - u) * (t - u)) + k * k + u * u * sq4;

  TangentialResiduals r;
  r.z = x * x - 4 * y;
  const double scale = x_terms * x_terms + 4 * y;
  r.z_relative = scale > 0.0 ? std::abs(r.z) / scale : 0.0;

  const Quad q = cq.vertices();
  // S1 = q0-q3, S2 = q0-q1, S3 = q1-q2, S4 = q2-q3
  r.pitot = distance(q[0], q[3]) + distance(q[1], q[2]) - distance(q[0], q[1]) -
            distance(q[2], q[3]);
  r.type1_condition = v * (t * t - s * s) - 2 * w * s * t;
  r.type2_condition = 2 * (v * s + w * t) - (s * s + t * t);
  return r;
}

std::optional<Relabeling> relabel_to_type1(const CanonicalQuad& cq, double tol) {
  std::optional<Relabeling> best;
  double best_residual = tol;
  for (const CanonicalQuad& cand : admissible_labelings(cq.vertices())) {
    const QuadClass qc = classify(cand, tol);
    const double r = qc.residual("type1");
    if (qc.kind == QuadKind::kMdqType1 && r <= best_residual) {
      best_residual = r;
      CanonicalQuad placed = cand;
      Relabeling rl{placed, cand.iso};
      placed.iso = cand.iso.compose(cq.iso);
      rl.quad = placed;
      best = rl;
    }
  }
  return best;
}

}  // namespace quadell
