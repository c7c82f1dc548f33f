#pragma once

#include <array>
#include <cmath>

namespace quadell {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double k, Point2 p) { return {k * p.x, k * p.y}; }
  friend bool operator==(Point2, Point2) = default;
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Rigid motion p -> R(angle) * S * p + translation, where S mirrors x when
/// `reflect` is set.
struct Isometry2 {
  double angle = 0.0;
  Point2 translation{};
  bool reflect = false;

  Point2 apply(Point2 p) const {
    if (reflect) p.x = -p.x;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * p.x - s * p.y + translation.x, s * p.x + c * p.y + translation.y};
  }

  Point2 apply_inverse(Point2 q) const {
    const Point2 d = q - translation;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    Point2 p{c * d.x + s * d.y, -s * d.x + c * d.y};
    if (reflect) p.x = -p.x;
    return p;
  }

  Isometry2 inverse() const;

  /// (*this) after `first`: p -> this->apply(first.apply(p)).
  Isometry2 compose(const Isometry2& first) const;

  static Isometry2 identity() { return {}; }
};

using Quad = std::array<Point2, 4>;

}  // namespace quadell
