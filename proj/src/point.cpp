#include "quadell/point.hpp"

namespace quadell {

namespace {

Point2 linear_part(const Isometry2& iso, Point2 p) {
  return iso.apply(p) - iso.translation;
}

}  // namespace

Isometry2 Isometry2::inverse() const {
  // S R(-a) == R(a) S, so a mirrored motion keeps its angle.
  Isometry2 inv;
  inv.reflect = reflect;
  inv.angle = reflect ? angle : -angle;
  inv.translation = -1.0 * linear_part(inv, translation);
  return inv;
}

Isometry2 Isometry2::compose(const Isometry2& first) const {
  Isometry2 out;
  out.reflect = reflect != first.reflect;
  out.angle = reflect ? angle - first.angle : angle + first.angle;
  out.translation = apply(first.translation);
  return out;
}

}  // namespace quadell
