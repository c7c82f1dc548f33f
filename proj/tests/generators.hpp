#pragma once

// Random quadrilateral generators shared by the unit and acceptance suites.
// Everything is rejection-sampled in canonical parameters; `margin` keeps
// samples away from the parallel-sides boundary where the family degenerates.

#include <cmath>
#include <numbers>
#include <optional>
#include <random>

#include "quadell/error.hpp"
#include "quadell/quad.hpp"

namespace quadell::testing {

using Rng = std::mt19937_64;

inline constexpr double kLow = 0.5;
inline constexpr double kHigh = 10.0;
inline constexpr double kMargin = 1e-2;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Sine of the angle between opposite sides, minimized over both pairs.
inline double parallel_margin(const CanonicalQuad& cq) {
  const Quad q = cq.vertices();
  auto sine = [](Point2 a, Point2 b) { return std::abs(cross(a, b)) / (norm(a) * norm(b)); };
  return std::min(sine(q[1] - q[0], q[3] - q[2]), sine(q[2] - q[1], q[0] - q[3]));
}

inline std::optional<CanonicalQuad> try_make(double s, double t, double u, double v, double w,
                                             double margin) {
  try {
    CanonicalQuad cq = make_canonical(s, t, u, v, w);
    if (parallel_margin(cq) < margin) return std::nullopt;
    return cq;
  } catch (const GeometryError&) {
    return std::nullopt;
  }
}

/// Any valid canonical quad with all five parameters uniform in [0.5, 10].
inline CanonicalQuad random_quad(Rng& rng, double margin = kMargin) {
  for (;;) {
    const double s = uniform(rng, kLow, kHigh), t = uniform(rng, kLow, kHigh),
                 u = uniform(rng, kLow, kHigh), v = uniform(rng, kLow, kHigh),
                 w = uniform(rng, kLow, kHigh);
    if (auto cq = try_make(s, t, u, v, w, margin)) return *cq;
  }
}

/// A quad that is neither type of midpoint-diagonal quad (by a wide margin).
inline CanonicalQuad random_general_quad(Rng& rng, double margin = kMargin) {
  for (;;) {
    const CanonicalQuad cq = random_quad(rng, margin);
    const QuadClass qc = classify(cq);
    if (qc.residual("type1") > 1e-3 && qc.residual("type2") > 1e-3) return cq;
  }
}

/// u from u = (vt - ws)/s, the rest uniform in [0.5, 10].
inline CanonicalQuad random_type1(Rng& rng, double margin = kMargin) {
  for (;;) {
    const double s = uniform(rng, kLow, kHigh), t = uniform(rng, kLow, kHigh),
                 v = uniform(rng, kLow, kHigh), w = uniform(rng, kLow, kHigh);
    const double u = (v * t - w * s) / s;
    if (auto cq = try_make(s, t, u, v, w, margin)) return *cq;
  }
}

/// u from u = (vt - ws)/(2v - s), the rest uniform in [0.5, 10].
inline CanonicalQuad random_type2(Rng& rng, double margin = kMargin) {
  for (;;) {
    const double s = uniform(rng, kLow, kHigh), t = uniform(rng, kLow, kHigh),
                 v = uniform(rng, kLow, kHigh), w = uniform(rng, kLow, kHigh);
    if (std::abs(2 * v - s) < 1e-6) continue;
    const double u = (v * t - w * s) / (2 * v - s);
    if (auto cq = try_make(s, t, u, v, w, margin)) return *cq;
  }
}

/// Kite symmetric about the diagonal through (0,0) and (s,s): s = t, u = v, w = 0.
inline CanonicalQuad random_axis_kite(Rng& rng, double margin = kMargin) {
  for (;;) {
    const double s = uniform(rng, kLow, kHigh), v = uniform(rng, kLow, kHigh);
    if (auto cq = try_make(s, s, v, v, 0.0, margin)) return *cq;
  }
}

inline Isometry2 random_isometry(Rng& rng) {
  Isometry2 iso;
  iso.angle = uniform(rng, -std::numbers::pi, std::numbers::pi);
  iso.translation = {uniform(rng, -10, 10), uniform(rng, -10, 10)};
  iso.reflect = std::bernoulli_distribution(0.5)(rng);
  return iso;
}

inline Quad moved(const Quad& q, const Isometry2& iso) {
  Quad out;
  for (int i = 0; i < 4; ++i) out[i] = iso.apply(q[i]);
  return out;
}

/// Kite with random proportions: apex, two mirror-image side vertices and a
/// tail on the symmetry axis, then placed by a random isometry.
inline Quad random_kite_vertices(Rng& rng) {
  for (;;) {
    const double apex = uniform(rng, 0.5, 10), tail = uniform(rng, 0.5, 10);
    const double half_width = uniform(rng, 0.5, 10);
    const double offset = uniform(rng, -0.8, 0.8) * std::min(apex, tail);
    // Axis along y: (0, apex), (half_width, offset), (0, -tail), (-half_width, offset)
    Quad q{{{0, apex}, {half_width, offset}, {0, -tail}, {-half_width, offset}}};
    // A kite with a parallel side pair is a rhombus; keep away from those.
    auto sine = [](Point2 a, Point2 b) { return std::abs(cross(a, b)) / (norm(a) * norm(b)); };
    if (std::min(sine(q[1] - q[0], q[3] - q[2]), sine(q[2] - q[1], q[0] - q[3])) < kMargin)
      continue;
    return moved(q, random_isometry(rng));
  }
}

}  // namespace quadell::testing
