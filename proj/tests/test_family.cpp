#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "quadell/conic.hpp"
#include "quadell/error.hpp"
#include "quadell/family.hpp"
#include "quadell/minecc.hpp"
#include "quadell/oracle.hpp"

namespace quadell {
namespace {

using testing::Rng;

const CanonicalQuad& paper_quad() {
  static const CanonicalQuad cq = make_canonical(4, 6, 2, 2, 1);
  return cq;
}

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a GeometryError";
  return ErrorCode::kDegenerate;
}

// Uniform h in the open interval, resampled inside the admissibility guard.
double random_h(Rng& rng, const CanonicalQuad& cq) {
  const double guard = 1e-12 * cq.h_width();
  for (;;) {
    const double h = testing::uniform(rng, cq.h_lo(), cq.h_hi());
    if (h > cq.h_lo() + guard && h < cq.h_hi() - guard) return h;
  }
}

CanonicalQuad random_any(Rng& rng, int i) {
  switch (i % 3) {
    case 0: return testing::random_quad(rng);
    case 1: return testing::random_type1(rng);
    default: return testing::random_type2(rng);
  }
}

TEST(Coefficients, PaperQuadAtMidInterval) {
  const Conic c = coefficients(paper_quad(), 1.5);
  EXPECT_DOUBLE_EQ(c.C, 36);
  EXPECT_DOUBLE_EQ(c.F, 16);
  EXPECT_TRUE(is_ellipse(c).ellipse);
  const EllipseGeometry g = geometry(c);
  EXPECT_NEAR(g.center.x, 1.5, 1e-14);
  EXPECT_NEAR(g.center.y, 2.25, 1e-14);
}

TEST(Coefficients, PaperQuadAtMaximizerMatchesKnownEquation) {
  const double r = std::sqrt(61.0);
  const double k1 = 35 - 3 * r, k2 = 72 - 11 * r;
  const Conic known{29 * k1, -4 * k1, 36 * k1, 48 * k2, 96 * k2, 16 * (887 - 105 * r)};
  const Conic ours = coefficients(paper_quad(), 3.0 / 13.0 * (-3 + r)).normalized();
  const Conic ref = known.normalized();
  EXPECT_NEAR(ours.A, ref.A, 1e-12);
  EXPECT_NEAR(ours.B, ref.B, 1e-12);
  EXPECT_NEAR(ours.C, ref.C, 1e-12);
  EXPECT_NEAR(ours.D, ref.D, 1e-12);
  EXPECT_NEAR(ours.E, ref.E, 1e-12);
  EXPECT_NEAR(ours.F, ref.F, 1e-12);
}

TEST(Coefficients, OutsideIntervalThrows) {
  EXPECT_EQ(error_of([] { coefficients(paper_quad(), 1.0); }), ErrorCode::kHOutOfRange);
  EXPECT_EQ(error_of([] { coefficients(paper_quad(), 2.0); }), ErrorCode::kHOutOfRange);
  EXPECT_EQ(error_of([] { coefficients(paper_quad(), 2.5); }), ErrorCode::kHOutOfRange);
  EXPECT_EQ(error_of([] { spectral(paper_quad(), 0.5); }), ErrorCode::kHOutOfRange);
}

TEST(Tangency, PaperQuadAtMidInterval) {
  const auto pts = tangency_points(paper_quad(), 1.5);
  EXPECT_NEAR(pts[1].lambda, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(pts[1].point.x, 0, 1e-15);
  EXPECT_NEAR(pts[1].point.y, 2.0 / 3.0, 1e-15);
  const Conic c = coefficients(paper_quad(), 1.5);
  const LineTangency lt = line_tangency(c, Line2::vertical_at(0));
  EXPECT_EQ(lt.kind, Tangency::kTangent);
  EXPECT_NEAR(lt.touch.y, 2.0 / 3.0, 1e-12);
}

TEST(Tangency, ContactMovesToVertexAtIntervalEnd) {
  const CanonicalQuad& cq = paper_quad();
  // Near h = s/2 the S1 contact collapses onto one end of its side.
  const double lambda = tangency_points(cq, cq.h_hi() - 1e-9).at(0).lambda;
  EXPECT_LT(std::min(std::abs(lambda), std::abs(1 - lambda)), 1e-6);
}

TEST(Tangency, KiteIncircleTouchesAllSides) {
  const CanonicalQuad cq = make_canonical(3, 3, 2, 2, 0);
  const double h = std::sqrt(10.0) - 2;
  const EllipseGeometry g = geometry(coefficients(cq, h));
  for (const TangencyPoint& tp : tangency_points(cq, h))
    EXPECT_NEAR(distance(tp.point, g.center), g.a, 1e-12);
}

TEST(Spectral, PaperQuadAtMidInterval) {
  const CanonicalQuad& cq = paper_quad();
  const Conic c = coefficients(cq, 1.5);
  const Spectral sp = spectral(cq, 1.5);
  EXPECT_DOUBLE_EQ(sp.R, 28);
  EXPECT_DOUBLE_EQ(cubic_r(cq, 1.5), 28);
  EXPECT_NEAR(sp.J * sp.J - sp.M, 3584, 1e-9);
  EXPECT_NEAR(4 * c.A * c.C - c.B * c.B, 3584, 1e-9);
  EXPECT_DOUBLE_EQ(aux_linear(cq, 1.5).l5, 28);
}

TEST(Spectral, PaperQuadMaximumValue) {
  const double hp = 3.0 / 13.0 * (-3 + std::sqrt(61.0));
  EXPECT_NEAR(spectral(paper_quad(), hp).G, (33 - std::sqrt(65.0)) / 32, 1e-13);
}

TEST(Spectral, VanishesTowardIntervalEnds) {
  const CanonicalQuad& cq = paper_quad();
  EXPECT_LT(g_value(cq, cq.h_lo() + 1e-9), 1e-6);
  EXPECT_LT(g_value(cq, cq.h_hi() - 1e-9), 1e-6);
  EXPECT_EQ(g_value(cq, cq.h_lo()), 0);
  EXPECT_EQ(g_value(cq, 7), 0);
}

TEST(Derivative, PaperQuadSigns) {
  const CanonicalQuad& cq = paper_quad();
  const auto g = [&](double h) { return spectral(cq, h).G; };
  EXPECT_GT(dG(cq, 1.05), 0);
  EXPECT_LT(dG(cq, 1.2), 0);
  for (double h : {1.05, 1.2, 1.5, 1.9})
    EXPECT_NEAR(dG(cq, h), oracle::fd_gradient(g, h, 1e-6), 1e-7);
  const double hp = 3.0 / 13.0 * (-3 + std::sqrt(61.0));
  const SpectralDerivative d = spectral_derivative(cq, hp);
  const Spectral sp = spectral(cq, hp);
  EXPECT_LE(std::abs(d.p), 1e-12 * (std::abs(2 * d.dJ * sp.M) + std::abs(sp.J * d.dM)));
}

TEST(Derivative, KiteCircleThrows) {
  const CanonicalQuad cq = make_canonical(3, 3, 2, 2, 0);
  EXPECT_EQ(error_of([&] { dG(cq, std::sqrt(10.0) - 2); }), ErrorCode::kCircularPoint);
}

TEST(Derivative, FactoredFormOnType1Quads) {
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    const CanonicalQuad cq = testing::random_type1(rng);
    const double h = random_h(rng, cq);
    const double p = spectral_derivative(cq, h).p;
    const double pf = p_type1_factored(cq, h);
    EXPECT_LE(std::abs(p - pf), 1e-9 * std::abs(pf)) << "h=" << h;
  }
}

TEST(Derivative, MatchesFiniteDifferences) {
  Rng rng(32);
  for (int i = 0; i < 300; ++i) {
    const CanonicalQuad cq = random_any(rng, i);
    const double h = random_h(rng, cq);
    const auto f = [&](double x) { return spectral(cq, x).J; };
    const auto m = [&](double x) { return spectral(cq, x).M; };
    const SpectralDerivative d = spectral_derivative(cq, h);
    const double step = 1e-5 * cq.h_width();
    if (h - step <= cq.h_lo() || h + step >= cq.h_hi()) continue;
    EXPECT_NEAR(d.dJ, oracle::fd_gradient(f, h, step), 1e-5 * (1 + std::abs(d.dJ)));
    EXPECT_NEAR(d.dM, oracle::fd_gradient(m, h, step), 1e-5 * (1 + std::abs(d.dM)));
  }
}

TEST(AuxLinear, Values) {
  const CanonicalQuad& cq = paper_quad();
  EXPECT_NEAR(aux_linear(cq, cq.s / 2 - 1e-13).l3, 0, 1e-10);
  Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    const CanonicalQuad q = random_any(rng, i);
    // L3 is a multiple of (s - 2h).
    const double h = random_h(rng, q);
    const AuxLinear a = aux_linear(q, h);
    EXPECT_NEAR(a.l3, (q.v * (q.t - q.u) + (q.u - q.w) * q.s) * (q.s - 2 * h), 1e-9 * (1 + std::abs(a.l3)));
  }
}

TEST(AuxLinear, SignsInsideInterval) {
  Rng rng(34);
  for (int i = 0; i < 300; ++i) {
    const CanonicalQuad cq = random_any(rng, i);
    for (int k = 1; k < 1000; k += 37) {
      const double h = cq.h_lo() + k * cq.h_width() / 1000;
      const AuxLinear a = aux_linear(cq, h);
      const double sv = cq.s - cq.v;
      EXPECT_GT(sv * a.l1, 0);
      EXPECT_GT(sv * a.l2, 0);
      EXPECT_GT(sv * a.l3, 0);
      EXPECT_GT(a.l4, 0);
      EXPECT_GT(a.l5, 0);
      EXPECT_GT(cubic_r(cq, h), 0);
      // Each side's contact parameter lies inside (0, 1).
      for (const TangencyPoint& tp : tangency_points(cq, h)) {
        EXPECT_GT(tp.lambda, 0);
        EXPECT_LT(tp.lambda, 1);
      }
    }
  }
}

TEST(Family, EveryMemberIsAnInscribedEllipse) {
  Rng rng(35);
  for (int i = 0; i < 1000; ++i) {
    const CanonicalQuad cq = random_any(rng, i);
    const double h = random_h(rng, cq);
    const FamilyPoint fp = family_point(cq, h);
    const Conic& c = fp.conic;
    const double scale = c.norm();

    // Discriminant identities.
    const double disc = 4 * c.A * c.C - c.B * c.B;
    const double r16 = 16 * cq.u * (cq.s - cq.v) * (cq.s - cq.v) * fp.spectral.R;
    EXPECT_NEAR(disc, r16, 1e-9 * scale * scale);
    EXPECT_NEAR(fp.spectral.J * fp.spectral.J - fp.spectral.M, disc, 1e-9 * scale * scale);
    EXPECT_GT(disc, 0);
    const double r = fp.spectral.R;
    const double nondeg = 16 * (cq.s - cq.v) * (cq.s - cq.v) * cq.u * cq.u * r * r;
    EXPECT_NEAR(is_ellipse(c).nondegeneracy / nondeg, 1, 1e-9);

    // Positivity: an ellipse, G in (0, 1].
    const EllipseTest et = is_ellipse(c);
    ASSERT_TRUE(et.ellipse);
    EXPECT_GT(fp.spectral.G, 0);
    EXPECT_LE(fp.spectral.G, 1);

    // Constant delta.
    const EllipseGeometry g = geometry(c);
    const double ds = cq.s - cq.v;
    EXPECT_NEAR(g.delta, 1 / (4 * ds * ds), 1e-10 / (4 * ds * ds));

    // Center on the Newton line at x = h.
    EXPECT_NEAR(g.center.x, h, 1e-9 * cq.diameter());
    EXPECT_NEAR(g.center.y, newton_segment(cq).at(h), 1e-9 * cq.diameter());

    // Containment and tangency.
    const auto inside = oracle::containment(c, cq, 256, 1e-9);
    EXPECT_TRUE(inside.pass) << inside.worst_residual;
    const auto touch = oracle::side_tangency(c, cq, 1e-9);
    EXPECT_TRUE(touch.pass) << touch.worst_residual;
    for (const TangencyPoint& tp : fp.tangency)
      EXPECT_NEAR(c(tp.point) / scale, 0, 1e-10);
    const Quad q = cq.vertices();
    const std::array<Line2, 4> sides{Line2::through(q[0], q[3]), Line2::vertical_at(0),
                                     Line2::through(q[1], q[2]), Line2::through(q[2], q[3])};
    for (int j = 0; j < 4; ++j)
      EXPECT_LE(distance(line_tangency(c, sides[j]).touch, fp.tangency[j].point), 1e-9 * cq.diameter());
  }
}

TEST(Family, CentersAreDistinct) {
  Rng rng(36);
  for (int i = 0; i < 100; ++i) {
    const CanonicalQuad cq = random_any(rng, i);
    double prev = -INFINITY;
    for (int k = 1; k < 20; ++k) {
      const double x = geometry(coefficients(cq, cq.h_lo() + k * cq.h_width() / 20)).center.x;
      EXPECT_GT(x, prev);
      prev = x;
    }
  }
}

}  // namespace
}  // namespace quadell
