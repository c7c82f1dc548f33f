#pragma once

#include <array>

#include "quadell/conic.hpp"
#include "quadell/quad.hpp"

namespace quadell {

/// Values of the five auxiliary linear functions at h.
struct AuxLinear {
  double l1 = 0.0;
  double l2 = 0.0;
  double l3 = 0.0;
  double l4 = 0.0;
  double l5 = 0.0;
};

AuxLinear aux_linear(const CanonicalQuad& cq, double h);

/// (s - 2h)(2h - v) L5(h); positive on the admissible interval.
double cubic_r(const CanonicalQuad& cq, double h);

/// Throws GeometryError(kHOutOfRange) unless h lies strictly inside the
/// interval, at least 1e-12 of its width away from either end.
void require_admissible(const CanonicalQuad& cq, double h);

/// The member of the inscribed family centered at (h, L(h)). Coefficients
/// are the raw polynomial values, not normalized.
Conic coefficients(const CanonicalQuad& cq, double h);

struct TangencyPoint {
  Point2 point;
  double lambda = 0.0;
};

/// Contact points with S1..S4, each written as lambda*P + (1-lambda)*Q along
/// its side: S1 from (0,0) toward (v,w), S2 from (0,0) toward (0,u), S3 from
/// (0,u) toward (s,t), S4 from (s,t) toward (v,w).
std::array<TangencyPoint, 4> tangency_points(const CanonicalQuad& cq, double h);

struct Spectral {
  double J = 0.0;  // A + C
  double M = 0.0;  // (A - C)^2 + B^2
  double G = 0.0;  // (J - sqrt M)/(J + sqrt M) = b^2/a^2
  double R = 0.0;
};

Spectral spectral(const CanonicalQuad& cq, double h);

/// G at h without the admissibility check; 0 outside the open interval.
double g_value(const CanonicalQuad& cq, double h);

struct SpectralDerivative {
  double dJ = 0.0;
  double dM = 0.0;
  double p = 0.0;  // 2 J' M - J M'
};

/// Exact derivatives of J and M, and the numerator p(h) of G'(h).
SpectralDerivative spectral_derivative(const CanonicalQuad& cq, double h);

/// G'(h) = p / (sqrt M (J + sqrt M)^2). Throws kCircularPoint when the member
/// at h is (numerically) a circle.
double dG(const CanonicalQuad& cq, double h);

/// Everything about one member of the family.
struct FamilyPoint {
  double h = 0.0;
  Conic conic;
  std::array<TangencyPoint, 4> tangency;
  Spectral spectral;
  AuxLinear aux;
  Point2 center;
};

FamilyPoint family_point(const CanonicalQuad& cq, double h);

}  // namespace quadell
