#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "quadell/conic.hpp"
#include "quadell/family.hpp"
#include "quadell/quad.hpp"

namespace quadell {

/// o(h) = -2(s^2+t^2)(s-v) h^2 - 2K h + sK with K = (s^2+t^2)v^2 - 2ws(vt-ws).
/// For type-1 quads its root inside the interval is the maximizer of G.
struct QuadraticO {
  double K = 0.0;
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;

  double operator()(double h) const { return (c2 * h + c1) * h + c0; }
};

QuadraticO quadratic_o(const CanonicalQuad& cq);

/// v^2(s^2+t^2) - 4ws(vt-ws)
double p1_value(const CanonicalQuad& cq);

/// Both roots of o from the closed form; no type check.
struct ORoots {
  double minus = 0.0;
  double plus = 0.0;
};
ORoots o_roots(const CanonicalQuad& cq);

/// Closed-form maximizer of G. Throws GeometryError(kNotType1) unless the
/// quad classifies as type 1 at `tol`.
double h_plus(const CanonicalQuad& cq, double tol = kDefaultTolerance);

/// Closed-form G at the maximizer (type 1 only, kNotType1 otherwise).
double g_at_hplus_closed(const CanonicalQuad& cq, double tol = kDefaultTolerance);

/// 256 h ((s-v)/s)^4 (vt-ws)^2 (s-h) o(h): the factored numerator of G' for
/// type-1 quads.
double p_type1_factored(const CanonicalQuad& cq, double h);

struct MaximizeResult {
  double h = 0.0;
  double g = 0.0;
  int iterations = 0;
  bool converged = true;
};

inline constexpr int kMaxSolverIterations = 200;

/// Numerical maximizer of G over the open interval: coarse scan, then
/// golden-section/parabolic search, then a bracketed root polish of G'.
MaximizeResult maximize_G(const CanonicalQuad& cq, double tol = 1e-12);

enum class SolveMethod { kClosedFormType1, kNumeric };

std::string to_string(SolveMethod m);

struct MinEccResult {
  double h_star = 0.0;
  Conic conic;  // raw family coefficients, canonical frame of the input quad
  EllipseGeometry geom;
  double gamma = 0.0;
  double alpha = 0.0;
  double g_at_h = 0.0;
  SolveMethod method = SolveMethod::kNumeric;
  int iterations = 0;
  double residual = 0.0;  // |gamma - alpha|

  QuadClass classification;
  /// Closed form was reached through another labeling of the same quad.
  bool relabeled = false;
  /// Tangential MDQ: the minimizer is the incircle, reported as a circle.
  bool tangential_circle = false;
  /// Eccentricity as computed from the conic, before the circle snap.
  double eccentricity_computed = 0.0;
  /// Numeric maximizer, run alongside the closed form as a cross-check.
  std::optional<double> numeric_h;
  /// Closed-form h+ evaluated for near-type-1 quads solved numerically.
  std::optional<double> closed_form_diagnostic;
};

struct SolveOptions {
  double tol = kDefaultTolerance;
  double solver_tol = 1e-12;
};

MinEccResult solve(const CanonicalQuad& cq, const SolveOptions& opts = {});

}  // namespace quadell
