#include "quadell/minecc.hpp"

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "quadell/error.hpp"

namespace quadell {

QuadraticO quadratic_o(const CanonicalQuad& cq) {
  const auto [s, t, v, w] = std::tuple{cq.s, cq.t, cq.v, cq.w};
  const double ss = s * s + t * t;
  QuadraticO o;
  o.K = ss * v * v - 2 * w * s * (v * t - w * s);
  o.c2 = -2 * ss * (s - v);
  o.c1 = -2 * o.K;
  o.c0 = s * o.K;
  return o;
}

double p1_value(const CanonicalQuad& cq) {
  const auto [s, t, v, w] = std::tuple{cq.s, cq.t, cq.v, cq.w};
  return v * v * (s * s + t * t) - 4 * w * s * (v * t - w * s);
}

ORoots o_roots(const CanonicalQuad& cq) {
  const double ss = cq.s * cq.s + cq.t * cq.t;
  const double K = quadratic_o(cq).K;
  const double rk = std::sqrt(K);
  const double denom = 2 * ss * (cq.s - cq.v);
  const double rd = std::sqrt(2 * ss * cq.s * (cq.s - cq.v) + K);
  // h+ = sqrt K (rd - sqrt K)/denom == s sqrt K / (sqrt K + rd), free of cancellation.
  return {rk * (-rk - rd) / denom, cq.s * rk / (rk + rd)};
}

namespace {

void require_type1(const CanonicalQuad& cq, double tol) {
  if (classify(cq, tol).kind != QuadKind::kMdqType1)
    throw GeometryError(ErrorCode::kNotType1, "quadrilateral is not a type-1 midpoint diagonal quad");
}

}  // namespace

double h_plus(const CanonicalQuad& cq, double tol) {
  require_type1(cq, tol);
  return o_roots(cq).plus;
}

double g_at_hplus_closed(const CanonicalQuad& cq, double tol) {
  require_type1(cq, tol);
  const auto [s, t, v, w] = std::tuple{cq.s, cq.t, cq.v, cq.w};
  const double lhs = std::sqrt(s * s + t * t) * std::sqrt(p1_value(cq));
  const double gap = std::abs(2 * w * s * t - (t * t - s * s) * v);
  return (lhs - gap) / (lhs + gap);
}

double p_type1_factored(const CanonicalQuad& cq, double h_in) {
  // o(h) cancels near its root; evaluate it in extended precision.
  using L = long double;
  const L s = cq.s, t = cq.t, v = cq.v, w = cq.w, h = h_in;
  const L ss = s * s + t * t;
  const L d = v * t - w * s;
  const L k = ss * v * v - 2 * w * s * d;
  const L o = (-2 * ss * (s - v) * h - 2 * k) * h + s * k;
  const L r = (s - v) / s;
  return static_cast<double>(256 * h * (r * r * r * r) * d * d * (s - h) * o);
}

MaximizeResult maximize_G(const CanonicalQuad& cq, double tol) {
  // Work in x = (h - h_lo)/|I| so that every tolerance is relative to the
  // interval, however narrow it is compared with h itself.
  const double h0 = cq.h_lo();
  const double width = cq.h_width();
  auto to_h = [&](double x) { return h0 + x * width; };
  auto g = [&](double x) { return g_value(cq, to_h(x)); };
  constexpr double kGuard = 1e-12;

  // Coarse scan to pick the bracket around the best sample.
  constexpr int kScan = 64;
  const double step = 1.0 / (kScan + 1);
  int best = 1;
  double best_g = -1.0;
  for (int k = 1; k <= kScan; ++k) {
    const double gk = g(k * step);
    if (gk > best_g) {
      best_g = gk;
      best = k;
    }
  }
  const double a = std::max(kGuard, (best - 1) * step);
  const double b = std::min(1.0 - kGuard, (best + 1) * step);

  MaximizeResult out;
  std::uintmax_t brent_iters = kMaxSolverIterations;
  const auto [x_brent, neg_g] = boost::math::tools::brent_find_minima(
      [&](double x) { return -g(x); }, a, b, std::numeric_limits<double>::digits / 2, brent_iters);
  double x_best = x_brent;
  out.g = -neg_g;
  out.iterations = static_cast<int>(brent_iters);

  // G is flat to roundoff within ~sqrt(eps) of its peak; locate the peak
  // precisely as the sign change of p = 2J'M - JM', which shares G's sign.
  auto p = [&](double x) { return spectral_derivative(cq, to_h(x)).p; };
  double delta = 1e-7;
  double left = std::max(a, x_best - delta), right = std::min(b, x_best + delta);
  bool bracketed = false;
  for (;;) {
    if (p(left) > 0.0 && p(right) < 0.0) {
      bracketed = true;
      break;
    }
    if (left <= a && right >= b) break;
    delta *= 2;
    left = std::max(a, x_best - delta);
    right = std::min(b, x_best + delta);
  }
  if (bracketed) {
    std::uintmax_t root_iters = kMaxSolverIterations - out.iterations;
    const auto [r_lo, r_hi] = boost::math::tools::toms748_solve(
        p, left, right, p(left), p(right),
        [tol](double x, double y) { return std::abs(y - x) <= tol; }, root_iters);
    const double x_root = 0.5 * (r_lo + r_hi);
    out.iterations += static_cast<int>(root_iters);
    // Near the peak G differences are below its own roundoff, so the sign
    // change of p decides and G is not consulted.
    x_best = x_root;
    out.g = g(x_root);
  }
  out.h = to_h(x_best);
  if (out.iterations >= kMaxSolverIterations) {
    out.converged = false;
    out.iterations = kMaxSolverIterations;
    out.h = to_h(best * step);
    out.g = best_g;
  }
  return out;
}

std::string to_string(SolveMethod m) {
  return m == SolveMethod::kClosedFormType1 ? "closed_form_type1" : "numeric";
}

MinEccResult solve(const CanonicalQuad& cq, const SolveOptions& opts) {
  MinEccResult r;
  r.classification = classify(cq, opts.tol);
  r.alpha = diagonal_angle(cq);

  const MaximizeResult numeric = maximize_G(cq, opts.solver_tol);
  r.iterations = numeric.iterations;

  if (r.classification.kind == QuadKind::kMdqType1) {
    r.method = SolveMethod::kClosedFormType1;
    r.h_star = o_roots(cq).plus;
    r.conic = coefficients(cq, r.h_star);
    r.g_at_h = spectral(cq, r.h_star).G;
    r.numeric_h = numeric.h;
  } else if (auto rl = r.classification.kind == QuadKind::kMdqType2
                           ? relabel_to_type1(cq, opts.tol)
                           : std::nullopt) {
    r.method = SolveMethod::kClosedFormType1;
    r.relabeled = true;
    const double h = o_roots(rl->quad).plus;
    r.conic = coefficients(rl->quad, h).transformed(rl->from_original.inverse());
    r.g_at_h = spectral(rl->quad, h).G;
    r.h_star = geometry(r.conic).center.x;
    r.numeric_h = numeric.h;
  } else {
    r.method = SolveMethod::kNumeric;
    r.h_star = numeric.h;
    r.conic = coefficients(cq, r.h_star);
    r.g_at_h = spectral(cq, r.h_star).G;
    if (r.classification.residual("type1") <= 1e-3) r.closed_form_diagnostic = o_roots(cq).plus;
  }

  r.geom = geometry(r.conic);
  r.eccentricity_computed = r.geom.eccentricity;
  r.gamma = conjugate_diameter_angle(r.geom);

  if (r.classification.tangential && r.classification.is_mdq()) {
    r.tangential_circle = true;
    const double radius = std::sqrt(r.geom.a * r.geom.b);
    r.geom.a = radius;
    r.geom.b = radius;
    r.geom.eccentricity = 0.0;
    r.geom.axis_ratio_sq = 1.0;
    r.geom.major_axis_angle.reset();
    r.gamma = std::numbers::pi / 2;
  }
  r.residual = std::abs(r.gamma - r.alpha);
  return r;
}

}  // namespace quadell
