#include "quadell/family.hpp"

#include <cmath>
#include <sstream>

#include "quadell/error.hpp"

namespace quadell {

namespace {

// Coefficients A, B, C and their h-derivatives.
// Kept in extended precision: near the interval ends the members are thin
// and downstream quantities cancel against each other.
using L = long double;

struct QuadraticPart {
  L A, B, C, dA, dB, dC;
};

QuadraticPart quadratic_part(const CanonicalQuad& cq, double h_in) {
  const L s = cq.s, t = cq.t, u = cq.u, v = cq.v, w = cq.w, h = h_in;
  const L sv = s - v;
  const L k = (w + u - t) / (v - s);
  const L line = t / 2 + k * (h - s / 2);
  QuadraticPart q;
  q.A = 4 * sv * sv * (line * line + w * u * (2 * h - s) / sv);
  q.dA = 4 * sv * sv * (2 * line * k + 2 * w * u / sv);
  q.B = 4 * sv * (2 * (u + w - t) * h * h + (v * (t - 2 * u) - s * (u + w)) * h + u * v * s);
  q.dB = 4 * sv * (4 * (u + w - t) * h + (v * (t - 2 * u) - s * (u + w)));
  q.C = 4 * sv * sv * h * h;
  q.dC = 8 * sv * sv * h;
  return q;
}

}  // namespace

AuxLinear aux_linear(const CanonicalQuad& cq, double h) {
  const auto [s, t, u, v, w] = std::tuple{cq.s, cq.t, cq.u, cq.v, cq.w};
  AuxLinear a;
  a.l1 = 2 * (v * (t - u) - w * s) * h + v * (s * (u + w) - v * t);
  a.l2 = 2 * (v * (u - t) + w * s) * h + s * (v * (t - 2 * u) + s * (u - w));
  a.l3 = (v * (t - u) + (u - w) * s) * (s - 2 * h);
  a.l4 = -2 * u * h + v * t + s * (u - w);
  a.l5 = 2 * (v * (t - u) - w * s) * h + u * v * s;
  return a;
}

double cubic_r(const CanonicalQuad& cq, double h) {
  return (cq.s - 2 * h) * (2 * h - cq.v) * aux_linear(cq, h).l5;
}

void require_admissible(const CanonicalQuad& cq, double h) {
  const double guard = 1e-12 * cq.h_width();
  if (!(h > cq.h_lo() + guard && h < cq.h_hi() - guard)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "h = " << h << " outside (" << cq.h_lo() << ", " << cq.h_hi() << ")";
    throw GeometryError(ErrorCode::kHOutOfRange, msg.str());
  }
}

Conic coefficients(const CanonicalQuad& cq, double h) {
  require_admissible(cq, h);
  const auto [s, t, u, v, w] = std::tuple{cq.s, cq.t, cq.u, cq.v, cq.w};
  const QuadraticPart q = quadratic_part(cq, h);
  Conic c;
  c.A = static_cast<double>(q.A);
  c.B = static_cast<double>(q.B);
  c.C = static_cast<double>(q.C);
  const L S = s, T = t, U = u, V = v, W = w, H = h;
  c.D = static_cast<double>(2 * U * (2 * H - S) * (2 * (V * (W + T - U) - 2 * W * S) * H + V * (S * (U + W) - V * T)));
  c.E = static_cast<double>(4 * U * V * (S - V) * H * (2 * H - S));
  c.F = static_cast<double>(U * U * V * V * (2 * H - S) * (2 * H - S));
  return c;
}

std::array<TangencyPoint, 4> tangency_points(const CanonicalQuad& cq, double h) {
  require_admissible(cq, h);
  const auto [s, t, u, v, w] = std::tuple{cq.s, cq.t, cq.u, cq.v, cq.w};
  const AuxLinear aux = aux_linear(cq, h);
  const Point2 p0{0, 0}, p1{0, u}, p2{s, t}, p3{v, w};

  std::array<TangencyPoint, 4> out;
  const double l1 = (s - 2 * h) * u * v / aux.l1;
  const double l2 = (s - 2 * h) * v / (2 * h * (s - v));
  const double l3 = (2 * h - v) * s * u / aux.l2;
  const double l4 = aux.l3 / ((s - v) * aux.l4);
  out[0] = {l1 * p3 + (1 - l1) * p0, l1};
  out[1] = {l2 * p1 + (1 - l2) * p0, l2};
  out[2] = {l3 * p2 + (1 - l3) * p1, l3};
  out[3] = {l4 * p3 + (1 - l4) * p2, l4};
  return out;
}

namespace {

// N = J^2 - M = 4AC - B^2 = 16u(s-v)^2 R(h) and its derivative, both from the
// factored cubic so that neither suffers the cancellation in J^2 - M.
struct DiscPart {
  L R = 0.0;
  L N = 0.0;
  L dN = 0.0;
};

DiscPart disc_part(const CanonicalQuad& cq, double h_in) {
  const L s = cq.s, t = cq.t, u = cq.u, v = cq.v, w = cq.w, h = h_in;
  const L a = s - 2 * h;
  const L b = 2 * h - v;
  const L dl5 = 2 * (v * (t - u) - w * s);
  const L l5 = dl5 * h + u * v * s;
  const L k = 16 * u * (s - v) * (s - v);
  DiscPart d;
  d.R = a * b * l5;
  d.N = k * d.R;
  d.dN = k * (2 * (a - b) * l5 + a * b * dl5);
  return d;
}

struct SpectralL {
  L J, M, root, N, R;
};

SpectralL spectral_l(const CanonicalQuad& cq, double h) {
  const QuadraticPart q = quadratic_part(cq, h);
  const DiscPart n = disc_part(cq, h);
  SpectralL sp;
  sp.J = q.A + q.C;
  sp.M = (q.A - q.C) * (q.A - q.C) + q.B * q.B;
  sp.root = std::sqrt(sp.M);
  sp.N = n.N;
  sp.R = n.R;
  return sp;
}

Spectral spectral_unchecked(const CanonicalQuad& cq, double h) {
  const SpectralL l = spectral_l(cq, h);
  Spectral sp;
  sp.J = static_cast<double>(l.J);
  sp.M = static_cast<double>(l.M);
  // (J - sqrt M)/(J + sqrt M) rewritten as N/(J + sqrt M)^2.
  sp.G = static_cast<double>(l.N / ((l.J + l.root) * (l.J + l.root)));
  sp.R = static_cast<double>(l.R);
  return sp;
}

}  // namespace

Spectral spectral(const CanonicalQuad& cq, double h) {
  require_admissible(cq, h);
  return spectral_unchecked(cq, h);
}

double g_value(const CanonicalQuad& cq, double h) {
  if (!(h > cq.h_lo() && h < cq.h_hi())) return 0.0;
  return spectral_unchecked(cq, h).G;
}

SpectralDerivative spectral_derivative(const CanonicalQuad& cq, double h) {
  const QuadraticPart q = quadratic_part(cq, h);
  const DiscPart n = disc_part(cq, h);
  const L J = q.A + q.C;
  const L dJ = q.dA + q.dC;
  SpectralDerivative d;
  d.dJ = static_cast<double>(dJ);
  d.dM = static_cast<double>(2 * (q.A - q.C) * (q.dA - q.dC) + 2 * q.B * q.dB);
  // 2J'M - JM' with M = J^2 - N collapses to J N' - 2 J' N.
  d.p = static_cast<double>(J * n.dN - 2 * dJ * n.N);
  return d;
}

double dG(const CanonicalQuad& cq, double h) {
  require_admissible(cq, h);
  const SpectralL sp = spectral_l(cq, h);
  if (sp.M <= 1e-28L * sp.J * sp.J)
    throw GeometryError(ErrorCode::kCircularPoint, "family member is a circle; G' undefined");
  const QuadraticPart q = quadratic_part(cq, h);
  const DiscPart n = disc_part(cq, h);
  const L p = sp.J * n.dN - 2 * (q.dA + q.dC) * n.N;
  return static_cast<double>(p / (sp.root * (sp.J + sp.root) * (sp.J + sp.root)));
}

FamilyPoint family_point(const CanonicalQuad& cq, double h) {
  FamilyPoint fp;
  fp.h = h;
  fp.conic = coefficients(cq, h);
  fp.tangency = tangency_points(cq, h);
  fp.spectral = spectral(cq, h);
  fp.aux = aux_linear(cq, h);
  fp.center = {h, newton_segment(cq).at(h)};
  return fp;
}

}  // namespace quadell
