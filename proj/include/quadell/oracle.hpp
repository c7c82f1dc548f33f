#pragma once

#include <functional>
#include <string>
#include <vector>

#include "quadell/conic.hpp"
#include "quadell/minecc.hpp"
#include "quadell/quad.hpp"

namespace quadell::oracle {

/// pass == (worst_residual <= tolerance), always.
struct OracleReport {
  std::string name;
  bool pass = false;
  double worst_residual = 0.0;
  double tolerance = 0.0;
  std::string location;
};

OracleReport make_report(std::string name, double worst, double tolerance, std::string location);

using ScalarFn = std::function<double(double)>;

/// (f(h + step) - f(h - step)) / (2 step)
double fd_gradient(const ScalarFn& f, double h, double step);

struct GridMax {
  double h = 0.0;
  double value = 0.0;
};

/// Best of n uniform interior samples lo + k (hi - lo)/(n + 1), k = 1..n.
/// Ties keep the lowest h.
GridMax grid_argmax(const ScalarFn& f, double lo, double hi, int n);

/// Traces n points of the ellipse and reports the deepest excursion outside
/// the quad, as a fraction of its diameter.
OracleReport containment(const Conic& conic, const CanonicalQuad& cq, int n = 256,
                         double tol = 1e-9);

/// Classifies every side line against the conic; worst relative discriminant.
OracleReport side_tangency(const Conic& conic, const CanonicalQuad& cq, double tol = 1e-9);

struct Incircle {
  Point2 center;
  double radius = 0.0;
};

/// Circle touching all four side lines, from two internal angle bisectors.
/// Throws GeometryError(kNotTangential) if the four side distances differ by
/// more than tol times the diameter.
Incircle incircle(const CanonicalQuad& cq, double tol = 1e-9);

struct VerifyOptions {
  int containment_samples = 256;
  int grid_samples = 100000;
};

/// Runs every applicable oracle against a solved quad.
std::vector<OracleReport> verify_solution(const CanonicalQuad& cq, const MinEccResult& result,
                                          const VerifyOptions& opts = {});

}  // namespace quadell::oracle
