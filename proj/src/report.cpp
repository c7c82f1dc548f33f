#include "quadell/report.hpp"

#include <cmath>
#include <numbers>

namespace quadell {

QuadInput parse_quad_input(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw InputError("expected an object with a \"vertices\" array");
  const Json& verts = doc["vertices"];
  if (verts.size() != 4) throw InputError("expected exactly 4 vertices");

  QuadInput in;
  for (const Json& v : verts) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
      throw InputError("each vertex must be a pair of numbers");
    const Point2 p{v[0].get<double>(), v[1].get<double>()};
    if (!is_finite(p)) throw InputError("vertex coordinates must be finite");
    in.vertices.push_back(p);
  }
  if (doc.contains("tol")) {
    if (!doc["tol"].is_number()) throw InputError("\"tol\" must be a number");
    const double tol = doc["tol"].get<double>();
    if (!(std::isfinite(tol) && tol > 0.0)) throw InputError("\"tol\" must be positive");
    in.tol = tol;
  }
  return in;
}

namespace {

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Json point_json(Point2 p) { return Json::array({number_or_null(p.x), number_or_null(p.y)}); }

Json conic_json(const Conic& c) {
  Json j;
  j["A"] = c.A;
  j["B"] = c.B;
  j["C"] = c.C;
  j["D"] = c.D;
  j["E"] = c.E;
  j["F"] = c.F;
  return j;
}

Json canonical_json(const CanonicalQuad& cq) {
  Json j;
  j["s"] = cq.s;
  j["t"] = cq.t;
  j["u"] = cq.u;
  j["v"] = cq.v;
  j["w"] = cq.w;
  j["isometry"] = {{"rotation", cq.iso.angle},
                   {"translation", point_json(cq.iso.translation)},
                   {"reflection", cq.iso.reflect}};
  return j;
}

Json classification_json(const QuadClass& qc) {
  Json j;
  j["kind"] = to_string(qc.kind);
  j["tangential"] = qc.tangential;
  j["orthodiagonal"] = qc.orthodiagonal;
  Json res = Json::object();
  for (const auto& [name, value] : qc.residuals) res[name] = number_or_null(value);
  j["residuals"] = res;
  return j;
}

Json newton_json(const NewtonSegment& seg) {
  Json j;
  j["m1"] = point_json(seg.m1);
  j["m2"] = point_json(seg.m2);
  j["interval"] = Json::array({seg.lo, seg.hi});
  j["slope"] = seg.slope;
  j["intercept"] = seg.intercept;
  return j;
}

Json angle_json(double radians) {
  return {{"radians", number_or_null(radians)},
          {"degrees", number_or_null(radians * 180.0 / std::numbers::pi)}};
}

Json result_json(const CanonicalQuad& cq, const MinEccResult& r) {
  Json j;
  j["method"] = to_string(r.method);
  j["relabeled"] = r.relabeled;
  j["h_star"] = r.h_star;
  j["iterations"] = r.iterations;
  j["conic"] = conic_json(r.conic.normalized());
  j["center"] = point_json(r.geom.center);
  j["a"] = r.geom.a;
  j["b"] = r.geom.b;
  j["eccentricity"] = r.geom.eccentricity;
  j["eccentricity_computed"] = r.eccentricity_computed;
  j["major_axis_angle"] = r.geom.major_axis_angle ? angle_json(*r.geom.major_axis_angle) : Json(nullptr);
  j["g"] = r.g_at_h;
  j["gamma"] = angle_json(r.gamma);
  j["alpha"] = angle_json(r.alpha);
  j["tan_sq_gamma"] = number_or_null(std::tan(r.gamma) * std::tan(r.gamma));
  j["residual"] = r.residual;
  j["tangential_circle"] = r.tangential_circle;
  j["numeric_h"] = r.numeric_h ? Json(*r.numeric_h) : Json(nullptr);
  j["closed_form_diagnostic"] = r.closed_form_diagnostic ? Json(*r.closed_form_diagnostic) : Json(nullptr);

  const Isometry2 back = cq.iso.inverse();
  j["input_frame"] = {{"conic", conic_json(r.conic.transformed(back).normalized())},
                      {"center", point_json(back.apply(r.geom.center))}};
  return j;
}

Json oracle_json(const std::vector<oracle::OracleReport>& reports) {
  Json arr = Json::array();
  for (const auto& rep : reports) {
    Json j;
    j["name"] = rep.name;
    j["pass"] = rep.pass;
    j["worst_residual"] = number_or_null(rep.worst_residual);
    j["tolerance"] = rep.tolerance;
    j["location"] = rep.location;
    arr.push_back(j);
  }
  return arr;
}

Json family_point_json(const CanonicalQuad& cq, const FamilyPoint& fp) {
  Json j;
  j["h"] = fp.h;
  j["center"] = point_json(fp.center);
  j["input_frame_center"] = point_json(cq.iso.apply_inverse(fp.center));
  j["conic"] = conic_json(fp.conic);
  j["conic_normalized"] = conic_json(fp.conic.normalized());
  j["J"] = fp.spectral.J;
  j["M"] = fp.spectral.M;
  j["G"] = fp.spectral.G;
  j["R"] = fp.spectral.R;
  Json tang = Json::array();
  for (const TangencyPoint& tp : fp.tangency)
    tang.push_back({{"point", point_json(tp.point)}, {"lambda", tp.lambda}});
  j["tangency"] = tang;
  return j;
}

Json error_json(std::string_view code, std::string_view message) {
  return {{"error", {{"code", std::string(code)}, {"message", std::string(message)}}}};
}

Json quad_report(const QuadInput& input, const CanonicalQuad& cq, double tol) {
  Json j;
  Json verts = Json::array();
  for (const Point2& p : input.vertices) verts.push_back(point_json(p));
  j["input"] = {{"vertices", verts}};
  j["tolerance"] = tol;
  j["canonical"] = canonical_json(cq);
  j["classification"] = classification_json(classify(cq, tol));
  j["newton_segment"] = newton_json(newton_segment(cq));
  j["diagonal_angle"] = angle_json(diagonal_angle(cq));
  return j;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace quadell
