#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "quadell/family.hpp"
#include "quadell/minecc.hpp"
#include "quadell/oracle.hpp"
#include "quadell/quad.hpp"

namespace quadell {

/// Malformed input document.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"vertices": [[x, y] x4], "tol": optional positive number}
struct QuadInput {
  std::vector<Point2> vertices;
  std::optional<double> tol;
};

QuadInput parse_quad_input(std::string_view text);

using Json = nlohmann::ordered_json;

Json point_json(Point2 p);
Json conic_json(const Conic& c);
Json canonical_json(const CanonicalQuad& cq);
Json classification_json(const QuadClass& qc);
Json newton_json(const NewtonSegment& seg);
Json angle_json(double radians);
Json result_json(const CanonicalQuad& cq, const MinEccResult& r);
Json oracle_json(const std::vector<oracle::OracleReport>& reports);
Json family_point_json(const CanonicalQuad& cq, const FamilyPoint& fp);
Json error_json(std::string_view code, std::string_view message);

/// Header shared by every command: input echo, tolerance, canonical form,
/// classification, Newton segment and diagonal angle.
Json quad_report(const QuadInput& input, const CanonicalQuad& cq, double tol);

/// Two-space indented document with a trailing newline.
std::string dump(const Json& doc);

}  // namespace quadell
