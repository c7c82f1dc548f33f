#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadell {

enum class ErrorCode {
  kNotConvex,
  kDegenerate,
  kTrapezoid,
  kNoValidLabeling,
  kNotAnEllipse,
  kNotOnConic,
  kSingularPoint,
  kHOutOfRange,
  kCircularPoint,
  kNotType1,
  kNotTangential,
};

/// Stable machine-readable name, e.g. "not_convex".
std::string_view error_code_name(ErrorCode code);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace quadell
