#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "orbit/jordan.hpp"
#include "orbit/property_p.hpp"

namespace orbit {

/// Input error tied to a location in the problem spec, e.g.
/// "blocks[1].lambda.re".
class SpecError : public std::runtime_error {
 public:
  SpecError(std::string path, const std::string& message)
      : std::runtime_error(path.empty() ? message : path + ": " + message),
        path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

inline constexpr long kDefaultHorizon = 1000;

/// Parsed problem spec:
///   scalar_mode  "exact" (default) or "float"
///   blocks       [{"lambda": <scalar>, "size": n}, ...]
///   x, c         per-block coordinate lists; omitted means zero
///   tail         {"r", "N", "kind": "diagonal"|"shift", "truncation",
///                 "weights": [<scalar>...], "x": [...], "c": [...]}; tail
///                 vectors may be shorter than the truncation (zero padded)
///   horizon      oracle horizon, default 1000
/// A <scalar> is "p/q", an integer, {"re": "p/q", "im": "p/q"} or a pair
/// ["re", "im"]. Plain JSON floats are accepted only in float mode.
struct ProblemSpec {
  ScalarMode mode = ScalarMode::Exact;
  JordanSystem system{{}, {}, {}};
  std::optional<PropertyPOperator> property_p;
  long horizon = kDefaultHorizon;
};

/// Throws SpecError.
ProblemSpec parse_problem(const nlohmann::json& doc);
/// Parses JSON text first; malformed JSON is a SpecError with an empty path.
ProblemSpec parse_problem_text(const std::string& text);

Scalar parse_scalar(const nlohmann::json& value, ScalarMode mode, const std::string& path);

}  // namespace orbit
