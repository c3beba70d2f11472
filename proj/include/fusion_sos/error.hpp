#pragma once

#include <stdexcept>
#include <string>

namespace fusion_sos {

enum class ErrorKind {
  ShapeMismatch,
  Singular,
  Inconsistent,
  Pole,
  NotProportional,
  LossyTruncation,
  UnsupportedEvaluationPoint,
  DegenerateParameterPoint,
  UnsupportedParameterRegion,
  InvalidPath,
  AdjacencyViolation,
};

const char* to_string(ErrorKind kind);

/// Failure of an exact computation. The message starts with the kind's name
/// ("singular", "pole", ...) followed by context.
class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, const std::string& context)
      : std::runtime_error(std::string(to_string(kind)) +
                           (context.empty() ? "" : ": " + context)),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fusion_sos
