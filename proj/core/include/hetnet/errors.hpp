#pragma once

#include <stdexcept>
#include <string>

namespace hetnet {

/// Raised when an input violates a documented precondition. `field()` names
/// the offending parameter so callers can point at the config key.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Raised when a numerical procedure (quadrature, series, root finding,
/// simulation) fails to reach its tolerance. `stage()` names the procedure.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(std::string stage, const std::string& message)
      : std::runtime_error(stage + ": " + message), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

namespace detail {

inline void require(bool ok, const char* field, const char* message) {
  if (!ok) throw ValidationError(field, message);
}

}  // namespace detail
}  // namespace hetnet
