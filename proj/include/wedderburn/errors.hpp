#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wedderburn {

enum class ErrorKind {
  dimension,
  domain,
  contract_violation,
  tolerance_escalation,
  structural_inconsistency,
  numerical_inconsistency,
  class_linkage,
  catalog,
  not_in_algebra,
  decomposition_invalid,
  io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `stage()` names the pipeline step
/// that raised it when the error passed through `decompose`.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& stage() const noexcept { return stage_; }
  void set_stage(std::string stage) { stage_ = std::move(stage); }

 private:
  ErrorKind kind_;
  std::string stage_;
};

/// Raised when a computed quantity misses its tolerance; carries the residual.
class ToleranceError : public Error {
 public:
  ToleranceError(ErrorKind kind, const std::string& what, double residual)
      : Error(kind, what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace wedderburn
