#pragma once

namespace wedderburn {

struct ToleranceConfig {
  double tol_zero = 1e-12;         // absolute floor for "is zero"
  double tol_rel = 1e-9;           // relative residual threshold
  double tol_eig_cluster = 1e-8;   // relative eigenvalue-gap threshold

  /// Throws a domain error unless all values are finite, nonnegative and
  /// tol_zero <= tol_rel.
  void validate() const;

  /// Single-knob configuration: tol_rel = tol and tol_eig_cluster scaled by the
  /// same factor relative to the defaults; tol_zero is clamped to stay <= tol_rel.
  static ToleranceConfig scaled(double tol);

  /// max(tol_zero, tol_rel * scale)
  double threshold(double scale) const;
};

}  // namespace wedderburn
