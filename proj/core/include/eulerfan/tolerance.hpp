#pragma once

namespace eulerfan {

/// Every numerical threshold used by the checks in this library.
/// Passed explicitly; nothing reads a hidden constant.
struct ToleranceConfig {
  /// Absolute residual bound on unit-scaled quantities. Residuals are
  /// compared against residual_abs * max(1, scale).
  double residual_abs = 1e-9;
  /// Relative bound used for wave-curve consistency and RH residuals of
  /// shocks produced by the exact solver.
  double relative = 1e-10;
  /// Strict inequalities must exceed strict * scale.
  double strict = 1e-12;
};

}  // namespace eulerfan
