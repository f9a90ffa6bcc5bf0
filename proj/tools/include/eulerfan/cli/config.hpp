#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "eulerfan/eos.hpp"
#include "eulerfan/riemann.hpp"
#include "eulerfan/subsolution.hpp"
#include "eulerfan/tolerance.hpp"

namespace eulerfan::cli {

/// Invalid configuration. `where` is a JSON pointer to the offending
/// value ("" for the document itself); `offset` a byte offset into the
/// JSON text or into the expression string, when known.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string where, std::string message, std::optional<std::size_t> offset = {});

  [[nodiscard]] const std::string& where() const noexcept { return where_; }
  [[nodiscard]] const std::string& detail() const noexcept { return detail_; }
  [[nodiscard]] std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  std::string where_;
  std::string detail_;
  std::optional<std::size_t> offset_;
};

/// Claims checked by `verify` beyond the always-on consistency checks.
struct Expectations {
  std::optional<double> rho_M_below;
  std::optional<double> rho_M_above;
  std::optional<double> sigma_below;
  std::optional<double> sigma_above;
  /// Glued solution has strictly smaller action than the planar one.
  std::optional<bool> counterexample;
  /// Expected action coefficient of the glued solution.
  std::optional<double> K_ex;
  /// Check the planar coefficient against the two-shock closed form.
  bool K_1d_closed_form = false;
  /// Interaction horizon lies beyond 2 T0.
  bool horizon_beyond_2T0 = false;
};

struct RunConfig {
  std::string name;
  RiemannData data;
  std::optional<FanSubsolution> subsolution;
  double T = 1.0;
  double T0 = 0.5;
  double L1 = 1.0;
  /// Unset: outer extent of the compared solutions.
  std::optional<double> L2;
  ToleranceConfig tolerances;
  Expectations expect;
  std::string output_dir = "out";
};

/// Parses a configuration document. Numeric leaves are JSON numbers or
/// strings in the constant-expression language.
[[nodiscard]] RunConfig parse_config(std::string_view json_text);

[[nodiscard]] RunConfig load_config(const std::string& path);

/// The shipped paper-fixture configuration, compiled in.
[[nodiscard]] std::string_view default_config_text();

}  // namespace eulerfan::cli
