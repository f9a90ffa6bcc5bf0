#pragma once

namespace eulerfan {

/// Polytropic pressure law p(rho) = K * rho^gamma.
struct EosParams {
  double K = 1.0;
  double gamma = 2.0;

  /// Throws DomainError unless K > 0 and gamma > 1.
  void validate() const;
  /// True for the K = 1, gamma = 2 law p = rho^2.
  [[nodiscard]] bool is_quadratic() const noexcept { return K == 1.0 && gamma == 2.0; }
};

/// Constant fluid state. `u` is the velocity component tangential to the
/// planar interface (along x), `v` the normal component (along y).
struct State {
  double rho = 1.0;
  double u = 0.0;
  double v = 0.0;

  /// Throws DomainError on rho <= 0 or non-finite components.
  void validate() const;
  [[nodiscard]] double speed_squared() const noexcept { return u * u + v * v; }

  friend bool operator==(const State&, const State&) = default;
};

[[nodiscard]] double pressure(const EosParams& eos, double rho);

/// P(rho) = rho * int^rho p(r)/r^2 dr = K rho^gamma / (gamma - 1).
[[nodiscard]] double pressure_potential(const EosParams& eos, double rho);

[[nodiscard]] double sound_speed(const EosParams& eos, double rho);

/// 1/2 rho |u|^2 - P(rho), the integrand of the action functional.
[[nodiscard]] double action_density(const EosParams& eos, const State& state);

/// 1/2 rho |u|^2 + P(rho).
[[nodiscard]] double energy_density(const EosParams& eos, const State& state);

/// 1/2 rho C + P(rho): energy of a region where |u|^2 = C a.e. but the
/// velocity itself is not a single constant.
[[nodiscard]] double energy_density_with_kinetic(const EosParams& eos, double rho,
                                                 double kinetic_level);

/// Normal energy flux (E + p) v.
[[nodiscard]] double energy_flux(const EosParams& eos, const State& state);

}  // namespace eulerfan
