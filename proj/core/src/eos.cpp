#include "eulerfan/eos.hpp"

#include <cmath>
#include <string>

#include "eulerfan/errors.hpp"

namespace eulerfan {

namespace {

void require_positive_density(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw DomainError("density must be positive and finite, got " + std::to_string(rho));
  }
}

}  // namespace

void EosParams::validate() const {
  if (!(K > 0.0) || !std::isfinite(K)) throw DomainError("EOS coefficient K must be positive");
  if (!(gamma > 1.0) || !std::isfinite(gamma)) throw DomainError("EOS exponent gamma must exceed 1");
}

void State::validate() const {
  require_positive_density(rho);
  if (!std::isfinite(u) || !std::isfinite(v)) throw DomainError("velocity must be finite");
}

double pressure(const EosParams& eos, double rho) {
  require_positive_density(rho);
  return eos.K * std::pow(rho, eos.gamma);
}

double pressure_potential(const EosParams& eos, double rho) {
  require_positive_density(rho);
  return eos.K * std::pow(rho, eos.gamma) / (eos.gamma - 1.0);
}

double sound_speed(const EosParams& eos, double rho) {
  require_positive_density(rho);
  return std::sqrt(eos.K * eos.gamma * std::pow(rho, eos.gamma - 1.0));
}

double action_density(const EosParams& eos, const State& state) {
  return 0.5 * state.rho * state.speed_squared() - pressure_potential(eos, state.rho);
}

double energy_density(const EosParams& eos, const State& state) {
  return 0.5 * state.rho * state.speed_squared() + pressure_potential(eos, state.rho);
}

double energy_density_with_kinetic(const EosParams& eos, double rho, double kinetic_level) {
  if (kinetic_level < 0.0) throw DomainError("kinetic level |u|^2 must be non-negative");
  return 0.5 * rho * kinetic_level + pressure_potential(eos, rho);
}

double energy_flux(const EosParams& eos, const State& state) {
  return (energy_density(eos, state) + pressure(eos, state.rho)) * state.v;
}

}  // namespace eulerfan
