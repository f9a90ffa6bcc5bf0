#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "eulerfan/eos.hpp"
#include "eulerfan/tolerance.hpp"

namespace eulerfan {

/// Planar Riemann data: `left` holds for y < y0, `right` for y > y0.
struct RiemannData {
  State left;
  State right;
  EosParams eos;

  void validate() const;
};

struct Shock {
  double speed;
};

/// Centered rarefaction. `head` is the edge facing the undisturbed state,
/// `tail` the edge facing the middle state: head < tail for family 1,
/// head > tail for family 3.
struct Rarefaction {
  double head;
  double tail;
};

/// Linearly degenerate wave carrying the jump in tangential velocity u.
struct Contact {
  double speed;
};

using WaveKind = std::variant<Shock, Rarefaction, Contact>;

/// Family 1 and 3 are the genuinely nonlinear fields (v -/+ c), family 2
/// the contact (v).
struct Wave {
  int family = 1;
  WaveKind kind;
  State left_state;
  State right_state;

  [[nodiscard]] double left_edge() const;
  [[nodiscard]] double right_edge() const;
  [[nodiscard]] bool is_shock() const { return std::holds_alternative<Shock>(kind); }
  [[nodiscard]] bool is_rarefaction() const { return std::holds_alternative<Rarefaction>(kind); }
  [[nodiscard]] bool is_contact() const { return std::holds_alternative<Contact>(kind); }
};

struct SpaceTimePoint {
  double t = 0.0;
  double y = 0.0;
};

/// Self-similar solution of one Riemann problem centered at `center`.
/// states.size() == waves.size() + 1; states.front() and states.back()
/// are the Riemann data.
struct WaveFan {
  SpaceTimePoint center;
  EosParams eos;
  std::vector<Wave> waves;
  std::vector<State> states;

  [[nodiscard]] bool empty() const noexcept { return waves.empty(); }
};

enum class NonlinearWave { None, Shock, Rarefaction };

/// Middle state of the planar Riemann problem plus the branch taken on
/// each nonlinear wave curve.
struct MiddleState {
  double rho = 0.0;
  double v = 0.0;
  NonlinearWave family1 = NonlinearWave::None;
  NonlinearWave family3 = NonlinearWave::None;
  /// |f(rho_M)| of the root function after polishing.
  double root_residual = 0.0;
};

/// Residuals of the three planar jump conditions,
/// s [rho] - [rho v], s [rho u] - [rho u v], s [rho v] - [rho v^2 + p],
/// with [q] = q_left - q_right.
struct RhResiduals {
  double mass = 0.0;
  double momentum_x = 0.0;
  double momentum_y = 0.0;

  [[nodiscard]] double max_abs() const;
};

/// |Delta v| across an admissible shock joining densities rho_from and
/// rho_to: sqrt((b - a)(p(b) - p(a)) / (a b)).
[[nodiscard]] double hugoniot_velocity_jump(const EosParams& eos, double rho_from, double rho_to);

/// Integral of c(r)/r from rho_from to rho_to (signed).
[[nodiscard]] double rarefaction_velocity_change(const EosParams& eos, double rho_from,
                                                 double rho_to);

/// Root of the wave-curve mismatch: bracketed bisection, then Newton
/// polish. Throws SolverError on vacuum formation.
[[nodiscard]] MiddleState solve_middle_density(const RiemannData& data);

/// (rho_l v_l - rho_r v_r) / (rho_l - rho_r).
[[nodiscard]] double shock_speed(const EosParams& eos, const State& left, const State& right);

[[nodiscard]] WaveFan solve_riemann(const RiemannData& data, SpaceTimePoint center = {});

/// Evaluates the fan at (t, y), t > center.t. Points exactly on a
/// discontinuity take the state on its right.
[[nodiscard]] State sample(const WaveFan& fan, double t, double y);

/// Same, in the similarity variable xi = (y - y0) / (t - t0).
[[nodiscard]] State sample_xi(const WaveFan& fan, double xi);

[[nodiscard]] RhResiduals check_rh(const EosParams& eos, double speed, const State& left,
                                   const State& right);

/// Largest magnitude among the terms of the jump conditions; the natural
/// scale for relative RH checks.
[[nodiscard]] double rh_scale(const EosParams& eos, double speed, const State& left,
                              const State& right);

/// Entropy production (F_l - F_r) - s (E_l - E_r) of a single
/// discontinuity; admissible iff >= 0.
[[nodiscard]] double check_energy_dissipation(const EosParams& eos, double speed,
                                              const State& left, const State& right);

/// Scale for the energy margin (largest term magnitude).
[[nodiscard]] double energy_scale(const EosParams& eos, double speed, const State& left,
                                  const State& right);

/// Velocity change along the family-1 wave curve leaving `from` towards
/// density rho: the shock branch for rho > from.rho, the rarefaction
/// branch otherwise. v_M = v_from - wave_curve_drop(...).
[[nodiscard]] double wave_curve_drop(const EosParams& eos, double rho_from, double rho);

}  // namespace eulerfan
