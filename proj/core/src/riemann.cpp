#include "eulerfan/riemann.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "eulerfan/errors.hpp"

namespace eulerfan {

namespace {

constexpr int kMaxBracketSteps = 2000;
constexpr int kNewtonPolishSteps = 3;
constexpr int kMonotonicitySamples = 9;

// R(rho) = int^rho c(r)/r dr, the rarefaction Riemann-invariant potential.
double invariant_potential(const EosParams& eos, double rho) {
  return 2.0 * std::sqrt(eos.K * eos.gamma) / (eos.gamma - 1.0) *
         std::pow(rho, 0.5 * (eos.gamma - 1.0));
}

// Inverse of invariant_potential.
double density_from_potential(const EosParams& eos, double potential) {
  const double base = potential * (eos.gamma - 1.0) / (2.0 * std::sqrt(eos.K * eos.gamma));
  return std::pow(base, 2.0 / (eos.gamma - 1.0));
}

double wave_curve_slope(const EosParams& eos, double rho_from, double rho) {
  if (rho <= rho_from) return sound_speed(eos, rho) / rho;
  const double dp = pressure(eos, rho) - pressure(eos, rho_from);
  const double drho = rho - rho_from;
  const double g = drho * dp / (rho * rho_from);
  const double h = std::sqrt(g);
  if (h == 0.0) return sound_speed(eos, rho) / rho;
  const double dp_drho = eos.K * eos.gamma * std::pow(rho, eos.gamma - 1.0);
  const double dg = (dp + drho * dp_drho) / (rho * rho_from) - g / rho;
  return dg / (2.0 * h);
}

struct CurveMismatch {
  const RiemannData& data;

  // Strictly decreasing in rho: v_l - phi_l(rho) - (v_r + phi_r(rho)).
  double operator()(double rho) const {
    return data.left.v - wave_curve_drop(data.eos, data.left.rho, rho) -
           (data.right.v + wave_curve_drop(data.eos, data.right.rho, rho));
  }
  double derivative(double rho) const {
    return -wave_curve_slope(data.eos, data.left.rho, rho) -
           wave_curve_slope(data.eos, data.right.rho, rho);
  }
};

NonlinearWave classify(double rho_middle, double rho_outer) {
  if (rho_middle > rho_outer) return NonlinearWave::Shock;
  if (rho_middle < rho_outer) return NonlinearWave::Rarefaction;
  return NonlinearWave::None;
}

// Shock speed in Lax form, well conditioned for weak shocks.
// family 1: s = v_up - sqrt(rho_down dp / (rho_up drho)); family 3 mirrors it.
double lax_shock_speed(const EosParams& eos, const State& upstream, double rho_down,
                       int family) {
  const double dp = pressure(eos, rho_down) - pressure(eos, upstream.rho);
  const double drho = rho_down - upstream.rho;
  const double mass_speed = std::sqrt(rho_down * dp / (upstream.rho * drho));
  return family == 1 ? upstream.v - mass_speed : upstream.v + mass_speed;
}

void require_monotone(const CurveMismatch& f, double lo, double hi) {
  double previous = f(lo);
  for (int i = 1; i <= kMonotonicitySamples + 1; ++i) {
    const double rho = lo + (hi - lo) * static_cast<double>(i) / (kMonotonicitySamples + 1);
    const double value = f(rho);
    if (!(value < previous)) {
      throw SolverError("middle-state function is not strictly decreasing on bracket [" +
                        std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    previous = value;
  }
}

}  // namespace

void RiemannData::validate() const {
  eos.validate();
  left.validate();
  right.validate();
}

double Wave::left_edge() const {
  return std::visit(
      [](const auto& w) -> double {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, Rarefaction>) {
          return std::min(w.head, w.tail);
        } else {
          return w.speed;
        }
      },
      kind);
}

double Wave::right_edge() const {
  return std::visit(
      [](const auto& w) -> double {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, Rarefaction>) {
          return std::max(w.head, w.tail);
        } else {
          return w.speed;
        }
      },
      kind);
}

double RhResiduals::max_abs() const {
  return std::max({std::abs(mass), std::abs(momentum_x), std::abs(momentum_y)});
}

double hugoniot_velocity_jump(const EosParams& eos, double rho_from, double rho_to) {
  if (!(rho_from > 0.0) || !(rho_to > 0.0)) throw DomainError("densities must be positive");
  if (rho_from == rho_to) {
    throw DegenerateInputError("Hugoniot jump between equal densities is undefined");
  }
  const double dp = pressure(eos, rho_to) - pressure(eos, rho_from);
  return std::sqrt((rho_to - rho_from) * dp / (rho_to * rho_from));
}

double rarefaction_velocity_change(const EosParams& eos, double rho_from, double rho_to) {
  if (!(rho_from > 0.0) || !(rho_to > 0.0)) throw DomainError("densities must be positive");
  if (rho_from == rho_to) return 0.0;
  return invariant_potential(eos, rho_to) - invariant_potential(eos, rho_from);
}

double wave_curve_drop(const EosParams& eos, double rho_from, double rho) {
  if (rho > rho_from) return hugoniot_velocity_jump(eos, rho_from, rho);
  return rarefaction_velocity_change(eos, rho_from, rho);
}

MiddleState solve_middle_density(const RiemannData& data) {
  data.validate();
  const State& l = data.left;
  const State& r = data.right;
  if (l.rho == r.rho && l.v == r.v) {
    return MiddleState{l.rho, l.v, NonlinearWave::None, NonlinearWave::None, 0.0};
  }

  const CurveMismatch f{data};
  // f(0+): both waves are full rarefactions down to vacuum.
  const double at_vacuum = l.v - r.v + invariant_potential(data.eos, l.rho) +
                           invariant_potential(data.eos, r.rho);
  if (!(at_vacuum > 0.0)) {
    throw SolverError("vacuum forms: v_r - v_l = " + std::to_string(r.v - l.v) +
                      " exceeds the rarefaction budget " +
                      std::to_string(invariant_potential(data.eos, l.rho) +
                                     invariant_potential(data.eos, r.rho)));
  }

  const double rho_max = std::max(l.rho, r.rho);
  const double rho_min = std::min(l.rho, r.rho);
  double lo = 0.0;
  double hi = 0.0;
  if (f(rho_max) >= 0.0) {
    lo = rho_max;
    hi = 2.0 * rho_max;
    int steps = 0;
    while (f(hi) >= 0.0) {
      lo = hi;
      hi *= 2.0;
      if (++steps > kMaxBracketSteps || !std::isfinite(hi)) {
        throw SolverError("no upper bracket for the middle density");
      }
    }
  } else if (f(rho_min) >= 0.0) {
    lo = rho_min;
    hi = rho_max;
  } else {
    hi = rho_min;
    lo = 0.5 * rho_min;
    int steps = 0;
    while (f(lo) < 0.0) {
      hi = lo;
      lo *= 0.5;
      if (++steps > kMaxBracketSteps || lo == 0.0) {
        throw SolverError("no lower bracket for the middle density (near-vacuum)");
      }
    }
  }

  double rho_m = 0.0;
  if (f(lo) == 0.0) {
    rho_m = lo;
  } else if (f(hi) == 0.0) {
    rho_m = hi;
  } else {
    require_monotone(f, lo, hi);
    while (hi - lo > 1e-13 * std::max(1.0, 0.5 * (lo + hi))) {
      const double mid = 0.5 * (lo + hi);
      if (f(mid) > 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    rho_m = 0.5 * (lo + hi);
    double residual = std::abs(f(rho_m));
    for (int i = 0; i < kNewtonPolishSteps; ++i) {
      const double slope = f.derivative(rho_m);
      if (slope == 0.0 || !std::isfinite(slope)) break;
      const double candidate = rho_m - f(rho_m) / slope;
      if (!(candidate > 0.0)) break;
      const double candidate_residual = std::abs(f(candidate));
      if (candidate_residual > residual) break;
      rho_m = candidate;
      residual = candidate_residual;
    }
  }

  MiddleState out;
  out.rho = rho_m;
  const double v_from_left = l.v - wave_curve_drop(data.eos, l.rho, rho_m);
  const double v_from_right = r.v + wave_curve_drop(data.eos, r.rho, rho_m);
  out.v = 0.5 * (v_from_left + v_from_right);
  out.family1 = classify(rho_m, l.rho);
  out.family3 = classify(rho_m, r.rho);
  out.root_residual = std::abs(f(rho_m));
  return out;
}

double shock_speed(const EosParams& eos, const State& left, const State& right) {
  (void)eos;
  if (left.rho == right.rho) {
    throw DegenerateInputError("shock speed undefined for equal densities; use a contact");
  }
  return (left.rho * left.v - right.rho * right.v) / (left.rho - right.rho);
}

WaveFan solve_riemann(const RiemannData& data, SpaceTimePoint center) {
  WaveFan fan;
  fan.center = center;
  fan.eos = data.eos;
  const State& l = data.left;
  const State& r = data.right;
  if (l == r) {
    data.validate();
    fan.states.push_back(l);
    return fan;
  }

  const MiddleState middle = solve_middle_density(data);
  const State middle_left{middle.rho, l.u, middle.v};
  const State middle_right{middle.rho, r.u, middle.v};

  fan.states.push_back(l);
  switch (middle.family1) {
    case NonlinearWave::Shock:
      fan.waves.push_back(
          Wave{1, Shock{lax_shock_speed(data.eos, l, middle.rho, 1)}, l, middle_left});
      fan.states.push_back(middle_left);
      break;
    case NonlinearWave::Rarefaction:
      fan.waves.push_back(Wave{1,
                               Rarefaction{l.v - sound_speed(data.eos, l.rho),
                                           middle.v - sound_speed(data.eos, middle.rho)},
                               l, middle_left});
      fan.states.push_back(middle_left);
      break;
    case NonlinearWave::None:
      break;
  }

  if (l.u != r.u) {
    if (middle.family1 == NonlinearWave::None) fan.states.back() = middle_left;
    fan.waves.push_back(Wave{2, Contact{middle.v}, middle_left, middle_right});
    fan.states.push_back(middle_right);
  }

  switch (middle.family3) {
    case NonlinearWave::Shock:
      fan.waves.push_back(
          Wave{3, Shock{lax_shock_speed(data.eos, r, middle.rho, 3)}, middle_right, r});
      fan.states.push_back(r);
      break;
    case NonlinearWave::Rarefaction:
      fan.waves.push_back(Wave{3,
                               Rarefaction{r.v + sound_speed(data.eos, r.rho),
                                           middle.v + sound_speed(data.eos, middle.rho)},
                               middle_right, r});
      fan.states.push_back(r);
      break;
    case NonlinearWave::None:
      break;
  }
  // When the 3-wave is absent the last middle state coincides with the
  // right data up to rounding; pin it exactly.
  fan.states.back() = r;
  if (!fan.waves.empty()) fan.waves.back().right_state = r;
  return fan;
}

State sample_xi(const WaveFan& fan, double xi) {
  const EosParams& eos = fan.eos;
  const double spread = 0.5 * (eos.gamma + 1.0);
  for (std::size_t i = 0; i < fan.waves.size(); ++i) {
    const Wave& wave = fan.waves[i];
    if (xi < wave.left_edge()) return fan.states[i];
    if (!wave.is_rarefaction() || !(xi < wave.right_edge())) continue;
    // Inside the fan: xi = v -/+ c(rho) with the Riemann invariant of the
    // upstream side held fixed, so c = (gamma - 1)/2 R and xi is affine in R.
    if (wave.family == 1) {
      const State& up = wave.left_state;
      const double invariant = up.v + invariant_potential(eos, up.rho);
      const double potential = (invariant - xi) / spread;
      return State{density_from_potential(eos, potential), up.u, invariant - potential};
    }
    const State& up = wave.right_state;
    const double invariant = up.v - invariant_potential(eos, up.rho);
    const double potential = (xi - invariant) / spread;
    return State{density_from_potential(eos, potential), up.u, invariant + potential};
  }
  return fan.states.back();
}

State sample(const WaveFan& fan, double t, double y) {
  if (!(t > fan.center.t)) {
    throw DomainError("fan sampled at t = " + std::to_string(t) +
                      " not after its center t0 = " + std::to_string(fan.center.t));
  }
  return sample_xi(fan, (y - fan.center.y) / (t - fan.center.t));
}

RhResiduals check_rh(const EosParams& eos, double speed, const State& left,
                     const State& right) {
  const double pl = pressure(eos, left.rho);
  const double pr = pressure(eos, right.rho);
  RhResiduals res;
  res.mass = speed * (left.rho - right.rho) - (left.rho * left.v - right.rho * right.v);
  res.momentum_x = speed * (left.rho * left.u - right.rho * right.u) -
                   (left.rho * left.u * left.v - right.rho * right.u * right.v);
  res.momentum_y = speed * (left.rho * left.v - right.rho * right.v) -
                   (left.rho * left.v * left.v + pl - right.rho * right.v * right.v - pr);
  return res;
}

double rh_scale(const EosParams& eos, double speed, const State& left, const State& right) {
  const std::array<double, 8> terms{
      speed * left.rho,
      speed * right.rho,
      left.rho * left.v,
      right.rho * right.v,
      speed * left.rho * left.u,
      speed * right.rho * right.u,
      left.rho * left.v * left.v + pressure(eos, left.rho),
      right.rho * right.v * right.v + pressure(eos, right.rho),
  };
  double scale = 0.0;
  for (double t : terms) scale = std::max(scale, std::abs(t));
  return std::max(scale, std::abs(speed * left.rho * left.v));
}

double check_energy_dissipation(const EosParams& eos, double speed, const State& left,
                                const State& right) {
  const double el = energy_density(eos, left);
  const double er = energy_density(eos, right);
  return (energy_flux(eos, left) - energy_flux(eos, right)) - speed * (el - er);
}

double energy_scale(const EosParams& eos, double speed, const State& left,
                    const State& right) {
  return std::max({std::abs(energy_flux(eos, left)), std::abs(energy_flux(eos, right)),
                   std::abs(speed * energy_density(eos, left)),
                   std::abs(speed * energy_density(eos, right))});
}

}  // namespace eulerfan
