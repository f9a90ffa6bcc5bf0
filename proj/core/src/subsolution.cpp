#include "eulerfan/subsolution.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <initializer_list>
#include <string>
#include <thread>

#include "eulerfan/errors.hpp"

namespace eulerfan {

namespace {

double max_abs(std::initializer_list<double> terms) {
  double out = 0.0;
  for (double t : terms) out = std::max(out, std::abs(t));
  return out;
}

std::array<double, 3> rh_left_scale(const FanSubsolution& s, const State& l,
                                    const EosParams& eos) {
  const double pl = pressure(eos, l.rho);
  const double p1 = pressure(eos, s.rho1);
  return {
      max_abs({s.mu0 * l.rho, s.mu0 * s.rho1, l.rho * l.v, s.rho1 * s.v1}),
      max_abs({s.mu0 * l.rho * l.u, s.mu0 * s.rho1 * s.u1, l.rho * l.u * l.v, s.rho1 * s.delta1}),
      max_abs({s.mu0 * l.rho * l.v, s.mu0 * s.rho1 * s.v1, l.rho * l.v * l.v,
               s.rho1 * (0.5 * s.C1 - s.gamma1), pl, p1}),
  };
}

std::array<double, 3> rh_right_scale(const FanSubsolution& s, const State& r,
                                     const EosParams& eos) {
  const double pr = pressure(eos, r.rho);
  const double p1 = pressure(eos, s.rho1);
  return {
      max_abs({s.mu1 * r.rho, s.mu1 * s.rho1, r.rho * r.v, s.rho1 * s.v1}),
      max_abs({s.mu1 * r.rho * r.u, s.mu1 * s.rho1 * s.u1, r.rho * r.u * r.v, s.rho1 * s.delta1}),
      max_abs({s.mu1 * r.rho * r.v, s.mu1 * s.rho1 * s.v1, r.rho * r.v * r.v,
               s.rho1 * (0.5 * s.C1 - s.gamma1), pr, p1}),
  };
}

// Energy and flux of the wedge: |u|^2 replaced by C1, normal velocity v1.
double wedge_energy(const FanSubsolution& s, const EosParams& eos) {
  return 0.5 * s.rho1 * s.C1 + pressure_potential(eos, s.rho1);
}
double wedge_flux(const FanSubsolution& s, const EosParams& eos) {
  return (wedge_energy(s, eos) + pressure(eos, s.rho1)) * s.v1;
}

using Vector6 = Eigen::Matrix<double, 6, 1>;
using Matrix6 = Eigen::Matrix<double, 6, 6>;

FanSubsolution with_unknowns(FanSubsolution s, const Vector6& x) {
  s.mu0 = x(0);
  s.mu1 = x(1);
  s.u1 = x(2);
  s.v1 = x(3);
  s.gamma1 = x(4);
  s.delta1 = x(5);
  return s;
}

Vector6 unknowns_of(const FanSubsolution& s) {
  Vector6 x;
  x << s.mu0, s.mu1, s.u1, s.v1, s.gamma1, s.delta1;
  return x;
}

// Residuals divided by max(1, equation scale), ordered
// (left mass, left x, left y, right mass, right x, right y).
Vector6 scaled_residuals(const FanSubsolution& s, const RiemannData& data) {
  const RhResiduals l = rh_left_residuals(s, data.left, data.eos);
  const RhResiduals r = rh_right_residuals(s, data.right, data.eos);
  const auto ls = rh_left_scale(s, data.left, data.eos);
  const auto rs = rh_right_scale(s, data.right, data.eos);
  Vector6 out;
  out << l.mass / std::max(1.0, ls[0]), l.momentum_x / std::max(1.0, ls[1]),
      l.momentum_y / std::max(1.0, ls[2]), r.mass / std::max(1.0, rs[0]),
      r.momentum_x / std::max(1.0, rs[1]), r.momentum_y / std::max(1.0, rs[2]);
  return out;
}

Vector6 raw_residuals(const FanSubsolution& s, const RiemannData& data) {
  const RhResiduals l = rh_left_residuals(s, data.left, data.eos);
  const RhResiduals r = rh_right_residuals(s, data.right, data.eos);
  Vector6 out;
  out << l.mass, l.momentum_x, l.momentum_y, r.mass, r.momentum_x, r.momentum_y;
  return out;
}

// d(raw residuals) / d(mu0, mu1, u1, v1, gamma1, delta1).
Matrix6 jacobian(const FanSubsolution& s, const RiemannData& data) {
  const State& l = data.left;
  const State& r = data.right;
  const double rho1 = s.rho1;
  Matrix6 j = Matrix6::Zero();
  j(0, 0) = l.rho - rho1;
  j(0, 3) = rho1;
  j(1, 0) = l.rho * l.u - rho1 * s.u1;
  j(1, 2) = -s.mu0 * rho1;
  j(1, 5) = rho1;
  j(2, 0) = l.rho * l.v - rho1 * s.v1;
  j(2, 3) = -s.mu0 * rho1;
  j(2, 4) = -rho1;
  j(3, 1) = rho1 - r.rho;
  j(3, 3) = -rho1;
  j(4, 1) = rho1 * s.u1 - r.rho * r.u;
  j(4, 2) = s.mu1 * rho1;
  j(4, 5) = -rho1;
  j(5, 1) = rho1 * s.v1 - r.rho * r.v;
  j(5, 3) = s.mu1 * rho1;
  j(5, 4) = rho1;
  return j;
}

double condition_number(const Matrix6& j) {
  const Eigen::JacobiSVD<Matrix6> svd(j);
  const auto& sv = svd.singularValues();
  const double smallest = sv(sv.size() - 1);
  if (smallest == 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / smallest;
}

}  // namespace

void FanSubsolution::validate() const {
  if (!(mu0 < mu1)) throw DomainError("fan subsolution requires mu0 < mu1");
  if (!(rho1 > 0.0)) throw DomainError("fan subsolution requires rho1 > 0");
  if (!(C1 > 0.0)) throw DomainError("fan subsolution requires C1 > 0");
}

RhResiduals rh_left_residuals(const FanSubsolution& s, const State& l, const EosParams& eos) {
  RhResiduals res;
  res.mass = s.mu0 * (l.rho - s.rho1) - (l.rho * l.v - s.rho1 * s.v1);
  res.momentum_x = s.mu0 * (l.rho * l.u - s.rho1 * s.u1) - (l.rho * l.u * l.v - s.rho1 * s.delta1);
  res.momentum_y = s.mu0 * (l.rho * l.v - s.rho1 * s.v1) -
                   (l.rho * l.v * l.v - s.rho1 * (0.5 * s.C1 - s.gamma1) + pressure(eos, l.rho) -
                    pressure(eos, s.rho1));
  return res;
}

RhResiduals rh_right_residuals(const FanSubsolution& s, const State& r, const EosParams& eos) {
  RhResiduals res;
  res.mass = s.mu1 * (s.rho1 - r.rho) - (s.rho1 * s.v1 - r.rho * r.v);
  res.momentum_x = s.mu1 * (s.rho1 * s.u1 - r.rho * r.u) - (s.rho1 * s.delta1 - r.rho * r.u * r.v);
  res.momentum_y = s.mu1 * (s.rho1 * s.v1 - r.rho * r.v) -
                   (s.rho1 * (0.5 * s.C1 - s.gamma1) - r.rho * r.v * r.v + pressure(eos, s.rho1) -
                    pressure(eos, r.rho));
  return res;
}

std::array<double, 2> subsolution_margins(const FanSubsolution& s) {
  const double first = s.C1 - s.u1 * s.u1 - s.v1 * s.v1;
  const double off = s.delta1 - s.u1 * s.v1;
  const double second =
      (0.5 * s.C1 - s.u1 * s.u1 + s.gamma1) * (0.5 * s.C1 - s.v1 * s.v1 - s.gamma1) - off * off;
  return {first, second};
}

std::array<double, 2> admissibility_margins(const FanSubsolution& s, const State& l,
                                            const State& r, const EosParams& eos) {
  const double e_wedge = wedge_energy(s, eos);
  const double f_wedge = wedge_flux(s, eos);
  const double left = (energy_flux(eos, l) - f_wedge) - s.mu0 * (energy_density(eos, l) - e_wedge);
  const double right =
      (f_wedge - energy_flux(eos, r)) - s.mu1 * (e_wedge - energy_density(eos, r));
  return {left, right};
}

double FeasibilityReport::worst_relative_residual() const {
  double worst = 0.0;
  const std::array<double, 3> left{rh_left.mass, rh_left.momentum_x, rh_left.momentum_y};
  const std::array<double, 3> right{rh_right.mass, rh_right.momentum_x, rh_right.momentum_y};
  for (int i = 0; i < 3; ++i) {
    worst = std::max(worst, std::abs(left[i]) / std::max(1.0, rh_left_scale[i]));
    worst = std::max(worst, std::abs(right[i]) / std::max(1.0, rh_right_scale[i]));
  }
  return worst;
}

FeasibilityReport check_feasibility(const FanSubsolution& s, const RiemannData& data,
                                    const ToleranceConfig& tol) {
  const State& l = data.left;
  const State& r = data.right;
  const EosParams& eos = data.eos;

  FeasibilityReport rep;
  rep.rh_left = rh_left_residuals(s, l, eos);
  rep.rh_right = rh_right_residuals(s, r, eos);
  rep.rh_left_scale = rh_left_scale(s, l, eos);
  rep.rh_right_scale = rh_right_scale(s, r, eos);
  rep.subsolution_margins = subsolution_margins(s);
  rep.admissibility_margins = admissibility_margins(s, l, r, eos);
  rep.speed_gap = s.mu1 - s.mu0;

  const double off = s.delta1 - s.u1 * s.v1;
  rep.subsolution_scale = {
      max_abs({s.C1, s.u1 * s.u1, s.v1 * s.v1}),
      max_abs({(0.5 * s.C1 - s.u1 * s.u1 + s.gamma1) * (0.5 * s.C1 - s.v1 * s.v1 - s.gamma1),
               off * off})};
  const double e_wedge = wedge_energy(s, eos);
  const double f_wedge = wedge_flux(s, eos);
  rep.admissibility_scale = {
      max_abs({energy_flux(eos, l), f_wedge, s.mu0 * energy_density(eos, l), s.mu0 * e_wedge}),
      max_abs({energy_flux(eos, r), f_wedge, s.mu1 * energy_density(eos, r), s.mu1 * e_wedge})};

  auto& v = rep.violations;
  if (!(s.mu0 < s.mu1)) v.emplace_back("order of speeds: mu0 < mu1");
  if (!(s.rho1 > 0.0)) v.emplace_back("rho1 > 0");
  if (!(s.C1 > 0.0)) v.emplace_back("C1 > 0");

  static constexpr std::array<const char*, 3> kEquation{"mass", "x-momentum", "y-momentum"};
  const std::array<double, 3> left{rep.rh_left.mass, rep.rh_left.momentum_x,
                                   rep.rh_left.momentum_y};
  const std::array<double, 3> right{rep.rh_right.mass, rep.rh_right.momentum_x,
                                    rep.rh_right.momentum_y};
  for (int i = 0; i < 3; ++i) {
    if (!(std::abs(left[i]) <= tol.residual_abs * std::max(1.0, rep.rh_left_scale[i]))) {
      v.push_back(std::string("RH left interface, ") + kEquation[i]);
    }
    if (!(std::abs(right[i]) <= tol.residual_abs * std::max(1.0, rep.rh_right_scale[i]))) {
      v.push_back(std::string("RH right interface, ") + kEquation[i]);
    }
  }
  for (int i = 0; i < 2; ++i) {
    if (!(rep.subsolution_margins[i] > tol.strict * rep.subsolution_scale[i])) {
      v.push_back("subsolution condition " + std::to_string(i + 1) + " (strict)");
    }
  }
  static constexpr std::array<const char*, 2> kSide{"left", "right"};
  for (int i = 0; i < 2; ++i) {
    if (!(rep.admissibility_margins[i] >=
          -tol.residual_abs * std::max(1.0, rep.admissibility_scale[i]))) {
      v.push_back(std::string("admissibility on the ") + kSide[i] + " interface");
    }
  }
  rep.feasible = v.empty();
  return rep;
}

FamilySolveResult solve_family(const RiemannData& data, double rho1, double C1,
                               const FanSubsolution& seed, const NewtonOptions& options) {
  data.validate();
  if (!(rho1 > 0.0)) throw DomainError("rho1 must be positive");
  if (!(C1 > 0.0)) throw DomainError("C1 must be positive");

  FanSubsolution current = seed;
  current.rho1 = rho1;
  current.C1 = C1;

  FamilySolveResult result;
  Vector6 scaled = scaled_residuals(current, data);
  double norm = scaled.norm();
  for (int iter = 0;; ++iter) {
    if (scaled.cwiseAbs().maxCoeff() <= options.tolerance) {
      result.iterations = iter;
      break;
    }
    if (iter >= options.max_iterations) {
      throw SolverError("damped Newton did not converge in " +
                        std::to_string(options.max_iterations) +
                        " iterations; residual norm " + std::to_string(norm));
    }
    const Matrix6 j = jacobian(current, data);
    const Eigen::FullPivLU<Matrix6> lu(j);
    if (!lu.isInvertible()) {
      throw SolverError("singular Jacobian in fan subsolution solve (mu0 = mu1 or rho1 = rho_pm?)");
    }
    const Vector6 step = lu.solve(-raw_residuals(current, data));
    const Vector6 x = unknowns_of(current);
    double damping = 1.0;
    bool accepted = false;
    for (int h = 0; h <= options.max_halvings; ++h, damping *= 0.5) {
      const FanSubsolution trial = with_unknowns(current, x + damping * step);
      const Vector6 trial_scaled = scaled_residuals(trial, data);
      const double trial_norm = trial_scaled.norm();
      if (std::isfinite(trial_norm) && trial_norm < norm) {
        current = trial;
        scaled = trial_scaled;
        norm = trial_norm;
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      throw SolverError("damped Newton stalled after " + std::to_string(options.max_halvings) +
                        " step halvings; residual norm " + std::to_string(norm));
    }
  }

  const Matrix6 j = jacobian(current, data);
  result.jacobian_condition = condition_number(j);
  if (!std::isfinite(result.jacobian_condition)) {
    throw SolverError("singular Jacobian at the fan subsolution root");
  }
  result.sub = current;
  result.residual_norm = norm;
  return result;
}

double ScanRange::at(int i) const {
  if (count <= 1) return lo;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

std::vector<ScanRow> scan_family(const RiemannData& data, const ScanRange& rho1,
                                 const ScanRange& C1, const FanSubsolution& seed,
                                 const ToleranceConfig& tol,
                                 const ActionCoefficientFn& coefficient, unsigned threads) {
  if (rho1.count < 1 || C1.count < 1) throw DomainError("scan grid sizes must be positive");
  const std::size_t total = static_cast<std::size_t>(rho1.count) * C1.count;
  std::vector<ScanRow> rows(total);

  auto run_cell = [&](std::size_t index) {
    ScanRow& row = rows[index];
    row.rho1 = rho1.at(static_cast<int>(index / C1.count));
    row.C1 = C1.at(static_cast<int>(index % C1.count));
    try {
      row.solution = solve_family(data, row.rho1, row.C1, seed);
      row.report = check_feasibility(row.solution->sub, data, tol);
      if (row.report->feasible && coefficient) {
        row.action_coefficient = coefficient(row.solution->sub);
      }
    } catch (const std::exception& e) {
      row.failure = e.what();
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
  if (threads <= 1) {
    for (std::size_t i = 0; i < total; ++i) run_cell(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < total; i = next++) run_cell(i);
    });
  }
  for (auto& worker : pool) worker.join();
  return rows;
}

}  // namespace eulerfan
