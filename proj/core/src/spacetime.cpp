#include "eulerfan/spacetime.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eulerfan/errors.hpp"

namespace eulerfan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Appends the boundaries and regions of `fan` to `slab`. The region left of
// the fan is appended only when the slab is still empty; otherwise the
// slab's last region is taken to coincide with fan.states.front().
void append_fan(Slab& slab, const WaveFan& fan) {
  if (slab.regions.empty()) slab.regions.emplace_back(Classical{fan.states.front()});
  if (fan.empty()) return;
  auto shared = std::make_shared<const WaveFan>(fan);
  const double t0 = fan.center.t;
  const double y0 = fan.center.y;
  for (std::size_t i = 0; i < fan.waves.size(); ++i) {
    const Wave& wave = fan.waves[i];
    if (wave.is_rarefaction()) {
      // Edges are continuous; each trace equals the adjacent constant state.
      slab.boundaries.push_back(Boundary{Line{t0, y0, wave.left_edge()},
                                         BoundaryKind::RarefactionEdge, wave.family,
                                         wave.left_state, wave.left_state});
      slab.regions.emplace_back(FanInterior{shared});
      slab.boundaries.push_back(Boundary{Line{t0, y0, wave.right_edge()},
                                         BoundaryKind::RarefactionEdge, wave.family,
                                         wave.right_state, wave.right_state});
    } else {
      const BoundaryKind kind = wave.is_contact() ? BoundaryKind::Contact : BoundaryKind::Shock;
      slab.boundaries.push_back(Boundary{Line{t0, y0, wave.left_edge()}, kind, wave.family,
                                         wave.left_state, wave.right_state});
    }
    slab.regions.emplace_back(Classical{fan.states[i + 1]});
  }
}

std::string describe(const Slab& slab, std::size_t index) {
  const Boundary& b = slab.boundaries[index];
  return std::string(to_string(b.kind)) + " (family " + std::to_string(b.family) +
         ", from y = " + std::to_string(b.line.at(slab.t_begin)) +
         ", speed " + std::to_string(b.line.slope) + ")";
}

RegionState payload_state(const RegionPayload& payload, double t, double y) {
  return std::visit(
      [&](const auto& p) -> RegionState {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, FanInterior>) {
          return Classical{sample(*p.fan, t, y)};
        } else {
          return p;
        }
      },
      payload);
}

std::size_t region_in_slab(const Slab& slab, double t, double y) {
  std::size_t i = 0;
  while (i < slab.boundaries.size() && y >= slab.boundaries[i].line.at(t)) ++i;
  return i;
}

}  // namespace

const char* to_string(BoundaryKind kind) noexcept {
  switch (kind) {
    case BoundaryKind::Shock:
      return "shock";
    case BoundaryKind::Contact:
      return "contact";
    case BoundaryKind::RarefactionEdge:
      return "rarefaction-edge";
    case BoundaryKind::SubsolutionLeft:
      return "subsolution-left";
    case BoundaryKind::SubsolutionRight:
      return "subsolution-right";
  }
  return "unknown";
}

PiecewiseSolution build_1d_solution(const RiemannData& data, double T) {
  if (!(T > 0.0)) throw DomainError("final time T must be positive");
  PiecewiseSolution sol;
  sol.eos = data.eos;
  sol.data = data;
  Slab slab;
  slab.t_begin = 0.0;
  slab.t_end = T;
  append_fan(slab, solve_riemann(data));
  sol.slabs.push_back(std::move(slab));
  const Interaction hit = interaction_time(sol);
  sol.horizon = hit.time;
  if (std::isfinite(hit.time)) sol.first_interaction = hit;
  return sol;
}

PiecewiseSolution build_glued_solution(const RiemannData& data, const FanSubsolution& sub,
                                       double T0, double T, const ToleranceConfig& tol) {
  if (!(T0 > 0.0) || !(T > T0)) throw DomainError("gluing requires T > T0 > 0");
  const FeasibilityReport report = check_feasibility(sub, data, tol);
  if (!report.feasible) {
    std::string what = "fan subsolution is infeasible:";
    for (const auto& v : report.violations) what += " [" + v + "]";
    throw InfeasibleError(what);
  }

  PiecewiseSolution sol;
  sol.eos = data.eos;
  sol.data = data;
  sol.subsolution = sub;
  const State wedge = sub.mean_state();

  Slab early;
  early.t_begin = 0.0;
  early.t_end = T0;
  early.regions.emplace_back(Classical{data.left});
  early.boundaries.push_back(
      Boundary{Line{0.0, 0.0, sub.mu0}, BoundaryKind::SubsolutionLeft, 0, data.left, wedge});
  early.regions.emplace_back(Wild{sub.rho1, sub.u1, sub.v1, sub.C1});
  early.boundaries.push_back(
      Boundary{Line{0.0, 0.0, sub.mu1}, BoundaryKind::SubsolutionRight, 0, wedge, data.right});
  early.regions.emplace_back(Classical{data.right});

  Slab late;
  late.t_begin = T0;
  late.t_end = T;
  append_fan(late, solve_riemann(RiemannData{data.left, wedge, data.eos}, {T0, sub.mu0 * T0}));
  append_fan(late, solve_riemann(RiemannData{wedge, data.right, data.eos}, {T0, sub.mu1 * T0}));

  sol.slabs.push_back(std::move(early));
  sol.slabs.push_back(std::move(late));

  const Interaction hit = interaction_time(sol);
  sol.horizon = hit.time;
  if (std::isfinite(hit.time)) sol.first_interaction = hit;
  if (T >= hit.time) {
    const Slab& slab = sol.slabs[hit.slab];
    throw HorizonError("waves interact at t = " + std::to_string(hit.time) + " <= T = " +
                       std::to_string(T) + ": " + describe(slab, hit.boundary) + " meets " +
                       describe(slab, hit.boundary + 1));
  }
  return sol;
}

Interaction interaction_time(const PiecewiseSolution& solution) {
  Interaction best;
  for (std::size_t s = 0; s < solution.slabs.size(); ++s) {
    const Slab& slab = solution.slabs[s];
    const bool last = s + 1 == solution.slabs.size();
    const double limit = last ? kInf : slab.t_end;
    for (std::size_t i = 0; i + 1 < slab.boundaries.size(); ++i) {
      const Line& a = slab.boundaries[i].line;
      const Line& b = slab.boundaries[i + 1].line;
      const double gap = b.at(slab.t_begin) - a.at(slab.t_begin);
      const double closing = a.slope - b.slope;
      if (!(closing > 0.0)) continue;
      // Boundaries emitted from one point separate immediately.
      if (gap <= 0.0) continue;
      const double t = slab.t_begin + gap / closing;
      if (t < limit && t < best.time) best = Interaction{t, s, i};
    }
  }
  return best;
}

RegionIndex locate(const PiecewiseSolution& solution, double t, double y) {
  if (solution.slabs.empty()) throw DomainError("empty solution");
  std::size_t s = 0;
  for (std::size_t k = 0; k < solution.slabs.size(); ++k) {
    if (solution.slabs[k].t_begin <= t) s = k;
  }
  return RegionIndex{s, region_in_slab(solution.slabs[s], t, y)};
}

RegionState evaluate(const PiecewiseSolution& solution, double t, double y) {
  const double limit = std::min(solution.t_end(), solution.horizon);
  if (!(t > 0.0) || !(t < limit)) {
    throw DomainError("evaluation time " + std::to_string(t) + " outside (0, " +
                      std::to_string(limit) + ")");
  }
  if (!std::isfinite(y)) throw DomainError("evaluation position must be finite");
  const RegionIndex at = locate(solution, t, y);
  return payload_state(solution.slabs[at.slab].regions[at.region], t, y);
}

double outer_extent(std::span<const PiecewiseSolution* const> solutions, double T) {
  double extent = 0.0;
  for (const PiecewiseSolution* sol : solutions) {
    for (const Slab& slab : sol->slabs) {
      if (slab.t_begin >= T) continue;
      const double t_hi = std::min(slab.t_end, T);
      for (const Boundary& b : slab.boundaries) {
        extent = std::max({extent, std::abs(b.line.at(slab.t_begin)), std::abs(b.line.at(t_hi))});
      }
    }
  }
  return extent;
}

double region_density(const RegionState& rs) {
  return std::visit(
      [](const auto& r) -> double {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Classical>) {
          return r.state.rho;
        } else {
          return r.rho1;
        }
      },
      rs);
}

double region_energy(const EosParams& eos, const RegionState& rs) {
  return std::visit(
      [&](const auto& r) -> double {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Classical>) {
          return energy_density(eos, r.state);
        } else {
          return energy_density_with_kinetic(eos, r.rho1, r.C1);
        }
      },
      rs);
}

bool SolutionChecks::passed(const ToleranceConfig& tol) const {
  for (const auto& b : boundaries) {
    if (!(b.rh_relative <= tol.residual_abs)) return false;
    if (!(b.energy_margin >= -tol.residual_abs * std::max(1.0, b.energy_scale))) return false;
  }
  for (const auto& s : seams) {
    if (!(s.energy_drop >= -tol.residual_abs * std::max(1.0, s.energy_scale))) return false;
    if (!(std::abs(s.mass_jump) <= tol.residual_abs)) return false;
    if (!(std::abs(s.momentum_jump) <= tol.residual_abs * std::max(1.0, s.energy_scale))) {
      return false;
    }
  }
  return true;
}

double SolutionChecks::worst_rh_relative() const {
  double worst = 0.0;
  for (const auto& b : boundaries) worst = std::max(worst, b.rh_relative);
  return worst;
}

double SolutionChecks::worst_energy_margin() const {
  double worst = kInf;
  for (const auto& b : boundaries) worst = std::min(worst, b.energy_margin);
  for (const auto& s : seams) worst = std::min(worst, s.energy_drop);
  return worst;
}

SolutionChecks check_solution(const PiecewiseSolution& solution, const ToleranceConfig& tol) {
  SolutionChecks out;
  const EosParams& eos = solution.eos;
  std::optional<FeasibilityReport> sub_report;
  if (solution.subsolution) sub_report = check_feasibility(*solution.subsolution, solution.data, tol);

  for (std::size_t s = 0; s < solution.slabs.size(); ++s) {
    const Slab& slab = solution.slabs[s];
    for (std::size_t i = 0; i < slab.boundaries.size(); ++i) {
      const Boundary& b = slab.boundaries[i];
      BoundaryCheck check{s, i, b.kind, 0.0, 0.0, 0.0};
      if ((b.kind == BoundaryKind::SubsolutionLeft || b.kind == BoundaryKind::SubsolutionRight) &&
          sub_report) {
        const bool left = b.kind == BoundaryKind::SubsolutionLeft;
        const RhResiduals& r = left ? sub_report->rh_left : sub_report->rh_right;
        const auto& scale = left ? sub_report->rh_left_scale : sub_report->rh_right_scale;
        check.rh_relative = std::max({std::abs(r.mass) / std::max(1.0, scale[0]),
                                      std::abs(r.momentum_x) / std::max(1.0, scale[1]),
                                      std::abs(r.momentum_y) / std::max(1.0, scale[2])});
        check.energy_margin = sub_report->admissibility_margins[left ? 0 : 1];
        check.energy_scale = sub_report->admissibility_scale[left ? 0 : 1];
      } else {
        const double speed = b.line.slope;
        check.rh_relative = check_rh(eos, speed, b.left, b.right).max_abs() /
                            std::max(1.0, rh_scale(eos, speed, b.left, b.right));
        check.energy_margin = check_energy_dissipation(eos, speed, b.left, b.right);
        check.energy_scale = energy_scale(eos, speed, b.left, b.right);
      }
      out.boundaries.push_back(check);
    }
  }

  for (std::size_t s = 0; s + 1 < solution.slabs.size(); ++s) {
    const Slab& before = solution.slabs[s];
    const Slab& after = solution.slabs[s + 1];
    const double t = after.t_begin;
    std::vector<double> cuts;
    for (const auto& b : before.boundaries) cuts.push_back(b.line.at(t));
    for (const auto& b : after.boundaries) cuts.push_back(b.line.at(t));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<std::pair<double, double>> intervals;
    if (cuts.empty()) {
      intervals.emplace_back(-kInf, kInf);
    } else {
      intervals.emplace_back(-kInf, cuts.front());
      for (std::size_t k = 0; k + 1 < cuts.size(); ++k) intervals.emplace_back(cuts[k], cuts[k + 1]);
      intervals.emplace_back(cuts.back(), kInf);
    }
    for (const auto& [lo, hi] : intervals) {
      double y = 0.0;
      if (std::isinf(lo) && std::isinf(hi)) {
        y = 0.0;
      } else if (std::isinf(lo)) {
        y = hi - 1.0;
      } else if (std::isinf(hi)) {
        y = lo + 1.0;
      } else {
        y = 0.5 * (lo + hi);
      }
      const RegionPayload& p_before = before.regions[region_in_slab(before, t, y)];
      const RegionPayload& p_after = after.regions[region_in_slab(after, t, y)];
      // Fans of the later slab are centered on the seam, so their interiors
      // have zero width there and never contain an interval midpoint.
      const RegionState rs_before = payload_state(p_before, t, y);
      const RegionState rs_after = payload_state(p_after, t, y);
      auto momentum = [](const RegionState& rs) {
        return std::visit(
            [](const auto& r) -> std::pair<double, double> {
              using T = std::decay_t<decltype(r)>;
              if constexpr (std::is_same_v<T, Classical>) {
                return {r.state.rho * r.state.u, r.state.rho * r.state.v};
              } else {
                return {r.rho1 * r.u1, r.rho1 * r.v1};
              }
            },
            rs);
      };
      const auto [mx_b, my_b] = momentum(rs_before);
      const auto [mx_a, my_a] = momentum(rs_after);
      SeamCheck seam;
      seam.time = t;
      seam.y_lo = lo;
      seam.y_hi = hi;
      const double e_before = region_energy(eos, rs_before);
      const double e_after = region_energy(eos, rs_after);
      seam.energy_drop = e_before - e_after;
      seam.energy_scale = std::max(std::abs(e_before), std::abs(e_after));
      seam.mass_jump = region_density(rs_before) - region_density(rs_after);
      seam.momentum_jump = std::max(std::abs(mx_b - mx_a), std::abs(my_b - my_a));
      out.seams.push_back(seam);
    }
  }
  return out;
}

}  // namespace eulerfan
