#pragma once

#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "eulerfan/eos.hpp"
#include "eulerfan/riemann.hpp"
#include "eulerfan/subsolution.hpp"
#include "eulerfan/tolerance.hpp"

namespace eulerfan {

/// y = y_anchor + slope * (t - t_anchor).
struct Line {
  double t_anchor = 0.0;
  double y_anchor = 0.0;
  double slope = 0.0;

  [[nodiscard]] double at(double t) const noexcept { return y_anchor + slope * (t - t_anchor); }
};

enum class BoundaryKind { Shock, Contact, RarefactionEdge, SubsolutionLeft, SubsolutionRight };

[[nodiscard]] const char* to_string(BoundaryKind kind) noexcept;

/// A region boundary inside a slab. `left`/`right` are the classical
/// traces on either side; for a subsolution interface the wedge side
/// holds the wedge's mean state (rho1, u1, v1).
struct Boundary {
  Line line;
  BoundaryKind kind = BoundaryKind::Shock;
  int family = 0;
  State left;
  State right;
};

struct Classical {
  State state;
};

/// Wedge of a fan subsolution: rho = rho1 and |u|^2 = C1 a.e., mean
/// velocity (u1, v1). Requires C1 > u1^2 + v1^2.
struct Wild {
  double rho1 = 1.0;
  double u1 = 0.0;
  double v1 = 0.0;
  double C1 = 0.0;
};

using RegionState = std::variant<Classical, Wild>;

/// Interior of a centered rarefaction; states come from sampling the fan.
struct FanInterior {
  std::shared_ptr<const WaveFan> fan;
};

using RegionPayload = std::variant<Classical, Wild, FanInterior>;

/// Time interval [t_begin, t_end) tiled in y by regions separated by
/// boundaries; regions.size() == boundaries.size() + 1, ordered in y.
struct Slab {
  double t_begin = 0.0;
  double t_end = 0.0;
  std::vector<Boundary> boundaries;
  std::vector<RegionPayload> regions;
};

/// First crossing of two adjacent boundaries.
struct Interaction {
  double time = std::numeric_limits<double>::infinity();
  std::size_t slab = 0;
  std::size_t boundary = 0;  // crosses boundary + 1
};

struct PiecewiseSolution {
  std::vector<Slab> slabs;
  double horizon = std::numeric_limits<double>::infinity();
  std::optional<Interaction> first_interaction;
  EosParams eos;
  RiemannData data;
  std::optional<FanSubsolution> subsolution;
  /// x-period of the wild realisation; metadata only.
  double x_period = 2.0;

  [[nodiscard]] double t_end() const { return slabs.empty() ? 0.0 : slabs.back().t_end; }
};

/// Planar self-similar solution of `data` on [0, T].
[[nodiscard]] PiecewiseSolution build_1d_solution(const RiemannData& data, double T);

/// Fan subsolution wedge on [0, T0), classical Riemann fans from the two
/// wedge corners on [T0, T). Throws InfeasibleError when `sub` fails
/// check_feasibility and HorizonError when T reaches the first wave
/// interaction.
[[nodiscard]] PiecewiseSolution build_glued_solution(const RiemannData& data,
                                                     const FanSubsolution& sub, double T0,
                                                     double T, const ToleranceConfig& tol = {});

/// Earliest crossing time of adjacent boundary lines (+inf if none).
[[nodiscard]] Interaction interaction_time(const PiecewiseSolution& solution);

struct RegionIndex {
  std::size_t slab = 0;
  std::size_t region = 0;
};

/// Region containing (t, y). The seam t = slab.t_begin belongs to the
/// later slab; a point on a boundary belongs to the region on its right.
[[nodiscard]] RegionIndex locate(const PiecewiseSolution& solution, double t, double y);

/// Throws DomainError unless 0 < t < min(t_end, horizon).
[[nodiscard]] RegionState evaluate(const PiecewiseSolution& solution, double t, double y);

/// Smallest L2 beyond which every solution equals its outer Riemann
/// states on (0, T).
[[nodiscard]] double outer_extent(std::span<const PiecewiseSolution* const> solutions, double T);

[[nodiscard]] double region_density(const RegionState& rs);
/// Energy density 1/2 rho |u|^2 + P, with |u|^2 = C1 in a wild region.
[[nodiscard]] double region_energy(const EosParams& eos, const RegionState& rs);

struct BoundaryCheck {
  std::size_t slab = 0;
  std::size_t index = 0;
  BoundaryKind kind = BoundaryKind::Shock;
  /// Largest jump-condition residual divided by max(1, term scale).
  double rh_relative = 0.0;
  double energy_margin = 0.0;
  double energy_scale = 0.0;
};

/// Interval of a time seam between two slabs with the jumps across it.
struct SeamCheck {
  double time = 0.0;
  double y_lo = 0.0;
  double y_hi = 0.0;
  /// E(before) - E(after); the energy inequality needs >= 0.
  double energy_drop = 0.0;
  double energy_scale = 0.0;
  double mass_jump = 0.0;
  double momentum_jump = 0.0;
};

struct SolutionChecks {
  std::vector<BoundaryCheck> boundaries;
  std::vector<SeamCheck> seams;

  [[nodiscard]] bool passed(const ToleranceConfig& tol) const;
  [[nodiscard]] double worst_rh_relative() const;
  [[nodiscard]] double worst_energy_margin() const;  // most negative margin
};

/// Jump conditions and energy inequality on every boundary and seam.
[[nodiscard]] SolutionChecks check_solution(const PiecewiseSolution& solution,
                                            const ToleranceConfig& tol = {});

}  // namespace eulerfan
