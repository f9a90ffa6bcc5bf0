#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eulerfan/eos.hpp"
#include "eulerfan/riemann.hpp"
#include "eulerfan/tolerance.hpp"

namespace eulerfan {

/// Constant data of a fan subsolution on the wedge mu0 t < y < mu1 t.
/// In the wedge rho = rho1 and |u|^2 = C1 almost everywhere; (u1, v1) is
/// the mean velocity and (gamma1, delta1) the traceless correction of the
/// Reynolds-type stress.
struct FanSubsolution {
  double mu0 = 0.0;
  double mu1 = 0.0;
  double rho1 = 1.0;
  double u1 = 0.0;
  double v1 = 0.0;
  double gamma1 = 0.0;
  double delta1 = 0.0;
  double C1 = 0.0;

  /// Throws DomainError unless mu0 < mu1, rho1 > 0, C1 > 0.
  void validate() const;
  [[nodiscard]] State mean_state() const { return State{rho1, u1, v1}; }
};

/// Jump conditions on the interface y = mu0 t between the left Riemann
/// state and the wedge. Each entry is lhs - rhs of the respective
/// equation.
[[nodiscard]] RhResiduals rh_left_residuals(const FanSubsolution& sub, const State& left,
                                            const EosParams& eos);
/// Jump conditions on y = mu1 t between the wedge and the right state.
[[nodiscard]] RhResiduals rh_right_residuals(const FanSubsolution& sub, const State& right,
                                             const EosParams& eos);

/// Both strict subsolution inequalities, as left-hand sides:
/// C1 - u1^2 - v1^2 and
/// (C1/2 - u1^2 + gamma1)(C1/2 - v1^2 - gamma1) - (delta1 - u1 v1)^2.
[[nodiscard]] std::array<double, 2> subsolution_margins(const FanSubsolution& sub);

/// Energy inequalities on the left and right interface, as
/// right-hand side minus left-hand side (admissible iff >= 0).
[[nodiscard]] std::array<double, 2> admissibility_margins(const FanSubsolution& sub,
                                                          const State& left,
                                                          const State& right,
                                                          const EosParams& eos);

struct FeasibilityReport {
  RhResiduals rh_left;
  RhResiduals rh_right;
  /// Term-magnitude scales the residuals were judged against.
  std::array<double, 3> rh_left_scale{};
  std::array<double, 3> rh_right_scale{};
  std::array<double, 2> subsolution_margins{};
  std::array<double, 2> subsolution_scale{};
  std::array<double, 2> admissibility_margins{};
  std::array<double, 2> admissibility_scale{};
  double speed_gap = 0.0;  // mu1 - mu0
  bool feasible = false;
  std::vector<std::string> violations;

  /// Largest RH residual divided by max(1, its scale).
  [[nodiscard]] double worst_relative_residual() const;
};

[[nodiscard]] FeasibilityReport check_feasibility(const FanSubsolution& sub,
                                                  const RiemannData& data,
                                                  const ToleranceConfig& tol = {});

struct NewtonOptions {
  int max_iterations = 100;
  int max_halvings = 30;
  /// Converged when every residual <= tolerance * max(1, term scale).
  double tolerance = 1e-13;
};

struct FamilySolveResult {
  FanSubsolution sub;
  int iterations = 0;
  double residual_norm = 0.0;
  /// 2-norm condition number of the 6x6 Jacobian at the returned point.
  double jacobian_condition = 0.0;
};

/// Solves the six jump conditions for (mu0, mu1, u1, v1, gamma1, delta1)
/// with rho1 and C1 held fixed, by damped Newton from `seed`.
/// Throws SolverError on a singular Jacobian or when max_iterations is
/// exhausted. Feasibility is not implied.
[[nodiscard]] FamilySolveResult solve_family(const RiemannData& data, double rho1, double C1,
                                             const FanSubsolution& seed,
                                             const NewtonOptions& options = {});

struct ScanRange {
  double lo = 0.0;
  double hi = 0.0;
  int count = 1;

  /// count == 1 yields lo.
  [[nodiscard]] double at(int i) const;
};

struct ScanRow {
  double rho1 = 0.0;
  double C1 = 0.0;
  std::optional<FamilySolveResult> solution;
  std::optional<FeasibilityReport> report;
  std::optional<double> action_coefficient;
  std::string failure;  // solver error text when solution is empty

  [[nodiscard]] bool feasible() const { return report && report->feasible; }
};

/// Computes an action coefficient for a feasible member; supplied by the
/// caller so this module stays independent of the action machinery.
using ActionCoefficientFn = std::function<std::optional<double>(const FanSubsolution&)>;

/// Grid scan over (rho1, C1). Every cell starts from `seed`; rows are
/// independent and evaluated on `threads` workers (0 = hardware
/// concurrency). Row order is rho1-major.
[[nodiscard]] std::vector<ScanRow> scan_family(const RiemannData& data, const ScanRange& rho1,
                                               const ScanRange& C1, const FanSubsolution& seed,
                                               const ToleranceConfig& tol = {},
                                               const ActionCoefficientFn& coefficient = {},
                                               unsigned threads = 0);

}  // namespace eulerfan
