#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eulerfan/spacetime.hpp"

namespace eulerfan {

/// Integration window [0, T] x [-L1, L1] x [-L2, L2].
struct ActionWindow {
  double L1 = 1.0;
  double L2 = 1.0;
  double T = 1.0;

  void validate() const;
};

/// 1/2 rho |u|^2 - P(rho); in a wild region 1/2 rho1 C1 - P(rho1).
[[nodiscard]] double region_action_density(const EosParams& eos, const RegionState& rs);

/// Affine piece of t -> A(t) on [t_begin, t_end].
struct ProfileSegment {
  double t_begin = 0.0;
  double t_end = 0.0;
  double value_begin = 0.0;
  double value_end = 0.0;

  [[nodiscard]] double slope() const {
    return t_end > t_begin ? (value_end - value_begin) / (t_end - t_begin) : 0.0;
  }
  [[nodiscard]] double at(double t) const { return value_begin + slope() * (t - t_begin); }
};

/// Piecewise-linear spatial action A(t) = int int (1/2 rho |u|^2 - P) dy dx.
/// Segments are contiguous; a value change between consecutive segments
/// is a jump of A.
struct ActionProfile {
  std::vector<ProfileSegment> segments;

  /// Right-continuous evaluation on [0, T].
  [[nodiscard]] double at(double t) const;
  [[nodiscard]] double integral() const;
  /// Jumps A(t+) - A(t-) at interior breakpoints, as (time, jump).
  [[nodiscard]] std::vector<std::pair<double, double>> jumps(double threshold = 0.0) const;
};

/// Quadratic piece of the cumulative action on [t_begin, t_end]:
/// value(t) = base + value_rate (t - t_begin) + 1/2 curvature (t - t_begin)^2.
struct CumulativeSegment {
  double t_begin = 0.0;
  double t_end = 0.0;
  double base = 0.0;
  double value_rate = 0.0;
  double curvature = 0.0;

  [[nodiscard]] double at(double t) const {
    const double d = t - t_begin;
    return base + value_rate * d + 0.5 * curvature * d * d;
  }
};

/// Piecewise-quadratic cumulative action Ã(t) = int_0^t A(s) ds.
struct CumulativeAction {
  std::vector<CumulativeSegment> segments;

  [[nodiscard]] double at(double t) const;
};

/// Exact action over the window from region areas (trapezoids between
/// boundary lines, clipped at |y| = L2). Rarefaction interiors are
/// integrated in the similarity variable by adaptive Gauss-Kronrod.
/// Throws HorizonError when window.T exceeds the solution's horizon.
[[nodiscard]] double action_closed_form(const PiecewiseSolution& solution,
                                        const ActionWindow& window);

/// Midpoint-rule tensor grid in (t, y); uses only pointwise evaluate().
[[nodiscard]] double action_quadrature(const PiecewiseSolution& solution,
                                       const ActionWindow& window, int nt, int ny);

[[nodiscard]] ActionProfile action_profile(const PiecewiseSolution& solution,
                                           const ActionWindow& window);

[[nodiscard]] CumulativeAction cumulative_action(const ActionProfile& profile);

enum class ActionOrdering { FirstLower, SecondLower, Equal };

[[nodiscard]] const char* to_string(ActionOrdering ordering) noexcept;

struct ActionComparison {
  double action_first = 0.0;
  double action_second = 0.0;
  /// action_first - action_second.
  double difference = 0.0;
  ActionOrdering ordering = ActionOrdering::Equal;
  /// Times in (0, T) where Ã_first - Ã_second changes sign or touches zero.
  std::vector<double> crossing_times;
};

/// Compares two solutions on a shared window.
[[nodiscard]] ActionComparison compare(const PiecewiseSolution& first,
                                       const PiecewiseSolution& second,
                                       const ActionWindow& window);

struct ActionReport {
  double value_closed_form = 0.0;
  std::optional<double> value_quadrature;
  ActionProfile profile;
  CumulativeAction cumulative;
  /// value_closed_form / T^2; the action is K T^2 for self-similar setups.
  double coefficient = 0.0;
  std::optional<ActionComparison> comparison;
  std::vector<std::string> warnings;
};

struct QuadratureGrid {
  int nt = 0;
  int ny = 0;
};

/// Closed form, profile and cumulative action of one solution; quadrature
/// when `grid` is given.
[[nodiscard]] ActionReport action_report(const PiecewiseSolution& solution,
                                         const ActionWindow& window,
                                         std::optional<QuadratureGrid> grid = std::nullopt);

}  // namespace eulerfan
