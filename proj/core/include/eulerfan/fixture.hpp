#pragma once

#include "eulerfan/riemann.hpp"
#include "eulerfan/subsolution.hpp"

namespace eulerfan {

/// The counterexample configuration, every constant evaluated once from
/// its closed surd form.
///
/// Riemann data: rho = 1, u = 0 on both sides, v_left = -v_right = v_minus.
/// At t = T0 the wedge boundaries y0 = mu0 T0 and y1 = mu1 T0 each emit a
/// pair of shocks (speeds mu2, mu3 from y0 and mu4, mu5 from y1) with
/// intermediate states (rho2, 0, v2) and (rho2, 0, -v2).
struct PaperFixture {
  RiemannData data;
  FanSubsolution sub;

  double v_minus = 0.0;
  double mu2 = 0.0;
  double mu3 = 0.0;
  double mu4 = 0.0;
  double mu5 = 0.0;
  double rho2 = 0.0;
  double v2 = 0.0;

  // Action densities of the constant regions and the wedge.
  double a_minus = 0.0;
  double a_wild = 0.0;
  double a_1 = 0.0;
  double a_2 = 0.0;

  /// Action of the glued solution is k_ex T^2 for T0 = T/2, L1 = 1,
  /// L2 = -y0.
  double k_ex = 0.0;
};

[[nodiscard]] const PaperFixture& paper_fixture();

/// Coefficient of T^2 in the action of the two-shock planar solution, in
/// closed form given its middle density and shock speed.
[[nodiscard]] double k_1d_closed_form(double rho_middle, double sigma);

/// K_ex - K_1d rewritten as a function of rho_M and sigma.
[[nodiscard]] double k_gap_closed_form(double rho_middle, double sigma);

}  // namespace eulerfan
