#include "eulerfan/fixture.hpp"

#include <cmath>

namespace eulerfan {

namespace {

PaperFixture make_fixture() {
  const double s35 = std::sqrt(35.0);
  const double s915 = std::sqrt(915.0);
  const double s1281 = std::sqrt(1281.0);

  PaperFixture f;
  f.v_minus = 57.0 * s35 / 10.0 + 59.0 * s915 / 30.0;
  f.data.eos = EosParams{1.0, 2.0};
  f.data.left = State{1.0, 0.0, f.v_minus};
  f.data.right = State{1.0, 0.0, -f.v_minus};

  f.sub.rho1 = 3.0;
  f.sub.u1 = 0.0;
  f.sub.v1 = 0.0;
  f.sub.gamma1 = -1121.0 * s1281 / 40.0 - 28013.0 / 24.0;
  f.sub.delta1 = 0.0;
  f.sub.C1 = 1121.0 * s1281 / 20.0 + 28037.0 / 12.0;
  f.sub.mu0 = -57.0 * s35 / 20.0 - 59.0 * s915 / 60.0;
  f.sub.mu1 = -f.sub.mu0;

  f.rho2 = 60.0;
  f.v2 = 57.0 * s35 / 10.0;
  f.mu2 = -s915 / 30.0 + 57.0 * s35 / 10.0;
  f.mu3 = 6.0 * s35;
  f.mu4 = -f.mu3;
  f.mu5 = -f.mu2;

  f.a_minus = 1121.0 * s1281 / 20.0 + 28045.0 / 12.0;
  f.a_wild = 3363.0 * s1281 / 40.0 + 27965.0 / 8.0;
  f.a_1 = -9.0;
  f.a_2 = 61029.0 / 2.0;

  f.k_ex = (25590093.0 * s35 + 4675573.0 * s915) / 800.0;
  return f;
}

}  // namespace

const PaperFixture& paper_fixture() {
  static const PaperFixture fixture = make_fixture();
  return fixture;
}

double k_1d_closed_form(double rho_middle, double sigma) {
  const double s35 = std::sqrt(35.0);
  const double s915 = std::sqrt(915.0);
  const double s1281 = std::sqrt(1281.0);
  return 3349377.0 * s35 / 100.0 + 6149393.0 * s915 / 900.0 -
         sigma * (2.0 * rho_middle * rho_middle + 1121.0 * s1281 / 10.0 + 28045.0 / 6.0);
}

double k_gap_closed_form(double rho_middle, double sigma) {
  const double s35 = std::sqrt(35.0);
  const double s915 = std::sqrt(915.0);
  const double s1281 = std::sqrt(1281.0);
  return (2.0 * rho_middle * rho_middle + 1121.0 * s1281 / 10.0 + 28045.0 / 6.0) * sigma -
         1204923.0 * s35 / 800.0 - 7114987.0 * s915 / 7200.0;
}

}  // namespace eulerfan
