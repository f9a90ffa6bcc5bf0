#include <gtest/gtest.h>

#include <cmath>

#include "eulerfan/errors.hpp"
#include "eulerfan/fixture.hpp"
#include "eulerfan/riemann.hpp"
#include "oracles.hpp"

namespace eulerfan {
namespace {

const EosParams kQuadratic{1.0, 2.0};
const double kS35 = std::sqrt(35.0);
const double kS915 = std::sqrt(915.0);

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

TEST(Hugoniot, ClosedFormValues) {
  EXPECT_NEAR(hugoniot_velocity_jump(kQuadratic, 1.0, 3.0), 4.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(hugoniot_velocity_jump(kQuadratic, 3.0, 1.0), 4.0 / std::sqrt(3.0), 1e-15);
}

TEST(Hugoniot, VanishesLinearlyAsDensitiesMerge) {
  for (double eps : {1e-3, 1e-5, 1e-7}) {
    const double jump = hugoniot_velocity_jump(kQuadratic, 1.0, 1.0 + eps);
    // |dv| ~ c(1) eps = sqrt(2) eps
    EXPECT_NEAR(jump / eps, std::sqrt(2.0), 2.0 * eps);
  }
}

TEST(Hugoniot, FixtureMiddleDensityReproducesInflow) {
  const double rho_M = testing::bisect_symmetric_rho_M(testing::frozen::v_minus);
  EXPECT_LT(rel(hugoniot_velocity_jump(kQuadratic, 1.0, rho_M), paper_fixture().v_minus), 1e-13);
}

TEST(Hugoniot, EqualDensitiesAreDegenerate) {
  EXPECT_THROW((void)hugoniot_velocity_jump(kQuadratic, 2.0, 2.0), DegenerateInputError);
  EXPECT_THROW((void)hugoniot_velocity_jump(kQuadratic, 0.0, 2.0), DomainError);
}

TEST(Rarefaction, VelocityChange) {
  EXPECT_EQ(rarefaction_velocity_change(kQuadratic, 2.0, 2.0), 0.0);
  EXPECT_NEAR(rarefaction_velocity_change(kQuadratic, 1.0, 4.0), 2.0 * std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(rarefaction_velocity_change(kQuadratic, 4.0, 1.0), -2.0 * std::sqrt(2.0), 1e-14);
  const double quad = testing::simpson([](double r) { return std::sqrt(2.0 * r) / r; }, 1.0, 4.0);
  EXPECT_NEAR(rarefaction_velocity_change(kQuadratic, 1.0, 4.0), quad, 1e-10);
  const EosParams air{0.7, 1.4};
  const double quad14 = testing::simpson(
      [&](double r) { return std::sqrt(0.7 * 1.4 * std::pow(r, 0.4)) / r; }, 0.5, 3.0);
  EXPECT_NEAR(rarefaction_velocity_change(air, 0.5, 3.0), quad14, 1e-10);
  EXPECT_THROW((void)rarefaction_velocity_change(kQuadratic, -1.0, 2.0), DomainError);
}

TEST(MiddleDensity, FixtureAgainstBisectionOracle) {
  const MiddleState m = solve_middle_density(paper_fixture().data);
  const double oracle = testing::bisect_symmetric_rho_M(paper_fixture().v_minus);
  EXPECT_LT(rel(m.rho, oracle), 1e-14);
  EXPECT_LT(rel(m.rho, testing::frozen::rho_M), 1e-14);
  EXPECT_GT(m.rho, 93.0);
  EXPECT_LT(m.rho, 94.0);
  EXPECT_EQ(m.family1, NonlinearWave::Shock);
  EXPECT_EQ(m.family3, NonlinearWave::Shock);
  EXPECT_LE(m.root_residual, 1e-11);
  EXPECT_EQ(m.v, 0.0);
}

TEST(MiddleDensity, ConstantDataHasNoWaves) {
  const RiemannData d{State{2.0, 0.3, -1.0}, State{2.0, 0.3, -1.0}, kQuadratic};
  const MiddleState m = solve_middle_density(d);
  EXPECT_DOUBLE_EQ(m.rho, 2.0);
  EXPECT_DOUBLE_EQ(m.v, -1.0);
  EXPECT_EQ(m.family1, NonlinearWave::None);
  EXPECT_EQ(m.family3, NonlinearWave::None);
}

TEST(MiddleDensity, ShockRarefactionAgainstBruteForceScan) {
  const RiemannData d{State{1.0, 0.0, 0.0}, State{3.0, 0.0, 0.0}, kQuadratic};
  const MiddleState m = solve_middle_density(d);
  const testing::OracleMiddle o = testing::brute_force_middle(kQuadratic, d.left, d.right);
  EXPECT_EQ(m.family1, NonlinearWave::Shock);
  EXPECT_EQ(m.family3, NonlinearWave::Rarefaction);
  EXPECT_NEAR(m.rho, o.rho, 1e-6);
  EXPECT_NEAR(m.v, o.v, 1e-6);
}

TEST(MiddleDensity, TwoRarefactionsAgainstBruteForceScan) {
  const RiemannData d{State{2.0, 0.0, -1.0}, State{1.0, 0.0, 1.5}, kQuadratic};
  const MiddleState m = solve_middle_density(d);
  const testing::OracleMiddle o = testing::brute_force_middle(kQuadratic, d.left, d.right);
  EXPECT_EQ(m.family1, NonlinearWave::Rarefaction);
  EXPECT_EQ(m.family3, NonlinearWave::Rarefaction);
  EXPECT_NEAR(m.rho, o.rho, 1e-6);
  EXPECT_NEAR(m.v, o.v, 1e-6);
}

TEST(MiddleDensity, GeneralGammaAgainstBruteForceScan) {
  const EosParams eos{0.5, 1.4};
  const RiemannData d{State{1.5, 0.0, 0.4}, State{0.8, 0.0, -0.9}, eos};
  const MiddleState m = solve_middle_density(d);
  const testing::OracleMiddle o = testing::brute_force_middle(eos, d.left, d.right);
  EXPECT_NEAR(m.rho, o.rho, 1e-6);
  EXPECT_NEAR(m.v, o.v, 1e-6);
}

TEST(MiddleDensity, VacuumIsASolverError) {
  const RiemannData d{State{1.0, 0.0, -10.0}, State{1.0, 0.0, 10.0}, kQuadratic};
  EXPECT_THROW((void)solve_middle_density(d), SolverError);
  EXPECT_THROW((void)solve_riemann(d), SolverError);
}

TEST(ShockSpeed, PaperSpeeds) {
  const double v_minus = paper_fixture().v_minus;
  const double sigma = shock_speed(kQuadratic, State{1.0, 0.0, v_minus},
                                   State{testing::frozen::rho_M, 0.0, 0.0});
  // left-facing shock of the symmetric pair moves at -sigma
  EXPECT_LT(rel(-sigma, testing::frozen::sigma), 1e-14);
  EXPECT_GT(sigma, -1.1);

  const double mu0 = shock_speed(kQuadratic, State{1.0, 0.0, v_minus}, State{3.0, 0.0, 0.0});
  EXPECT_LT(rel(mu0, -57.0 * kS35 / 20.0 - 59.0 * kS915 / 60.0), 1e-14);

  const double mu4 =
      shock_speed(kQuadratic, State{3.0, 0.0, 0.0}, State{60.0, 0.0, -57.0 * kS35 / 10.0});
  EXPECT_LT(rel(mu4, -6.0 * kS35), 1e-14);

  EXPECT_THROW((void)shock_speed(kQuadratic, State{1.0, 0.0, 1.0}, State{1.0, 0.0, 0.0}),
               DegenerateInputError);
}

TEST(SolveRiemann, RightWedgeInterface) {
  const PaperFixture& f = paper_fixture();
  const WaveFan fan = solve_riemann({f.sub.mean_state(), f.data.right, kQuadratic});
  ASSERT_EQ(fan.waves.size(), 2u);
  ASSERT_TRUE(fan.waves[0].is_shock());
  ASSERT_TRUE(fan.waves[1].is_shock());
  EXPECT_LT(rel(fan.waves[0].left_edge(), -6.0 * kS35), 1e-12);
  EXPECT_LT(rel(fan.waves[1].left_edge(), kS915 / 30.0 - 57.0 * kS35 / 10.0), 1e-12);
  EXPECT_LT(rel(fan.states[1].rho, 60.0), 1e-12);
  EXPECT_LT(rel(fan.states[1].v, -57.0 * kS35 / 10.0), 1e-12);
}

TEST(SolveRiemann, LeftWedgeInterface) {
  const PaperFixture& f = paper_fixture();
  const WaveFan fan = solve_riemann({f.data.left, f.sub.mean_state(), kQuadratic});
  ASSERT_EQ(fan.waves.size(), 2u);
  EXPECT_LT(rel(fan.waves[0].left_edge(), testing::frozen::mu2), 1e-12);
  EXPECT_LT(rel(fan.waves[1].left_edge(), testing::frozen::mu3), 1e-12);
  EXPECT_LT(rel(fan.states[1].v, testing::frozen::v2), 1e-12);
}

TEST(SolveRiemann, ConstantDataGivesEmptyFan) {
  const State s{1.3, 0.2, 0.1};
  const WaveFan fan = solve_riemann({s, s, kQuadratic});
  EXPECT_TRUE(fan.empty());
  ASSERT_EQ(fan.states.size(), 1u);
  EXPECT_EQ(sample(fan, 1.0, -5.0), s);
}

TEST(SolveRiemann, FixtureTwoShocks) {
  const WaveFan fan = solve_riemann(paper_fixture().data);
  ASSERT_EQ(fan.waves.size(), 2u);
  EXPECT_LT(rel(fan.waves[0].left_edge(), -testing::frozen::sigma), 1e-13);
  EXPECT_LT(rel(fan.waves[1].left_edge(), testing::frozen::sigma), 1e-13);
  const State mid = sample(fan, 1.0, 0.0);
  EXPECT_LT(rel(mid.rho, testing::frozen::rho_M), 1e-14);
  EXPECT_EQ(mid.v, 0.0);
  EXPECT_EQ(mid.u, 0.0);
}

TEST(SolveRiemann, ContactCarriesTangentialJump) {
  const RiemannData d{State{1.0, -0.5, 0.2}, State{1.5, 0.7, 0.0}, kQuadratic};
  const WaveFan fan = solve_riemann(d);
  ASSERT_EQ(fan.waves.size(), 3u);
  const Wave& c = fan.waves[1];
  ASSERT_TRUE(c.is_contact());
  EXPECT_EQ(c.left_state.rho, c.right_state.rho);
  EXPECT_EQ(c.left_state.v, c.right_state.v);
  EXPECT_EQ(c.left_state.u, -0.5);
  EXPECT_EQ(c.right_state.u, 0.7);
  EXPECT_EQ(c.left_edge(), c.left_state.v);
  EXPECT_EQ(fan.states.front(), d.left);
  EXPECT_EQ(fan.states.back(), d.right);
}

TEST(SolveRiemann, PureContact) {
  const RiemannData d{State{2.0, -1.0, 0.3}, State{2.0, 1.0, 0.3}, kQuadratic};
  const WaveFan fan = solve_riemann(d);
  ASSERT_EQ(fan.waves.size(), 1u);
  EXPECT_TRUE(fan.waves[0].is_contact());
  EXPECT_DOUBLE_EQ(fan.waves[0].left_edge(), 0.3);
}

TEST(Sample, OuterStatesAndCenter) {
  const WaveFan fan = solve_riemann(paper_fixture().data, SpaceTimePoint{0.5, -2.0});
  EXPECT_EQ(sample(fan, 1.5, -1e6), paper_fixture().data.left);
  EXPECT_EQ(sample(fan, 1.5, 1e6), paper_fixture().data.right);
  EXPECT_LT(rel(sample(fan, 1.5, -2.0).rho, testing::frozen::rho_M), 1e-14);
  EXPECT_THROW((void)sample(fan, 0.5, 0.0), DomainError);
  EXPECT_THROW((void)sample(fan, 0.2, 0.0), DomainError);
}

TEST(Sample, PointOnShockTakesRightState) {
  const WaveFan fan = solve_riemann(paper_fixture().data);
  const double s = fan.waves[1].left_edge();
  EXPECT_EQ(sample_xi(fan, s), paper_fixture().data.right);
}

TEST(Sample, RarefactionInteriorOnIntegralCurve) {
  const RiemannData d{State{1.0, 0.0, 0.0}, State{3.0, 0.0, 0.0}, kQuadratic};
  const WaveFan fan = solve_riemann(d);
  const Wave& w = fan.waves.back();
  ASSERT_TRUE(w.is_rarefaction());
  const auto& r = std::get<Rarefaction>(w.kind);
  for (int i = 1; i < 10; ++i) {
    const double xi = r.tail + (r.head - r.tail) * i / 10.0;
    const State s = sample_xi(fan, xi);
    EXPECT_NEAR(s.v + sound_speed(kQuadratic, s.rho), xi, 1e-12);
    // 3-Riemann invariant v - 2 sqrt(2 rho) is constant across the fan
    EXPECT_NEAR(s.v - 2.0 * std::sqrt(2.0 * s.rho), d.right.v - 2.0 * std::sqrt(2.0 * d.right.rho),
                1e-12);
  }
}

// Exact profile against a first-order finite-volume reference.
TEST(Sample, AgreesWithFiniteVolumeReference) {
  const RiemannData d{State{1.0, -0.3, 0.0}, State{3.0, 0.4, 0.0}, kQuadratic};
  const WaveFan fan = solve_riemann(d);
  auto l1_gap = [&](int cells) {
    const std::vector<State> fv = testing::rusanov(kQuadratic, d.left, d.right, -4.0, 4.0, cells, 1.0);
    double gap = 0.0;
    constexpr int kPoints = 100;
    for (int k = 0; k < kPoints; ++k) {
      const double y = -4.0 + 8.0 * (k + 0.5) / kPoints;
      const int cell = std::min(cells - 1, static_cast<int>((y + 4.0) / 8.0 * cells));
      gap += std::abs(sample(fan, 1.0, y).rho - fv[cell].rho);
    }
    return gap / kPoints;
  };
  const double coarse = l1_gap(400);
  const double fine = l1_gap(3200);
  EXPECT_LT(fine, coarse);
  EXPECT_LT(fine, 0.02 * (d.right.rho - d.left.rho));
}

TEST(CheckRh, PaperDiscontinuities) {
  const PaperFixture& f = paper_fixture();
  const State mid{testing::frozen::rho_M, 0.0, 0.0};
  EXPECT_LE(check_rh(kQuadratic, testing::frozen::sigma, mid, f.data.right).max_abs(), 1e-9);
  EXPECT_LE(check_rh(kQuadratic, -testing::frozen::sigma, f.data.left, mid).max_abs(), 1e-9);

  const State three{3.0, 0.0, 0.0};
  const State two{60.0, 0.0, 57.0 * kS35 / 10.0};
  const RhResiduals r = check_rh(kQuadratic, 6.0 * kS35, two, three);
  EXPECT_LE(r.max_abs(), 1e-12 * rh_scale(kQuadratic, 6.0 * kS35, two, three));
  EXPECT_LE(check_rh(kQuadratic, 6.0 * kS35, three, two).max_abs(),
            1e-12 * rh_scale(kQuadratic, 6.0 * kS35, three, two));

  const State x{1.7, -0.2, 0.9};
  const RhResiduals zero = check_rh(kQuadratic, 3.3, x, x);
  EXPECT_EQ(zero.mass, 0.0);
  EXPECT_EQ(zero.momentum_x, 0.0);
  EXPECT_EQ(zero.momentum_y, 0.0);
}

TEST(CheckRh, DetectsWrongSpeed) {
  const State mid{testing::frozen::rho_M, 0.0, 0.0};
  const RhResiduals r =
      check_rh(kQuadratic, testing::frozen::sigma + 1e-3, mid, paper_fixture().data.right);
  EXPECT_NEAR(r.mass, 1e-3 * (testing::frozen::rho_M - 1.0), 1e-9);
}

TEST(EnergyDissipation, Signs) {
  const PaperFixture& f = paper_fixture();
  const State mid{testing::frozen::rho_M, 0.0, 0.0};
  const double sigma = testing::frozen::sigma;
  EXPECT_GT(check_energy_dissipation(kQuadratic, sigma, mid, f.data.right), 0.0);
  EXPECT_GT(check_energy_dissipation(kQuadratic, -sigma, f.data.left, mid), 0.0);
  EXPECT_LT(check_energy_dissipation(kQuadratic, sigma, f.data.right, mid), 0.0);
  const State x{1.7, -0.2, 0.9};
  EXPECT_EQ(check_energy_dissipation(kQuadratic, 0.4, x, x), 0.0);
}

TEST(WaveCurveDrop, BranchSelection) {
  EXPECT_DOUBLE_EQ(wave_curve_drop(kQuadratic, 1.0, 3.0), hugoniot_velocity_jump(kQuadratic, 1.0, 3.0));
  EXPECT_DOUBLE_EQ(wave_curve_drop(kQuadratic, 4.0, 1.0), rarefaction_velocity_change(kQuadratic, 4.0, 1.0));
  EXPECT_EQ(wave_curve_drop(kQuadratic, 2.0, 2.0), 0.0);
}

}  // namespace
}  // namespace eulerfan
