// Acceptance suite: one PASS/FAIL line per criterion.
//
//   eulerfan_acceptance        run all criteria
//   eulerfan_acceptance 4 9    run selected criteria
//
// Exit status is 0 iff every selected criterion passes.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eulerfan/eulerfan.hpp"
#include "oracles.hpp"

namespace {

using namespace eulerfan;

const double kS35 = std::sqrt(35.0);
const double kS915 = std::sqrt(915.0);
const double kS1281 = std::sqrt(1281.0);

namespace frozen = testing::frozen;

double rel(double a, double b) { return a == b ? 0.0 : std::abs(a - b) / std::abs(b); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::string failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures += " [failed: " + what + "]";
    }
  }
};

struct Pair {
  PiecewiseSolution ex;
  PiecewiseSolution planar;
  ActionWindow window;
};

Pair fixture_pair(double T) {
  const PaperFixture& f = paper_fixture();
  return Pair{build_glued_solution(f.data, f.sub, 0.5 * T, T), build_1d_solution(f.data, T),
              ActionWindow{1.0, f.sub.mu1 * 0.5 * T, T}};
}

// 1. rho_M in (93, 94), sigma in (1, 1.1), root residual <= 1e-11
Outcome criterion_1() {
  Outcome o;
  const PaperFixture& f = paper_fixture();
  const MiddleState m = solve_middle_density(f.data);
  const WaveFan fan = solve_riemann(f.data);
  const double sigma = fan.waves.back().right_edge();
  o.require(m.rho > 93.0 && m.rho < 94.0, "rho_M in (93, 94)");
  o.require(sigma > 1.0 && sigma < 1.1, "sigma in (1, 1.1)");
  o.require(m.root_residual <= 1e-11, "root residual <= 1e-11");
  o.require(rel(m.rho, testing::bisect_symmetric_rho_M(f.v_minus)) <= 1e-13, "bisection oracle");
  o.detail << std::setprecision(17) << "rho_M = " << m.rho << ", sigma = " << sigma
           << ", residual = " << m.root_residual;
  return o;
}

// 2. RH residuals <= 1e-9 relative, four margins > 1e-12 scale
Outcome criterion_2() {
  Outcome o;
  const PaperFixture& f = paper_fixture();
  const FeasibilityReport r = check_feasibility(f.sub, f.data);
  o.require(r.worst_relative_residual() <= 1e-9, "RH residuals <= 1e-9");
  for (int i = 0; i < 2; ++i) {
    o.require(r.subsolution_margins[i] > 1e-12 * r.subsolution_scale[i],
              "subsolution margin " + std::to_string(i + 1));
    o.require(r.admissibility_margins[i] > 1e-12 * r.admissibility_scale[i],
              std::string("admissibility margin ") + (i == 0 ? "left" : "right"));
  }
  o.require(r.feasible, "feasible");
  o.detail << std::setprecision(6) << "worst residual " << r.worst_relative_residual()
           << ", margins " << r.subsolution_margins[0] << ' ' << r.subsolution_margins[1] << ' '
           << r.admissibility_margins[0] << ' ' << r.admissibility_margins[1];
  return o;
}

// 3. both corner fans are shock-shock with states (60, +-v2), speeds
//    mu2..mu5 to 1e-12
Outcome criterion_3() {
  Outcome o;
  const PaperFixture& f = paper_fixture();
  const State wedge = f.sub.mean_state();
  const double v2 = frozen::v2;
  const double mu2 = frozen::mu2;
  const double mu3 = frozen::mu3;
  const WaveFan left = solve_riemann(RiemannData{f.data.left, wedge, f.data.eos});
  const WaveFan right = solve_riemann(RiemannData{wedge, f.data.right, f.data.eos});
  const std::array<std::pair<const WaveFan*, std::array<double, 3>>, 2> cases{
      std::pair{&left, std::array{mu2, mu3, v2}}, std::pair{&right, std::array{-mu3, -mu2, -v2}}};
  double worst = 0.0;
  for (const auto& [fan, expect] : cases) {
    if (fan->waves.size() != 2 || !fan->waves[0].is_shock() || !fan->waves[1].is_shock()) {
      o.require(false, "shock-shock fan");
      continue;
    }
    const State& mid = fan->states[1];
    const double errs[] = {rel(fan->waves[0].left_edge(), expect[0]),
                           rel(fan->waves[1].left_edge(), expect[1]), rel(mid.rho, 60.0),
                           rel(mid.v, expect[2]), std::abs(mid.u)};
    for (double e : errs) worst = std::max(worst, e);
  }
  o.require(worst <= 1e-12, "states and speeds to 1e-12");
  o.detail << std::setprecision(3) << "worst relative error " << worst;
  return o;
}

// 4. interaction_time = T0 (1 + mu1/mu3) > 2 T0 to 1e-12
Outcome criterion_4() {
  Outcome o;
  const PaperFixture& f = paper_fixture();
  const double mu1 = f.sub.mu1;
  const double mu3 = frozen::mu3;
  double worst = 0.0;
  for (double T0 : {0.5, 1.0}) {
    const PiecewiseSolution s = build_glued_solution(f.data, f.sub, T0, 2.0 * T0);
    const double expected = T0 * (1.0 + mu1 / mu3);
    worst = std::max(worst, rel(interaction_time(s).time, expected));
    o.require(interaction_time(s).time > 2.0 * T0, "beyond 2 T0");
  }
  const double half = build_glued_solution(f.data, f.sub, 0.5, 1.0).horizon;
  worst = std::max(worst, rel(half, frozen::horizon_half));
  o.require(worst <= 1e-12, "closed form to 1e-12");
  o.detail << std::setprecision(17) << "horizon(T0 = 1/2) = "
           << build_glued_solution(f.data, f.sub, 0.5, 1.0).horizon << std::setprecision(3)
           << ", worst relative error " << worst;
  return o;
}

// 5. a_-, a_wild, a_1 = -9, a_2 = 61029/2 to 1e-12
Outcome criterion_5() {
  Outcome o;
  const PaperFixture& f = paper_fixture();
  const EosParams& eos = f.data.eos;
  const PiecewiseSolution ex = build_glued_solution(f.data, f.sub, 0.5, 1.0);
  const double a_minus = region_action_density(eos, evaluate(ex, 0.25, -40.0));
  const double a_wild = region_action_density(eos, evaluate(ex, 0.25, 0.0));
  const double a_1 = region_action_density(eos, evaluate(ex, 0.75, 0.0));
  // between the two shocks leaving the left wedge corner
  const double y2 = f.sub.mu0 * 0.5 + 0.5 * (frozen::mu2 + frozen::mu3) * 0.25;
  const double a_2 = region_action_density(eos, evaluate(ex, 0.75, y2));
  const double errs[] = {rel(a_minus, frozen::a_minus),
                         rel(a_wild, frozen::a_wild), rel(a_1, -9.0),
                         rel(a_2, 61029.0 / 2.0)};
  const double worst = *std::max_element(std::begin(errs), std::end(errs));
  o.require(worst <= 1e-12, "densities to 1e-12");
  o.detail << std::setprecision(12) << "a_- = " << a_minus << ", a_wild = " << a_wild
           << ", a_1 = " << a_1 << ", a_2 = " << a_2;
  return o;
}

// 6. action / T^2 = K_ex and K_1d to 1e-11 for two final times
Outcome criterion_6() {
  Outcome o;
  const double k_ex = frozen::k_ex;
  const double k_1d = frozen::k_1d;
  double worst = 0.0;
  for (double T : {1.0, 2.0}) {
    const Pair p = fixture_pair(T);
    worst = std::max(worst, rel(action_closed_form(p.ex, p.window) / (T * T), k_ex));
    worst = std::max(worst, rel(action_closed_form(p.planar, p.window) / (T * T), k_1d));
  }
  o.require(worst <= 1e-11, "coefficients to 1e-11");
  o.detail << std::setprecision(17) << "K_ex = " << k_ex << ", K_1d = " << k_1d
           << std::setprecision(3) << ", worst relative error " << worst << " (T = 1, 2)";
  return o;
}

// 7. K_ex - K_1d < 0, about -1.2e4, compare() says the glued solution wins
Outcome criterion_7() {
  Outcome o;
  const PaperFixture& f = paper_fixture();
  const double rho_M = testing::bisect_symmetric_rho_M(f.v_minus);
  const double sigma = f.v_minus / (rho_M - 1.0);
  const double gap = (2.0 * rho_M * rho_M + 1121.0 * kS1281 / 10.0 + 28045.0 / 6.0) * sigma -
                     1204923.0 * kS35 / 800.0 - 7114987.0 * kS915 / 7200.0;
  const Pair p = fixture_pair(1.0);
  const ActionComparison c = compare(p.ex, p.planar, p.window);
  o.require(gap < 0.0, "oracle gap negative");
  o.require(std::abs(gap) > 1.15e4 && std::abs(gap) < 1.25e4, "magnitude about 1.2e4");
  o.require(rel(gap, frozen::k_gap) <= 1e-9, "oracle gap matches the frozen value");
  o.require(rel(c.difference, gap) <= 1e-9, "compare() matches the oracle gap");
  o.require(c.ordering == ActionOrdering::FirstLower, "glued solution strictly lower");
  o.detail << std::setprecision(17) << "K_ex - K_1d = " << c.difference << " (oracle " << gap
           << "), ordering " << to_string(c.ordering);
  return o;
}

// 8. A~_ex > A~_1d before T0, one crossing in (T0, T), one downward jump
//    of A_ex at T0
Outcome criterion_8() {
  Outcome o;
  const Pair p = fixture_pair(1.0);
  const ActionProfile pa = action_profile(p.ex, p.window);
  const ActionProfile pb = action_profile(p.planar, p.window);
  const CumulativeAction ca = cumulative_action(pa);
  const CumulativeAction cb = cumulative_action(pb);
  bool above = true;
  for (int i = 1; i < 1000; ++i) {
    const double t = 0.5 * i / 1000.0;
    above = above && ca.at(t) > cb.at(t);
  }
  o.require(above, "A~_ex > A~_1d on sampled t < T0");
  const ActionComparison c = compare(p.ex, p.planar, p.window);
  o.require(c.crossing_times.size() == 1, "exactly one crossing");
  const bool inside =
      c.crossing_times.size() == 1 && c.crossing_times[0] > 0.5 && c.crossing_times[0] < 1.0;
  o.require(inside, "crossing in (T0, T)");
  const auto jumps = pa.jumps(0.0);
  o.require(jumps.size() == 1 && jumps[0].first == 0.5 && jumps[0].second < 0.0,
            "single downward jump of A_ex at T0");
  o.detail << std::setprecision(17) << "t* = " << (c.crossing_times.empty() ? NAN : c.crossing_times[0])
           << ", jump " << (jumps.empty() ? NAN : jumps[0].second) << " at "
           << (jumps.empty() ? NAN : jumps[0].first);
  return o;
}

// 9. midpoint quadrature: error ratio in [1.8, 2.2] per doubling,
//    finest grid within 0.5%
Outcome criterion_9() {
  Outcome o;
  const Pair p = fixture_pair(1.0);
  const double closed = action_closed_form(p.ex, p.window);
  std::vector<double> errs;
  for (int n : {256, 512, 1024, 2048}) {
    errs.push_back(std::abs(action_quadrature(p.ex, p.window, n, n) - closed) / std::abs(closed));
  }
  o.detail << std::setprecision(4) << "errors";
  for (double e : errs) o.detail << ' ' << e;
  o.detail << "; ratios";
  for (std::size_t i = 0; i + 1 < errs.size(); ++i) {
    const double r = errs[i] / errs[i + 1];
    o.detail << ' ' << r;
    o.require(r >= 1.8 && r <= 2.2, "ratio " + std::to_string(i + 1) + " in [1.8, 2.2]");
  }
  o.require(errs.back() <= 5e-3, "finest grid within 0.5%");
  return o;
}

// 10. property suites
Outcome criterion_10() {
  Outcome o;
  const PaperFixture& f = paper_fixture();
  auto g = testing::rng(10);
  const std::array<EosParams, 2> laws{EosParams{1.0, 2.0}, EosParams{1.0, 1.4}};
  std::uniform_real_distribution<double> xi(-10.0, 10.0);
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  int fans = 0;
  double worst_mirror = 0.0;
  double worst_similar = 0.0;
  double worst_rh = 0.0;
  double worst_shock_margin = INFINITY;
  for (int i = 0; i < 400; ++i) {
    const EosParams& eos = laws[i % 2];
    const RiemannData d{testing::random_state(g, 0.1, 10.0, 3.0),
                        testing::random_state(g, 0.1, 10.0, 3.0), eos};
    WaveFan fan;
    try {
      fan = solve_riemann(d);
    } catch (const SolverError&) {
      continue;
    }
    ++fans;
    auto flip = [](const State& s) { return State{s.rho, s.u, -s.v}; };
    const WaveFan mirror = solve_riemann(RiemannData{flip(d.right), flip(d.left), eos});
    for (int k = 0; k < 10; ++k) {
      const double x = xi(g);
      bool edge = false;
      for (const Wave& w : fan.waves) {
        edge = edge || std::abs(x - w.left_edge()) < 1e-9 || std::abs(x - w.right_edge()) < 1e-9;
      }
      if (edge) continue;
      const State a = sample_xi(fan, x);
      const State b = flip(sample_xi(mirror, -x));
      worst_mirror = std::max({worst_mirror, rel(b.rho, a.rho), std::abs(b.v - a.v), std::abs(b.u - a.u)});
      const double t = scale(g);
      const State c = sample(fan, t, x * t);
      worst_similar = std::max({worst_similar, rel(c.rho, a.rho), std::abs(c.v - a.v)});
    }
    for (const Wave& w : fan.waves) {
      if (!w.is_shock()) continue;
      const double s = w.left_edge();
      worst_rh = std::max(worst_rh, check_rh(eos, s, w.left_state, w.right_state).max_abs() /
                                        std::max(1.0, rh_scale(eos, s, w.left_state, w.right_state)));
      worst_shock_margin = std::min(worst_shock_margin,
                                    check_energy_dissipation(eos, s, w.left_state, w.right_state));
    }
  }
  o.require(fans > 300, "enough non-vacuum samples");
  o.require(worst_mirror <= 1e-10, "mirror symmetry");
  o.require(worst_similar <= 1e-12, "self-similar sampling");
  o.require(worst_rh <= 1e-9, "RH residuals of emitted shocks");
  o.require(worst_shock_margin > 0.0, "emitted shocks dissipate energy");

  // boundaries and the t = T0 seam of built solutions
  double worst_boundary_rh = 0.0;
  double worst_margin = INFINITY;
  for (const PiecewiseSolution& s :
       {build_glued_solution(f.data, f.sub, 0.5, 1.0), build_1d_solution(f.data, 1.0)}) {
    const SolutionChecks c = check_solution(s);
    o.require(c.passed(ToleranceConfig{}), "solution checks");
    worst_boundary_rh = std::max(worst_boundary_rh, c.worst_rh_relative());
    for (const BoundaryCheck& b : c.boundaries) {
      worst_margin = std::min(worst_margin, b.energy_margin / std::max(1.0, b.energy_scale));
    }
    for (const SeamCheck& seam : c.seams) worst_margin = std::min(worst_margin, seam.energy_drop);
  }
  o.require(worst_boundary_rh <= 1e-9, "boundary RH residuals");
  o.require(worst_margin >= -1e-9, "boundary and seam energy margins");

  // tiling
  const PiecewiseSolution ex = build_glued_solution(f.data, f.sub, 0.5, 1.0);
  std::uniform_real_distribution<double> tt(1e-9, 1.0 - 1e-9);
  std::uniform_real_distribution<double> yy(-60.0, 60.0);
  int misplaced = 0;
  for (int i = 0; i < 10000; ++i) {
    const double t = tt(g);
    double y = yy(g);
    const RegionIndex first = locate(ex, t, y);
    const Slab& slab = ex.slabs[first.slab];
    if (i % 3 == 0) y = slab.boundaries[i % slab.boundaries.size()].line.at(t) + ((i % 2) ? 1e-12 : 0.0);
    const RegionIndex r = locate(ex, t, y);
    int owners = 0;
    std::size_t owner = 0;
    for (std::size_t k = 0; k < slab.regions.size(); ++k) {
      const double lo = k == 0 ? -INFINITY : slab.boundaries[k - 1].line.at(t);
      const double hi = k + 1 == slab.regions.size() ? INFINITY : slab.boundaries[k].line.at(t);
      if (lo <= y && y < hi) {
        ++owners;
        owner = k;
      }
    }
    if (owners != 1 || owner != r.region) ++misplaced;
  }
  o.require(misplaced == 0, "tiling of 1e4 points");
  o.detail << std::setprecision(3) << fans << " random fans, mirror " << worst_mirror
           << ", similarity " << worst_similar << ", shock RH " << worst_rh << ", boundary RH "
           << worst_boundary_rh << ", worst margin " << worst_margin << ", tiling misses "
           << misplaced;
  return o;
}

const std::vector<std::pair<const char*, std::function<Outcome()>>> kCriteria{
    {"rho_M and sigma bounds", criterion_1},
    {"fixture feasibility", criterion_2},
    {"post-T0 wave structure", criterion_3},
    {"non-interaction horizon", criterion_4},
    {"action densities", criterion_5},
    {"action coefficients", criterion_6},
    {"counterexample verdict", criterion_7},
    {"profile behaviour", criterion_8},
    {"quadrature convergence", criterion_9},
    {"property suites", criterion_10},
};

}  // namespace

int main(int argc, char** argv) {
  const int count = static_cast<int>(kCriteria.size());
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const int n = std::atoi(argv[i]);
    if (n < 1 || n > count) {
      std::fprintf(stderr, "usage: %s [criterion 1..%d]...\n", argv[0], count);
      return 64;
    }
    selected.push_back(n);
  }
  if (selected.empty()) {
    for (int n = 1; n <= count; ++n) selected.push_back(n);
  }
  int failed = 0;
  for (int n : selected) {
    const auto& [name, fn] = kCriteria[n - 1];
    Outcome r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r.pass = false;
      r.failures += std::string(" [exception: ") + e.what() + "]";
    }
    if (!r.pass) ++failed;
    const std::string line = r.detail.str() + r.failures;
    std::printf("%s criterion %d (%s): %s\n", r.pass ? "PASS" : "FAIL", n, name, line.c_str());
  }
  return failed == 0 ? 0 : 1;
}
