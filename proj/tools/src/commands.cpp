#include "eulerfan/cli/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "eulerfan/cli/const_expr.hpp"
#include "eulerfan/errors.hpp"
#include "eulerfan/fixture.hpp"
#include "eulerfan/spacetime.hpp"

namespace eulerfan::cli {

namespace {

namespace fs = std::filesystem;

bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1e-300});
}

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(17) << x;
  return s.str();
}

std::optional<double> three_shock_speed(const WaveFan& fan) {
  for (const Wave& w : fan.waves) {
    if (w.family == 3 && w.is_shock()) return std::get<Shock>(w.kind).speed;
  }
  return std::nullopt;
}

class Verifier {
 public:
  Verifier(const RunConfig& cfg, std::optional<QuadratureGrid> grid) : cfg_(cfg), grid_(grid) {}

  VerifyOutcome run() {
    out_.report["config"] = cfg_.name;
    out_.report["stages"] = Json::array();
    try {
      planar_stage() && feasibility_stage() && glued_stage() && action_stage();
    } catch (const SolverError& e) {
      fail_stage(e.what(), kExitSolverFailure);
    } catch (const DomainError& e) {
      fail_stage(e.what(), kExitConfigError);
    } catch (const DegenerateInputError& e) {
      fail_stage(e.what(), kExitConfigError);
    }
    flush_stage();

    bool all = true;
    for (const Claim& c : out_.claims) all = all && c.passed;
    if (out_.exit_code == kExitPass && !all) out_.exit_code = kExitClaimFailed;
    if (!out_.failed_stage) {
      for (const Claim& c : out_.claims) {
        if (!c.passed) {
          out_.failed_stage = c.stage;
          break;
        }
      }
    }
    out_.report["passed"] = out_.exit_code == kExitPass;
    out_.report["failed_stage"] = out_.failed_stage ? Json(*out_.failed_stage) : Json(nullptr);
    out_.report["exit_code"] = out_.exit_code;
    return std::move(out_);
  }

 private:
  const RunConfig& cfg_;
  std::optional<QuadratureGrid> grid_;
  VerifyOutcome out_;
  std::string stage_;
  Json stage_data_ = Json::object();
  Json stage_claims_ = Json::array();

  std::optional<MiddleState> middle_;
  std::optional<double> sigma_;
  std::optional<PiecewiseSolution> planar_;
  std::optional<PiecewiseSolution> glued_;

  void begin(const std::string& name) {
    flush_stage();
    stage_ = name;
  }

  void flush_stage() {
    if (stage_.empty()) return;
    out_.report["stages"].push_back(
        Json{{"name", stage_}, {"claims", stage_claims_}, {"data", stage_data_}});
    stage_.clear();
    stage_data_ = Json::object();
    stage_claims_ = Json::array();
  }

  bool claim(const std::string& name, bool passed, const std::string& detail) {
    out_.claims.push_back(Claim{stage_, name, passed, detail});
    stage_claims_.push_back(Json{{"name", name}, {"passed", passed}, {"detail", detail}});
    return passed;
  }

  void fail_stage(const std::string& what, int code) {
    if (stage_.empty()) stage_ = "setup";
    stage_data_["error"] = what;
    out_.exit_code = code;
    out_.failed_stage = stage_;
  }

  bool planar_stage() {
    begin("planar");
    const RiemannData& d = cfg_.data;
    middle_ = solve_middle_density(d);
    const WaveFan fan = solve_riemann(d);
    sigma_ = three_shock_speed(fan);
    planar_ = build_1d_solution(d, cfg_.T);
    stage_data_["middle"] = to_json(*middle_);
    stage_data_["sigma"] = sigma_ ? Json(*sigma_) : Json(nullptr);
    stage_data_["fan"] = to_json(fan);

    const double residual_scale = std::max({1.0, std::abs(d.left.v), std::abs(d.right.v)});
    claim("root_residual", middle_->root_residual <= 1e-11 * residual_scale,
          "|f(rho_M)| = " + fmt(middle_->root_residual));
    const Expectations& e = cfg_.expect;
    if (e.rho_M_above) {
      claim("rho_M_above", middle_->rho > *e.rho_M_above,
            fmt(middle_->rho) + " > " + fmt(*e.rho_M_above));
    }
    if (e.rho_M_below) {
      claim("rho_M_below", middle_->rho < *e.rho_M_below,
            fmt(middle_->rho) + " < " + fmt(*e.rho_M_below));
    }
    if (e.sigma_above || e.sigma_below) {
      if (!sigma_) {
        claim("sigma", false, "the planar solution has no 3-shock");
      } else {
        if (e.sigma_above) {
          claim("sigma_above", *sigma_ > *e.sigma_above, fmt(*sigma_) + " > " + fmt(*e.sigma_above));
        }
        if (e.sigma_below) {
          claim("sigma_below", *sigma_ < *e.sigma_below, fmt(*sigma_) + " < " + fmt(*e.sigma_below));
        }
      }
    }
    const SolutionChecks checks = check_solution(*planar_, cfg_.tolerances);
    stage_data_["checks"] = to_json(checks);
    claim("planar_admissible", checks.passed(cfg_.tolerances),
          "worst RH " + fmt(checks.worst_rh_relative()) + ", worst energy margin " +
              fmt(checks.worst_energy_margin()));
    return true;
  }

  bool feasibility_stage() {
    if (!cfg_.subsolution) return true;
    begin("feasibility");
    const FeasibilityReport r = check_feasibility(*cfg_.subsolution, cfg_.data, cfg_.tolerances);
    stage_data_ = to_json(r);
    std::string detail = "worst RH " + fmt(r.worst_relative_residual());
    for (const std::string& v : r.violations) detail += "; " + v;
    return claim("subsolution_feasible", r.feasible, detail);
  }

  bool glued_stage() {
    if (!cfg_.subsolution) return true;
    begin("glued");
    const FanSubsolution& sub = *cfg_.subsolution;
    stage_data_["left_interface"] = to_json(solve_riemann({cfg_.data.left, sub.mean_state(), cfg_.data.eos}));
    stage_data_["right_interface"] =
        to_json(solve_riemann({sub.mean_state(), cfg_.data.right, cfg_.data.eos}));
    try {
      glued_ = build_glued_solution(cfg_.data, sub, cfg_.T0, cfg_.T, cfg_.tolerances);
    } catch (const HorizonError& e) {
      return claim("horizon_beyond_T", false, e.what());
    }
    stage_data_["horizon"] = glued_->horizon;
    claim("horizon_beyond_T", glued_->horizon > cfg_.T,
          fmt(glued_->horizon) + " > " + fmt(cfg_.T));
    if (cfg_.expect.horizon_beyond_2T0) {
      claim("horizon_beyond_2T0", glued_->horizon > 2.0 * cfg_.T0,
            fmt(glued_->horizon) + " > " + fmt(2.0 * cfg_.T0));
    }
    const SolutionChecks checks = check_solution(*glued_, cfg_.tolerances);
    stage_data_["checks"] = to_json(checks);
    stage_data_["solution"] = to_json(*glued_);
    return claim("glued_admissible", checks.passed(cfg_.tolerances),
                 "worst RH " + fmt(checks.worst_rh_relative()) + ", worst energy margin " +
                     fmt(checks.worst_energy_margin()));
  }

  bool consistency(const std::string& label, const ActionReport& r) {
    const double scale = std::max(1.0, std::abs(r.value_closed_form));
    const double gap = std::max(std::abs(r.profile.integral() - r.value_closed_form),
                                std::abs(r.cumulative.at(cfg_.T) - r.value_closed_form));
    return claim("consistency_" + label, gap <= 1e-12 * scale,
                 "max |profile integral, A_tilde(T) - closed form| = " + fmt(gap));
  }

  bool action_stage() {
    begin("action");
    const PiecewiseSolution& first = glued_ ? *glued_ : *planar_;
    const PiecewiseSolution& second = *planar_;
    const PiecewiseSolution* pair[] = {&first, &second};
    const double L2 = cfg_.L2.value_or(outer_extent(pair, cfg_.T));
    const ActionWindow window{cfg_.L1, L2, cfg_.T};
    stage_data_["window"] = Json{{"L1", window.L1}, {"L2", window.L2}, {"T", window.T}};

    const ActionReport ra = action_report(first, window, grid_);
    const ActionReport rb = action_report(second, window, grid_);
    ActionComparison cmp = compare(first, second, window);
    const bool counterexample = glued_.has_value() && cmp.ordering == ActionOrdering::FirstLower;
    stage_data_[glued_ ? "glued" : "planar_first"] = to_json(ra);
    stage_data_["planar"] = to_json(rb);
    stage_data_["comparison"] = to_json(cmp);
    stage_data_["counterexample"] = counterexample;

    consistency("first", ra);
    consistency("second", rb);
    if (grid_) {
      for (const auto& [label, r] : {std::pair{"first", &ra}, std::pair{"second", &rb}}) {
        const double err = std::abs(*r->value_quadrature - r->value_closed_form) /
                           std::max(1.0, std::abs(r->value_closed_form));
        claim(std::string("quadrature_") + label, err <= 5e-3,
              "relative gap " + fmt(err) + " at " + std::to_string(grid_->nt) + "x" +
                  std::to_string(grid_->ny));
      }
    }
    const Expectations& e = cfg_.expect;
    if (e.counterexample) {
      claim("counterexample", counterexample == *e.counterexample,
            std::string("ordering ") + to_string(cmp.ordering) + ", difference " +
                fmt(cmp.difference));
    }
    if (e.K_ex) {
      claim("K_ex", glued_.has_value() && rel_close(ra.coefficient, *e.K_ex, 1e-11),
            fmt(ra.coefficient) + " vs " + fmt(*e.K_ex));
    }
    if (e.K_1d_closed_form) {
      if (!sigma_) {
        claim("K_1d", false, "the planar solution has no 3-shock");
      } else {
        const double expected = k_1d_closed_form(middle_->rho, *sigma_);
        claim("K_1d", rel_close(rb.coefficient, expected, 1e-11),
              fmt(rb.coefficient) + " vs " + fmt(expected));
      }
    }
    return true;
  }
};

void write_json(const fs::path& path, const Json& j) {
  std::ofstream f(path);
  if (!f) throw ConfigError("--out", "cannot write " + path.string());
  f << j.dump(2) << '\n';
}

std::ofstream open_csv(const fs::path& path) {
  std::ofstream f(path);
  if (!f) throw ConfigError("--out", "cannot write " + path.string());
  f << std::setprecision(17);
  return f;
}

struct GlobalOptions {
  std::string config;
  std::string out;
  std::optional<double> tol;
  std::string grid;
  bool json = false;
};

RunConfig resolve(const GlobalOptions& g) {
  RunConfig cfg = g.config.empty() ? parse_config(default_config_text()) : load_config(g.config);
  if (g.tol) {
    if (!(*g.tol > 0.0)) throw ConfigError("--tol", "must be positive");
    cfg.tolerances.residual_abs = *g.tol;
  }
  if (!g.out.empty()) cfg.output_dir = g.out;
  return cfg;
}

void print_state(std::ostream& out, const char* label, const State& s) {
  out << label << "rho = " << fmt(s.rho) << ", u = " << fmt(s.u) << ", v = " << fmt(s.v) << '\n';
}

int cmd_verify(const GlobalOptions& g, std::ostream& out) {
  const RunConfig cfg = resolve(g);
  std::optional<QuadratureGrid> grid = QuadratureGrid{1024, 1024};
  if (!g.grid.empty()) {
    const auto [nt, ny] = parse_grid(g.grid);
    grid = QuadratureGrid{nt, ny};
  }
  const VerifyOutcome v = run_verify(cfg, grid);
  if (!g.out.empty()) {
    fs::create_directories(g.out);
    write_json(fs::path(g.out) / "verify_report.json", v.report);
  }
  if (g.json) {
    out << v.report.dump(2) << '\n';
  } else {
    for (const Claim& c : v.claims) {
      out << (c.passed ? "[PASS] " : "[FAIL] ") << c.stage << '/' << c.name << ": " << c.detail
          << '\n';
    }
    if (v.failed_stage) out << "failed stage: " << *v.failed_stage << '\n';
    for (const auto& stage : v.report["stages"]) {
      if (stage["data"].contains("error")) {
        out << "error in " << stage["name"].get<std::string>() << ": "
            << stage["data"]["error"].get<std::string>() << '\n';
      }
    }
    out << "verdict: " << (v.exit_code == kExitPass ? "PASS" : "FAIL") << '\n';
  }
  return v.exit_code;
}

struct RiemannOptions {
  std::string left;
  std::string right;
  std::string interface;
  std::string csv;
};

int cmd_riemann(const GlobalOptions& g, const RiemannOptions& o, std::ostream& out) {
  const RunConfig cfg = resolve(g);
  RiemannData data = cfg.data;
  if (!o.interface.empty()) {
    if (!cfg.subsolution) throw ConfigError("/subsolution", "--interface needs a subsolution");
    const State wedge = cfg.subsolution->mean_state();
    if (o.interface == "left") {
      data.right = wedge;
    } else {
      data.left = wedge;
    }
  }
  if (!o.left.empty()) data.left = parse_state_triple(o.left);
  if (!o.right.empty()) data.right = parse_state_triple(o.right);
  try {
    data.validate();
  } catch (const DomainError& e) {
    throw ConfigError("riemann", e.what());
  }

  const WaveFan fan = solve_riemann(data);
  std::optional<MiddleState> middle;
  if (!fan.empty()) middle = solve_middle_density(data);

  if (!o.csv.empty()) {
    double lo = -1.0;
    double hi = 1.0;
    if (!fan.empty()) {
      lo = fan.waves.front().left_edge();
      hi = fan.waves.back().right_edge();
      const double pad = 0.25 * std::max(hi - lo, 1.0);
      lo -= pad;
      hi += pad;
    }
    std::ofstream f = open_csv(o.csv);
    f << "xi,rho,u,v\n";
    constexpr int kSamples = 401;
    for (int i = 0; i < kSamples; ++i) {
      const double xi = lo + (hi - lo) * i / (kSamples - 1);
      const State s = sample_xi(fan, xi);
      f << xi << ',' << s.rho << ',' << s.u << ',' << s.v << '\n';
    }
  }

  if (g.json) {
    Json j{{"fan", to_json(fan)}};
    j["middle"] = middle ? to_json(*middle) : Json(nullptr);
    out << j.dump(2) << '\n';
    return kExitPass;
  }
  print_state(out, "left:   ", data.left);
  print_state(out, "right:  ", data.right);
  if (fan.empty()) {
    out << "no waves\n";
    return kExitPass;
  }
  out << "middle: rho_M = " << fmt(middle->rho) << ", v_M = " << fmt(middle->v) << '\n';
  out << "family  kind         speed(s)\n";
  for (const Wave& w : fan.waves) {
    out << std::left << std::setw(8) << w.family << std::setw(13) << wave_kind_name(w);
    if (const auto* r = std::get_if<Rarefaction>(&w.kind)) {
      out << fmt(r->head) << " .. " << fmt(r->tail);
    } else {
      out << fmt(w.left_edge());
    }
    out << '\n';
  }
  out << "states:\n";
  for (const State& s : fan.states) print_state(out, "  ", s);
  return kExitPass;
}

struct SubsolutionOptions {
  std::string mode;
  double perturb = 1e-3;
  std::string rho1;
  std::string C1;
};

void print_report(std::ostream& out, const FeasibilityReport& r) {
  out << "feasible: " << (r.feasible ? "yes" : "no") << '\n';
  out << "RH left   (mass, x, y): " << fmt(r.rh_left.mass) << ", " << fmt(r.rh_left.momentum_x)
      << ", " << fmt(r.rh_left.momentum_y) << '\n';
  out << "RH right  (mass, x, y): " << fmt(r.rh_right.mass) << ", " << fmt(r.rh_right.momentum_x)
      << ", " << fmt(r.rh_right.momentum_y) << '\n';
  out << "worst relative RH residual: " << fmt(r.worst_relative_residual()) << '\n';
  out << "subsolution margins: " << fmt(r.subsolution_margins[0]) << ", "
      << fmt(r.subsolution_margins[1]) << '\n';
  out << "admissibility margins: " << fmt(r.admissibility_margins[0]) << ", "
      << fmt(r.admissibility_margins[1]) << '\n';
  out << "mu1 - mu0: " << fmt(r.speed_gap) << '\n';
  for (const std::string& v : r.violations) out << "violation: " << v << '\n';
}

std::optional<double> glued_coefficient(const RunConfig& cfg, const FanSubsolution& sub) {
  try {
    const PiecewiseSolution glued =
        build_glued_solution(cfg.data, sub, cfg.T0, cfg.T, cfg.tolerances);
    const PiecewiseSolution* one[] = {&glued};
    const ActionWindow w{cfg.L1, cfg.L2.value_or(outer_extent(one, cfg.T)), cfg.T};
    return action_closed_form(glued, w) / (cfg.T * cfg.T);
  } catch (const HorizonError&) {
    return std::nullopt;
  } catch (const InfeasibleError&) {
    return std::nullopt;
  }
}

int cmd_subsolution(const GlobalOptions& g, const SubsolutionOptions& o, std::ostream& out) {
  const RunConfig cfg = resolve(g);
  if (!cfg.subsolution) throw ConfigError("/subsolution", "the config has no subsolution");
  const FanSubsolution& sub = *cfg.subsolution;

  if (o.mode == "check") {
    const FeasibilityReport r = check_feasibility(sub, cfg.data, cfg.tolerances);
    if (g.json) {
      out << to_json(r).dump(2) << '\n';
    } else {
      print_report(out, r);
    }
    return r.feasible ? kExitPass : kExitClaimFailed;
  }

  if (o.mode == "solve") {
    const double e = o.perturb;
    FanSubsolution seed = sub;
    seed.mu0 += e * std::max(1.0, std::abs(sub.mu0));
    seed.mu1 -= e * std::max(1.0, std::abs(sub.mu1));
    seed.u1 += e;
    seed.v1 -= e;
    seed.gamma1 += e * std::max(1.0, std::abs(sub.gamma1));
    seed.delta1 += e;
    const FamilySolveResult res = solve_family(cfg.data, sub.rho1, sub.C1, seed);
    const FeasibilityReport r = check_feasibility(res.sub, cfg.data, cfg.tolerances);
    const double deviation = std::max(
        {std::abs(res.sub.mu0 - sub.mu0) / std::max(1.0, std::abs(sub.mu0)),
         std::abs(res.sub.mu1 - sub.mu1) / std::max(1.0, std::abs(sub.mu1)),
         std::abs(res.sub.u1 - sub.u1) / std::max(1.0, std::abs(sub.u1)),
         std::abs(res.sub.v1 - sub.v1) / std::max(1.0, std::abs(sub.v1)),
         std::abs(res.sub.gamma1 - sub.gamma1) / std::max(1.0, std::abs(sub.gamma1)),
         std::abs(res.sub.delta1 - sub.delta1) / std::max(1.0, std::abs(sub.delta1))});
    if (g.json) {
      Json j = to_json(res);
      j["max_relative_deviation_from_config"] = deviation;
      j["feasibility"] = to_json(r);
      out << j.dump(2) << '\n';
    } else {
      out << "converged in " << res.iterations << " iterations, residual " << fmt(res.residual_norm)
          << ", Jacobian condition " << fmt(res.jacobian_condition) << '\n';
      out << "mu0 = " << fmt(res.sub.mu0) << ", mu1 = " << fmt(res.sub.mu1) << '\n';
      out << "u1 = " << fmt(res.sub.u1) << ", v1 = " << fmt(res.sub.v1) << '\n';
      out << "gamma1 = " << fmt(res.sub.gamma1) << ", delta1 = " << fmt(res.sub.delta1) << '\n';
      out << "max relative deviation from config: " << fmt(deviation) << '\n';
      print_report(out, r);
    }
    return r.feasible ? kExitPass : kExitClaimFailed;
  }

  // scan
  ScanRange rho1{sub.rho1, sub.rho1, 1};
  ScanRange C1{sub.C1, sub.C1, 1};
  if (!o.rho1.empty()) std::tie(rho1.lo, rho1.hi) = parse_range(o.rho1);
  if (!o.C1.empty()) std::tie(C1.lo, C1.hi) = parse_range(o.C1);
  if (!g.grid.empty()) std::tie(rho1.count, C1.count) = parse_grid(g.grid);
  const auto rows = scan_family(cfg.data, rho1, C1, sub, cfg.tolerances,
                                [&](const FanSubsolution& s) { return glued_coefficient(cfg, s); });

  std::ostringstream csv;
  csv << std::setprecision(17);
  csv << "rho1,C1,feasible,worst_residual,margin_subsolution_1,margin_subsolution_2,"
         "margin_admissibility_left,margin_admissibility_right,K_if_feasible\n";
  for (const ScanRow& row : rows) {
    csv << row.rho1 << ',' << row.C1 << ',' << (row.feasible() ? 1 : 0) << ',';
    if (row.report) {
      const FeasibilityReport& r = *row.report;
      csv << r.worst_relative_residual() << ',' << r.subsolution_margins[0] << ','
          << r.subsolution_margins[1] << ',' << r.admissibility_margins[0] << ','
          << r.admissibility_margins[1] << ',';
    } else {
      csv << "nan,nan,nan,nan,nan,";
    }
    if (row.feasible() && row.action_coefficient) csv << *row.action_coefficient;
    csv << '\n';
  }
  if (!g.out.empty()) {
    fs::create_directories(g.out);
    std::ofstream f(fs::path(g.out) / "scan.csv");
    if (!f) throw ConfigError("--out", "cannot write scan.csv");
    f << csv.str();
    const auto feasible = std::count_if(rows.begin(), rows.end(), [](const ScanRow& r) {
      return r.feasible();
    });
    out << "wrote " << (fs::path(g.out) / "scan.csv").string() << " (" << rows.size()
        << " rows, " << feasible << " feasible)\n";
  } else {
    out << csv.str();
  }
  return kExitPass;
}

int cmd_figures(const GlobalOptions& g, int samples, std::ostream& out) {
  const RunConfig cfg = resolve(g);
  if (samples < 2) throw ConfigError("--samples", "need at least 2 samples");
  const fs::path dir = cfg.output_dir;
  fs::create_directories(dir);

  const PiecewiseSolution planar = build_1d_solution(cfg.data, cfg.T);
  std::optional<PiecewiseSolution> glued;
  if (cfg.subsolution) {
    glued = build_glued_solution(cfg.data, *cfg.subsolution, cfg.T0, cfg.T, cfg.tolerances);
  }
  const PiecewiseSolution& ex = glued ? *glued : planar;
  const PiecewiseSolution* pair[] = {&ex, &planar};
  const ActionWindow window{cfg.L1, cfg.L2.value_or(outer_extent(pair, cfg.T)), cfg.T};

  {
    std::ofstream f = open_csv(dir / "figure1_lines.csv");
    f << "solution,slab,index,kind,family,t_begin,t_end,y_begin,y_end,speed,dt_dy\n";
    for (const auto& [label, sol] : {std::pair{"ex", &ex}, std::pair{"1d", &planar}}) {
      for (std::size_t s = 0; s < sol->slabs.size(); ++s) {
        const Slab& slab = sol->slabs[s];
        const double t_end = std::min(slab.t_end, cfg.T);
        for (std::size_t i = 0; i < slab.boundaries.size(); ++i) {
          const Boundary& b = slab.boundaries[i];
          f << label << ',' << s << ',' << i << ',' << to_string(b.kind) << ',' << b.family << ','
            << slab.t_begin << ',' << t_end << ',' << b.line.at(slab.t_begin) << ','
            << b.line.at(t_end) << ',' << b.line.slope << ',';
          if (b.line.slope == 0.0) {
            f << "inf";
          } else {
            f << 1.0 / b.line.slope;
          }
          f << '\n';
        }
      }
    }
  }
  write_json(dir / "figure1_regions.json", Json{{"ex", to_json(ex)}, {"1d", to_json(planar)}});

  const ActionProfile pa = action_profile(ex, window);
  const ActionProfile pb = action_profile(planar, window);
  const CumulativeAction ca = cumulative_action(pa);
  const CumulativeAction cb = cumulative_action(pb);
  {
    std::ofstream f = open_csv(dir / "figure2_profiles.csv");
    f << "t,A_1d,A_tilde_1d,A_ex,A_tilde_ex\n";
    for (int i = 0; i < samples; ++i) {
      const double t = cfg.T * i / (samples - 1);
      f << t << ',' << pb.at(t) << ',' << cb.at(t) << ',' << pa.at(t) << ',' << ca.at(t) << '\n';
    }
  }
  const ActionComparison cmp = compare(ex, planar, window);
  write_json(dir / "figure2_breakpoints.json",
             Json{{"window", {{"L1", window.L1}, {"L2", window.L2}, {"T", window.T}}},
                  {"T0", cfg.T0},
                  {"ex", {{"A", to_json(pa)}, {"A_tilde", to_json(ca)}}},
                  {"1d", {{"A", to_json(pb)}, {"A_tilde", to_json(cb)}}},
                  {"comparison", to_json(cmp)}});

  for (const char* name : {"figure1_lines.csv", "figure1_regions.json", "figure2_profiles.csv",
                           "figure2_breakpoints.json"}) {
    out << "wrote " << (dir / name).string() << '\n';
  }
  out << "crossings of A_tilde_ex - A_tilde_1d in (0, T):";
  for (double t : cmp.crossing_times) out << ' ' << fmt(t);
  out << '\n';
  return kExitPass;
}

}  // namespace

VerifyOutcome run_verify(const RunConfig& cfg, std::optional<QuadratureGrid> grid) {
  return Verifier(cfg, grid).run();
}

std::pair<int, int> parse_grid(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) throw ConfigError("--grid", "expected NxM, got '" + text + "'");
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const int a = std::stoi(text.substr(0, x), &used_a);
    const int b = std::stoi(text.substr(x + 1), &used_b);
    if (used_a != x || used_b != text.size() - x - 1 || a < 1 || b < 1) throw std::invalid_argument("");
    return {a, b};
  } catch (const std::exception&) {
    throw ConfigError("--grid", "expected positive integers NxM, got '" + text + "'");
  }
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ConfigError("range", "expected lo:hi, got '" + text + "'");
  try {
    return {eval_const_expr(text.substr(0, colon)), eval_const_expr(text.substr(colon + 1))};
  } catch (const ParseError& e) {
    throw ConfigError("range", e.what());
  }
}

State parse_state_triple(const std::string& text) {
  std::vector<double> values;
  std::size_t start = 0;
  try {
    for (;;) {
      const auto comma = text.find(',', start);
      values.push_back(eval_const_expr(text.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  } catch (const ParseError& e) {
    throw ConfigError("state", e.what());
  }
  if (values.size() != 3) throw ConfigError("state", "expected rho,u,v, got '" + text + "'");
  State s{values[0], values[1], values[2]};
  try {
    s.validate();
  } catch (const DomainError& e) {
    throw ConfigError("state", e.what());
  }
  return s;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Riemann fans, fan subsolutions and action comparison for barotropic Euler"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--config", g.config, "Run configuration (JSON); default: built-in fixture");
  app.add_option("--out", g.out, "Output directory");
  app.add_option("--tol", g.tol, "Absolute residual tolerance");
  app.add_option("--grid", g.grid, "Grid NxM (quadrature for verify, rho1 x C1 for scan)");
  app.add_flag("--json", g.json, "Print JSON instead of text");

  auto* verify = app.add_subcommand("verify", "Run the full verification pipeline");
  verify->fallthrough();

  RiemannOptions ro;
  auto* riemann = app.add_subcommand("riemann", "Solve a planar Riemann problem");
  riemann->fallthrough();
  riemann->add_option("--left", ro.left, "Left state rho,u,v");
  riemann->add_option("--right", ro.right, "Right state rho,u,v");
  riemann->add_option("--interface", ro.interface, "Wedge interface at t = T0")
      ->check(CLI::IsMember({"left", "right"}));
  riemann->add_option("--csv", ro.csv, "Write the self-similar profile (xi,rho,u,v)");

  SubsolutionOptions so;
  auto* subsolution = app.add_subcommand("subsolution", "Check, solve or scan fan subsolutions");
  subsolution->fallthrough();
  subsolution->add_option("mode", so.mode, "check | solve | scan")
      ->required()
      ->check(CLI::IsMember({"check", "solve", "scan"}));
  subsolution->add_option("--perturb", so.perturb, "Relative seed perturbation for solve");
  subsolution->add_option("--rho1", so.rho1, "rho1 range lo:hi for scan");
  subsolution->add_option("--C1", so.C1, "C1 range lo:hi for scan");

  int samples = 201;
  auto* figures = app.add_subcommand("figures", "Emit y-t line data and action profiles");
  figures->fallthrough();
  figures->add_option("--samples", samples, "Samples per profile curve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitConfigError;
  }

  try {
    if (verify->parsed()) return cmd_verify(g, out);
    if (riemann->parsed()) return cmd_riemann(g, ro, out);
    if (subsolution->parsed()) return cmd_subsolution(g, so, out);
    return cmd_figures(g, samples, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const DegenerateInputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const InfeasibleError& e) {
    err << "infeasible subsolution: " << e.what() << '\n';
    return kExitClaimFailed;
  } catch (const HorizonError& e) {
    err << "horizon: " << e.what() << '\n';
    return kExitClaimFailed;
  } catch (const SolverError& e) {
    err << "solver failure: " << e.what() << '\n';
    return kExitSolverFailure;
  } catch (const fs::filesystem_error& e) {
    err << "output error: " << e.what() << '\n';
    return kExitConfigError;
  }
}

}  // namespace eulerfan::cli
