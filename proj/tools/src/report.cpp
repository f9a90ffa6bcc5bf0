#include "eulerfan/cli/report.hpp"

namespace eulerfan::cli {

namespace {

const char* nonlinear_name(NonlinearWave w) {
  switch (w) {
    case NonlinearWave::Shock:
      return "shock";
    case NonlinearWave::Rarefaction:
      return "rarefaction";
    case NonlinearWave::None:
      return "none";
  }
  return "none";
}

Json rh_json(const RhResiduals& r) {
  return Json{{"mass", r.mass}, {"momentum_x", r.momentum_x}, {"momentum_y", r.momentum_y}};
}

Json array_json(const auto& values) {
  Json out = Json::array();
  for (double v : values) out.push_back(v);
  return out;
}

}  // namespace

const char* wave_kind_name(const Wave& w) {
  if (w.is_shock()) return "shock";
  if (w.is_rarefaction()) return "rarefaction";
  return "contact";
}

Json to_json(const State& s) { return Json{{"rho", s.rho}, {"u", s.u}, {"v", s.v}}; }

Json to_json(const Wave& w) {
  Json j{{"family", w.family}, {"kind", wave_kind_name(w)}};
  if (const auto* r = std::get_if<Rarefaction>(&w.kind)) {
    j["head"] = r->head;
    j["tail"] = r->tail;
  } else {
    j["speed"] = w.left_edge();
  }
  j["left"] = to_json(w.left_state);
  j["right"] = to_json(w.right_state);
  return j;
}

Json to_json(const WaveFan& fan) {
  Json waves = Json::array();
  for (const Wave& w : fan.waves) waves.push_back(to_json(w));
  Json states = Json::array();
  for (const State& s : fan.states) states.push_back(to_json(s));
  return Json{{"center", {{"t", fan.center.t}, {"y", fan.center.y}}},
              {"waves", waves},
              {"states", states}};
}

Json to_json(const MiddleState& m) {
  return Json{{"rho", m.rho},
              {"v", m.v},
              {"family1", nonlinear_name(m.family1)},
              {"family3", nonlinear_name(m.family3)},
              {"root_residual", m.root_residual}};
}

Json to_json(const FanSubsolution& s) {
  return Json{{"mu0", s.mu0},   {"mu1", s.mu1},       {"rho1", s.rho1},     {"u1", s.u1},
              {"v1", s.v1},     {"gamma1", s.gamma1}, {"delta1", s.delta1}, {"C1", s.C1}};
}

Json to_json(const FeasibilityReport& r) {
  return Json{{"feasible", r.feasible},
              {"rh_left", rh_json(r.rh_left)},
              {"rh_right", rh_json(r.rh_right)},
              {"rh_left_scale", array_json(r.rh_left_scale)},
              {"rh_right_scale", array_json(r.rh_right_scale)},
              {"worst_relative_residual", r.worst_relative_residual()},
              {"subsolution_margins", array_json(r.subsolution_margins)},
              {"admissibility_margins", array_json(r.admissibility_margins)},
              {"speed_gap", r.speed_gap},
              {"violations", r.violations}};
}

Json to_json(const FamilySolveResult& r) {
  return Json{{"subsolution", to_json(r.sub)},
              {"iterations", r.iterations},
              {"residual_norm", r.residual_norm},
              {"jacobian_condition", r.jacobian_condition}};
}

Json to_json(const RegionPayload& payload) {
  return std::visit(
      [](const auto& p) -> Json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Classical>) {
          return Json{{"type", "classical"}, {"state", to_json(p.state)}};
        } else if constexpr (std::is_same_v<T, Wild>) {
          return Json{{"type", "wild"}, {"rho1", p.rho1}, {"u1", p.u1}, {"v1", p.v1}, {"C1", p.C1}};
        } else {
          return Json{{"type", "rarefaction_fan"},
                      {"center", {{"t", p.fan->center.t}, {"y", p.fan->center.y}}}};
        }
      },
      payload);
}

Json to_json(const PiecewiseSolution& solution) {
  Json slabs = Json::array();
  for (const Slab& slab : solution.slabs) {
    Json boundaries = Json::array();
    for (const Boundary& b : slab.boundaries) {
      boundaries.push_back(Json{{"kind", to_string(b.kind)},
                                {"family", b.family},
                                {"t_anchor", b.line.t_anchor},
                                {"y_anchor", b.line.y_anchor},
                                {"speed", b.line.slope}});
    }
    Json regions = Json::array();
    for (const RegionPayload& r : slab.regions) regions.push_back(to_json(r));
    slabs.push_back(Json{{"t_begin", slab.t_begin},
                         {"t_end", slab.t_end},
                         {"boundaries", boundaries},
                         {"regions", regions}});
  }
  Json j{{"slabs", slabs}, {"horizon", solution.horizon}};
  if (solution.first_interaction) {
    j["first_interaction"] = Json{{"time", solution.first_interaction->time},
                                  {"slab", solution.first_interaction->slab},
                                  {"boundary", solution.first_interaction->boundary}};
  }
  j["x_period"] = solution.x_period;
  return j;
}

Json to_json(const SolutionChecks& checks) {
  Json boundaries = Json::array();
  for (const BoundaryCheck& b : checks.boundaries) {
    boundaries.push_back(Json{{"slab", b.slab},
                              {"index", b.index},
                              {"kind", to_string(b.kind)},
                              {"rh_relative", b.rh_relative},
                              {"energy_margin", b.energy_margin},
                              {"energy_scale", b.energy_scale}});
  }
  Json seams = Json::array();
  for (const SeamCheck& s : checks.seams) {
    seams.push_back(Json{{"time", s.time},
                         {"y_lo", s.y_lo},
                         {"y_hi", s.y_hi},
                         {"energy_drop", s.energy_drop},
                         {"mass_jump", s.mass_jump},
                         {"momentum_jump", s.momentum_jump}});
  }
  return Json{{"boundaries", boundaries},
              {"seams", seams},
              {"worst_rh_relative", checks.worst_rh_relative()},
              {"worst_energy_margin", checks.worst_energy_margin()}};
}

Json to_json(const ActionProfile& profile) {
  Json segments = Json::array();
  for (const ProfileSegment& s : profile.segments) {
    segments.push_back(Json{{"t_begin", s.t_begin},
                            {"t_end", s.t_end},
                            {"A_begin", s.value_begin},
                            {"A_end", s.value_end},
                            {"slope", s.slope()}});
  }
  Json jumps = Json::array();
  for (const auto& [t, jump] : profile.jumps()) jumps.push_back(Json{{"t", t}, {"jump", jump}});
  return Json{{"segments", segments}, {"jumps", jumps}};
}

Json to_json(const CumulativeAction& cumulative) {
  Json segments = Json::array();
  for (const CumulativeSegment& s : cumulative.segments) {
    segments.push_back(Json{{"t_begin", s.t_begin},
                            {"t_end", s.t_end},
                            {"base", s.base},
                            {"rate", s.value_rate},
                            {"curvature", s.curvature}});
  }
  return Json{{"segments", segments}};
}

Json to_json(const ActionComparison& c) {
  return Json{{"action_first", c.action_first},
              {"action_second", c.action_second},
              {"difference", c.difference},
              {"ordering", to_string(c.ordering)},
              {"crossing_times", c.crossing_times}};
}

Json to_json(const ActionReport& r) {
  Json j{{"value_closed_form", r.value_closed_form}};
  j["value_quadrature"] = r.value_quadrature ? Json(*r.value_quadrature) : Json(nullptr);
  j["K"] = r.coefficient;
  j["A_breakpoints"] = to_json(r.profile);
  j["A_tilde"] = to_json(r.cumulative);
  if (r.comparison) j["comparison"] = to_json(*r.comparison);
  j["warnings"] = r.warnings;
  return j;
}

}  // namespace eulerfan::cli
