#include "eulerfan/action.hpp"

#include <algorithm>
#include <array>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <string>

#include "eulerfan/errors.hpp"

namespace eulerfan {

namespace {

constexpr double kRarefactionTolerance = 1e-10;

void require_window_fits(const PiecewiseSolution& solution, const ActionWindow& window) {
  window.validate();
  if (solution.slabs.empty()) throw DomainError("empty solution");
  if (window.T > solution.horizon) {
    throw HorizonError("action window T = " + std::to_string(window.T) +
                       " extends past the first wave interaction at t = " +
                       std::to_string(solution.horizon));
  }
  if (window.T > solution.t_end() * (1.0 + 1e-14)) {
    throw DomainError("action window T = " + std::to_string(window.T) +
                      " extends past the solution's final time " +
                      std::to_string(solution.t_end()));
  }
}

double clip(double y, double L2) { return std::clamp(y, -L2, L2); }

// Sub-intervals of [t_lo, t_hi] on which no boundary crosses |y| = L2.
std::vector<double> breakpoints(const Slab& slab, double t_lo, double t_hi, double L2) {
  std::vector<double> times{t_lo, t_hi};
  for (const Boundary& b : slab.boundaries) {
    if (b.line.slope == 0.0) continue;
    for (double edge : {-L2, L2}) {
      const double t = b.line.t_anchor + (edge - b.line.y_anchor) / b.line.slope;
      if (t > t_lo && t < t_hi) times.push_back(t);
    }
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return times;
}

double left_of(const Slab& slab, std::size_t region, double t, double L2) {
  return region == 0 ? -L2 : clip(slab.boundaries[region - 1].line.at(t), L2);
}
double right_of(const Slab& slab, std::size_t region, double t, double L2) {
  return region == slab.boundaries.size() ? L2 : clip(slab.boundaries[region].line.at(t), L2);
}

// Integral over xi of the action density across a rarefaction interior.
double fan_xi_integral(const EosParams& eos, const WaveFan& fan, double xi_lo, double xi_hi) {
  if (!(xi_hi > xi_lo)) return 0.0;
  auto density = [&](double xi) { return action_density(eos, sample_xi(fan, xi)); };
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      density, xi_lo, xi_hi, 15, kRarefactionTolerance);
}

// Position of a region relative to the window on an interval where no
// boundary crosses |y| = L2.
enum class Coverage { Inside, Outside, Partial };

Coverage coverage(const Slab& slab, std::size_t region, double t_mid, double L2) {
  const double lo = region == 0 ? -std::numeric_limits<double>::infinity()
                                : slab.boundaries[region - 1].line.at(t_mid);
  const double hi = region == slab.boundaries.size() ? std::numeric_limits<double>::infinity()
                                                     : slab.boundaries[region].line.at(t_mid);
  if (lo >= L2 || hi <= -L2) return Coverage::Outside;
  if (lo >= -L2 && hi <= L2) return Coverage::Inside;
  return Coverage::Partial;
}

struct FanRegionData {
  const WaveFan* fan;
  double xi_integral;
};

// For a rarefaction interior: the fan and its xi-integral of the action
// density between the region's edges.
FanRegionData fan_region(const EosParams& eos, const Slab& slab, std::size_t region,
                         const FanInterior& interior) {
  const double xi_lo = slab.boundaries[region - 1].line.slope;
  const double xi_hi = slab.boundaries[region].line.slope;
  return {interior.fan.get(), fan_xi_integral(eos, *interior.fan, xi_lo, xi_hi)};
}

[[noreturn]] void clipped_fan_error(double t) {
  throw DomainError("rarefaction fan crosses |y| = L2 near t = " + std::to_string(t) +
                    "; enlarge L2 to contain every fan");
}

// Spatial action A(t) of one slab, evaluated with that slab's geometry
// (so the value at a seam is the one-sided limit from inside the slab).
double slab_action_at(const EosParams& eos, const Slab& slab, double t, double t_mid,
                      const ActionWindow& w) {
  double sum = 0.0;
  for (std::size_t r = 0; r < slab.regions.size(); ++r) {
    const RegionPayload& payload = slab.regions[r];
    if (const auto* interior = std::get_if<FanInterior>(&payload)) {
      const Coverage c = coverage(slab, r, t_mid, w.L2);
      if (c == Coverage::Outside) continue;
      if (c == Coverage::Partial) clipped_fan_error(t_mid);
      const FanRegionData fan = fan_region(eos, slab, r, *interior);
      sum += (t - fan.fan->center.t) * fan.xi_integral;
      continue;
    }
    const double width = std::max(0.0, right_of(slab, r, t, w.L2) - left_of(slab, r, t, w.L2));
    const RegionState rs = std::holds_alternative<Classical>(payload)
                               ? RegionState{std::get<Classical>(payload)}
                               : RegionState{std::get<Wild>(payload)};
    sum += region_action_density(eos, rs) * width;
  }
  return 2.0 * w.L1 * sum;
}

}  // namespace

void ActionWindow::validate() const {
  if (!(L1 > 0.0) || !(L2 > 0.0) || !(T > 0.0)) {
    throw DomainError("action window requires L1, L2, T > 0");
  }
}

double region_action_density(const EosParams& eos, const RegionState& rs) {
  return std::visit(
      [&](const auto& r) -> double {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Classical>) {
          return action_density(eos, r.state);
        } else {
          return 0.5 * r.rho1 * r.C1 - pressure_potential(eos, r.rho1);
        }
      },
      rs);
}

double ActionProfile::at(double t) const {
  if (segments.empty()) return 0.0;
  for (const auto& s : segments) {
    if (t >= s.t_begin && t < s.t_end) return s.at(t);
  }
  return t < segments.front().t_begin ? segments.front().value_begin
                                      : segments.back().at(std::min(t, segments.back().t_end));
}

double ActionProfile::integral() const {
  double sum = 0.0;
  for (const auto& s : segments) sum += 0.5 * (s.value_begin + s.value_end) * (s.t_end - s.t_begin);
  return sum;
}

std::vector<std::pair<double, double>> ActionProfile::jumps(double threshold) const {
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 1; i < segments.size(); ++i) {
    const double jump = segments[i].value_begin - segments[i - 1].value_end;
    if (std::abs(jump) > threshold) out.emplace_back(segments[i].t_begin, jump);
  }
  return out;
}

double CumulativeAction::at(double t) const {
  if (segments.empty()) return 0.0;
  for (const auto& s : segments) {
    if (t >= s.t_begin && t <= s.t_end) return s.at(t);
  }
  return t < segments.front().t_begin ? 0.0 : segments.back().at(segments.back().t_end);
}

double action_closed_form(const PiecewiseSolution& solution, const ActionWindow& w) {
  require_window_fits(solution, w);
  const EosParams& eos = solution.eos;
  double total = 0.0;
  for (const Slab& slab : solution.slabs) {
    const double t_lo = slab.t_begin;
    const double t_hi = std::min(slab.t_end, w.T);
    if (!(t_hi > t_lo)) continue;
    const std::vector<double> times = breakpoints(slab, t_lo, t_hi, w.L2);
    for (std::size_t r = 0; r < slab.regions.size(); ++r) {
      const RegionPayload& payload = slab.regions[r];
      if (const auto* interior = std::get_if<FanInterior>(&payload)) {
        double value = 0.0;
        for (std::size_t k = 0; k + 1 < times.size(); ++k) {
          const double ta = times[k];
          const double tz = times[k + 1];
          const Coverage c = coverage(slab, r, 0.5 * (ta + tz), w.L2);
          if (c == Coverage::Outside) continue;
          if (c == Coverage::Partial) clipped_fan_error(0.5 * (ta + tz));
          const FanRegionData fan = fan_region(eos, slab, r, *interior);
          const double t0 = fan.fan->center.t;
          // int_{ta}^{tz} (t - t0) dt times the xi-integral.
          value += 0.5 * ((tz - t0) * (tz - t0) - (ta - t0) * (ta - t0)) * fan.xi_integral;
        }
        total += value;
        continue;
      }
      // Area of the clipped trapezoid(s) between the region's boundary lines.
      double area = 0.0;
      for (std::size_t k = 0; k + 1 < times.size(); ++k) {
        const double ta = times[k];
        const double tz = times[k + 1];
        const double wa = std::max(0.0, right_of(slab, r, ta, w.L2) - left_of(slab, r, ta, w.L2));
        const double wz = std::max(0.0, right_of(slab, r, tz, w.L2) - left_of(slab, r, tz, w.L2));
        area += 0.5 * (wa + wz) * (tz - ta);
      }
      const RegionState rs = std::holds_alternative<Classical>(payload)
                                 ? RegionState{std::get<Classical>(payload)}
                                 : RegionState{std::get<Wild>(payload)};
      total += region_action_density(eos, rs) * area;
    }
  }
  return 2.0 * w.L1 * total;
}

double action_quadrature(const PiecewiseSolution& solution, const ActionWindow& w, int nt,
                         int ny) {
  require_window_fits(solution, w);
  if (nt < 1 || ny < 1) throw DomainError("quadrature grid sizes must be positive");
  const double dt = w.T / nt;
  const double dy = 2.0 * w.L2 / ny;
  double total = 0.0;
  for (int i = 0; i < nt; ++i) {
    const double t = (i + 0.5) * dt;
    double row = 0.0;
    for (int j = 0; j < ny; ++j) {
      const double y = -w.L2 + (j + 0.5) * dy;
      row += region_action_density(solution.eos, evaluate(solution, t, y));
    }
    total += row;
  }
  return 2.0 * w.L1 * total * dt * dy;
}

ActionProfile action_profile(const PiecewiseSolution& solution, const ActionWindow& w) {
  require_window_fits(solution, w);
  ActionProfile profile;
  for (const Slab& slab : solution.slabs) {
    const double t_lo = slab.t_begin;
    const double t_hi = std::min(slab.t_end, w.T);
    if (!(t_hi > t_lo)) continue;
    const std::vector<double> times = breakpoints(slab, t_lo, t_hi, w.L2);
    for (std::size_t k = 0; k + 1 < times.size(); ++k) {
      const double ta = times[k];
      const double tz = times[k + 1];
      const double mid = 0.5 * (ta + tz);
      profile.segments.push_back(ProfileSegment{ta, tz,
                                                slab_action_at(solution.eos, slab, ta, mid, w),
                                                slab_action_at(solution.eos, slab, tz, mid, w)});
    }
  }
  return profile;
}

CumulativeAction cumulative_action(const ActionProfile& profile) {
  CumulativeAction out;
  double base = 0.0;
  for (const auto& s : profile.segments) {
    out.segments.push_back(CumulativeSegment{s.t_begin, s.t_end, base, s.value_begin, s.slope()});
    base += 0.5 * (s.value_begin + s.value_end) * (s.t_end - s.t_begin);
  }
  return out;
}

const char* to_string(ActionOrdering ordering) noexcept {
  switch (ordering) {
    case ActionOrdering::FirstLower:
      return "first-lower";
    case ActionOrdering::SecondLower:
      return "second-lower";
    case ActionOrdering::Equal:
      return "equal";
  }
  return "unknown";
}

namespace {

const ProfileSegment& segment_at(const ActionProfile& p, double t) {
  for (const auto& s : p.segments) {
    if (t >= s.t_begin && t <= s.t_end) return s;
  }
  return p.segments.back();
}

// Roots d in (0, length] of base + rate d + curvature/2 d^2.
std::vector<double> quadratic_roots(double base, double rate, double curvature, double length) {
  std::vector<double> roots;
  const double a = 0.5 * curvature;
  if (a == 0.0) {
    if (rate != 0.0) roots.push_back(-base / rate);
  } else {
    const double disc = rate * rate - 4.0 * a * base;
    if (disc >= 0.0) {
      const double sq = std::sqrt(disc);
      const double q = -0.5 * (rate + std::copysign(sq, rate));
      if (q != 0.0) {
        roots.push_back(q / a);
        roots.push_back(base / q);
      } else {
        roots.push_back(0.0);
      }
    }
  }
  std::vector<double> inside;
  for (double d : roots) {
    if (d > 0.0 && d <= length) inside.push_back(d);
  }
  return inside;
}

}  // namespace

ActionComparison compare(const PiecewiseSolution& first, const PiecewiseSolution& second,
                         const ActionWindow& w) {
  ActionComparison out;
  const ActionProfile pa = action_profile(first, w);
  const ActionProfile pb = action_profile(second, w);
  const CumulativeAction ca = cumulative_action(pa);
  const CumulativeAction cb = cumulative_action(pb);
  out.action_first = action_closed_form(first, w);
  out.action_second = action_closed_form(second, w);
  out.difference = out.action_first - out.action_second;
  const double scale = std::max({std::abs(out.action_first), std::abs(out.action_second), 1.0});
  if (std::abs(out.difference) <= 1e-12 * scale) {
    out.ordering = ActionOrdering::Equal;
  } else {
    out.ordering = out.difference < 0.0 ? ActionOrdering::FirstLower : ActionOrdering::SecondLower;
  }

  std::vector<double> cuts;
  for (const auto& s : pa.segments) cuts.push_back(s.t_begin), cuts.push_back(s.t_end);
  for (const auto& s : pb.segments) cuts.push_back(s.t_begin), cuts.push_back(s.t_end);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const double zero_scale = 1e-12 * scale;
  const double edge = 1e-12 * w.T;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double a = cuts[k];
    const double b = cuts[k + 1];
    const double mid = 0.5 * (a + b);
    const ProfileSegment& sa = segment_at(pa, mid);
    const ProfileSegment& sb = segment_at(pb, mid);
    const double base = ca.at(a) - cb.at(a);
    const double rate = sa.at(a) - sb.at(a);
    const double curvature = sa.slope() - sb.slope();
    if (std::abs(base) <= zero_scale && std::abs(rate) * (b - a) <= zero_scale &&
        std::abs(curvature) * (b - a) * (b - a) <= zero_scale) {
      continue;  // identical on this piece
    }
    for (double d : quadratic_roots(base, rate, curvature, b - a)) {
      const double t = a + d;
      if (t <= edge || t >= w.T - edge) continue;
      const bool duplicate =
          std::any_of(out.crossing_times.begin(), out.crossing_times.end(),
                      [&](double other) { return std::abs(other - t) <= 1e-10; });
      if (!duplicate) out.crossing_times.push_back(t);
    }
  }
  std::sort(out.crossing_times.begin(), out.crossing_times.end());
  return out;
}

ActionReport action_report(const PiecewiseSolution& solution, const ActionWindow& window,
                           std::optional<QuadratureGrid> grid) {
  ActionReport report;
  const PiecewiseSolution* one[] = {&solution};
  const double extent = outer_extent(one, window.T);
  if (window.L2 < extent) {
    report.warnings.push_back("L2 = " + std::to_string(window.L2) +
                              " is below the outer extent " + std::to_string(extent) +
                              "; regions are clipped");
  }
  report.value_closed_form = action_closed_form(solution, window);
  if (grid) report.value_quadrature = action_quadrature(solution, window, grid->nt, grid->ny);
  report.profile = action_profile(solution, window);
  report.cumulative = cumulative_action(report.profile);
  report.coefficient = report.value_closed_form / (window.T * window.T);
  return report;
}

}  // namespace eulerfan
