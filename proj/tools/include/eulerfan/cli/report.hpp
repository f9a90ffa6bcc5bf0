#pragma once

#include <nlohmann/json.hpp>

#include "eulerfan/action.hpp"
#include "eulerfan/riemann.hpp"
#include "eulerfan/spacetime.hpp"
#include "eulerfan/subsolution.hpp"

namespace eulerfan::cli {

// Insertion-ordered so reports are byte-stable.
using Json = nlohmann::ordered_json;

[[nodiscard]] Json to_json(const State& s);
[[nodiscard]] Json to_json(const Wave& w);
[[nodiscard]] Json to_json(const WaveFan& fan);
[[nodiscard]] Json to_json(const MiddleState& m);
[[nodiscard]] Json to_json(const FanSubsolution& sub);
[[nodiscard]] Json to_json(const FeasibilityReport& r);
[[nodiscard]] Json to_json(const FamilySolveResult& r);
[[nodiscard]] Json to_json(const RegionPayload& payload);
/// Slabs with their boundary lines and region payloads.
[[nodiscard]] Json to_json(const PiecewiseSolution& solution);
[[nodiscard]] Json to_json(const SolutionChecks& checks);
[[nodiscard]] Json to_json(const ActionProfile& profile);
[[nodiscard]] Json to_json(const CumulativeAction& cumulative);
[[nodiscard]] Json to_json(const ActionComparison& c);
[[nodiscard]] Json to_json(const ActionReport& r);

[[nodiscard]] const char* wave_kind_name(const Wave& w);

}  // namespace eulerfan::cli
