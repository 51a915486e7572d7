#pragma once

#include "collapsim/amplitude.hpp"
#include "collapsim/diffusion.hpp"
#include "collapsim/statistics.hpp"

#include <array>
#include <numbers>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace collapsim {

enum class ScenarioKind { one_atom, two_atom, three_atom };

std::string_view to_string(ScenarioKind kind);
ScenarioKind parse_scenario_kind(std::string_view name);

// Basis dimension each scenario expects: 2, 2 and 3.
std::size_t scenario_dimension(ScenarioKind kind);

struct ScenarioConfig {
    ScenarioKind scenario = ScenarioKind::two_atom;
    EntangledAmplitudes initial_amplitudes{{Complex{1.0 / std::numbers::sqrt2}, Complex{1.0 / std::numbers::sqrt2}},
                                           two_atom_labels()};
    DiffusionParams params;
    double pump_rate = 0.0;  // one-atom only
    std::uint64_t n_trials = 10000;
    std::uint64_t master_seed = 1;

    // Throws InvalidArgument on a dimension mismatch or a bad field.
    void validate() const;
};

struct OutcomeTally {
    std::string label;
    std::uint64_t count = 0;
    double frequency = 0.0;
    Interval ci{0.0, 0.0};  // Wilson 95%
};

struct EscapeSummary {
    std::uint64_t count = 0;
    std::array<double, 3> mean_direction{0.0, 0.0, 0.0};
    double mean_direction_norm = 0.0;
};

struct ExperimentReport {
    ScenarioConfig config;
    std::vector<OutcomeTally> outcomes;
    std::uint64_t unabsorbed = 0;
    SampleSummary absorption_time;  // over absorbed trials
    std::optional<EscapeSummary> escape;

    const OutcomeTally& outcome(std::string_view label) const;
};

// Result of one trial: index into the basis labels, or nullopt when the
// trajectory was still running at max_time.
struct TrialResult {
    std::optional<std::size_t> outcome;
    double time = 0.0;
};

// Reduces per-trial results, in trial order, into a report.
ExperimentReport assemble_report(const ScenarioConfig& config,
                                 const std::vector<TrialResult>& trials);

} // namespace collapsim
