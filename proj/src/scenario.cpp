#include "collapsim/scenario.hpp"

#include "collapsim/errors.hpp"

namespace collapsim {

std::string_view to_string(ScenarioKind kind)
{
    switch (kind) {
    case ScenarioKind::one_atom: return "one_atom";
    case ScenarioKind::two_atom: return "two_atom";
    case ScenarioKind::three_atom: return "three_atom";
    }
    return "unknown";
}

ScenarioKind parse_scenario_kind(std::string_view name)
{
    if (name == "one_atom")
        return ScenarioKind::one_atom;
    if (name == "two_atom")
        return ScenarioKind::two_atom;
    if (name == "three_atom")
        return ScenarioKind::three_atom;
    throw InvalidArgument("unknown scenario '" + std::string(name) + "'");
}

std::size_t scenario_dimension(ScenarioKind kind)
{
    return kind == ScenarioKind::three_atom ? 3 : 2;
}

void ScenarioConfig::validate() const
{
    if (initial_amplitudes.size() != scenario_dimension(scenario))
        throw InvalidArgument("initial_amplitudes dimension does not match scenario " +
                              std::string(to_string(scenario)));
    params.validate();
    if (!(pump_rate >= 0.0))
        throw DomainError("pump_rate must be nonnegative");
    if (pump_rate != 0.0 && scenario != ScenarioKind::one_atom)
        throw InvalidArgument("pump_rate applies to the one_atom scenario only");
    if (n_trials < 1)
        throw InvalidArgument("n_trials must be at least 1");
}

const OutcomeTally& ExperimentReport::outcome(std::string_view label) const
{
    for (const auto& o : outcomes)
        if (o.label == label)
            return o;
    throw InvalidArgument("report has no outcome '" + std::string(label) + "'");
}

ExperimentReport assemble_report(const ScenarioConfig& config,
                                 const std::vector<TrialResult>& trials)
{
    ExperimentReport report{config, {}, 0, {}, std::nullopt};
    const auto& labels = config.initial_amplitudes.labels();
    std::vector<std::uint64_t> counts(labels.size(), 0);
    std::vector<double> times;
    times.reserve(trials.size());

    for (const auto& t : trials) {
        if (!t.outcome) {
            ++report.unabsorbed;
            continue;
        }
        ++counts.at(*t.outcome);
        times.push_back(t.time);
    }

    const auto n = static_cast<std::uint64_t>(trials.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        OutcomeTally tally;
        tally.label = labels[i];
        tally.count = counts[i];
        if (n > 0) {
            tally.frequency = static_cast<double>(counts[i]) / static_cast<double>(n);
            tally.ci = wilson_interval(counts[i], n, 0.95);
        }
        report.outcomes.push_back(std::move(tally));
    }
    report.absorption_time = summarize(std::move(times));
    return report;
}

} // namespace collapsim
