#include "collapsim/experiments.hpp"

#include "collapsim/diffusion.hpp"
#include "collapsim/doubling_map.hpp"
#include "collapsim/errors.hpp"
#include "collapsim/multi_particle.hpp"
#include "collapsim/parallel.hpp"

#include <cmath>
#include <numbers>

namespace collapsim {

namespace {

void require_scenario(const ScenarioConfig& config, ScenarioKind kind)
{
    if (config.scenario != kind)
        throw InvalidArgument("configuration is for scenario " +
                              std::string(to_string(config.scenario)) + ", expected " +
                              std::string(to_string(kind)));
    config.validate();
}

} // namespace

ExperimentReport run_two_atom(const ScenarioConfig& config)
{
    require_scenario(config, ScenarioKind::two_atom);
    const double x0 = to_diffusion(config.initial_amplitudes)[0];

    auto trials = parallel_map<TrialResult>(config.n_trials, [&](std::size_t i) {
        Rng rng = trial_stream(config.master_seed, i);
        const auto rec = run_to_absorption(x0, config.params, rng);
        TrialResult r;
        // Basis order is (A excited, B excited); endpoint 1 is A.
        if (rec.absorbed())
            r.outcome = rec.endpoint() == 1 ? 0u : 1u;
        r.time = rec.absorption_time;
        return r;
    });
    return assemble_report(config, trials);
}

ExperimentReport run_three_atom_scenario(const ScenarioConfig& config)
{
    require_scenario(config, ScenarioKind::three_atom);
    const auto coords = to_diffusion(config.initial_amplitudes);
    auto report = outcome_distribution_mc(coords[0], coords[1], config.n_trials,
                                          config.params, config.master_seed);
    report.config = config;
    return report;
}

std::array<double, 3> random_direction(Rng& rng)
{
    NormalSource normals(rng);
    for (;;) {
        std::array<double, 3> v{normals(), normals(), normals()};
        const double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        if (len > 1e-12) {
            for (auto& c : v)
                c /= len;
            return v;
        }
    }
}

ExperimentReport run_one_atom(const ScenarioConfig& config)
{
    require_scenario(config, ScenarioKind::one_atom);
    const double x0 = config.initial_amplitudes.probabilities()[1];
    RunOptions options;
    options.pump_rate = config.pump_rate;

    struct OneAtomTrial {
        TrialResult result;
        std::optional<EscapeEvent> escape;
    };
    auto trials = parallel_map<OneAtomTrial>(config.n_trials, [&](std::size_t i) {
        Rng rng = trial_stream(config.master_seed, i);
        const auto rec = run_to_absorption(x0, config.params, rng, options);
        OneAtomTrial t;
        t.result.time = rec.absorption_time;
        if (rec.absorbed()) {
            // Basis order is (photon free, excited).
            t.result.outcome = rec.endpoint() == 1 ? 1u : 0u;
            if (rec.endpoint() == 0)
                t.escape = EscapeEvent{random_direction(rng), rec.absorption_time};
        }
        return t;
    });

    std::vector<TrialResult> results;
    results.reserve(trials.size());
    EscapeSummary escape;
    for (const auto& t : trials) {
        results.push_back(t.result);
        if (t.escape) {
            ++escape.count;
            for (int k = 0; k < 3; ++k)
                escape.mean_direction[k] += t.escape->direction[k];
        }
    }
    if (escape.count > 0) {
        for (auto& c : escape.mean_direction)
            c /= static_cast<double>(escape.count);
        escape.mean_direction_norm = std::sqrt(escape.mean_direction[0] * escape.mean_direction[0] +
                                               escape.mean_direction[1] * escape.mean_direction[1] +
                                               escape.mean_direction[2] * escape.mean_direction[2]);
    }

    auto report = assemble_report(config, results);
    report.escape = escape;
    return report;
}

ExperimentReport run_scenario(const ScenarioConfig& config)
{
    switch (config.scenario) {
    case ScenarioKind::one_atom: return run_one_atom(config);
    case ScenarioKind::two_atom: return run_two_atom(config);
    case ScenarioKind::three_atom: return run_three_atom_scenario(config);
    }
    throw InvalidArgument("unknown scenario");
}

CasimirSweep run_casimir_sweep(const ScenarioConfig& base, std::span<const double> intensities)
{
    require_scenario(base, ScenarioKind::two_atom);
    if (intensities.empty())
        throw InvalidArgument("intensity sweep needs at least one intensity");
    for (double i : intensities)
        if (!(i > 0.0) || !std::isfinite(i))
            throw DomainError("sweep intensities must be positive");

    CasimirSweep sweep;
    const double horizon = base.params.max_time * base.params.intensity;
    for (double intensity : intensities) {
        ScenarioConfig config = base;
        config.params.intensity = intensity;
        config.params.max_time = horizon / intensity;
        sweep.points.push_back({intensity, run_two_atom(config)});
    }

    sweep.monotone_decreasing = true;
    const auto& ref = sweep.points.front();
    const double ref_scaled = ref.intensity * ref.report.absorption_time.mean;
    for (const auto& p : sweep.points) {
        const double scaled = p.intensity * p.report.absorption_time.mean;
        if (ref_scaled > 0.0)
            sweep.max_scaling_deviation =
                std::max(sweep.max_scaling_deviation, std::abs(scaled / ref_scaled - 1.0));
        for (const auto& q : sweep.points)
            if (p.intensity < q.intensity &&
                !(p.report.absorption_time.mean > q.report.absorption_time.mean))
                sweep.monotone_decreasing = false;
    }
    return sweep;
}

BornExactReport run_born_exact(double x0, std::uint64_t trials, std::uint64_t seed,
                               int max_steps)
{
    if (!(x0 >= 0.0 && x0 <= 1.0))
        throw DomainError("x0 must lie in [0, 1]");
    if (trials < 1)
        throw InvalidArgument("trials must be at least 1");
    if (max_steps < 1)
        throw InvalidArgument("max_steps must be at least 1");

    BornExactReport rep;
    rep.x0 = x0;
    rep.exact = exact_hit_probability(x0);
    rep.trials = trials;
    rep.seed = seed;
    const auto endpoints = parallel_map<unsigned char>(trials, [&](std::size_t i) {
        Rng rng = trial_stream(seed, i);
        return static_cast<unsigned char>(run_doubling_chain(x0, rng, max_steps));
    });
    for (auto e : endpoints)
        rep.hits += e;
    rep.empirical = static_cast<double>(rep.hits) / static_cast<double>(trials);
    rep.ci = wilson_interval(rep.hits, trials, 0.997);
    rep.exact_within_interval = rep.ci.low <= rep.exact && rep.exact <= rep.ci.high;
    return rep;
}

KickDemoReport run_kick_demo(double x0, const KickChainParams& chain, std::uint64_t trials,
                             std::uint64_t seed, int table_points)
{
    if (!(x0 >= 0.0 && x0 <= 1.0))
        throw DomainError("x0 must lie in [0, 1]");
    if (trials < 1)
        throw InvalidArgument("trials must be at least 1");
    if (table_points < 1)
        throw InvalidArgument("table needs at least one point");

    constexpr double e0 = -0.5;
    constexpr double e1 = -0.125;
    KickDemoReport rep;
    rep.x0 = x0;
    rep.chain = chain;
    rep.trials = trials;
    rep.seed = seed;
    const double half_pi = 0.5 * std::numbers::pi;
    for (int k = 1; k <= table_points; ++k) {
        const KickAngle phi(half_pi * k / (table_points + 1));
        const auto joint = joint_state_after_kick(phi, e0, e1);
        rep.table.push_back({phi.value(), kick_theta(phi), std::norm(joint.amp_10),
                             total_energy(joint), projection_consistency(phi)});
    }

    const auto runs = parallel_map<KickChainResult>(trials, [&](std::size_t i) {
        Rng rng = trial_stream(seed, i);
        return run_kick_chain(x0, chain, rng);
    });
    double kicks = 0.0;
    for (const auto& r : runs) {
        if (r.endpoint < 0)
            ++rep.unresolved;
        else
            rep.hits += static_cast<std::uint64_t>(r.endpoint);
        kicks += static_cast<double>(r.kicks);
    }
    rep.mean_kicks = kicks / static_cast<double>(trials);
    rep.ci = wilson_interval(rep.hits, trials, 0.95);
    return rep;
}

} // namespace collapsim
