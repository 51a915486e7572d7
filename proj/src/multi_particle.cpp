#include "collapsim/multi_particle.hpp"

#include "collapsim/errors.hpp"
#include "collapsim/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace collapsim {

double settle(double x, double epsilon)
{
    if (x < epsilon)
        return 0.0;
    if (x > 1.0 - epsilon)
        return 1.0;
    return x;
}

bool particle_absorbed(double x) { return x == 0.0 || x == 1.0; }

PairState resolve_collision(PairState state, const PairOptions& options)
{
    if (state.merged || state.x1 < state.x2)
        return state;
    double at = 0.5 * (state.x1 + state.x2);
    if (options.merge_point == MergePoint::lower)
        at = state.x2;
    else if (options.merge_point == MergePoint::upper)
        at = state.x1;
    state.x1 = state.x2 = at;
    state.merged = true;
    return state;
}

namespace {

// Stepping kernel with the noise scale hoisted out of the trial loop.
struct PairKernel {
    double scale;
    double epsilon;
    double dt;
    PairOptions options;

    PairKernel(const DiffusionParams& params, const PairOptions& opts)
        : scale(std::sqrt(2.0 * params.intensity * params.dt)),
          epsilon(params.epsilon),
          dt(params.dt),
          options(opts)
    {
    }

    double move(double x, double g) const
    {
        if (particle_absorbed(x))
            return x;
        return std::clamp(x + scale * std::sqrt(x * (1.0 - x)) * g, 0.0, 1.0);
    }

    template <class Draw>
    PairState step(PairState s, Draw&& draw) const
    {
        if (s.merged) {
            const double x = settle(move(s.x1, draw()), epsilon);
            s.x1 = s.x2 = x;
        } else {
            if (!particle_absorbed(s.x1))
                s.x1 = move(s.x1, draw());
            if (!particle_absorbed(s.x2))
                s.x2 = move(s.x2, draw());
            s = resolve_collision(s, options);
            s.x1 = settle(s.x1, epsilon);
            s.x2 = settle(s.x2, epsilon);
        }
        ++s.steps;
        s.t = static_cast<double>(s.steps) * dt;
        return s;
    }
};

bool both_absorbed(const PairState& s)
{
    return particle_absorbed(s.x1) && particle_absorbed(s.x2);
}

} // namespace

PairState pair_step(const PairState& state, const DiffusionParams& params, double g1,
                    double g2, const PairOptions& options)
{
    if (both_absorbed(state))
        throw TerminalStateError("pair_step called with both particles absorbed");
    const PairKernel kernel(params, options);
    const double draws[2] = {g1, g2};
    int next = 0;
    // A merged pair, or a pair whose first particle is absorbed, consumes
    // only one draw; keep g1/g2 tied to particle 1/2 in the unmerged case.
    if (!state.merged && particle_absorbed(state.x1))
        next = 1;
    return kernel.step(state, [&] { return draws[next++]; });
}

PairState pair_step(const PairState& state, const DiffusionParams& params,
                    NormalSource& normals, const PairOptions& options)
{
    if (both_absorbed(state))
        throw TerminalStateError("pair_step called with both particles absorbed");
    const PairKernel kernel(params, options);
    return kernel.step(state, normals);
}

ThreeAtomOutcome run_three_atom(double x1, double x2, const DiffusionParams& params,
                                Rng& rng, const PairOptions& options)
{
    if (!(x1 >= 0.0 && x1 <= x2 && x2 <= 1.0))
        throw DomainError("three-atom coordinates need 0 <= x1 <= x2 <= 1");

    const PairKernel kernel(params, options);
    NormalSource normals(rng);
    PairState s{settle(x1, params.epsilon), settle(x2, params.epsilon), false, 0.0, 0};
    s = resolve_collision(s, options);

    const std::uint64_t max_steps = params.max_steps();
    while (!both_absorbed(s)) {
        if (s.steps >= max_steps)
            return {std::nullopt, s.t, s.steps};
        s = kernel.step(s, normals);
    }

    ThreeAtomOutcome out{ThreeAtomLabel::B_excited, s.t, s.steps};
    if (s.x1 == 1.0)
        out.label = ThreeAtomLabel::A_excited;
    else if (s.x2 == 0.0)
        out.label = ThreeAtomLabel::C_excited;
    return out;
}

ExperimentReport outcome_distribution_mc(double x1, double x2, std::uint64_t n_trials,
                                         const DiffusionParams& params,
                                         std::uint64_t master_seed,
                                         const PairOptions& options)
{
    params.validate();
    if (n_trials < 1)
        throw InvalidArgument("n_trials must be at least 1");

    ScenarioConfig config;
    config.scenario = ScenarioKind::three_atom;
    config.initial_amplitudes =
        from_diffusion(DiffusionCoordinates({x1, x2}), three_atom_labels());
    config.params = params;
    config.n_trials = n_trials;
    config.master_seed = master_seed;

    auto trials = parallel_map<TrialResult>(n_trials, [&](std::size_t i) {
        Rng rng = trial_stream(master_seed, i);
        const auto out = run_three_atom(x1, x2, params, rng, options);
        TrialResult r;
        if (out.label)
            r.outcome = static_cast<std::size_t>(*out.label);
        r.time = out.absorption_time;
        return r;
    });
    return assemble_report(config, trials);
}

} // namespace collapsim
