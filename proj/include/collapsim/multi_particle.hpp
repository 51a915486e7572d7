#pragma once

#include "collapsim/diffusion.hpp"
#include "collapsim/random.hpp"
#include "collapsim/scenario.hpp"

#include <cstdint>
#include <optional>

namespace collapsim {

// Two particles on [0, 1] encoding a three-atom state: x1 = |C_1|^2 and
// x2 = |C_1|^2 + |C_2|^2. Once they collide they move as one.
struct PairState {
    double x1 = 0.0;
    double x2 = 0.0;
    bool merged = false;
    double t = 0.0;
    std::uint64_t steps = 0;
};

// Where a collision places the merged particle. Midpoint is the model;
// the alternatives exist to check that outcomes do not depend on it.
enum class MergePoint { midpoint, lower, upper };

struct PairOptions {
    MergePoint merge_point = MergePoint::midpoint;
};

// Snaps positions inside the absorption band onto the endpoint.
double settle(double x, double epsilon);

bool particle_absorbed(double x);

// Applies the collision rule to freshly stepped positions: if x1 >= x2 both
// move to the merge point and the pair is flagged merged.
PairState resolve_collision(PairState state, const PairOptions& options = {});

// Advances every live particle with its own normal draw (g2 is unused once
// merged), resolves collisions and snaps absorbed particles to 0 or 1.
PairState pair_step(const PairState& state, const DiffusionParams& params,
                    double g1, double g2, const PairOptions& options = {});
PairState pair_step(const PairState& state, const DiffusionParams& params,
                    NormalSource& normals, const PairOptions& options = {});

enum class ThreeAtomLabel { A_excited, B_excited, C_excited };

struct ThreeAtomOutcome {
    std::optional<ThreeAtomLabel> label;  // nullopt: unabsorbed at max_time
    double absorption_time = 0.0;
    std::uint64_t steps = 0;
};

// Both particles at 1 -> A, split -> B, both at 0 -> C.
ThreeAtomOutcome run_three_atom(double x1, double x2, const DiffusionParams& params,
                                Rng& rng, const PairOptions& options = {});

// Monte Carlo over n_trials independent pairs using per-trial streams.
ExperimentReport outcome_distribution_mc(double x1, double x2, std::uint64_t n_trials,
                                         const DiffusionParams& params,
                                         std::uint64_t master_seed,
                                         const PairOptions& options = {});

} // namespace collapsim
