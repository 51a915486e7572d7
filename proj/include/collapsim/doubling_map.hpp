#pragma once

#include "collapsim/random.hpp"

#include <cstdint>

namespace collapsim {

enum class ChainStatus { running, absorbed_at_0, absorbed_at_1 };

// One particle of the discrete halving argument: from xi < 1/2 the walk
// reaches 0 or 2*xi with equal probability, from xi > 1/2 it reaches 1 or
// 2*xi - 1.
struct DoublingChainState {
    double position = 0.0;
    std::uint64_t step_count = 0;
    ChainStatus status = ChainStatus::running;
};

inline constexpr int kDefaultDoublingSteps = 64;

// Throws TerminalStateError on an absorbed state. Positions 0 and 1 absorb
// regardless of the coin; xi = 1/2 absorbs at the endpoint the coin picks.
DoublingChainState doubling_step(const DoublingChainState& state, bool coin);

// Runs one chain from x0 with fair coins from rng and returns the endpoint
// (0 or 1). A chain still running after max_steps is settled by a single
// Bernoulli(position) draw.
int run_doubling_chain(double x0, Rng& rng, int max_steps = kDefaultDoublingSteps);

// Hit-1 probability summed over the absorbing branches of the chain: every
// step taken from xi >= 1/2 deposits half the surviving mass at 1. For a
// double x0 the branch sum terminates and equals x0 exactly.
double exact_hit_probability(double x0);

} // namespace collapsim
