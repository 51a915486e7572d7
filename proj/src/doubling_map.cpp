#include "collapsim/doubling_map.hpp"

#include "collapsim/errors.hpp"

namespace collapsim {

namespace {

void check_unit(double x)
{
    if (!(x >= 0.0 && x <= 1.0))
        throw DomainError("doubling chain position must lie in [0, 1]");
}

} // namespace

DoublingChainState doubling_step(const DoublingChainState& state, bool coin)
{
    if (state.status != ChainStatus::running)
        throw TerminalStateError("doubling_step called on an absorbed chain");
    check_unit(state.position);

    DoublingChainState next = state;
    ++next.step_count;
    const double xi = state.position;

    if (xi == 0.0) {
        next.status = ChainStatus::absorbed_at_0;
    } else if (xi == 1.0) {
        next.status = ChainStatus::absorbed_at_1;
    } else if (xi == 0.5) {
        next.status = coin ? ChainStatus::absorbed_at_1 : ChainStatus::absorbed_at_0;
        next.position = coin ? 1.0 : 0.0;
    } else if (xi < 0.5) {
        if (coin) {
            next.position = 2.0 * xi;
        } else {
            next.position = 0.0;
            next.status = ChainStatus::absorbed_at_0;
        }
    } else {
        if (coin) {
            next.position = 1.0;
            next.status = ChainStatus::absorbed_at_1;
        } else {
            next.position = 2.0 * xi - 1.0;
        }
    }
    return next;
}

int run_doubling_chain(double x0, Rng& rng, int max_steps)
{
    check_unit(x0);
    if (max_steps < 1)
        throw InvalidArgument("max_steps must be at least 1");

    DoublingChainState state{x0, 0, ChainStatus::running};
    std::uint64_t coins = 0;
    for (int step = 0; step < max_steps; ++step) {
        if (step % 64 == 0)
            coins = rng();
        state = doubling_step(state, (coins >> (step % 64)) & 1u);
        if (state.status == ChainStatus::absorbed_at_0)
            return 0;
        if (state.status == ChainStatus::absorbed_at_1)
            return 1;
    }
    return uniform01(rng) < state.position ? 1 : 0;
}

double exact_hit_probability(double x0)
{
    check_unit(x0);
    double hit = 0.0;
    double surviving = 1.0;
    double xi = x0;
    while (xi != 0.0) {
        if (xi == 1.0) {
            hit += surviving;
            break;
        }
        surviving *= 0.5;
        if (xi >= 0.5) {
            hit += surviving;
            xi = 2.0 * xi - 1.0;
        } else {
            xi = 2.0 * xi;
        }
    }
    return hit;
}

} // namespace collapsim
