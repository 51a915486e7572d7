#include "collapsim/fluctuation_kick.hpp"

#include "collapsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace collapsim {

using std::numbers::pi;

KickAngle::KickAngle(double phi) : phi_(phi)
{
    if (!(phi > 0.0 && phi < 0.5 * pi))
        throw DomainError("kick angle must lie in (0, pi/2)");
}

double atom_energy(const AtomAmplitudes& atom, double e0, double e1)
{
    return atom.ground * atom.ground * e0 + atom.excited * atom.excited * e1;
}

std::pair<AtomAmplitudes, AtomAmplitudes> kick_atom_states(KickAngle phi)
{
    const double s = std::sin(phi.value());
    const double c = std::cos(phi.value());
    return {AtomAmplitudes{s, c}, AtomAmplitudes{c, s}};
}

double kick_theta(KickAngle phi)
{
    const double cot = std::cos(phi.value()) / std::sin(phi.value());
    return std::atan(cot * cot);
}

TwoAtomJointState joint_state_after_kick(KickAngle phi, double e0, double e1)
{
    const double theta = kick_theta(phi);
    return {Complex{std::sin(theta)}, Complex{std::cos(theta)}, e0, e1};
}

double projection_consistency(KickAngle phi)
{
    const auto [a, b] = kick_atom_states(phi);
    // Product-state coefficients on |1>_A|0>_B and |0>_A|1>_B.
    const double c10 = a.excited * b.ground;
    const double c01 = a.ground * b.excited;
    const double norm = std::hypot(c10, c01);
    const auto joint = joint_state_after_kick(phi, 0.0, 0.0);
    return std::hypot(std::abs(c10 / norm - joint.amp_10), std::abs(c01 / norm - joint.amp_01));
}

double total_energy(const TwoAtomJointState& state)
{
    return std::norm(state.amp_10) * (state.e1 + state.e0) +
           std::norm(state.amp_01) * (state.e0 + state.e1);
}

double kick_displacement(KickAngle phi)
{
    const double s = std::sin(kick_theta(phi));
    return s * s - 0.5;
}

KickChainResult run_kick_chain(double x0, const KickChainParams& params, Rng& rng)
{
    if (!(x0 >= 0.0 && x0 <= 1.0))
        throw DomainError("kick chain start must lie in [0, 1]");
    if (!(params.width > 0.0 && params.width < 0.25 * pi))
        throw DomainError("kick width must lie in (0, pi/4)");

    KickChainResult out;
    double x = x0;
    while (out.kicks < params.max_kicks) {
        if (x < params.epsilon) {
            out.endpoint = 0;
            return out;
        }
        if (x > 1.0 - params.epsilon) {
            out.endpoint = 1;
            return out;
        }
        const double phi = 0.25 * pi + params.width * (2.0 * uniform01(rng) - 1.0);
        const double step = 2.0 * std::sqrt(x * (1.0 - x)) * kick_displacement(KickAngle(phi));
        x = std::clamp(x + step, 0.0, 1.0);
        ++out.kicks;
    }
    return out;
}

} // namespace collapsim
