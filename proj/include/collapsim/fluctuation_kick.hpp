#pragma once

#include "collapsim/amplitude.hpp"
#include "collapsim/random.hpp"

#include <cstdint>
#include <utility>

namespace collapsim {

// Angle of a single vacuum-fluctuation event, strictly inside (0, pi/2).
class KickAngle {
public:
    explicit KickAngle(double phi);
    double value() const { return phi_; }

private:
    double phi_;
};

// Single-atom amplitudes on (ground, excited).
struct AtomAmplitudes {
    double ground;
    double excited;
};

// Mean energy of an atom with the given amplitudes.
double atom_energy(const AtomAmplitudes& atom, double e0, double e1);

// Atom A -> (sin phi, cos phi), atom B -> (cos phi, sin phi).
std::pair<AtomAmplitudes, AtomAmplitudes> kick_atom_states(KickAngle phi);

// amp_10 |1>_A|0>_B + amp_01 |0>_A|1>_B with single-atom energies e0, e1.
struct TwoAtomJointState {
    Complex amp_10;
    Complex amp_01;
    double e0;
    double e1;
};

// theta = arctan(cot^2 phi).
double kick_theta(KickAngle phi);

// (sin theta, cos theta).
TwoAtomJointState joint_state_after_kick(KickAngle phi, double e0, double e1);

// Projects the product of the two kicked atoms onto span{|1,0>, |0,1>},
// renormalizes, and returns the distance to joint_state_after_kick.
double projection_consistency(KickAngle phi);

// |amp_10|^2 (E1 + E0) + |amp_01|^2 (E0 + E1).
double total_energy(const TwoAtomJointState& state);

// Change of x = |amp_10|^2 produced by one kick from the symmetric state:
// sin^2(theta) - 1/2.
double kick_displacement(KickAngle phi);

struct KickChainParams {
    double width = 0.05;       // phi ~ Uniform[pi/4 - width, pi/4 + width]
    double epsilon = 1e-6;     // absorption threshold on x
    std::uint64_t max_kicks = 10'000'000;
};

struct KickChainResult {
    int endpoint = -1;  // -1 when max_kicks ran out
    std::uint64_t kicks = 0;
};

// Random walk on x driven by independent kicks. Away from x = 1/2 each
// displacement is scaled by 2 sqrt(x(1-x)) so that the step variance
// follows D(x) = x(1-x); at x = 1/2 one step equals a single kick.
KickChainResult run_kick_chain(double x0, const KickChainParams& params, Rng& rng);

} // namespace collapsim
