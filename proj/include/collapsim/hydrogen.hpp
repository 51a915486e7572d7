#pragma once

#include "collapsim/amplitude.hpp"

#include <array>
#include <optional>

namespace collapsim::hydrogen {

// Atomic units throughout: hbar = 1, Bohr radius = 1, energies in hartree.

// A bound hydrogen eigenstate. Only 1s (1,0,0) and 2p (2,1,1) are supported.
class Eigenstate {
public:
    Eigenstate(int n, int l, int m);

    static Eigenstate ground() { return {1, 0, 0}; }
    static Eigenstate excited() { return {2, 1, 1}; }

    int n() const { return n_; }
    int l() const { return l_; }
    int m() const { return m_; }
    // E_n = -1 / (2 n^2).
    double energy() const;

private:
    int n_, l_, m_;
};

// R_nl(r) Y_lm(theta, phi) exp(-i E_n t). Y_11 is taken without the
// Condon-Shortley sign so that the 1s-2p cross term enters the density with
// a positive first-harmonic coefficient.
Complex eigenstate_amplitude(const Eigenstate& state, double r, double theta, double phi,
                             double t);

double radial_1s(double r);
double radial_2p(double r);

// a0 |1,0,0> + a1 |2,1,1>.
class SuperpositionState {
public:
    SuperpositionState(Complex a0, Complex a1);

    static SuperpositionState equal_weight();

    Complex a0() const { return a0_; }
    Complex a1() const { return a1_; }
    double omega() const;

private:
    Complex a0_, a1_;
};

// |a0 Psi_100 + a1 Psi_211|^2.
double superposition_density(const SuperpositionState& sp, double r, double theta,
                             double phi, double t);

struct HarmonicDecomposition {
    double f1 = 0.0;                 // phi-average of the density
    double f2 = 0.0;                 // first-harmonic amplitude
    std::optional<double> phase;     // first-harmonic phase in [0, 2 pi)
    double max_higher_harmonic = 0.0;  // largest amplitude of order >= 2
};

// Discrete Fourier analysis of the density over n_phi_samples uniformly
// spaced azimuths: density = f1 + f2 cos(phi - phase) + higher orders.
// The phase is left empty when f2 vanishes.
HarmonicDecomposition extract_f1_f2(const SuperpositionState& sp, double r, double theta,
                                    double t, int n_phi_samples);

// E_211 - E_100 = 3/8 hartree.
double transition_frequency();

// Integral of |Psi|^2 over all space by composite Gauss-Legendre quadrature
// on r in [0, 50] and cos(theta), with a uniform rule in phi.
double norm_squared(const Eigenstate& state);

// <Psi_100 | Psi_211> at t = 0 with the same quadrature.
Complex overlap_ground_excited();

// Coefficients on (|00>, |01>, |10>, |11>) (atom A first) of
// sqrt(2) (|0>+|1>)/sqrt(2) x (|0>+|1>)/sqrt(2) - |00>/sqrt(2) - |11>/sqrt(2).
std::array<double, 4> two_atom_decomposition();

} // namespace collapsim::hydrogen
