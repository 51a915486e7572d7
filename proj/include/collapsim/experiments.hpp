#pragma once

#include "collapsim/fluctuation_kick.hpp"
#include "collapsim/scenario.hpp"
#include "collapsim/statistics.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace collapsim {

// Two atoms sharing one photon: x = |C_1|^2, endpoint 1 -> "A excited",
// endpoint 0 -> "B excited".
ExperimentReport run_two_atom(const ScenarioConfig& config);

// Three atoms: coordinates from the amplitudes, outcomes A/B/C excited.
ExperimentReport run_three_atom_scenario(const ScenarioConfig& config);

// One atom over {photon free, excited}: x = |C_2|^2 diffuses with the
// logistic pump drift pump_rate * x(1-x); endpoint 1 is absorption and
// endpoint 0 an escape in a uniformly random direction.
ExperimentReport run_one_atom(const ScenarioConfig& config);

// Dispatches on config.scenario.
ExperimentReport run_scenario(const ScenarioConfig& config);

struct EscapeEvent {
    std::array<double, 3> direction;
    double time;
};

// Direction uniform on the unit sphere from three normal draws.
std::array<double, 3> random_direction(Rng& rng);

struct SweepPoint {
    double intensity;
    ExperimentReport report;
};

struct CasimirSweep {
    std::vector<SweepPoint> points;
    // Mean absorption time strictly decreases as the intensity grows.
    bool monotone_decreasing = false;
    // Largest |I * mean_time / (I_0 * mean_time_0) - 1| across points,
    // with the first point as reference; zero for exact 1/I scaling.
    double max_scaling_deviation = 0.0;
};

// Runs the two-atom scenario at each intensity. Max time is rescaled to
// keep the same horizon in units of 1/I as the base configuration.
CasimirSweep run_casimir_sweep(const ScenarioConfig& base, std::span<const double> intensities);

struct BornExactReport {
    double x0 = 0.0;
    double exact = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t hits = 0;
    double empirical = 0.0;
    Interval ci{0.0, 0.0};  // Wilson 99.7% around the empirical frequency
    bool exact_within_interval = false;
    std::uint64_t seed = 0;
};

// Exact branch sum next to a Monte Carlo run of the doubling chain.
BornExactReport run_born_exact(double x0, std::uint64_t trials, std::uint64_t seed,
                               int max_steps);

struct KickDemoRow {
    double phi;
    double theta;
    double x_after;
    double energy;
    double projection_residual;
};

struct KickDemoReport {
    std::vector<KickDemoRow> table;
    double x0 = 0.5;
    KickChainParams chain;
    std::uint64_t trials = 0;
    std::uint64_t hits = 0;
    std::uint64_t unresolved = 0;
    double mean_kicks = 0.0;
    Interval ci{0.0, 0.0};
    std::uint64_t seed = 0;
};

// Tabulates single kicks on a phi grid and runs kick chains from x0.
KickDemoReport run_kick_demo(double x0, const KickChainParams& chain, std::uint64_t trials,
                             std::uint64_t seed, int table_points);

} // namespace collapsim
