#pragma once

#include "collapsim/random.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace collapsim {

// Zero-drift diffusion dX = sqrt(2 I D(X)) dW on [0, 1] with D(x) = x(1-x).
struct DiffusionParams {
    double intensity = 1.0;  // I, in 1/time
    double dt = 1e-4;
    double epsilon = 1e-6;   // absorption threshold
    double max_time = 100.0;

    // Defaults with max_time = 100 / I.
    static DiffusionParams for_intensity(double intensity);

    // Throws DomainError when a field violates its range.
    void validate() const;

    // True when dt > epsilon^2 / (2 I), the recommended step bound. The
    // defaults exceed it; reports carry the flag instead of refusing to run.
    bool exceeds_stability_bound() const;

    std::uint64_t max_steps() const;
};

double diffusion_coefficient(double x);

// One Euler-Maruyama step with the given standard normal draw, clamped to
// [0, 1]. A position inside the absorption band is returned unchanged.
double em_step(double x, const DiffusionParams& params, double normal_draw);
double em_step(double x, const DiffusionParams& params, NormalSource& normals);

enum class TrajectoryStatus { absorbed_at_0, absorbed_at_1, unabsorbed };

struct TrajectoryRecord {
    double x0 = 0.0;
    TrajectoryStatus status = TrajectoryStatus::unabsorbed;
    double absorption_time = 0.0;  // elapsed time at the end of the run
    std::uint64_t steps = 0;
    std::vector<std::pair<double, double>> path_samples;  // (t, x)

    bool absorbed() const { return status != TrajectoryStatus::unabsorbed; }
    int endpoint() const { return status == TrajectoryStatus::absorbed_at_1 ? 1 : 0; }
};

struct RunOptions {
    // Record (t, x) every this many steps; 0 disables path recording.
    std::uint64_t record_every = 0;
    // Deterministic drift a(x) = pump_rate * x(1-x) added to each step.
    double pump_rate = 0.0;
};

// Steps until x < epsilon (endpoint 0), x > 1 - epsilon (endpoint 1) or the
// elapsed time reaches max_time (unabsorbed).
TrajectoryRecord run_to_absorption(double x0, const DiffusionParams& params,
                                   Rng& rng, const RunOptions& options = {});

struct GridValue {
    double x;
    double value;
};

// Finite-difference solution of D(x) p''(x) = 0, p(0) = 0, p(1) = 1 on
// grid_size uniform nodes including both boundaries.
std::vector<GridValue> bvp_hitting_probability(int grid_size);

// Three-point difference solution of I x(1-x) t''(x) = -1, t(0) = t(1) = 0.
std::vector<GridValue> bvp_mean_absorption_time(int grid_size, double intensity);

// Closed form of the mean exit time, -(x ln x + (1-x) ln(1-x)) / I.
double mean_absorption_time_exact(double x, double intensity);

// Tridiagonal solve (Thomas algorithm). sub[0] and super[n-1] are ignored.
std::vector<double> solve_tridiagonal(std::vector<double> sub, std::vector<double> diag,
                                      std::vector<double> super, std::vector<double> rhs);

} // namespace collapsim
