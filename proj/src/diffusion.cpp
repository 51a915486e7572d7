#include "collapsim/diffusion.hpp"

#include "collapsim/errors.hpp"

#include <algorithm>
#include <cmath>

namespace collapsim {

DiffusionParams DiffusionParams::for_intensity(double intensity)
{
    DiffusionParams p;
    p.intensity = intensity;
    p.max_time = 100.0 / intensity;
    return p;
}

void DiffusionParams::validate() const
{
    if (!(intensity > 0.0) || !std::isfinite(intensity))
        throw DomainError("intensity must be positive");
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw DomainError("dt must be positive");
    if (!(epsilon > 0.0 && epsilon < 0.01))
        throw DomainError("epsilon must lie in (0, 0.01)");
    if (!(max_time > 0.0) || !std::isfinite(max_time))
        throw DomainError("max_time must be positive");
}

bool DiffusionParams::exceeds_stability_bound() const
{
    return dt > epsilon * epsilon / (2.0 * intensity);
}

std::uint64_t DiffusionParams::max_steps() const
{
    return static_cast<std::uint64_t>(std::ceil(max_time / dt));
}

double diffusion_coefficient(double x)
{
    if (!(x >= 0.0 && x <= 1.0))
        throw DomainError("diffusion coefficient defined on [0, 1] only");
    return x * (1.0 - x);
}

namespace {

inline double step_with_scale(double x, double scale, double drift_dt, double g)
{
    const double next = x + drift_dt * x * (1.0 - x) + scale * std::sqrt(x * (1.0 - x)) * g;
    return std::clamp(next, 0.0, 1.0);
}

inline bool in_band(double x, double epsilon)
{
    return x < epsilon || x > 1.0 - epsilon;
}

} // namespace

double em_step(double x, const DiffusionParams& params, double normal_draw)
{
    if (in_band(x, params.epsilon))
        return x;
    const double scale = std::sqrt(2.0 * params.intensity * params.dt);
    return step_with_scale(x, scale, 0.0, normal_draw);
}

double em_step(double x, const DiffusionParams& params, NormalSource& normals)
{
    if (in_band(x, params.epsilon))
        return x;
    return em_step(x, params, normals());
}

TrajectoryRecord run_to_absorption(double x0, const DiffusionParams& params, Rng& rng,
                                   const RunOptions& options)
{
    if (!(x0 >= 0.0 && x0 <= 1.0))
        throw DomainError("starting position must lie in [0, 1]");

    TrajectoryRecord rec;
    rec.x0 = x0;
    const double eps = params.epsilon;
    const double scale = std::sqrt(2.0 * params.intensity * params.dt);
    const double drift_dt = options.pump_rate * params.dt;
    const std::uint64_t max_steps = params.max_steps();
    NormalSource normals(rng);

    double x = x0;
    std::uint64_t n = 0;
    auto record = [&] {
        if (options.record_every != 0 && n % options.record_every == 0)
            rec.path_samples.emplace_back(static_cast<double>(n) * params.dt, x);
    };
    record();
    while (!in_band(x, eps)) {
        if (n >= max_steps) {
            rec.steps = n;
            rec.absorption_time = static_cast<double>(n) * params.dt;
            return rec;
        }
        x = step_with_scale(x, scale, drift_dt, normals());
        ++n;
        record();
    }
    rec.status = x < eps ? TrajectoryStatus::absorbed_at_0 : TrajectoryStatus::absorbed_at_1;
    rec.steps = n;
    rec.absorption_time = static_cast<double>(n) * params.dt;
    if (options.record_every != 0 && n % options.record_every != 0)
        rec.path_samples.emplace_back(rec.absorption_time, x);
    return rec;
}

std::vector<double> solve_tridiagonal(std::vector<double> sub, std::vector<double> diag,
                                      std::vector<double> super, std::vector<double> rhs)
{
    const std::size_t n = diag.size();
    if (n == 0 || sub.size() != n || super.size() != n || rhs.size() != n)
        throw SingularSystem("tridiagonal system has inconsistent dimensions");

    constexpr double tiny = 1e-300;
    for (std::size_t i = 1; i < n; ++i) {
        if (std::abs(diag[i - 1]) < tiny)
            throw SingularSystem("zero pivot in tridiagonal solve");
        const double m = sub[i] / diag[i - 1];
        diag[i] -= m * super[i - 1];
        rhs[i] -= m * rhs[i - 1];
    }
    if (std::abs(diag[n - 1]) < tiny)
        throw SingularSystem("zero pivot in tridiagonal solve");
    std::vector<double> sol(n);
    sol[n - 1] = rhs[n - 1] / diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;)
        sol[i] = (rhs[i] - super[i] * sol[i + 1]) / diag[i];
    return sol;
}

namespace {

// Integral of hat_i(x) / x over the hat centred on node i of a grid with
// spacing 1, i.e. the load weight of the 1/x singularity.
double hat_weight(std::size_t i)
{
    const double k = static_cast<double>(i);
    const double up = i > 1 ? (k - 1.0) * std::log1p(1.0 / (k - 1.0)) : 0.0;
    return (k + 1.0) * std::log1p(1.0 / k) - up;
}

// Solves u'' = source / (I x(1-x)) with u(0) = left, u(1) = right. The
// source is loaded against piecewise linear hat functions, integrated in
// closed form, which keeps the nodal values exact despite the logarithmic
// behaviour of the solution at the endpoints.
std::vector<GridValue> solve_exit_problem(int grid_size, double intensity, double source,
                                          double left, double right)
{
    if (grid_size < 3)
        throw SingularSystem("grid needs at least one interior node");
    const std::size_t nodes = static_cast<std::size_t>(grid_size);
    const std::size_t m = nodes - 2;
    const std::size_t last = nodes - 1;
    const double h = 1.0 / static_cast<double>(last);

    // 1/(x(1-x)) = 1/x + 1/(1-x); each hat integral scales with h^0.
    std::vector<double> sub(m, 1.0), diag(m, -2.0), super(m, 1.0), rhs(m);
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t i = k + 1;
        rhs[k] = h * source / intensity * (hat_weight(i) + hat_weight(last - i));
    }
    rhs[0] -= left;
    rhs[m - 1] -= right;
    const auto interior = solve_tridiagonal(std::move(sub), std::move(diag),
                                            std::move(super), std::move(rhs));

    std::vector<GridValue> out;
    out.reserve(nodes);
    out.push_back({0.0, left});
    for (std::size_t k = 0; k < m; ++k)
        out.push_back({static_cast<double>(k + 1) * h, interior[k]});
    out.push_back({1.0, right});
    return out;
}

} // namespace

std::vector<GridValue> bvp_hitting_probability(int grid_size)
{
    return solve_exit_problem(grid_size, 1.0, 0.0, 0.0, 1.0);
}

std::vector<GridValue> bvp_mean_absorption_time(int grid_size, double intensity)
{
    if (!(intensity > 0.0))
        throw DomainError("intensity must be positive");
    return solve_exit_problem(grid_size, intensity, -1.0, 0.0, 0.0);
}

double mean_absorption_time_exact(double x, double intensity)
{
    if (!(x >= 0.0 && x <= 1.0))
        throw DomainError("x must lie in [0, 1]");
    auto xlogx = [](double v) { return v > 0.0 ? v * std::log(v) : 0.0; };
    return -(xlogx(x) + xlogx(1.0 - x)) / intensity;
}

} // namespace collapsim
