#include "collapsim/hydrogen.hpp"

#include "collapsim/errors.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <numbers>
#include <vector>

namespace collapsim::hydrogen {

using std::numbers::pi;

Eigenstate::Eigenstate(int n, int l, int m) : n_(n), l_(l), m_(m)
{
    const bool supported = (n == 1 && l == 0 && m == 0) || (n == 2 && l == 1 && m == 1);
    if (!supported)
        throw InvalidArgument("only the (1,0,0) and (2,1,1) hydrogen states are supported");
}

double Eigenstate::energy() const { return -1.0 / (2.0 * n_ * n_); }

double radial_1s(double r) { return 2.0 * std::exp(-r); }

double radial_2p(double r) { return r * std::exp(-0.5 * r) / (2.0 * std::sqrt(6.0)); }

Complex eigenstate_amplitude(const Eigenstate& state, double r, double theta, double phi,
                             double t)
{
    if (!(r >= 0.0))
        throw DomainError("radius must be nonnegative");
    const Complex evolution = std::polar(1.0, -state.energy() * t);
    if (state.n() == 1) {
        const double y00 = 1.0 / std::sqrt(4.0 * pi);
        return radial_1s(r) * y00 * evolution;
    }
    const double y11 = std::sqrt(3.0 / (8.0 * pi)) * std::sin(theta);
    return radial_2p(r) * y11 * std::polar(1.0, phi) * evolution;
}

SuperpositionState::SuperpositionState(Complex a0, Complex a1) : a0_(a0), a1_(a1)
{
    if (std::abs(std::norm(a0) + std::norm(a1) - 1.0) > kNormalizationTolerance)
        throw NormalizationError("superposition weights must satisfy |a0|^2 + |a1|^2 = 1");
}

SuperpositionState SuperpositionState::equal_weight()
{
    const double w = 1.0 / std::numbers::sqrt2;
    return {Complex{w}, Complex{w}};
}

double SuperpositionState::omega() const { return transition_frequency(); }

double superposition_density(const SuperpositionState& sp, double r, double theta,
                             double phi, double t)
{
    const Complex psi = sp.a0() * eigenstate_amplitude(Eigenstate::ground(), r, theta, phi, t) +
                        sp.a1() * eigenstate_amplitude(Eigenstate::excited(), r, theta, phi, t);
    return std::norm(psi);
}

HarmonicDecomposition extract_f1_f2(const SuperpositionState& sp, double r, double theta,
                                    double t, int n_phi_samples)
{
    if (n_phi_samples < 8)
        throw InvalidArgument("harmonic extraction needs at least 8 azimuth samples");

    const int n = n_phi_samples;
    std::vector<double> samples(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        samples[static_cast<std::size_t>(j)] =
            superposition_density(sp, r, theta, 2.0 * pi * j / n, t);

    auto coefficient = [&](int k) {
        Complex c{0.0, 0.0};
        for (int j = 0; j < n; ++j)
            c += samples[static_cast<std::size_t>(j)] * std::polar(1.0, -2.0 * pi * k * j / n);
        return c / static_cast<double>(n);
    };

    HarmonicDecomposition out;
    out.f1 = coefficient(0).real();
    const Complex c1 = coefficient(1);
    out.f2 = 2.0 * std::abs(c1);
    for (int k = 2; k <= n / 2; ++k) {
        // The Nyquist bin is not paired with a conjugate partner.
        const double scale = (2 * k == n) ? 1.0 : 2.0;
        out.max_higher_harmonic = std::max(out.max_higher_harmonic, scale * std::abs(coefficient(k)));
    }
    if (out.f2 > 1e-14 * std::max(out.f1, 1e-300)) {
        double phase = -std::arg(c1);
        if (phase < 0.0)
            phase += 2.0 * pi;
        out.phase = phase;
    }
    return out;
}

double transition_frequency()
{
    return Eigenstate::excited().energy() - Eigenstate::ground().energy();
}

namespace {

constexpr double kRadialCutoff = 50.0;
constexpr int kRadialPanels = 200;  // x 10 nodes = 2000 radial nodes
constexpr int kPolarPanels = 8;
constexpr int kAzimuthSamples = 16;

// Integrates f(r, theta, phi) r^2 sin(theta) over the ball r <= 50.
template <class F>
Complex integrate_space(F&& f)
{
    using Rule = boost::math::quadrature::gauss<double, 10>;
    const double dr = kRadialCutoff / kRadialPanels;
    const double du = 2.0 / kPolarPanels;

    Complex total{0.0, 0.0};
    for (int a = 0; a < kAzimuthSamples; ++a) {
        const double phi = 2.0 * pi * a / kAzimuthSamples;
        for (int pu = 0; pu < kPolarPanels; ++pu) {
            const double u0 = -1.0 + pu * du;
            for (std::size_t iu = 0; iu < Rule::abscissa().size(); ++iu) {
                for (int su : {-1, 1}) {
                    if (iu == 0 && su == -1 && Rule::abscissa()[0] == 0.0)
                        continue;
                    const double u = u0 + 0.5 * du * (1.0 + su * Rule::abscissa()[iu]);
                    const double wu = 0.5 * du * Rule::weights()[iu];
                    const double theta = std::acos(u);
                    Complex radial{0.0, 0.0};
                    for (int pr = 0; pr < kRadialPanels; ++pr) {
                        const double r0 = pr * dr;
                        for (std::size_t ir = 0; ir < Rule::abscissa().size(); ++ir) {
                            for (int sr : {-1, 1}) {
                                if (ir == 0 && sr == -1 && Rule::abscissa()[0] == 0.0)
                                    continue;
                                const double r = r0 + 0.5 * dr * (1.0 + sr * Rule::abscissa()[ir]);
                                const double wr = 0.5 * dr * Rule::weights()[ir];
                                radial += wr * r * r * f(r, theta, phi);
                            }
                        }
                    }
                    total += wu * radial;
                }
            }
        }
    }
    return total * (2.0 * pi / kAzimuthSamples);
}

} // namespace

double norm_squared(const Eigenstate& state)
{
    return integrate_space([&](double r, double theta, double phi) {
               return Complex{std::norm(eigenstate_amplitude(state, r, theta, phi, 0.0))};
           })
        .real();
}

Complex overlap_ground_excited()
{
    return integrate_space([](double r, double theta, double phi) {
        return std::conj(eigenstate_amplitude(Eigenstate::ground(), r, theta, phi, 0.0)) *
               eigenstate_amplitude(Eigenstate::excited(), r, theta, phi, 0.0);
    });
}

std::array<double, 4> two_atom_decomposition()
{
    const double s = 1.0 / std::numbers::sqrt2;
    const std::array<double, 2> single{s, s};  // (|0> + |1>) / sqrt(2)
    std::array<double, 4> out{};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            out[static_cast<std::size_t>(2 * a + b)] = std::numbers::sqrt2 * single[a] * single[b];
    out[0] -= s;  // |00>
    out[3] -= s;  // |11>
    return out;
}

} // namespace collapsim::hydrogen
