#include "collapsim/errors.hpp"
#include "collapsim/fluctuation_kick.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace collapsim;
using std::numbers::pi;

TEST_CASE("kick angle range")
{
    CHECK_THROWS_AS(KickAngle(0.0), DomainError);
    CHECK_THROWS_AS(KickAngle(pi / 2), DomainError);
    CHECK_NOTHROW(KickAngle(1e-6));
}

TEST_CASE("kicked atom states")
{
    const auto [a, b] = kick_atom_states(KickAngle(pi / 4));
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(a.ground == doctest::Approx(s));
    CHECK(a.excited == doctest::Approx(s));
    CHECK(b.ground == doctest::Approx(s));
    CHECK(b.excited == doctest::Approx(s));

    const auto [a0, b0] = kick_atom_states(KickAngle(1e-9));
    CHECK(a0.excited == doctest::Approx(1.0));
    CHECK(b0.ground == doctest::Approx(1.0));

    for (double phi : {0.1, 0.5, 1.0, 1.5}) {
        const auto [ka, kb] = kick_atom_states(KickAngle(phi));
        CHECK(atom_energy(ka, -0.5, -0.125) + atom_energy(kb, -0.5, -0.125) ==
              doctest::Approx(-0.625).epsilon(1e-14));
    }
}

TEST_CASE("joint state after a kick")
{
    const auto sym = joint_state_after_kick(KickAngle(pi / 4), -0.5, -0.125);
    CHECK(std::abs(sym.amp_10 - Complex{1.0 / std::sqrt(2.0)}) < 1e-15);
    CHECK(std::abs(sym.amp_01 - Complex{1.0 / std::sqrt(2.0)}) < 1e-15);

    const auto edge = joint_state_after_kick(KickAngle(1e-8), -0.5, -0.125);
    CHECK(std::abs(edge.amp_10) == doctest::Approx(1.0));
    CHECK(std::abs(edge.amp_01) < 1e-12);

    // cot^2(pi/3) = 1/3, so (sin, cos) = (1, 3) / sqrt(10).
    const auto third = joint_state_after_kick(KickAngle(pi / 3), -0.5, -0.125);
    CHECK(std::abs(third.amp_10.real() - 1.0 / std::sqrt(10.0)) < 1e-12);
    CHECK(std::abs(third.amp_01.real() - 3.0 / std::sqrt(10.0)) < 1e-12);
}

TEST_CASE("projection consistency")
{
    CHECK(projection_consistency(KickAngle(pi / 4)) < 1e-15);
    CHECK(projection_consistency(KickAngle(pi / 3)) < 1e-12);
    CHECK(projection_consistency(KickAngle(0.1)) < 1e-12);
}

TEST_CASE("property: energy and angle identities on a dense grid")
{
    for (int k = 1; k < 2000; ++k) {
        const KickAngle phi(0.5 * pi * k / 2000.0);
        const auto st = joint_state_after_kick(phi, -0.5, -0.125);
        REQUIRE(std::abs(total_energy(st) + 0.625) < 1e-12);
        // tan(theta) = cot^2(phi), cross-multiplied to stay finite near the poles.
        const double th = kick_theta(phi);
        const double s = std::sin(phi.value()), c = std::cos(phi.value());
        REQUIRE(std::abs(std::sin(th) * s * s - std::cos(th) * c * c) < 1e-12);
        REQUIRE(projection_consistency(phi) < 1e-12);
    }
}

TEST_CASE("symmetric kicks have zero mean displacement")
{
    for (double u : {0.01, 0.1, 0.5}) {
        const double up = kick_displacement(KickAngle(pi / 4 + u));
        const double down = kick_displacement(KickAngle(pi / 4 - u));
        CHECK(std::abs(up + down) < 1e-15);
    }
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(-0.1, 0.1);
    constexpr int n = 200000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double d = kick_displacement(KickAngle(pi / 4 + u(gen)));
        sum += d;
        sq += d * d;
    }
    const double sd = std::sqrt(sq / n);
    CHECK(std::abs(sum / n) < 4.0 * sd / std::sqrt(n));
}

TEST_CASE("kick chain reproduces the Born frequency")
{
    KickChainParams params;
    params.width = 0.02;
    constexpr int n = 20000;
    int hits = 0;
    for (int i = 0; i < n; ++i) {
        Rng rng = trial_stream(12, static_cast<std::uint64_t>(i));
        const auto r = run_kick_chain(0.3, params, rng);
        REQUIRE(r.endpoint >= 0);
        hits += r.endpoint;
    }
    CHECK(std::abs(static_cast<double>(hits) / n - 0.3) < 4.0 * std::sqrt(0.21 / n));
}
