#include "collapsim/errors.hpp"
#include "collapsim/experiments.hpp"
#include "collapsim/multi_particle.hpp"
#include "collapsim/statistics.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace collapsim;

namespace {

DiffusionParams coarse()
{
    DiffusionParams p;
    p.dt = 1e-3;
    return p;
}

double sigma(double p, double n) { return std::sqrt(p * (1.0 - p) / n); }

// Normal draw that moves x to target in one step of pair_step.
double draw_to(double x, double target, const DiffusionParams& p)
{
    return (target - x) / (std::sqrt(2.0 * p.intensity * p.dt) * std::sqrt(x * (1.0 - x)));
}

} // namespace

TEST_CASE("pair_step with zero noise leaves the pair unchanged")
{
    const auto p = coarse();
    const auto s = pair_step({0.2, 0.7, false, 0.0, 0}, p, 0.0, 0.0);
    CHECK(s.x1 == 0.2);
    CHECK(s.x2 == 0.7);
    CHECK_FALSE(s.merged);
    CHECK(s.steps == 1);
    CHECK(s.t == p.dt);
}

TEST_CASE("crossing particles merge at the midpoint")
{
    const auto m = resolve_collision({0.41, 0.39, false, 0.0, 0});
    CHECK(m.merged);
    CHECK(m.x1 == doctest::Approx(0.40).epsilon(1e-15));
    CHECK(m.x2 == m.x1);

    DiffusionParams p;
    p.dt = 1e-2;
    const double g1 = draw_to(0.395, 0.41, p);
    const double g2 = draw_to(0.405, 0.39, p);
    const auto s = pair_step({0.395, 0.405, false, 0.0, 0}, p, g1, g2);
    CHECK(s.merged);
    CHECK(s.x1 == doctest::Approx(0.40).epsilon(1e-12));
    CHECK(s.x2 == s.x1);

    CHECK(resolve_collision({0.41, 0.39, false, 0, 0}, {MergePoint::lower}).x1 == 0.39);
    CHECK(resolve_collision({0.41, 0.39, false, 0, 0}, {MergePoint::upper}).x1 == 0.41);
}

TEST_CASE("pair_step refuses a fully absorbed pair")
{
    CHECK_THROWS_AS(pair_step({0.0, 1.0, false, 0.0, 0}, coarse(), 0.0, 0.0), TerminalStateError);
}

TEST_CASE("absorbed particles stay put while the other moves")
{
    const auto p = coarse();
    const auto s = pair_step({0.0, 0.6, false, 0.0, 0}, p, 5.0, 1.0);
    CHECK(s.x1 == 0.0);
    CHECK(s.x2 == doctest::Approx(0.6 + std::sqrt(2.0 * p.dt * 0.24)).epsilon(1e-12));
}

TEST_CASE("property: ordering is preserved along trajectories")
{
    const auto p = coarse();
    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        double a = u(gen), b = u(gen);
        if (a > b)
            std::swap(a, b);
        PairState s{a, b, false, 0.0, 0};
        Rng rng = trial_stream(31, static_cast<std::uint64_t>(i));
        NormalSource normals(rng);
        bool was_merged = false;
        while (!(particle_absorbed(s.x1) && particle_absorbed(s.x2)) && s.steps < 200000) {
            s = pair_step(s, p, normals);
            REQUIRE(s.x1 <= s.x2);
            if (was_merged)
                REQUIRE(s.x1 == s.x2);
            was_merged = s.merged;
        }
    }
}

TEST_CASE("run_three_atom boundary configurations")
{
    const auto p = coarse();
    Rng rng = trial_stream(1, 1);
    for (int i = 0; i < 20; ++i) {
        CHECK(run_three_atom(0.0, 1.0, p, rng).label == ThreeAtomLabel::B_excited);
        CHECK(run_three_atom(0.0, 0.0, p, rng).label == ThreeAtomLabel::C_excited);
        CHECK(run_three_atom(1.0, 1.0, p, rng).label == ThreeAtomLabel::A_excited);
    }
    CHECK_THROWS_AS(run_three_atom(0.7, 0.2, p, rng), DomainError);
}

TEST_CASE("outcome distribution at (0.2, 0.7)")
{
    const auto rep = outcome_distribution_mc(0.2, 0.7, 30000, coarse(), 2718);
    const std::uint64_t counts[] = {rep.outcomes[0].count, rep.outcomes[1].count,
                                    rep.outcomes[2].count};
    const double expected[] = {0.2, 0.5, 0.3};
    CHECK(rep.unabsorbed == 0);
    CHECK(chi_square_test(counts, expected).p_value > 0.001);
    CHECK(rep.outcomes[0].label == "A excited");
}

TEST_CASE("coincident start reduces to a single particle")
{
    const auto rep = outcome_distribution_mc(0.5, 0.5, 20000, coarse(), 55);
    CHECK(rep.outcome("B excited").count == 0);
    CHECK(std::abs(rep.outcome("A excited").frequency - 0.5) < 4.0 * sigma(0.5, 20000));
}

TEST_CASE("degenerate reduction: x1 = 0 matches the two-atom engine at x2")
{
    const auto p = coarse();
    const auto rep = outcome_distribution_mc(0.0, 0.4, 20000, p, 71);
    CHECK(rep.outcome("A excited").count == 0);
    CHECK(std::abs(rep.outcome("B excited").frequency - 0.4) < 4.0 * sigma(0.4, 20000));

    ScenarioConfig two;
    two.initial_amplitudes = EntangledAmplitudes({std::sqrt(0.4), std::sqrt(0.6)}, two_atom_labels());
    two.params = p;
    two.n_trials = 20000;
    two.master_seed = 72;
    const auto ref = run_two_atom(two);
    const double f1 = rep.outcome("B excited").frequency;
    const double f2 = ref.outcome("A excited").frequency;
    CHECK(std::abs(f1 - f2) < 4.0 * std::sqrt(2.0) * sigma(0.4, 20000));
}

TEST_CASE("merged pair follows single-particle statistics")
{
    const auto p = coarse();
    constexpr int n = 20000;
    int hits = 0;
    for (int i = 0; i < n; ++i) {
        Rng rng = trial_stream(404, static_cast<std::uint64_t>(i));
        NormalSource normals(rng);
        PairState s{0.4, 0.4, true, 0.0, 0};
        while (!particle_absorbed(s.x1))
            s = pair_step(s, p, normals);
        hits += s.x1 == 1.0;
    }
    CHECK(std::abs(static_cast<double>(hits) / n - 0.4) < 4.0 * sigma(0.4, n));
}

TEST_CASE("marginal martingale and Born frequencies for random states")
{
    const auto p = coarse();
    std::mt19937_64 gen(8);
    std::normal_distribution<double> g;
    for (int s = 0; s < 3; ++s) {
        Complex c[3];
        double norm = 0.0;
        for (auto& v : c) {
            v = {g(gen), g(gen)};
            norm += std::norm(v);
        }
        for (auto& v : c)
            v /= std::sqrt(norm);
        const EntangledAmplitudes state({c[0], c[1], c[2]}, three_atom_labels());
        const auto coords = to_diffusion(state);
        constexpr std::uint64_t n = 20000;
        const auto rep = outcome_distribution_mc(coords[0], coords[1], n, p, 900 + s);
        const auto probs = state.probabilities();
        for (std::size_t k = 0; k < 3; ++k)
            CHECK(std::abs(rep.outcomes[k].frequency - probs[k]) < 4.0 * sigma(probs[k], n) + 1e-3);
        // x1 ends at 1 only in outcome A, x2 ends at 1 in A or B.
        const double x2_hit = rep.outcomes[0].frequency + rep.outcomes[1].frequency;
        CHECK(std::abs(x2_hit - coords[1]) < 4.0 * sigma(coords[1], n) + 1e-3);
    }
}

TEST_CASE("outcomes are insensitive to the merge point")
{
    const auto p = coarse();
    constexpr std::uint64_t n = 20000;
    const auto mid = outcome_distribution_mc(0.3, 0.6, n, p, 5, {MergePoint::midpoint});
    for (auto rule : {MergePoint::lower, MergePoint::upper}) {
        const auto other = outcome_distribution_mc(0.3, 0.6, n, p, 6, {rule});
        for (std::size_t k = 0; k < 3; ++k) {
            const double f = mid.outcomes[k].frequency;
            CHECK(std::abs(other.outcomes[k].frequency - f) <
                  4.0 * std::sqrt(2.0) * sigma(std::max(f, 0.01), n));
        }
    }
}
