#include "collapsim/errors.hpp"
#include "collapsim/report_io.hpp"

#include <doctest.h>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace collapsim;

TEST_CASE("property: formatted numbers parse back to the same double")
{
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int i = 0; i < 5000; ++i) {
        const double v = (i % 3 == 0) ? std::ldexp(u(gen), static_cast<int>(gen() % 200) - 100) : u(gen);
        const std::string s = format_number(v);
        double back = 0.0;
        std::from_chars(s.data(), s.data() + s.size(), back);
        REQUIRE(back == v);
    }
    CHECK(format_number(0.1) == "0.10000000000000001");
}

TEST_CASE("csv emission")
{
    CsvTable empty{{"r", "theta", "phi", "t", "density"}, {}};
    std::ostringstream out;
    emit_csv(empty, out);
    CHECK(out.str() == "r,theta,phi,t,density\n");

    CsvTable t{{"a", "b"}, {}};
    const double row[] = {1.5, 0.25};
    t.add_row(row);
    std::ostringstream o2;
    emit_csv(t, o2);
    CHECK(o2.str() == "a,b\n1.5,0.25\n");

    CHECK_THROWS_AS(emit_csv(t, std::filesystem::path("/nonexistent-dir/x.csv")), IoError);
}

TEST_CASE("sweep csv columns")
{
    CasimirSweep sweep;
    ScenarioConfig c;
    c.n_trials = 4;
    ExperimentReport rep = assemble_report(c, {{0u, 1.0}, {1u, 2.0}, {0u, 3.0}, {std::nullopt, 5.0}});
    sweep.points.push_back({1.0, rep});
    const auto csv = to_csv(sweep);
    CHECK(csv.header == std::vector<std::string>{"intensity", "mean_time", "stderr", "hit1_freq",
                                                 "ci_low", "ci_high"});
    REQUIRE(csv.rows.size() == 1);
    CHECK(csv.rows[0][0] == "1");
    CHECK(csv.rows[0][1] == "2");
    CHECK(csv.rows[0][3] == "0.5");
    CHECK(rep.unabsorbed == 1);
}

TEST_CASE("config parsing")
{
    std::istringstream in(R"(# two-atom run
scenario = two_atom
initial_amplitudes = 0.6 (0,0.8)
intensity = 2
dt = 1e-3
n_trials = 500   # trailing comment
master_seed = 18446744073709551615
)");
    const auto c = parse_config(in);
    CHECK(c.scenario == ScenarioKind::two_atom);
    CHECK(c.initial_amplitudes.amplitudes()[1] == Complex(0.0, 0.8));
    CHECK(c.params.intensity == 2.0);
    CHECK(c.params.max_time == 50.0);
    CHECK(c.params.dt == 1e-3);
    CHECK(c.n_trials == 500);
    CHECK(c.master_seed == 18446744073709551615ull);

    std::ostringstream out;
    write_config(c, out);
    std::istringstream again(out.str());
    const auto c2 = parse_config(again);
    CHECK(c2.initial_amplitudes.amplitudes() == c.initial_amplitudes.amplitudes());
    CHECK(c2.params.max_time == c.params.max_time);
    CHECK(c2.master_seed == c.master_seed);

    std::istringstream bad_key("colour = blue\n");
    CHECK_THROWS_AS(parse_config(bad_key), InvalidArgument);
    std::istringstream bad_norm("initial_amplitudes = 0.5 0.5\n");
    CHECK_THROWS_AS(parse_config(bad_norm), NormalizationError);
    std::istringstream bad_dim("scenario = three_atom\ninitial_amplitudes = 0.6 0.8\n");
    CHECK_THROWS_AS(parse_config(bad_dim), InvalidArgument);
    std::istringstream defaults("scenario = three_atom\n");
    CHECK(parse_config(defaults).initial_amplitudes.size() == 3);
}

TEST_CASE("report json schema")
{
    ScenarioConfig c;
    c.n_trials = 2;
    c.master_seed = 99;
    const auto rep = assemble_report(c, {{0u, 0.5}, {1u, 1.5}});
    const auto j = to_json(rep);
    CHECK(j["config"]["scenario"] == "two_atom");
    CHECK(j["config"]["master_seed"] == 99);
    CHECK(j["outcomes"].size() == 2);
    CHECK(j["outcomes"][0]["label"] == "A excited");
    CHECK(j["absorption_time"]["mean"] == 1.0);
    CHECK(j["unabsorbed"] == 0);
    CHECK_FALSE(j.contains("escape"));
}
