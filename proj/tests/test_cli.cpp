#include "collapsim/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using collapsim::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("born-exact reports exact and empirical values")
{
    const auto r = invoke({"born-exact", "--x0", "0.625", "--trials", "100000", "--seed", "7"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["exact"] == 0.625);
    CHECK(j["exact_within_interval"] == true);
    CHECK(j["ci997"][0].get<double>() <= 0.625);
    CHECK(j["ci997"][1].get<double>() >= 0.625);
}

TEST_CASE("usage errors exit with 2")
{
    auto r = invoke({"born-exact", "--x0", "1.5"});
    CHECK(r.code == 2);
    CHECK(r.err.find("[0, 1]") != std::string::npos);
    CHECK(invoke({"no-such-command"}).code == 2);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"diffuse", "--dt", "-1"}).code == 2);
    CHECK(invoke({"diffuse", "--epsilon", "0.5", "--trials", "1"}).code == 2);
    CHECK(invoke({"diffuse", "--format", "xml"}).code == 2);
    CHECK(invoke({"three-atom", "--x1", "0.8", "--x2", "0.2", "--trials", "1"}).code == 2);
    CHECK(invoke({"diffuse", "--help"}).code == 0);
}

TEST_CASE("unwritable output path is a runtime failure")
{
    const auto r = invoke({"born-exact", "--x0", "0.5", "--trials", "10", "--output",
                           "/nonexistent-dir/out.json"});
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("diffuse writes a JSON report")
{
    const auto r = invoke({"diffuse", "--x0", "0.5", "--trials", "2000", "--seed", "1", "--dt", "1e-3"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["config"]["n_trials"] == 2000);
    CHECK(j["config"]["dt"] == 1e-3);
    CHECK(j["outcomes"][0]["label"] == "A excited");
    CHECK(std::abs(j["absorption_time"]["mean"].get<double>() - std::log(2.0)) < 0.05);
}

TEST_CASE("diffuse reads a configuration file and flags override it")
{
    const auto path = std::filesystem::temp_directory_path() / "collapsim_test.cfg";
    {
        std::ofstream f(path);
        f << "scenario = two_atom\ninitial_amplitudes = 0.6 0.8\ndt = 1e-3\nn_trials = 300\nmaster_seed = 5\n";
    }
    auto r = invoke({"diffuse", "--config", path.string()});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["config"]["n_trials"] == 300);
    CHECK(j["config"]["initial_amplitudes"][1][0] == 0.8);

    r = invoke({"diffuse", "--config", path.string(), "--trials", "100"});
    REQUIRE(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["config"]["n_trials"] == 100);
    CHECK(j["config"]["dt"] == 1e-3);

    CHECK(invoke({"one-atom", "--config", path.string()}).code == 2);
    std::filesystem::remove(path);
}

TEST_CASE("hydrogen-density emits a CSV grid")
{
    const auto r = invoke({"hydrogen-density", "--nr", "2", "--ntheta", "2", "--nphi", "3",
                           "--times", "0,1"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "r,theta,phi,t,density");
    int rows = 0;
    while (std::getline(in, line))
        ++rows;
    CHECK(rows == 2 * 2 * 2 * 3);
    CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("casimir-sweep csv schema")
{
    const auto r = invoke({"casimir-sweep", "--x0", "0.5", "--intensities", "1,2", "--trials",
                           "200", "--dt", "1e-3", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("intensity,mean_time,stderr,hit1_freq,ci_low,ci_high\n", 0) == 0);
}

TEST_CASE("remaining subcommands run")
{
    auto r = invoke({"three-atom", "--x1", "0.2", "--x2", "0.7", "--trials", "200", "--dt", "1e-3",
                     "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("C excited") != std::string::npos);
    r = invoke({"one-atom", "--x0", "0.4", "--pump-rate", "0.5", "--trials", "200", "--dt", "1e-3"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).contains("escape"));
    r = invoke({"kick-demo", "--trials", "100", "--seed", "2"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["kicks"].size() == 9);
}

TEST_CASE("output goes to --output when given")
{
    const auto path = std::filesystem::temp_directory_path() / "collapsim_born.json";
    const auto r = invoke({"born-exact", "--x0", "0.25", "--trials", "100", "--output", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    const auto j = nlohmann::json::parse(f);
    CHECK(j["exact"] == 0.25);
    std::filesystem::remove(path);
}
