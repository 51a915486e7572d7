#include "collapsim/cli.hpp"

#include "collapsim/diffusion.hpp"
#include "collapsim/doubling_map.hpp"
#include "collapsim/errors.hpp"
#include "collapsim/experiments.hpp"
#include "collapsim/hydrogen.hpp"
#include "collapsim/report_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>

namespace collapsim::cli {

namespace {

enum class Format { json, csv, text };

struct CommonOptions {
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    double dt = 1e-4;
    double epsilon = 1e-6;
    double intensity = 1.0;
    std::optional<double> max_time;
    std::string output;
    std::string format;
};

struct Options {
    CommonOptions common;
    double x0 = 0.5;
    double x1 = 0.2;
    double x2 = 0.7;
    int max_steps = kDefaultDoublingSteps;
    double pump_rate = 0.0;
    std::string config_path;
    std::vector<double> intensities{0.25, 0.5, 1.0, 2.0, 4.0};
    // hydrogen-density
    double weight = 0.5;
    double r_max = 10.0;
    int n_r = 50;
    int n_theta = 9;
    int n_phi = 16;
    std::vector<double> times{0.0};
    // kick-demo
    double width = 0.05;
    std::uint64_t max_kicks = 10'000'000;
    int table_points = 9;
};

void add_common(CLI::App* sub, CommonOptions& c, bool diffusion_flags)
{
    sub->add_option("--trials", c.trials, "number of Monte Carlo trials")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.seed, "master seed");
    if (diffusion_flags) {
        sub->add_option("--dt", c.dt, "integrator step")->check(CLI::PositiveNumber);
        sub->add_option("--epsilon", c.epsilon, "absorption threshold in (0, 0.01)");
        sub->add_option("--intensity", c.intensity, "fluctuation intensity I")
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-time", c.max_time, "time horizon (default 100/I)");
    }
    sub->add_option("--output", c.output, "write results to this path instead of stdout");
    sub->add_option("--format", c.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
}

Format format_of(const CommonOptions& c)
{
    if (c.format == "csv")
        return Format::csv;
    if (c.format == "text")
        return Format::text;
    return Format::json;
}

void require_unit(const char* flag, double v)
{
    if (!(v >= 0.0 && v <= 1.0))
        throw DomainError(std::string(flag) + " must lie in [0, 1], got " + format_number(v));
}

// Opens --output (if any) before computation starts so that an unwritable
// path fails fast.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : out_(&fallback)
    {
        if (path.empty())
            return;
        file_.open(path, std::ios::binary | std::ios::trunc);
        if (!file_)
            throw IoError("cannot open output path '" + path + "'");
        out_ = &file_;
    }

    std::ostream& stream() { return *out_; }

    void finish()
    {
        out_->flush();
        if (!*out_)
            throw IoError("failed writing output");
    }

private:
    std::ofstream file_;
    std::ostream* out_;
};

template <class Report>
void emit(const Report& report, Format format, std::ostream& out)
{
    switch (format) {
    case Format::json: out << to_json(report).dump(2) << '\n'; break;
    case Format::csv: emit_csv(to_csv(report), out); break;
    case Format::text: emit_text(to_csv(report), out); break;
    }
}

ScenarioConfig scenario_from(const Options& o, CLI::App* sub, ScenarioKind kind)
{
    ScenarioConfig config;
    if (!o.config_path.empty()) {
        config = load_config(o.config_path);
        if (config.scenario != kind)
            throw InvalidArgument("config file describes scenario " +
                                  std::string(to_string(config.scenario)));
    } else {
        config.scenario = kind;
    }

    auto given = [&](const char* flag) { return sub->count(flag) > 0; };
    if (o.config_path.empty() || given("--trials"))
        config.n_trials = o.common.trials;
    if (o.config_path.empty() || given("--seed"))
        config.master_seed = o.common.seed;
    if (o.config_path.empty() || given("--dt"))
        config.params.dt = o.common.dt;
    if (o.config_path.empty() || given("--epsilon"))
        config.params.epsilon = o.common.epsilon;
    if (o.config_path.empty() || given("--intensity"))
        config.params.intensity = o.common.intensity;
    if (o.common.max_time)
        config.params.max_time = *o.common.max_time;
    else if (o.config_path.empty() || given("--intensity"))
        config.params.max_time = 100.0 / config.params.intensity;
    return config;
}

int dispatch(CLI::App& app, Options& o, std::ostream& out)
{
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    const Format format = format_of(o.common);

    // Every branch validates its inputs before opening the sink and
    // before any computation.
    if (name == "born-exact") {
        require_unit("--x0", o.x0);
        if (o.max_steps < 1)
            throw InvalidArgument("--max-steps must be at least 1");
        Sink sink(o.common.output, out);
        emit(run_born_exact(o.x0, o.common.trials, o.common.seed, o.max_steps), format, sink.stream());
        sink.finish();
    } else if (name == "diffuse" || name == "one-atom" || name == "three-atom") {
        const ScenarioKind kind = name == "diffuse"    ? ScenarioKind::two_atom
                                  : name == "one-atom" ? ScenarioKind::one_atom
                                                       : ScenarioKind::three_atom;
        ScenarioConfig config = scenario_from(o, sub, kind);
        const bool explicit_state = o.config_path.empty();
        if (kind == ScenarioKind::two_atom && (explicit_state || sub->count("--x0"))) {
            require_unit("--x0", o.x0);
            config.initial_amplitudes =
                EntangledAmplitudes({Complex{std::sqrt(o.x0)}, Complex{std::sqrt(1.0 - o.x0)}},
                                    two_atom_labels());
        } else if (kind == ScenarioKind::one_atom) {
            if (explicit_state || sub->count("--x0")) {
                require_unit("--x0", o.x0);
                config.initial_amplitudes = EntangledAmplitudes(
                    {Complex{std::sqrt(1.0 - o.x0)}, Complex{std::sqrt(o.x0)}}, one_atom_labels());
            }
            if (explicit_state || sub->count("--pump-rate"))
                config.pump_rate = o.pump_rate;
        } else if (kind == ScenarioKind::three_atom &&
                   (explicit_state || sub->count("--x1") || sub->count("--x2"))) {
            require_unit("--x1", o.x1);
            require_unit("--x2", o.x2);
            if (o.x1 > o.x2)
                throw DomainError("--x1 must not exceed --x2");
            config.initial_amplitudes =
                from_diffusion(DiffusionCoordinates({o.x1, o.x2}), three_atom_labels());
        }
        config.validate();
        Sink sink(o.common.output, out);
        emit(run_scenario(config), format, sink.stream());
        sink.finish();
    } else if (name == "casimir-sweep") {
        require_unit("--x0", o.x0);
        ScenarioConfig config = scenario_from(o, sub, ScenarioKind::two_atom);
        config.initial_amplitudes = EntangledAmplitudes(
            {Complex{std::sqrt(o.x0)}, Complex{std::sqrt(1.0 - o.x0)}}, two_atom_labels());
        config.validate();
        for (double i : o.intensities)
            if (!(i > 0.0) || !std::isfinite(i))
                throw DomainError("--intensities must all be positive");
        Sink sink(o.common.output, out);
        emit(run_casimir_sweep(config, o.intensities), format, sink.stream());
        sink.finish();
    } else if (name == "hydrogen-density") {
        if (!(o.weight >= 0.0 && o.weight <= 1.0))
            throw DomainError("--weight must lie in [0, 1]");
        if (!(o.r_max > 0.0))
            throw DomainError("--r-max must be positive");
        if (o.n_r < 1 || o.n_theta < 1 || o.n_phi < 1)
            throw DomainError("grid sizes must be at least 1");
        const hydrogen::SuperpositionState sp(Complex{std::sqrt(1.0 - o.weight)},
                                              Complex{std::sqrt(o.weight)});
        Sink sink(o.common.output, out);
        CsvTable grid{{"r", "theta", "phi", "t", "density"}, {}};
        for (double t : o.times)
            for (int ir = 1; ir <= o.n_r; ++ir)
                for (int it = 0; it < o.n_theta; ++it)
                    for (int ip = 0; ip < o.n_phi; ++ip) {
                        const double r = o.r_max * ir / o.n_r;
                        const double theta =
                            o.n_theta == 1 ? 0.5 * std::numbers::pi
                                           : std::numbers::pi * it / (o.n_theta - 1);
                        const double phi = 2.0 * std::numbers::pi * ip / o.n_phi;
                        const double row[] = {r, theta, phi, t,
                                              hydrogen::superposition_density(sp, r, theta, phi, t)};
                        grid.add_row(row);
                    }
        if (format == Format::json) {
            nlohmann::ordered_json j;
            j["weight_excited"] = o.weight;
            j["omega"] = hydrogen::transition_frequency();
            j["columns"] = grid.header;
            auto rows = nlohmann::ordered_json::array();
            for (const auto& row : grid.rows) {
                auto rj = nlohmann::ordered_json::array();
                for (const auto& cell : row)
                    rj.push_back(std::stod(cell));
                rows.push_back(std::move(rj));
            }
            j["rows"] = std::move(rows);
            sink.stream() << j.dump(2) << '\n';
        } else if (format == Format::csv) {
            emit_csv(grid, sink.stream());
        } else {
            emit_text(grid, sink.stream());
        }
        sink.finish();
    } else if (name == "kick-demo") {
        require_unit("--x0", o.x0);
        KickChainParams chain;
        chain.width = o.width;
        chain.epsilon = o.common.epsilon;
        chain.max_kicks = o.max_kicks;
        if (!(chain.width > 0.0 && chain.width < 0.25 * std::numbers::pi))
            throw DomainError("--width must lie in (0, pi/4)");
        if (!(chain.epsilon > 0.0 && chain.epsilon < 0.01))
            throw DomainError("--epsilon must lie in (0, 0.01)");
        Sink sink(o.common.output, out);
        emit(run_kick_demo(o.x0, chain, o.common.trials, o.common.seed, o.table_points), format,
             sink.stream());
        sink.finish();
    }
    return success;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Stochastic simulator of single-photon absorption by one, two and three atoms",
                 "collapsim"};
    app.require_subcommand(1);
    Options o;

    auto* born = app.add_subcommand("born-exact", "doubling-chain hit probability, exact and sampled");
    born->add_option("--x0", o.x0, "starting position in [0, 1]")->required();
    born->add_option("--max-steps", o.max_steps, "chain steps before a Bernoulli settle");
    add_common(born, o.common, false);

    auto* diffuse = app.add_subcommand("diffuse", "two-atom diffusion to absorption");
    diffuse->add_option("--x0", o.x0, "|C_1|^2 of the stuck state");
    diffuse->add_option("--config", o.config_path, "scenario configuration file");
    add_common(diffuse, o.common, true);

    auto* three = app.add_subcommand("three-atom", "three-atom merging diffusion");
    three->add_option("--x1", o.x1, "|C_1|^2");
    three->add_option("--x2", o.x2, "|C_1|^2 + |C_2|^2");
    three->add_option("--config", o.config_path, "scenario configuration file");
    add_common(three, o.common, true);

    auto* one = app.add_subcommand("one-atom", "one atom with photon escape channel");
    one->add_option("--x0", o.x0, "initial excited weight |C_2|^2");
    one->add_option("--pump-rate", o.pump_rate, "logistic pump rate (>= 0)")
        ->check(CLI::NonNegativeNumber);
    one->add_option("--config", o.config_path, "scenario configuration file");
    add_common(one, o.common, true);

    auto* hyd = app.add_subcommand("hydrogen-density", "1s/2p superposition density grid");
    hyd->add_option("--weight", o.weight, "excited-state weight |a1|^2");
    hyd->add_option("--r-max", o.r_max, "largest radius (Bohr radii)");
    hyd->add_option("--nr", o.n_r, "radial samples");
    hyd->add_option("--ntheta", o.n_theta, "polar samples");
    hyd->add_option("--nphi", o.n_phi, "azimuth samples");
    hyd->add_option("--times", o.times, "comma-separated times")->delimiter(',');
    hyd->add_option("--output", o.common.output, "write results to this path");
    hyd->add_option("--format", o.common.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    auto* sweep = app.add_subcommand("casimir-sweep", "absorption time across intensities");
    sweep->add_option("--x0", o.x0, "|C_1|^2 of the stuck state");
    sweep->add_option("--intensities", o.intensities, "comma-separated intensities")
        ->delimiter(',');
    add_common(sweep, o.common, true);

    auto* kick = app.add_subcommand("kick-demo", "single fluctuation kicks and kick chains");
    kick->add_option("--x0", o.x0, "chain start");
    kick->add_option("--width", o.width, "half-width of phi around pi/4");
    kick->add_option("--max-kicks", o.max_kicks, "kick budget per chain");
    kick->add_option("--table-points", o.table_points, "phi grid size")
        ->check(CLI::PositiveNumber);
    kick->add_option("--epsilon", o.common.epsilon, "absorption threshold on x");
    kick->add_option("--trials", o.common.trials, "number of chains")->check(CLI::PositiveNumber);
    kick->add_option("--seed", o.common.seed, "master seed");
    kick->add_option("--output", o.common.output, "write results to this path");
    kick->add_option("--format", o.common.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? success : usage_error;
    }
    // hydrogen-density defaults to CSV, everything else to JSON.
    const auto chosen = app.get_subcommands();
    if (!chosen.empty() && chosen.front()->count("--format") == 0)
        o.common.format = chosen.front() == hyd ? "csv" : "json";

    try {
        return dispatch(app, o, out);
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return runtime_failure;
    }
}

} // namespace collapsim::cli
