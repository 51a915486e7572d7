#include "collapsim/report_io.hpp"

#include "collapsim/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace collapsim {

std::string format_number(double value)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void CsvTable::add_row(std::span<const double> values)
{
    std::vector<std::string> row;
    row.reserve(values.size());
    for (double v : values)
        row.push_back(format_number(v));
    rows.push_back(std::move(row));
}

namespace {

void write_line(std::ostream& out, const std::vector<std::string>& cells)
{
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0)
            out << ',';
        out << cells[i];
    }
    out << '\n';
}

} // namespace

void emit_csv(const CsvTable& table, std::ostream& out)
{
    write_line(out, table.header);
    for (const auto& row : table.rows)
        write_line(out, row);
}

void emit_csv(const CsvTable& table, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    emit_csv(table, out);
    out.flush();
    if (!out)
        throw IoError("failed writing '" + path.string() + "'");
}

void emit_text(const CsvTable& table, std::ostream& out)
{
    std::vector<std::size_t> width(table.header.size(), 0);
    auto widen = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], cells[i].size());
    };
    widen(table.header);
    for (const auto& row : table.rows)
        widen(row);

    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0)
                out << "  ";
            out << cells[i];
            if (i + 1 < cells.size())
                out << std::string(width[i] - cells[i].size(), ' ');
        }
        out << '\n';
    };
    line(table.header);
    for (const auto& row : table.rows)
        line(row);
}

CsvTable to_csv(const ExperimentReport& report)
{
    CsvTable t{{"label", "count", "frequency", "ci_low", "ci_high"}, {}};
    for (const auto& o : report.outcomes)
        t.rows.push_back({o.label, std::to_string(o.count), format_number(o.frequency),
                          format_number(o.ci.low), format_number(o.ci.high)});
    t.rows.push_back({"unabsorbed", std::to_string(report.unabsorbed), "", "", ""});
    return t;
}

CsvTable to_csv(const CasimirSweep& sweep)
{
    CsvTable t{{"intensity", "mean_time", "stderr", "hit1_freq", "ci_low", "ci_high"}, {}};
    for (const auto& p : sweep.points) {
        const auto& hit = p.report.outcomes.front();
        const double row[] = {p.intensity, p.report.absorption_time.mean,
                              p.report.absorption_time.standard_error, hit.frequency,
                              hit.ci.low, hit.ci.high};
        t.add_row(row);
    }
    return t;
}

CsvTable to_csv(const BornExactReport& r)
{
    CsvTable t{{"x0", "exact", "trials", "hits", "empirical", "ci_low", "ci_high"}, {}};
    t.rows.push_back({format_number(r.x0), format_number(r.exact), std::to_string(r.trials),
                      std::to_string(r.hits), format_number(r.empirical),
                      format_number(r.ci.low), format_number(r.ci.high)});
    return t;
}

CsvTable to_csv(const KickDemoReport& r)
{
    CsvTable t{{"phi", "theta", "x_after", "energy", "projection_residual"}, {}};
    for (const auto& row : r.table) {
        const double v[] = {row.phi, row.theta, row.x_after, row.energy, row.projection_residual};
        t.add_row(v);
    }
    return t;
}

namespace {

nlohmann::ordered_json interval_json(const Interval& ci)
{
    return nlohmann::ordered_json::array({ci.low, ci.high});
}

nlohmann::ordered_json summary_json(const SampleSummary& s)
{
    nlohmann::ordered_json j;
    j["samples"] = s.count;
    j["mean"] = s.mean;
    j["median"] = s.median;
    j["stderr"] = s.standard_error;
    return j;
}

} // namespace

nlohmann::ordered_json to_json(const ScenarioConfig& config)
{
    nlohmann::ordered_json j;
    j["scenario"] = std::string(to_string(config.scenario));
    auto amps = nlohmann::ordered_json::array();
    for (const auto& c : config.initial_amplitudes.amplitudes())
        amps.push_back({c.real(), c.imag()});
    j["initial_amplitudes"] = amps;
    j["labels"] = config.initial_amplitudes.labels();
    j["intensity"] = config.params.intensity;
    j["dt"] = config.params.dt;
    j["epsilon"] = config.params.epsilon;
    j["max_time"] = config.params.max_time;
    j["dt_exceeds_stability_bound"] = config.params.exceeds_stability_bound();
    j["pump_rate"] = config.pump_rate;
    j["n_trials"] = config.n_trials;
    j["master_seed"] = config.master_seed;
    return j;
}

nlohmann::ordered_json to_json(const ExperimentReport& report)
{
    nlohmann::ordered_json j;
    j["config"] = to_json(report.config);
    auto outcomes = nlohmann::ordered_json::array();
    for (const auto& o : report.outcomes) {
        nlohmann::ordered_json oj;
        oj["label"] = o.label;
        oj["count"] = o.count;
        oj["frequency"] = o.frequency;
        oj["ci95"] = interval_json(o.ci);
        outcomes.push_back(std::move(oj));
    }
    j["outcomes"] = std::move(outcomes);
    j["unabsorbed"] = report.unabsorbed;
    j["absorption_time"] = summary_json(report.absorption_time);
    if (report.escape) {
        nlohmann::ordered_json e;
        e["count"] = report.escape->count;
        e["mean_direction"] = report.escape->mean_direction;
        e["mean_direction_norm"] = report.escape->mean_direction_norm;
        j["escape"] = std::move(e);
    }
    return j;
}

nlohmann::ordered_json to_json(const CasimirSweep& sweep)
{
    nlohmann::ordered_json j;
    auto points = nlohmann::ordered_json::array();
    for (const auto& p : sweep.points) {
        nlohmann::ordered_json pj;
        pj["intensity"] = p.intensity;
        pj["report"] = to_json(p.report);
        points.push_back(std::move(pj));
    }
    j["points"] = std::move(points);
    j["monotone_decreasing"] = sweep.monotone_decreasing;
    j["max_scaling_deviation"] = sweep.max_scaling_deviation;
    return j;
}

nlohmann::ordered_json to_json(const BornExactReport& r)
{
    nlohmann::ordered_json j;
    j["x0"] = r.x0;
    j["exact"] = r.exact;
    j["trials"] = r.trials;
    j["hits"] = r.hits;
    j["empirical"] = r.empirical;
    j["ci997"] = interval_json(r.ci);
    j["exact_within_interval"] = r.exact_within_interval;
    j["seed"] = r.seed;
    return j;
}

nlohmann::ordered_json to_json(const KickDemoReport& r)
{
    nlohmann::ordered_json j;
    auto table = nlohmann::ordered_json::array();
    for (const auto& row : r.table) {
        nlohmann::ordered_json rj;
        rj["phi"] = row.phi;
        rj["theta"] = row.theta;
        rj["x_after"] = row.x_after;
        rj["energy"] = row.energy;
        rj["projection_residual"] = row.projection_residual;
        table.push_back(std::move(rj));
    }
    j["kicks"] = std::move(table);
    nlohmann::ordered_json chain;
    chain["x0"] = r.x0;
    chain["width"] = r.chain.width;
    chain["epsilon"] = r.chain.epsilon;
    chain["max_kicks"] = r.chain.max_kicks;
    chain["trials"] = r.trials;
    chain["hits"] = r.hits;
    chain["unresolved"] = r.unresolved;
    chain["hit1_freq"] = static_cast<double>(r.hits) / static_cast<double>(r.trials);
    chain["ci95"] = interval_json(r.ci);
    chain["mean_kicks"] = r.mean_kicks;
    chain["seed"] = r.seed;
    j["chain"] = std::move(chain);
    return j;
}

namespace {

std::string trim(std::string s)
{
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

double parse_double(const std::string& key, const std::string& text)
{
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw InvalidArgument("config key '" + key + "': cannot parse number '" + text + "'");
    return v;
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& text)
{
    std::uint64_t v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw InvalidArgument("config key '" + key + "': cannot parse integer '" + text + "'");
    return v;
}

std::vector<Complex> parse_amplitudes(const std::string& text)
{
    std::istringstream in(text);
    in.imbue(std::locale::classic());
    std::vector<Complex> out;
    std::string token;
    while (in >> token) {
        std::istringstream tin(token);
        tin.imbue(std::locale::classic());
        Complex c;
        if (!(tin >> c) || tin.peek() != std::char_traits<char>::eof())
            throw InvalidArgument("config key 'initial_amplitudes': bad amplitude '" + token + "'");
        out.push_back(c);
    }
    return out;
}

std::vector<std::string> labels_for(ScenarioKind kind)
{
    switch (kind) {
    case ScenarioKind::one_atom: return one_atom_labels();
    case ScenarioKind::two_atom: return two_atom_labels();
    case ScenarioKind::three_atom: return three_atom_labels();
    }
    return {};
}

} // namespace

ScenarioConfig parse_config(std::istream& in)
{
    ScenarioConfig config;
    std::optional<std::vector<Complex>> amplitudes;
    bool have_max_time = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidArgument("config line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "scenario")
            config.scenario = parse_scenario_kind(value);
        else if (key == "initial_amplitudes")
            amplitudes = parse_amplitudes(value);
        else if (key == "intensity")
            config.params.intensity = parse_double(key, value);
        else if (key == "dt")
            config.params.dt = parse_double(key, value);
        else if (key == "epsilon")
            config.params.epsilon = parse_double(key, value);
        else if (key == "max_time") {
            config.params.max_time = parse_double(key, value);
            have_max_time = true;
        } else if (key == "pump_rate")
            config.pump_rate = parse_double(key, value);
        else if (key == "n_trials")
            config.n_trials = parse_unsigned(key, value);
        else if (key == "master_seed")
            config.master_seed = parse_unsigned(key, value);
        else
            throw InvalidArgument("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    if (!have_max_time && config.params.intensity > 0.0)
        config.params.max_time = 100.0 / config.params.intensity;

    if (amplitudes) {
        config.initial_amplitudes =
            EntangledAmplitudes(std::move(*amplitudes), labels_for(config.scenario));
    } else {
        const double w = 1.0 / std::sqrt(static_cast<double>(scenario_dimension(config.scenario)));
        std::vector<Complex> equal(scenario_dimension(config.scenario), Complex{w});
        config.initial_amplitudes = EntangledAmplitudes(std::move(equal), labels_for(config.scenario));
    }
    config.validate();
    return config;
}

ScenarioConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open config '" + path.string() + "'");
    return parse_config(in);
}

void write_config(const ScenarioConfig& config, std::ostream& out)
{
    out << "scenario = " << to_string(config.scenario) << '\n';
    out << "initial_amplitudes =";
    for (const auto& c : config.initial_amplitudes.amplitudes())
        out << " (" << format_number(c.real()) << ',' << format_number(c.imag()) << ')';
    out << '\n';
    out << "intensity = " << format_number(config.params.intensity) << '\n';
    out << "dt = " << format_number(config.params.dt) << '\n';
    out << "epsilon = " << format_number(config.params.epsilon) << '\n';
    out << "max_time = " << format_number(config.params.max_time) << '\n';
    out << "pump_rate = " << format_number(config.pump_rate) << '\n';
    out << "n_trials = " << config.n_trials << '\n';
    out << "master_seed = " << config.master_seed << '\n';
}

} // namespace collapsim
