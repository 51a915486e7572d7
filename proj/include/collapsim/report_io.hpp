#pragma once

#include "collapsim/experiments.hpp"
#include "collapsim/scenario.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace collapsim {

// Shortest text that parses back to the same double (at most 17
// significant digits).
std::string format_number(double value);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::span<const double> values);
};

// Header row, one line per record, '\n' line endings.
void emit_csv(const CsvTable& table, std::ostream& out);
void emit_csv(const CsvTable& table, const std::filesystem::path& path);

// Aligned columns for human reading.
void emit_text(const CsvTable& table, std::ostream& out);

CsvTable to_csv(const ExperimentReport& report);
// Columns intensity,mean_time,stderr,hit1_freq,ci_low,ci_high.
CsvTable to_csv(const CasimirSweep& sweep);
CsvTable to_csv(const BornExactReport& report);
CsvTable to_csv(const KickDemoReport& report);

nlohmann::ordered_json to_json(const ScenarioConfig& config);
nlohmann::ordered_json to_json(const ExperimentReport& report);
nlohmann::ordered_json to_json(const CasimirSweep& sweep);
nlohmann::ordered_json to_json(const BornExactReport& report);
nlohmann::ordered_json to_json(const KickDemoReport& report);

// Flat "key = value" configuration; '#' starts a comment. Keys: scenario,
// initial_amplitudes (whitespace-separated, each "re" or "(re,im)"),
// intensity, dt, epsilon, max_time, pump_rate, n_trials, master_seed.
// Omitted keys keep their defaults; max_time defaults to 100 / intensity.
ScenarioConfig parse_config(std::istream& in);
ScenarioConfig load_config(const std::filesystem::path& path);
void write_config(const ScenarioConfig& config, std::ostream& out);

} // namespace collapsim
