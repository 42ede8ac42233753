#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace o2i {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class SweepParam { theta_deg, frequency_hz, window_m, room_m, bs_distance_m, delta_over_rd };

enum class Output { p_los_closed, p_los_grid, p_los_optical, path_loss_db, p_cov, critical_frequency_hz };

std::string_view name(SweepParam p);
std::string_view name(Output o);

// Flat parameter set, in the units the config keys name.
struct ScenarioValues {
    double room_m = 20.0;
    double window_m = 2.0;
    double bs_distance_m = 5.0;
    double theta_deg = 0.0;
    double frequency_hz = 28e9;
    double delta_over_rd = 0.0;
    double d1_m = 8.0;  // path_loss_db geometry
    double d2_m = 20.0;
    double ms_distance_m = 20.0; // d_n for p_cov
    double tx_power_dbm = 30.0;
    double noise_floor_dbm = -100.0;
    double snr_threshold_db = -5.0;
    double m_los = 10.0;
    double m_nlos = 1.0;
    double n_los = 1.2;
    double n_nlos = 2.9;

    bool operator==(const ScenarioValues&) const = default;
};

struct SweepSpec {
    SweepParam swept = SweepParam::theta_deg;
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;
    ScenarioValues fixed;
    std::vector<Output> outputs{Output::p_los_closed};
    int oracle_n = 500;
    std::uint64_t seed = 0;

    bool operator==(const SweepSpec&) const = default;

    std::size_t point_count() const;
    double point(std::size_t i) const;
};

struct RunRecord {
    SweepSpec spec;
    std::vector<double> swept_values;
    std::vector<std::vector<double>> rows; // one entry per output, request order
    std::string tool_version{kToolVersion};
    std::optional<std::string> timestamp;
};

/// Parses a flat `key=value` document (`#` starts a comment line).
/// Throws ConfigError naming the offending key or constraint.
SweepSpec parse_config(std::string_view text);

// The `key=value` lines that reproduce `spec` through parse_config.
std::string echo_config(const SweepSpec& spec);

// Throws DomainError("<param>=<value>: ...") for the first failing point.
RunRecord run_sweep(const SweepSpec& spec);

// `##` metadata, `# key=value` echo, column header, rows. Throws std::runtime_error on write failure.
void emit_csv(const RunRecord& record, std::ostream& out);

// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

} // namespace o2i
