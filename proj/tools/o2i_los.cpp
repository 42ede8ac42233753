// o2i-los: LoS / coverage probability sweeps for a base station serving a room
// through a single window.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "o2i/constants.hpp"
#include "o2i/error.hpp"
#include "o2i/los.hpp"
#include "o2i/sweep.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw o2i::ConfigError("cannot read config file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

struct SweepArgs {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<int> oracle_n;
    bool timestamp = false;
};

int run_sweep_command(const SweepArgs& args) {
    o2i::SweepSpec spec = o2i::parse_config(read_file(args.config));
    if (args.seed) spec.seed = *args.seed;
    if (args.oracle_n) {
        if (*args.oracle_n < 10) throw o2i::ConfigError("oracle_n must be at least 10");
        spec.oracle_n = *args.oracle_n;
    }

    o2i::RunRecord record = o2i::run_sweep(spec);
    if (args.timestamp) record.timestamp = utc_timestamp();

    if (args.out.empty()) {
        o2i::emit_csv(record, std::cout);
    } else {
        std::ofstream file(args.out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open '" + args.out + "' for writing");
        o2i::emit_csv(record, file);
    }
    return 0;
}

struct SceneArgs {
    double room_m = 20.0;
    double window_m = 2.0;
    double bs_distance_m = 5.0;
    double theta_deg = 0.0;
    double frequency_hz = 28e9;
};

int run_los_point(const SceneArgs& s, double ms_x, double ms_y) {
    const o2i::SceneGeometry scene{s.room_m, s.window_m, s.bs_distance_m, o2i::deg_to_rad(s.theta_deg)};
    const auto diag = o2i::los_diagnostics(scene, {ms_x, ms_y}, s.frequency_hz);
    const auto bs = o2i::bs_position(scene);
    const double required = o2i::kClearanceRatio * diag.fresnel_radius;

    std::cout << std::setprecision(10);
    std::cout << "bs=(" << bs.x << ", " << bs.y << ")\n"
              << "ms=(" << ms_x << ", " << ms_y << ")\n"
              << "crossing_y=" << diag.path.crossing.y << '\n'
              << "d1=" << diag.path.d1 << '\n'
              << "d2=" << diag.path.d2 << '\n'
              << "fresnel_radius=" << diag.fresnel_radius << '\n'
              << "required_clearance=" << required << '\n'
              << "delta_lower=" << diag.delta_lower << '\n'
              << "delta_upper=" << diag.delta_upper << '\n'
              << "through_window=" << (diag.through_window ? "true" : "false") << '\n'
              << "los=" << (diag.los ? "true" : "false") << '\n';
    return 0;
}

void add_scene_flags(CLI::App* cmd, SceneArgs& s) {
    cmd->add_option("--room-m", s.room_m, "Room side length [m]")->capture_default_str();
    cmd->add_option("--window-m", s.window_m, "Window width [m]")->capture_default_str();
    cmd->add_option("--bs-distance-m", s.bs_distance_m, "BS standoff from the window wall [m]")
        ->capture_default_str();
    cmd->add_option("--theta-deg", s.theta_deg, "BS aspect angle [deg]")->capture_default_str();
    cmd->add_option("--frequency-hz", s.frequency_hz, "Carrier frequency [Hz]")->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Outdoor-to-indoor LoS and coverage probability through a window", "o2i-los"};
    app.set_version_flag("--version", std::string(o2i::kToolVersion));
    app.require_subcommand(1);

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run a parameter sweep and emit CSV");
    sweep_cmd->add_option("--config", sweep.config, "Sweep config (key=value)")->required();
    sweep_cmd->add_option("--out", sweep.out, "Output CSV (default: stdout)");
    sweep_cmd->add_option("--seed", sweep.seed, "Override config seed");
    sweep_cmd->add_option("--oracle-n", sweep.oracle_n, "Grid points per axis for p_los_grid");
    sweep_cmd->add_flag("--timestamp", sweep.timestamp, "Record the run time in the CSV header");

    double cf_window = 0.0, cf_distance = 0.0, cf_room = 0.0;
    auto* cf_cmd = app.add_subcommand("critical-freq", "Print the critical frequency in Hz");
    cf_cmd->add_option("--window-m", cf_window, "Window width [m]")->required();
    cf_cmd->add_option("--bs-distance-m", cf_distance, "BS standoff [m]")->required();
    cf_cmd->add_option("--room-m", cf_room, "Room side length [m]")->required();

    SceneArgs scene;
    double ms_x = 0.0, ms_y = 0.0;
    auto* point_cmd = app.add_subcommand("los-point", "Clearance diagnostics for one MS position");
    point_cmd->add_option("--ms-x", ms_x, "MS depth into the room [m]")->required();
    point_cmd->add_option("--ms-y", ms_y, "MS lateral offset [m]")->required();
    add_scene_flags(point_cmd, scene);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (sweep_cmd->parsed()) return run_sweep_command(sweep);
        if (cf_cmd->parsed()) {
            std::cout << o2i::format_double(o2i::critical_frequency(cf_window, cf_distance, cf_room))
                      << '\n';
            return 0;
        }
        if (point_cmd->parsed()) return run_los_point(scene, ms_x, ms_y);
    } catch (const o2i::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const o2i::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
