#include "o2i/sweep.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "o2i/constants.hpp"
#include "o2i/coverage.hpp"
#include "o2i/diffraction.hpp"
#include "o2i/error.hpp"
#include "o2i/geometry.hpp"
#include "o2i/los.hpp"

namespace o2i {

namespace {

struct ValueKey {
    std::string_view key;
    double ScenarioValues::*member;
};

constexpr std::array kValueKeys{
    ValueKey{"room_m", &ScenarioValues::room_m},
    ValueKey{"window_m", &ScenarioValues::window_m},
    ValueKey{"bs_distance_m", &ScenarioValues::bs_distance_m},
    ValueKey{"theta_deg", &ScenarioValues::theta_deg},
    ValueKey{"frequency_hz", &ScenarioValues::frequency_hz},
    ValueKey{"delta_over_rd", &ScenarioValues::delta_over_rd},
    ValueKey{"d1_m", &ScenarioValues::d1_m},
    ValueKey{"d2_m", &ScenarioValues::d2_m},
    ValueKey{"ms_distance_m", &ScenarioValues::ms_distance_m},
    ValueKey{"tx_power_dbm", &ScenarioValues::tx_power_dbm},
    ValueKey{"noise_floor_dbm", &ScenarioValues::noise_floor_dbm},
    ValueKey{"snr_threshold_db", &ScenarioValues::snr_threshold_db},
    ValueKey{"m_los", &ScenarioValues::m_los},
    ValueKey{"m_nlos", &ScenarioValues::m_nlos},
    ValueKey{"n_los", &ScenarioValues::n_los},
    ValueKey{"n_nlos", &ScenarioValues::n_nlos},
};

constexpr std::array kSweepParams{SweepParam::theta_deg, SweepParam::frequency_hz,
                                  SweepParam::window_m,  SweepParam::room_m,
                                  SweepParam::bs_distance_m, SweepParam::delta_over_rd};

constexpr std::array kOutputs{Output::p_los_closed, Output::p_los_grid,
                              Output::p_los_optical, Output::path_loss_db,
                              Output::p_cov, Output::critical_frequency_hz};

double ScenarioValues::*member_for(SweepParam p) {
    for (const auto& k : kValueKeys)
        if (k.key == name(p)) return k.member;
    return nullptr; // unreachable: every sweep parameter is a value key
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
        throw ConfigError("key '" + std::string(key) + "': invalid number '" + std::string(text) + "'");
    return v;
}

template <typename Int>
Int parse_integer(std::string_view key, std::string_view text) {
    Int v{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ConfigError("key '" + std::string(key) + "': invalid integer '" + std::string(text) + "'");
    return v;
}

SceneGeometry scene_of(const ScenarioValues& v) {
    return {v.room_m, v.window_m, v.bs_distance_m, deg_to_rad(v.theta_deg)};
}

FadingModel fading_of(const ScenarioValues& v) { return {v.m_los, v.m_nlos, v.n_los, v.n_nlos}; }

LinkBudget budget_of(const ScenarioValues& v) {
    return {v.tx_power_dbm, v.noise_floor_dbm, v.snr_threshold_db, v.frequency_hz};
}

double evaluate(Output out, const ScenarioValues& v, const SweepSpec& spec) {
    switch (out) {
        case Output::p_los_closed:
            return p_los_closed(scene_of(v), v.frequency_hz);
        case Output::p_los_grid:
            return p_los_grid(scene_of(v), v.frequency_hz, GridSpec{spec.oracle_n, spec.seed, 0});
        case Output::p_los_optical:
            return p_los_optical(scene_of(v));
        case Output::path_loss_db: {
            if (!(v.frequency_hz > 0.0)) throw DomainError("frequency must be positive");
            const double lambda = wavelength(v.frequency_hz);
            const double r_d = fresnel_radius(v.d1_m, v.d2_m, lambda);
            return total_path_loss_db(v.d1_m, v.d2_m, v.delta_over_rd * r_d, lambda);
        }
        case Output::p_cov:
            return coverage_probability(v.bs_distance_m, v.ms_distance_m, v.window_m, fading_of(v),
                                        budget_of(v))
                .p_cov;
        case Output::critical_frequency_hz:
            return critical_frequency(v.window_m, v.bs_distance_m, v.room_m);
    }
    return 0.0;
}

} // namespace

std::string_view name(SweepParam p) {
    switch (p) {
        case SweepParam::theta_deg: return "theta_deg";
        case SweepParam::frequency_hz: return "frequency_hz";
        case SweepParam::window_m: return "window_m";
        case SweepParam::room_m: return "room_m";
        case SweepParam::bs_distance_m: return "bs_distance_m";
        case SweepParam::delta_over_rd: return "delta_over_rd";
    }
    return {};
}

std::string_view name(Output o) {
    switch (o) {
        case Output::p_los_closed: return "p_los_closed";
        case Output::p_los_grid: return "p_los_grid";
        case Output::p_los_optical: return "p_los_optical";
        case Output::path_loss_db: return "path_loss_db";
        case Output::p_cov: return "p_cov";
        case Output::critical_frequency_hz: return "critical_frequency_hz";
    }
    return {};
}

std::string format_double(double v) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

std::size_t SweepSpec::point_count() const {
    // Tolerate representation error in (stop - start) / step, e.g. 0.1 steps.
    const double span = (stop - start) / step;
    return static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
}

double SweepSpec::point(std::size_t i) const { return start + static_cast<double>(i) * step; }

SweepSpec parse_config(std::string_view text) {
    SweepSpec spec;
    std::set<std::string, std::less<>> seen;
    std::optional<SweepParam> swept;
    std::optional<double> start, stop, step;

    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (!seen.emplace(key).second) throw ConfigError("duplicate key '" + std::string(key) + "'");

        if (key == "sweep") {
            const auto it = std::find_if(kSweepParams.begin(), kSweepParams.end(),
                                         [&](SweepParam p) { return name(p) == value; });
            if (it == kSweepParams.end())
                throw ConfigError("key 'sweep': unknown parameter '" + std::string(value) + "'");
            swept = *it;
        } else if (key == "start") {
            start = parse_double(key, value);
        } else if (key == "stop") {
            stop = parse_double(key, value);
        } else if (key == "step") {
            step = parse_double(key, value);
        } else if (key == "outputs") {
            spec.outputs.clear();
            std::string_view rest = value;
            while (!rest.empty()) {
                const auto comma = rest.find(',');
                const std::string_view item = trim(rest.substr(0, comma));
                rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
                if (item.empty()) continue;
                const auto it = std::find_if(kOutputs.begin(), kOutputs.end(),
                                             [&](Output o) { return name(o) == item; });
                if (it == kOutputs.end())
                    throw ConfigError("key 'outputs': unknown output '" + std::string(item) + "'");
                spec.outputs.push_back(*it);
            }
        } else if (key == "oracle_n") {
            spec.oracle_n = parse_integer<int>(key, value);
        } else if (key == "seed") {
            spec.seed = parse_integer<std::uint64_t>(key, value);
        } else {
            const auto it = std::find_if(kValueKeys.begin(), kValueKeys.end(),
                                         [&](const ValueKey& k) { return k.key == key; });
            if (it == kValueKeys.end()) throw ConfigError("unknown key '" + std::string(key) + "'");
            spec.fixed.*(it->member) = parse_double(key, value);
        }
    }

    if (step && !(*step > 0.0)) throw ConfigError("step must be positive");

    // Scene and radio invariants, with the swept parameter at its first point.
    ScenarioValues probe = spec.fixed;
    if (swept && start) probe.*member_for(*swept) = *start;
    try {
        validate(scene_of(probe));
        validate(fading_of(probe));
        validate(budget_of(probe));
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    if (spec.oracle_n < 10) throw ConfigError("oracle_n must be at least 10");

    if (!swept) throw ConfigError("missing key 'sweep'");
    if (!start) throw ConfigError("missing swept-range key 'start'");
    if (!stop) throw ConfigError("missing swept-range key 'stop'");
    if (!step) throw ConfigError("missing swept-range key 'step'");
    if (!(*start < *stop)) throw ConfigError("start must be less than stop");
    if (seen.contains(name(*swept)))
        throw ConfigError("swept parameter '" + std::string(name(*swept)) + "' is also fixed");

    spec.swept = *swept;
    spec.start = *start;
    spec.stop = *stop;
    spec.step = *step;
    return spec;
}

std::string echo_config(const SweepSpec& spec) {
    std::ostringstream out;
    out << "sweep=" << name(spec.swept) << '\n';
    out << "start=" << format_double(spec.start) << '\n';
    out << "stop=" << format_double(spec.stop) << '\n';
    out << "step=" << format_double(spec.step) << '\n';
    out << "outputs=";
    for (std::size_t i = 0; i < spec.outputs.size(); ++i)
        out << (i ? "," : "") << name(spec.outputs[i]);
    out << '\n';
    out << "oracle_n=" << spec.oracle_n << '\n';
    out << "seed=" << spec.seed << '\n';
    for (const auto& k : kValueKeys) {
        if (k.key == name(spec.swept)) continue;
        out << k.key << '=' << format_double(spec.fixed.*(k.member)) << '\n';
    }
    return out.str();
}

RunRecord run_sweep(const SweepSpec& spec) {
    RunRecord record;
    record.spec = spec;
    const std::size_t n = spec.point_count();
    record.swept_values.reserve(n);
    record.rows.reserve(n);

    for (std::size_t i = 0; i < n; ++i) {
        const double x = spec.point(i);
        ScenarioValues values = spec.fixed;
        values.*member_for(spec.swept) = x;

        std::vector<double> row;
        row.reserve(spec.outputs.size());
        try {
            for (Output o : spec.outputs) row.push_back(evaluate(o, values, spec));
        } catch (const DomainError& e) {
            throw DomainError(std::string(name(spec.swept)) + "=" + format_double(x) + ": " + e.what());
        }
        record.swept_values.push_back(x);
        record.rows.push_back(std::move(row));
    }
    return record;
}

void emit_csv(const RunRecord& record, std::ostream& out) {
    out << "## o2i-los " << record.tool_version << '\n';
    if (record.timestamp) out << "## timestamp=" << *record.timestamp << '\n';

    std::istringstream echo(echo_config(record.spec));
    for (std::string line; std::getline(echo, line);) out << "# " << line << '\n';

    out << name(record.spec.swept);
    for (Output o : record.spec.outputs) out << ',' << name(o);
    out << '\n';

    for (std::size_t i = 0; i < record.rows.size(); ++i) {
        out << format_double(record.swept_values[i]);
        for (double v : record.rows[i]) out << ',' << format_double(v);
        out << '\n';
    }
    out.flush();
    if (!out) throw std::runtime_error("failed to write CSV output");
}

} // namespace o2i
