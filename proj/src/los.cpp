#include "o2i/los.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "o2i/constants.hpp"
#include "o2i/diffraction.hpp"
#include "o2i/error.hpp"
#include "o2i/parallel.hpp"

namespace o2i {

namespace {

void require_frequency(double frequency_hz) {
    if (!std::isfinite(frequency_hz) || frequency_hz <= 0.0)
        throw DomainError("frequency must be positive");
}

// Closed-form probability before clamping to [0, 1].
double closed_form_unclamped(const SceneGeometry& scene, double frequency_hz) {
    require_frequency(frequency_hz);
    const double angle = phi(scene, wavelength(frequency_hz));
    const double near = d1(scene);
    const double far = near + d2(scene);
    return angle * (far * far - near * near) / (scene.room_side * scene.room_side);
}

// Precomputed per-scene state for the inner loop of the grid oracle.
class ClearanceTest {
public:
    ClearanceTest(const SceneGeometry& scene, double frequency_hz)
        : bs_(bs_position(scene)),
          half_window_(scene.window_width / 2.0),
          lambda_(wavelength(frequency_hz)) {}

    LosDiagnostics evaluate(Point2D ms) const {
        LosDiagnostics out;
        if (ms.x == 0.0) {
            // MS in the wall plane; only the opening itself is reachable.
            out.path = {distance(bs_, ms), 0.0, ms};
            out.through_window = std::abs(ms.y) < half_window_;
            out.los = out.through_window;
            return out;
        }
        out.path = path_decomposition(bs_, ms);
        out.through_window = std::abs(out.path.crossing.y) < half_window_;
        out.fresnel_radius = fresnel_radius(out.path.d1, out.path.d2, lambda_);
        out.delta_lower = intrusion_distance(bs_, ms, {0.0, -half_window_});
        out.delta_upper = intrusion_distance(bs_, ms, {0.0, half_window_});
        const double required = kClearanceRatio * out.fresnel_radius;
        out.los = out.through_window && out.delta_lower >= required && out.delta_upper >= required;
        return out;
    }

    bool los(Point2D ms) const { return evaluate(ms).los; }

private:
    Point2D bs_;
    double half_window_;
    double lambda_;
};

} // namespace

double phi(const SceneGeometry& scene, double wavelength) {
    if (!std::isfinite(wavelength) || wavelength <= 0.0)
        throw DomainError("wavelength must be positive");
    const double cos_t = std::cos(scene.bs_angle);
    const double r_d = fresnel_radius(d1(scene), d2(scene), wavelength);
    const double value =
        (scene.window_width * cos_t * cos_t - 2.0 * kClearanceRatio * r_d * cos_t) /
        (2.0 * scene.bs_distance);
    return std::max(value, 0.0);
}

double p_los_closed(const SceneGeometry& scene, double frequency_hz) {
    return std::clamp(closed_form_unclamped(scene, frequency_hz), 0.0, 1.0);
}

double p_los_optical(const SceneGeometry& scene) {
    validate(scene);
    const double p =
        scene.window_width * (1.0 / scene.room_side + 1.0 / (2.0 * scene.bs_distance));
    return std::clamp(p, 0.0, 1.0);
}

double critical_frequency(double window_width, double bs_distance, double room_side) {
    for (double v : {window_width, bs_distance, room_side})
        if (!std::isfinite(v) || v <= 0.0) throw DomainError("critical frequency inputs must be positive");
    const double k = 2.0 * kClearanceRatio / window_width;
    return k * k * kSpeedOfLight * bs_distance * room_side / (bs_distance + room_side);
}

LosDiagnostics los_diagnostics(const SceneGeometry& scene, Point2D ms, double frequency_hz) {
    validate(scene);
    require_frequency(frequency_hz);
    if (!std::isfinite(ms.x) || !std::isfinite(ms.y) || !inside_room(scene, ms))
        throw DomainError("MS outside room");
    return ClearanceTest(scene, frequency_hz).evaluate(ms);
}

bool is_los(const SceneGeometry& scene, Point2D ms, double frequency_hz) {
    return los_diagnostics(scene, ms, frequency_hz).los;
}

double p_los_grid(const SceneGeometry& scene, double frequency_hz, const GridSpec& grid) {
    validate(scene);
    require_frequency(frequency_hz);
    if (grid.n < 10) throw DomainError("grid n must be at least 10");

    const ClearanceTest test(scene, frequency_hz);
    const auto n = static_cast<std::size_t>(grid.n);
    const double cell = scene.room_side / static_cast<double>(n);
    const double y0 = -scene.room_side / 2.0;

    std::vector<std::size_t> row_counts(n, 0);
    parallel_chunks(n, resolve_thread_count(grid.threads), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const double x = (static_cast<double>(i) + 0.5) * cell;
            std::size_t count = 0;
            for (std::size_t j = 0; j < n; ++j) {
                const double y = y0 + (static_cast<double>(j) + 0.5) * cell;
                if (test.los({x, y})) ++count;
            }
            row_counts[i] = count;
        }
    });

    std::size_t total = 0;
    for (std::size_t c : row_counts) total += c;
    return static_cast<double>(total) / static_cast<double>(n * n);
}

LosEvaluation evaluate_los(const SceneGeometry& scene, double frequency_hz,
                           const std::optional<GridSpec>& grid) {
    LosEvaluation out;
    const double raw = closed_form_unclamped(scene, frequency_hz);
    out.p_closed = std::clamp(raw, 0.0, 1.0);
    out.clamped = raw > 1.0;
    out.p_optical = p_los_optical(scene);
    out.below_critical =
        frequency_hz <= critical_frequency(scene.window_width, scene.bs_distance, scene.room_side);
    if (grid) out.p_grid = p_los_grid(scene, frequency_hz, *grid);
    return out;
}

} // namespace o2i
