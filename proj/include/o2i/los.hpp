#pragma once

#include <cstdint>
#include <optional>

#include "o2i/geometry.hpp"

namespace o2i {

struct GridSpec {
    int n = 500;            // MS positions per axis
    std::uint64_t seed = 0; // reserved, the grid is deterministic
    unsigned threads = 0;   // 0 = resolve_thread_count()
};

struct LosEvaluation {
    double p_closed = 0.0;
    std::optional<double> p_grid;
    double p_optical = 0.0;
    bool below_critical = false; // frequency <= critical frequency
    bool clamped = false;        // closed form exceeded 1 before clamping
};

/// Half-angle of the LoS wedge seen from the BS, from the arc approximation
/// (L_w cos^2 theta - 1.2 r_d cos theta) / (2 d_a), with r_d evaluated at the
/// central-ray distances d1(scene), d2(scene). Floored at 0.
double phi(const SceneGeometry& scene, double wavelength);

// Arc-approximated area of the LoS region over the room area, clamped to [0, 1].
double p_los_closed(const SceneGeometry& scene, double frequency_hz);

// Frequency-independent limit L_w (1/L_r + 1/(2 d_a)) at normal incidence, clamped to [0, 1].
double p_los_optical(const SceneGeometry& scene);

// Frequency at which the clearance requirement consumes the whole window at theta = 0:
// 1.44 c d_a L_r / (L_w^2 (d_a + L_r)).
double critical_frequency(double window_width, double bs_distance, double room_side);

struct LosDiagnostics {
    PathDecomposition path;
    double fresnel_radius = 0.0;
    double delta_lower = 0.0; // intrusion at edge (0, -L_w/2)
    double delta_upper = 0.0; // intrusion at edge (0, +L_w/2)
    bool through_window = false;
    bool los = false;
};

// Full per-point clearance test. Throws DomainError("MS outside room").
LosDiagnostics los_diagnostics(const SceneGeometry& scene, Point2D ms, double frequency_hz);

// True iff the path enters through the window and both edges clear 0.6 r_d.
bool is_los(const SceneGeometry& scene, Point2D ms, double frequency_hz);

// Fraction of an N x N cell-centred grid of MS positions that are LoS.
// Bit-identical for any thread count.
double p_los_grid(const SceneGeometry& scene, double frequency_hz, const GridSpec& grid = {});

LosEvaluation evaluate_los(const SceneGeometry& scene, double frequency_hz,
                           const std::optional<GridSpec>& grid = std::nullopt);

} // namespace o2i
