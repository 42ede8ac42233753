#include "o2i/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "o2i/error.hpp"

namespace o2i {

double distance(Point2D a, Point2D b) { return std::hypot(b.x - a.x, b.y - a.y); }

void validate(const SceneGeometry& scene) {
    auto positive = [](double v, const char* name) {
        if (!std::isfinite(v) || v <= 0.0)
            throw DomainError(std::string(name) + " must be positive");
    };
    positive(scene.room_side, "room_side");
    positive(scene.window_width, "window_width");
    positive(scene.bs_distance, "bs_distance");
    if (scene.window_width > scene.room_side) throw DomainError("window exceeds room");
    if (!std::isfinite(scene.bs_angle) || std::abs(scene.bs_angle) >= std::numbers::pi / 2)
        throw DomainError("bs_angle must satisfy |theta| < 90 deg");
}

double corner_angle() { return std::atan(0.5); }

Point2D bs_position(const SceneGeometry& scene) {
    validate(scene);
    return {-scene.bs_distance, -scene.bs_distance * std::tan(scene.bs_angle)};
}

double d1(const SceneGeometry& scene) {
    validate(scene);
    return scene.bs_distance / std::cos(scene.bs_angle);
}

double d2(const SceneGeometry& scene) {
    validate(scene);
    const double theta = std::abs(scene.bs_angle);
    if (theta < corner_angle()) return scene.room_side / std::cos(theta);
    return scene.room_side / (2.0 * std::sin(theta));
}

bool inside_room(const SceneGeometry& scene, Point2D p) {
    const double half = scene.room_side / 2.0;
    return p.x >= 0.0 && p.x <= scene.room_side && p.y >= -half && p.y <= half;
}

double intrusion_distance(Point2D bs, Point2D ms, Point2D edge) {
    const double dx = ms.x - bs.x;
    const double dy = ms.y - bs.y;
    const double len = std::hypot(dx, dy);
    if (len == 0.0) throw DomainError("coincident endpoints");

    const double outward = edge.y >= 0.0 ? 1.0 : -1.0;
    if (dx == 0.0) {
        // Parallel to the wall: never passes through the opening.
        return -std::abs(edge.x - bs.x);
    }
    const double y_cross = bs.y + dy * (edge.x - bs.x) / dx;
    return outward * (edge.y - y_cross) * std::abs(dx) / len;
}

PathDecomposition path_decomposition(Point2D bs, Point2D ms) {
    if (!(bs.x < 0.0 && ms.x > 0.0)) throw DomainError("no wall crossing");
    const double t = -bs.x / (ms.x - bs.x);
    const Point2D crossing{0.0, bs.y + t * (ms.y - bs.y)};
    return {distance(bs, crossing), distance(crossing, ms), crossing};
}

} // namespace o2i
