#pragma once

// Top-view frame shared by the whole library:
//   window wall is the line x = 0, window centre at the origin;
//   room occupies x in [0, L_r], y in [-L_r/2, L_r/2];
//   window opening is x = 0, |y| <= L_w/2;
//   BS sits outside at (-d_a, -d_a tan(theta)).

namespace o2i {

struct Point2D {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2D&, const Point2D&) = default;
};

double distance(Point2D a, Point2D b);

struct SceneGeometry {
    double room_side = 20.0;   // L_r [m]
    double window_width = 2.0; // L_w [m]
    double bs_distance = 5.0;  // d_a [m], perpendicular standoff from the window wall
    double bs_angle = 0.0;     // theta [rad], from the window-centre normal
};

// Throws DomainError naming the violated constraint.
void validate(const SceneGeometry& scene);

// Angle of the ray from the BS through the window centre to a back-wall corner.
double corner_angle(); // atan(1/2)

Point2D bs_position(const SceneGeometry& scene);

// BS to window centre.
double d1(const SceneGeometry& scene);

// Window centre to the wall hit by the central ray (back wall for |theta| < atan(1/2),
// side wall otherwise).
double d2(const SceneGeometry& scene);

bool inside_room(const SceneGeometry& scene, Point2D p);

/// Signed perpendicular distance from a window edge to the line bs-ms.
///
/// Positive when the path passes on the window-centre side of the edge (the edge
/// does not obstruct the direct path), negative when the path crosses the wall
/// beyond the edge. The value does not depend on the order of bs and ms.
/// Throws DomainError("coincident endpoints") when bs == ms.
double intrusion_distance(Point2D bs, Point2D ms, Point2D edge);

struct PathDecomposition {
    double d1 = 0.0;   // BS to wall crossing
    double d2 = 0.0;   // wall crossing to MS
    Point2D crossing;  // where segment bs-ms meets x = 0
};

// Requires bs.x < 0 < ms.x; throws DomainError("no wall crossing") otherwise.
PathDecomposition path_decomposition(Point2D bs, Point2D ms);

} // namespace o2i
