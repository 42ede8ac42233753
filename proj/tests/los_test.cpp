#include "doctest.h"

#include <cmath>
#include <cstdlib>

#include "o2i/constants.hpp"
#include "o2i/diffraction.hpp"
#include "o2i/error.hpp"
#include "o2i/los.hpp"
#include "o2i/parallel.hpp"
#include "oracles.hpp"

using namespace o2i;
using doctest::Approx;

namespace {

SceneGeometry reference_scene(double theta_deg = 0.0) { return {20.0, 2.0, 5.0, deg_to_rad(theta_deg)}; }

// MS y at depth x whose upper-edge clearance is exactly k * r_d.
double ms_y_for_clearance(const SceneGeometry& scene, double x, double k, double frequency_hz) {
    const Point2D bs = bs_position(scene);
    const Point2D edge{0.0, scene.window_width / 2.0};
    const double lambda = wavelength(frequency_hz);
    auto excess = [&](double y) {
        const auto p = path_decomposition(bs, {x, y});
        return intrusion_distance(bs, {x, y}, edge) - k * fresnel_radius(p.d1, p.d2, lambda);
    };
    // Bracket between the MS positions whose path crosses the wall at the window
    // centre (excess > 0) and exactly at the upper edge (excess < 0).
    auto y_for_crossing = [&](double yc) { return bs.y + (yc - bs.y) * (x - bs.x) / (-bs.x); };
    double lo = y_for_crossing(0.0), hi = y_for_crossing(edge.y);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (excess(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

TEST_CASE("phi") {
    CHECK(phi(reference_scene(), 1e-14) == Approx(0.2).epsilon(1e-6));
    CHECK(phi(reference_scene(), wavelength(28e9)) == Approx(0.1751662).epsilon(1e-6));
    const double fc = critical_frequency(2, 5, 20);
    CHECK(std::abs(phi(reference_scene(), wavelength(fc))) < 1e-12);
    CHECK(phi(reference_scene(), wavelength(0.5 * fc)) == 0.0);
    CHECK_THROWS_AS(phi(reference_scene(), 0.0), DomainError);
}

TEST_CASE("p_los_closed") {
    CHECK(p_los_closed(reference_scene(), 28e9) == Approx(0.2627494).epsilon(1e-6));
    const double fc = critical_frequency(2, 5, 20);
    CHECK(p_los_closed(reference_scene(), fc) < 1e-12);
    CHECK(p_los_closed(reference_scene(), 0.5 * fc) == 0.0);
    CHECK(p_los_closed(reference_scene(), 1.01 * fc) > 0.0);

    const double side = p_los_closed(reference_scene(45), 28e9);
    CHECK(side > 0.0);
    CHECK(std::abs(side - p_los_grid(reference_scene(45), 28e9, {1000})) <= 0.03);
    CHECK_THROWS_AS(p_los_closed(reference_scene(), 0.0), DomainError);
}

TEST_CASE("p_los_optical") {
    CHECK(p_los_optical(reference_scene()) == Approx(0.3).epsilon(1e-15));
    CHECK(p_los_optical({20, 1e-9, 5, 0}) < 1e-9);
    CHECK(p_los_optical({20, 2, 1e12, 0}) == Approx(0.1).epsilon(1e-9));
    CHECK(p_los_optical({10, 5, 2, 0}) == 1.0);
    for (double w : {0.5, 1.0, 1.5, 2.5}) {
        CHECK(p_los_optical({20, 2 * w, 5, 0}) == 2 * p_los_optical({20, w, 5, 0}));
    }
}

TEST_CASE("critical_frequency") {
    CHECK(critical_frequency(2, 5, 20) == Approx(431701139.52).epsilon(1e-10));
    CHECK(critical_frequency(4, 5, 20) == Approx(critical_frequency(2, 5, 20) / 4).epsilon(1e-14));
    CHECK(critical_frequency(2, 1e12, 20) == Approx(2158505697.6).epsilon(1e-9));
    CHECK_THROWS_AS(critical_frequency(0, 5, 20), DomainError);
    CHECK_THROWS_AS(critical_frequency(2, -5, 20), DomainError);
}

TEST_CASE("is_los") {
    CHECK(is_los(reference_scene(), {20, 0}, 28e9));
    // Crosses the wall at y = 3, behind concrete.
    CHECK_FALSE(is_los(reference_scene(), {10, 9}, 28e9));
    CHECK_FALSE(is_los(reference_scene(), {10, -9}, 28e9));
    CHECK_THROWS_WITH(is_los(reference_scene(), {21, 0}, 28e9), "MS outside room");
    CHECK_THROWS_WITH(is_los(reference_scene(), {5, 10.5}, 28e9), "MS outside room");

    const auto diag = los_diagnostics(reference_scene(), {20, 0}, 28e9);
    CHECK(diag.delta_upper == Approx(1.0));
    CHECK(diag.delta_lower == Approx(1.0));
    CHECK(diag.fresnel_radius == Approx(0.2069480).epsilon(1e-6));
}

TEST_CASE("is_los threshold sits at 0.6 Fresnel radii") {
    for (double theta : {0.0, 15.0, -30.0}) {
        const auto s = reference_scene(theta);
        for (double f : {1e9, 28e9}) {
            const double y_blocked = ms_y_for_clearance(s, 15.0, 0.59, f);
            const double y_clear = ms_y_for_clearance(s, 15.0, 0.61, f);
            CHECK(y_clear < y_blocked);
            CHECK_FALSE(is_los(s, {15.0, y_blocked}, f));
            CHECK(is_los(s, {15.0, y_clear}, f));
        }
    }
}

TEST_CASE("p_los_grid against the optical polygon oracle") {
    const double f_optical = 1e15;
    // Whole wall is window at normal incidence: the entire room is visible.
    CHECK(p_los_grid({20, 20, 5, 0}, f_optical, {400}) == Approx(1.0).epsilon(1e-12));
    CHECK(oracle::optical_visible_fraction({20, 20, 5, 0}) == Approx(1.0).epsilon(1e-12));

    for (SceneGeometry s : {SceneGeometry{20, 20, 10, deg_to_rad(60)}, SceneGeometry{20, 2, 5, 0},
                            SceneGeometry{30, 3, 8, deg_to_rad(-35)}, SceneGeometry{10, 1, 2, deg_to_rad(20)}}) {
        const double want = oracle::optical_visible_fraction(s);
        const double got = p_los_grid(s, f_optical, {1000});
        CHECK(std::abs(got - want) < 5e-3);
    }
    CHECK(p_los_grid({20, 1e-6, 5, 0}, 28e9, {200}) == 0.0);
    CHECK_THROWS_AS(p_los_grid(reference_scene(), 28e9, {9}), DomainError);
}

TEST_CASE("p_los_grid is independent of thread count") {
    const double one = p_los_grid(reference_scene(30), 28e9, {300, 0, 1});
    const double many = p_los_grid(reference_scene(30), 28e9, {300, 0, 7});
    CHECK(one == many);
}

TEST_CASE("los properties") {
    // Mirror symmetry.
    for (double t = 0.0; t < 89.0; t += 3.7) {
        CHECK(p_los_closed(reference_scene(t), 28e9) == p_los_closed(reference_scene(-t), 28e9));
    }
    CHECK(std::abs(p_los_grid(reference_scene(25), 28e9, {400}) - p_los_grid(reference_scene(-25), 28e9, {400})) < 5e-3);

    // Monotone in frequency, converging to the optical bound.
    double prev = 0.0;
    double prev_gap = 1.0;
    for (double f = 1e8; f <= 1e12; f *= 1.25) {
        const double p = p_los_closed(reference_scene(), f);
        CHECK(p >= prev);
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
        const double gap = std::abs(p - p_los_optical(reference_scene()));
        CHECK(gap <= prev_gap);
        prev = p;
        prev_gap = gap;
    }
    CHECK(std::abs(p_los_closed(reference_scene(), 100e9) - 0.3) < 0.02);
}

TEST_CASE("evaluate_los flags") {
    const double fc = critical_frequency(2, 5, 20);
    auto e = evaluate_los(reference_scene(), 0.9 * fc);
    CHECK(e.below_critical);
    CHECK(e.p_closed == 0.0);
    CHECK_FALSE(e.p_grid.has_value());

    e = evaluate_los(reference_scene(), 28e9, GridSpec{200});
    CHECK_FALSE(e.below_critical);
    REQUIRE(e.p_grid.has_value());
    CHECK(std::abs(*e.p_grid - e.p_closed) < 0.03);
    CHECK(e.p_optical == Approx(0.3));

    e = evaluate_los({10, 5, 2, 0}, 28e9);
    CHECK(e.clamped);
    CHECK(e.p_closed == 1.0);
}

TEST_CASE("O2I_THREADS caps oracle parallelism") {
    CHECK(resolve_thread_count(3) == 3);
    ::setenv("O2I_THREADS", "2", 1);
    CHECK(resolve_thread_count() == 2);
    ::setenv("O2I_THREADS", "0", 1);
    CHECK(resolve_thread_count() >= 1);
    ::setenv("O2I_THREADS", "junk", 1);
    CHECK(resolve_thread_count() >= 1);
    ::unsetenv("O2I_THREADS");
}
