#include <doctest.h>

#include <cmath>
#include <vector>

#include "circumcone/viewpoint.hpp"
#include "support.hpp"

using namespace circumcone;
using testsupport::Rng;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Crude distance from a point to a focal curve by dense parameter sampling;
// oracle-grade only.
double distance_to_curve(const Vec3& p, const FocalCurve& curve) {
    double best = 1e300;
    const int n = 4000;
    if (curve.kind == FocalKind::Ellipse) {
        for (int i = 0; i < n; ++i)
            best = std::min(best, (curve.point_at(2 * kPi * i / n) - p).norm());
    } else {
        for (int branch : {+1, -1})
            for (int i = 0; i < n; ++i)
                best = std::min(best, (curve.point_at(-4.0 + 8.0 * i / n, branch) - p).norm());
    }
    return best;
}

}  // namespace

TEST_CASE("embed_conic identifies the locus for an ellipse") {
    const auto emb = embed_conic(Conic{3, 1});
    CHECK(emb.conic_curve.kind == FocalKind::Ellipse);
    CHECK(emb.conic_curve.plane_axis == 2);
    CHECK(emb.conic_curve.denom1 == doctest::Approx(3.0));
    CHECK(emb.conic_curve.denom2 == doctest::Approx(1.0));

    // locus: x^2/2 + z^2/(-1) = 1 in the plane y = 0
    CHECK(emb.locus.kind == FocalKind::Hyperbola);
    CHECK(emb.locus.plane_axis == 1);
    CHECK(emb.locus.axis1 == 0);
    CHECK(emb.locus.axis2 == 2);
    CHECK(emb.locus.denom1 == doctest::Approx(2.0));
    CHECK(emb.locus.denom2 == doctest::Approx(-1.0));
    CHECK(emb.conic_critical == CriticalValue::C);
}

TEST_CASE("embed_conic identifies the locus for a hyperbola") {
    const auto emb = embed_conic(Conic{3, -1});
    // the conic is the focal hyperbola of the embedded system
    CHECK(emb.conic_curve.kind == FocalKind::Hyperbola);
    CHECK(emb.conic_curve.plane_axis == 2);
    CHECK(emb.conic_curve.axis1 == 0);
    CHECK(emb.conic_curve.axis2 == 1);
    CHECK(emb.conic_curve.denom1 == doctest::Approx(3.0));
    CHECK(emb.conic_curve.denom2 == doctest::Approx(-1.0));

    // locus: ellipse x^2/4 + z^2/1 = 1 in y = 0
    CHECK(emb.locus.kind == FocalKind::Ellipse);
    CHECK(emb.locus.plane_axis == 1);
    CHECK(emb.locus.axis1 == 0);
    CHECK(emb.locus.axis2 == 2);
    CHECK(emb.locus.denom1 == doctest::Approx(4.0));
    CHECK(emb.locus.denom2 == doctest::Approx(1.0));
    CHECK(emb.conic_critical == CriticalValue::B);

    CHECK_THROWS_AS(embed_conic(Conic{2, 2}), DegenerateParameters);
    CHECK_THROWS_AS(embed_conic(Conic{2, 0}), DegenerateParameters);
    CHECK_THROWS_AS(embed_conic(Conic{-1, -2}), DegenerateParameters);
}

TEST_CASE("viewing cone at the worked (4,2,1) viewpoint: theta = pi/4") {
    const auto sys = make_system(4, 2, 1);
    const auto view = viewing_cone_on_curve(sys, FocalKind::Ellipse, kPi / 4);
    CHECK(view.cone.apex.x == doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));
    CHECK(view.cone.apex.y == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(view.aperture_cos2 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(view.cone.aperture == doctest::Approx(kPi / 4).epsilon(1e-12));
    CHECK(testsupport::abs_cos(view.cone.axis.vec(), Vec3{std::sqrt(1.5), -std::sqrt(0.5), 0}) >=
          1.0 - 1e-12);

    // independent sampling of the target hyperbola confirms the half-angle
    const auto report = verify_circularity(view.cone.apex, view.cone.axis,
                                           focal_curve(sys, FocalKind::Hyperbola), 64);
    CHECK(report.max_deviation <= 1e-9);
    CHECK(report.mean_half_angle == doctest::Approx(kPi / 4).epsilon(1e-9));
}

TEST_CASE("hyperbola seen from the co-vertex of the locus ellipse: theta = 30 degrees") {
    const auto view = viewing_cone(Conic{3, -1}, kPi / 2);
    CHECK(view.cone.apex.x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(view.cone.apex.y == doctest::Approx(0.0));
    CHECK(view.cone.apex.z == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(view.cone.aperture == doctest::Approx(kPi / 6).epsilon(1e-12));
    CHECK(view.aperture_cos2 == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("toward a focus of the viewed ellipse the cone flattens") {
    // Apex at the hyperbola vertex = conic focus: theta = pi/2 exactly.
    const auto view = viewing_cone(Conic{3, 1}, 0.0);
    CHECK(view.cone.apex.x == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(view.at_locus_vertex);
    CHECK(view.cone.aperture == doctest::Approx(kPi / 2).epsilon(1e-12));

    // approaching along the locus: aperture increases toward pi/2
    double prev = 0.0;
    for (double t : {1.2, 0.8, 0.4, 0.2, 0.05}) {
        const double theta = viewing_cone(Conic{3, 1}, t).cone.aperture;
        CHECK(theta > prev);
        prev = theta;
    }
    CHECK(prev < kPi / 2);
}

TEST_CASE("viewing cones are circular across conics and parameters") {
    const Conic conics[4] = {{3, 1}, {8, 4}, {3, -1}, {5, -2}};
    for (const Conic& conic : conics) {
        const auto emb = embed_conic(conic);
        for (int i = 0; i < 25; ++i) {
            double t;
            int branch = +1;
            if (emb.locus.kind == FocalKind::Ellipse) {
                t = 2 * kPi * i / 25;
            } else {
                t = -1.5 + 3.0 * (i / 2) / 12.0;
                branch = (i % 2 == 0) ? +1 : -1;
            }
            const auto view = viewing_cone(conic, t, branch);
            const auto rep =
                verify_circularity(view.cone.apex, view.cone.axis, emb.conic_curve, 64);
            CHECK(rep.max_deviation <= 1e-9);
            CHECK(std::abs(rep.mean_half_angle - view.cone.aperture) <= 1e-9);

            // axis tangency against a finite difference of the locus
            const double h = 1e-5;
            const Vec3 fd = (emb.locus.point_at(t + h, branch) -
                             emb.locus.point_at(t - h, branch)) /
                            (2 * h);
            CHECK(view.cone.axis.vec().cross(fd / fd.norm()).norm() <= 1e-6);
        }
    }
}

TEST_CASE("off-locus apexes never see a circle") {
    Rng rng(0x0ff10c05ULL);
    const Conic conic{3, 1};
    const auto emb = embed_conic(conic);
    int done = 0;
    while (done < 60) {
        const Vec3 apex = rng.vec(-4, 4);
        if (distance_to_curve(apex, emb.locus) < 1e-2) continue;
        if (std::abs(apex[emb.conic_curve.plane_axis]) < 1e-2) continue;
        ++done;

        // candidate axes: all principal directions of the fitted cone
        std::vector<Vec3> pts;
        for (int i = 0; i < 24; ++i) pts.push_back(emb.conic_curve.point_at(2 * kPi * i / 24));
        const ConeFit fit = fit_cone_through_points(apex, pts);
        const auto e = eigen_sym3(fit.matrix);
        double best = 1e300;
        for (int i = 0; i < 3; ++i) {
            const auto rep = verify_circularity(apex, e.eigenvectors[i], emb.conic_curve, 64);
            best = std::min(best, rep.max_deviation);
        }
        CHECK(best >= 1e-4);
    }
}

TEST_CASE("the generic off-locus point (1,1,1) sees a clearly non-circular cone") {
    const auto emb = embed_conic(Conic{3, 1});
    const Vec3 apex{1, 1, 1};
    std::vector<Vec3> pts;
    for (int i = 0; i < 24; ++i) pts.push_back(emb.conic_curve.point_at(2 * kPi * i / 24));
    const auto e = eigen_sym3(fit_cone_through_points(apex, pts).matrix);
    double best = 1e300;
    for (int i = 0; i < 3; ++i) {
        const auto rep = verify_circularity(apex, e.eigenvectors[i], emb.conic_curve, 64);
        best = std::min(best, rep.max_deviation);
    }
    CHECK(best > 1e-3);
}

TEST_CASE("points on the symmetry axis are not on the locus and see no circle") {
    const Conic conic{3, 1};
    const auto emb = embed_conic(conic);
    for (double h : {0.5, 1.0, 2.0, 4.0}) {
        const Vec3 apex{0, 0, h};
        std::vector<Vec3> pts;
        for (int i = 0; i < 24; ++i) pts.push_back(emb.conic_curve.point_at(2 * kPi * i / 24));
        const ConeFit fit = fit_cone_through_points(apex, pts);
        const auto e = eigen_sym3(fit.matrix);
        double best = 1e300;
        for (int i = 0; i < 3; ++i) {
            const auto rep = verify_circularity(apex, e.eigenvectors[i], emb.conic_curve, 64);
            best = std::min(best, rep.max_deviation);
        }
        CHECK(best > 1e-3);
    }
}

TEST_CASE("aperture decreases monotonically far along the locus hyperbola") {
    const Conic conic{3, 1};
    double prev = kPi;
    for (double t = 0.5; t <= 3.01; t += 0.5) {
        const double theta = viewing_cone(conic, t).cone.aperture;
        CHECK(theta < prev);
        prev = theta;
    }
}

TEST_CASE("aperture_extremes reports foci and extreme apertures") {
    const auto e1 = aperture_extremes(Conic{3, 1});
    CHECK(e1.flat_points[0].x == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(e1.flat_points[1].x == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
    CHECK(e1.aperture_infimum_zero);
    CHECK_FALSE(e1.min_aperture.has_value());

    const auto e2 = aperture_extremes(Conic{3, -1});
    CHECK(e2.flat_points[0].x == doctest::Approx(2.0).epsilon(1e-12));
    REQUIRE(e2.min_aperture.has_value());
    CHECK(*e2.min_aperture == doctest::Approx(kPi / 6).epsilon(1e-12));
    CHECK(e2.min_points[0].z == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e2.min_points[1].z == doctest::Approx(-1.0).epsilon(1e-12));

    const auto e3 = aperture_extremes(Conic{8, 4});
    CHECK(e3.flat_points[0].x == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("verify_circularity input guards") {
    const auto emb = embed_conic(Conic{3, 1});
    CHECK_THROWS_AS(verify_circularity(Vec3{0, 0, 5}, UnitVec3(), emb.conic_curve, 4),
                    InvalidArgument);
    // apex placed exactly on the conic: the coincident sample degenerates
    const Vec3 on_curve = emb.conic_curve.point_at(0.0);
    CHECK_THROWS_AS(verify_circularity(on_curve, UnitVec3(), emb.conic_curve, 24),
                    DegenerateRay);
}

TEST_CASE("perturbed degenerate cones converge to the closed-form viewing cone") {
    const Conic conic{3, 1};
    const auto emb = embed_conic(conic);
    const double t = 0.6;
    const auto view = viewing_cone(conic, t);

    // push the apex off the locus plane by delta and rebuild the cone from
    // the collided-parameter limit machinery
    const double delta = 1e-6;
    Vec3 apex = view.cone.apex;
    apex[emb.locus.plane_axis] += delta;
    const QuadricCone cone =
        degenerate_cone_matrix(emb.sys, apex, emb.conic_critical);
    const auto params = circular_parameters(cone.matrix, 1e-2);
    REQUIRE(params.has_value());
    CHECK(testsupport::abs_cos(params->axis.vec(), view.cone.axis.vec()) >= 1.0 - 1e-5);
    CHECK(std::abs(params->aperture - view.cone.aperture) <= 1e-5);
}
