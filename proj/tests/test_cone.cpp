#include <doctest.h>

#include <cmath>

#include "circumcone/cone.hpp"
#include "support.hpp"

using namespace circumcone;
using testsupport::Rng;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("cone_matrix on axis-aligned input") {
    // cos^2 = 1/2 along x
    const SymMat3 m = cone_matrix(UnitVec3(Vec3{1, 0, 0}), kPi / 4);
    CHECK(testsupport::mat_rel_err(m, SymMat3::diag(0.5, -0.5, -0.5)) <= 1e-14);

    // theta = pi/2 degenerates to a plane: diag(0,0,1) for axis z
    const SymMat3 flat = cone_matrix(UnitVec3(Vec3{0, 0, 1}), kPi / 2);
    CHECK(testsupport::mat_rel_err(flat, SymMat3::diag(0, 0, 1)) <= 1e-14);
    CHECK(classify(flat) == ConeClass::Degenerate);
    CHECK(classify(cone_matrix(UnitVec3(Vec3{0, 0, 1}), 0.0)) == ConeClass::Degenerate);
}

TEST_CASE("cone_matrix spectrum for a random axis") {
    Rng rng(0xc0fe01ULL);
    const UnitVec3 r = rng.unit();
    const SymMat3 m = cone_matrix(r, kPi / 3);
    const auto e = eigen_sym3(m);
    CHECK(e.eigenvalues[0] == doctest::Approx(-0.25).epsilon(1e-12));
    CHECK(e.eigenvalues[1] == doctest::Approx(-0.25).epsilon(1e-12));
    CHECK(e.eigenvalues[2] == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(testsupport::abs_cos(e.eigenvectors[2].vec(), r.vec()) >= 1.0 - 1e-12);
}

TEST_CASE("membership_residual") {
    const CircularCone cone{Vec3{0, 0, 0}, UnitVec3(Vec3{0, 0, 1}), kPi / 4};
    const QuadricCone q = as_quadric(cone);
    CHECK(membership_residual(q, cone.apex) == doctest::Approx(0.0));
    CHECK(membership_residual(q, Vec3{1, 0, 1}) == doctest::Approx(0.0).epsilon(1e-14));
    // off-cone point, value computed by hand from diag(-1/2,-1/2,1/2)
    CHECK(membership_residual(q, Vec3{1, 0, 2}) == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("classify by eigenvalue signs") {
    CHECK(classify(SymMat3::diag(1, 2, 3)) == ConeClass::PointOnly);
    CHECK(classify(SymMat3::diag(-1, -2, -3)) == ConeClass::PointOnly);
    CHECK(classify(SymMat3::diag(1, -1, -1)) == ConeClass::RealCone);
    CHECK(classify(SymMat3::diag(1, -1, 0)) == ConeClass::Degenerate);
}

TEST_CASE("circular_parameters on the worked example") {
    const auto p = circular_parameters(SymMat3::diag(0.75, -0.25, -0.25));
    REQUIRE(p.has_value());
    CHECK(testsupport::abs_cos(p->axis.vec(), Vec3{1, 0, 0}) >= 1.0 - 1e-12);
    CHECK(p->aperture == doctest::Approx(kPi / 3).epsilon(1e-12));

    CHECK_FALSE(circular_parameters(SymMat3::diag(1, -1, -2)).has_value());
    CHECK_THROWS_AS(circular_parameters(SymMat3::diag(1, 2, 3)), NotACone);
}

TEST_CASE("circular_parameters round-trips cone_matrix, including rescaling") {
    Rng rng(0xfeedbee5ULL);
    for (int iter = 0; iter < 300; ++iter) {
        const UnitVec3 r = rng.unit();
        const double theta = rng.uniform(0.05, kPi / 2 - 0.05);
        const double scale = rng.uniform(0.2, 5.0) * (rng.uniform01() < 0.5 ? -1.0 : 1.0);
        const SymMat3 m = scale * cone_matrix(r, theta);
        const auto p = circular_parameters(m);
        REQUIRE(p.has_value());
        CHECK(testsupport::abs_cos(p->axis.vec(), r.vec()) >= 1.0 - 1e-8);
        CHECK(p->aperture == doctest::Approx(theta).epsilon(1e-8));
    }
}

TEST_CASE("spectrum reconstruction converse: matching spectrum means a cone matrix") {
    Rng rng(0x1234fedcULL);
    for (int iter = 0; iter < 100; ++iter) {
        // Any symmetric matrix with eigenvalues {1-c2, -c2, -c2} must equal
        // cone_matrix(r, theta) for its own recovered axis. Build one from an
        // arbitrary orthonormal frame, not from cone_matrix itself.
        const auto frame = eigen_sym3(rng.sym(-3, 3)).eigenvectors;
        const double theta = rng.uniform(0.1, kPi / 2 - 0.1);
        const double c2 = std::cos(theta) * std::cos(theta);
        SymMat3 m = (1.0 - c2) * SymMat3::outer(frame[0].vec());
        m = m - c2 * SymMat3::outer(frame[1].vec());
        m = m - c2 * SymMat3::outer(frame[2].vec());
        const auto p = circular_parameters(m);
        REQUIRE(p.has_value());
        CHECK(testsupport::abs_cos(p->axis.vec(), frame[0].vec()) >= 1.0 - 1e-9);
        CHECK(p->aperture == doctest::Approx(theta).epsilon(1e-9));
        const SymMat3 rebuilt = cone_matrix(p->axis, p->aperture);
        CHECK(testsupport::mat_rel_err(rebuilt, m) <= 1e-9);
    }
}

TEST_CASE("64 rays at the aperture angle lie on the cone") {
    Rng rng(0x64aa64ULL);
    const CircularCone cone{rng.vec(-2, 2), rng.unit(), rng.uniform(0.2, 1.2)};
    const QuadricCone q = as_quadric(cone);
    // orthonormal frame around the axis
    const Vec3 n = cone.axis.vec();
    Vec3 e1 = n.cross(Vec3{1, 0, 0});
    if (e1.norm() < 0.1) e1 = n.cross(Vec3{0, 1, 0});
    e1 = e1 / e1.norm();
    const Vec3 e2 = n.cross(e1);
    const double norm_scale = q.matrix.frobenius_norm();
    for (int i = 0; i < 64; ++i) {
        const double phi = 2 * kPi * i / 64;
        const Vec3 dir = std::cos(cone.aperture) * n +
                         std::sin(cone.aperture) * (std::cos(phi) * e1 + std::sin(phi) * e2);
        const Vec3 x = cone.apex + dir * rng.uniform(0.5, 3.0);
        CHECK(std::abs(membership_residual(q, x)) <= 1e-9 * norm_scale * (x - cone.apex).norm2());
    }
}

TEST_CASE("symmetry_planes of a diagonal cone") {
    const auto sp = symmetry_planes(QuadricCone{Vec3{0, 0, 0}, SymMat3::diag(1, -2, -3)});
    CHECK_FALSE(sp.rotational_family);
    // planes x=0, y=0, z=0 in some order
    for (const auto& plane : sp.planes) CHECK(std::abs(plane.offset) <= 1e-12);
    double seen[3] = {0, 0, 0};
    for (const auto& plane : sp.planes)
        for (int ax = 0; ax < 3; ++ax)
            seen[ax] = std::max(seen[ax], std::abs(plane.normal.vec()[ax]));
    for (int ax = 0; ax < 3; ++ax) CHECK(seen[ax] >= 1.0 - 1e-12);

    const auto tr = symmetry_planes(QuadricCone{Vec3{1, 1, 1}, SymMat3::diag(1, -2, -3)});
    for (const auto& plane : tr.planes) CHECK(plane.offset == doctest::Approx(1.0));
}

TEST_CASE("symmetry_planes flags the rotational family for circular cones") {
    const auto sp = symmetry_planes(QuadricCone{Vec3{0, 0, 0}, SymMat3::diag(0.75, -0.25, -0.25)});
    CHECK(sp.rotational_family);
    // first plane is normal to the rotation axis (the isolated eigenvector)
    CHECK(testsupport::abs_cos(sp.planes[0].normal.vec(), Vec3{1, 0, 0}) >= 1.0 - 1e-12);
}

TEST_CASE("is_reflection_symmetry on eigenvectors and non-eigenvectors") {
    const QuadricCone cone{Vec3{0.3, -0.2, 0.9}, SymMat3::diag(1, -1, -2)};
    CHECK(is_reflection_symmetry(cone, UnitVec3(Vec3{1, 0, 0})));
    CHECK_FALSE(is_reflection_symmetry(cone, UnitVec3(Vec3{1, 1, 0})));
    CHECK_THROWS_AS(
        is_reflection_symmetry(QuadricCone{Vec3{}, SymMat3::diag(1, 2, 3)}, UnitVec3()),
        NotACone);
}

TEST_CASE("reflection symmetry agrees with the eigenvector residual test") {
    Rng rng(0x99d1ce5ULL);
    int done = 0;
    while (done < 500) {
        const SymMat3 c = rng.sym(-5, 5);
        if (classify(c) != ConeClass::RealCone) continue;
        ++done;
        const QuadricCone cone{rng.vec(-1, 1), c};

        // a random direction: almost surely not an eigenvector
        const UnitVec3 p = rng.unit();
        const Vec3 cp = c * p.vec();
        const bool eig_test = (cp - p.vec() * p.dot(cp)).norm() <= 1e-8 * c.frobenius_norm();
        CHECK(is_reflection_symmetry(cone, p) == eig_test);

        // every actual eigenvector passes
        const auto e = eigen_sym3(c);
        for (int i = 0; i < 3; ++i) CHECK(is_reflection_symmetry(cone, e.eigenvectors[i]));
    }
}
