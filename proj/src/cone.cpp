#include "circumcone/cone.hpp"

#include <algorithm>
#include <cmath>

namespace circumcone {

SymMat3 cone_matrix(const UnitVec3& axis, double aperture) {
    if (!(aperture >= 0.0 && aperture <= 1.5707963267948967))
        throw InvalidArgument("aperture must lie in [0, pi/2]");
    const double c = std::cos(aperture);
    const double c2 = c * c;
    return SymMat3::outer(axis.vec()) - SymMat3::diag(c2, c2, c2);
}

double membership_residual(const QuadricCone& cone, const Vec3& x) {
    return cone.matrix.quad(x - cone.apex);
}

ConeClass classify(const SymMat3& c) {
    const EigenDecomp3 e = eigen_sym3(c);
    const double top = std::max({std::abs(e.eigenvalues[0]), std::abs(e.eigenvalues[1]),
                                 std::abs(e.eigenvalues[2])});
    if (top == 0.0) return ConeClass::Degenerate;
    int pos = 0, neg = 0;
    for (double v : e.eigenvalues) {
        if (std::abs(v) <= kRelTol * top) return ConeClass::Degenerate;
        (v > 0.0 ? pos : neg)++;
    }
    return (pos == 3 || neg == 3) ? ConeClass::PointOnly : ConeClass::RealCone;
}

std::optional<CircularParams> circular_parameters(const SymMat3& c, double gap_tol) {
    if (classify(c) != ConeClass::RealCone)
        throw NotACone("circular parameters are defined for real cones only");
    const EigenDecomp3 e = eigen_sym3(c);
    const auto& ev = e.eigenvalues;
    const double top = std::max(std::abs(ev[0]), std::abs(ev[2]));

    // RealCone guarantees ev[0] < 0 < ev[2]; the sign of ev[1] tells which
    // pair could be the repeated one.
    int iso, pa, pb;
    if (ev[1] < 0.0) {
        pa = 0;
        pb = 1;
        iso = 2;
    } else {
        pa = 1;
        pb = 2;
        iso = 0;
    }
    if (std::abs(ev[pa] - ev[pb]) > gap_tol * top) return std::nullopt;

    const double mu = 0.5 * (ev[pa] + ev[pb]);
    const double lambda = ev[iso];
    const double cos2 = mu / (mu - lambda);
    return CircularParams{e.eigenvectors[iso], std::acos(std::sqrt(std::clamp(cos2, 0.0, 1.0)))};
}

SymmetryPlanes symmetry_planes(const QuadricCone& cone) {
    if (classify(cone.matrix) != ConeClass::RealCone)
        throw NotACone("principal planes are defined for real cones only");
    const EigenDecomp3 e = eigen_sym3(cone.matrix);
    SymmetryPlanes out;
    for (int i = 0; i < 3; ++i)
        out.planes[i] = Plane{e.eigenvectors[i], e.eigenvectors[i].dot(cone.apex)};

    const auto& ev = e.eigenvalues;
    const double top = std::max(std::abs(ev[0]), std::abs(ev[2]));
    const int iso = (ev[1] < 0.0) ? 2 : 0;
    const int pa = (iso == 2) ? 0 : 1;
    const int pb = pa + 1;
    if (std::abs(ev[pa] - ev[pb]) <= kCircularGapTol * top) {
        out.rotational_family = true;
        if (iso != 0) std::swap(out.planes[0], out.planes[iso]);
    }
    return out;
}

bool is_reflection_symmetry(const QuadricCone& cone, const UnitVec3& p) {
    if (classify(cone.matrix) != ConeClass::RealCone)
        throw NotACone("reflection symmetry test is defined for real cones only");
    const SymMat3 r = reflection_across_plane(p);
    const SymMat3 diff = sandwich(r, cone.matrix) - cone.matrix;
    return diff.frobenius_norm() <= 1e-9 * cone.matrix.frobenius_norm();
}

QuadricCone as_quadric(const CircularCone& cone) {
    return {cone.apex, cone_matrix(cone.axis, cone.aperture)};
}

}  // namespace circumcone
