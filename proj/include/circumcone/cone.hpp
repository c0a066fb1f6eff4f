#pragma once

#include <array>
#include <optional>

#include "circumcone/linalg3.hpp"

namespace circumcone {

/// apex + axis + half-angle between axis and rulings, theta in [0, pi/2].
struct CircularCone {
    Vec3 apex;
    UnitVec3 axis;
    double aperture = 0.0;
};

/// The zero set of (x - apex)^T C (x - apex); C is defined up to a nonzero
/// scalar.
struct QuadricCone {
    Vec3 apex;
    SymMat3 matrix;
};

enum class ConeClass {
    PointOnly,   ///< definite matrix: the apex is the only real point
    RealCone,    ///< indefinite, nonsingular
    Degenerate,  ///< some eigenvalue vanishes (plane, line, plane pair)
};

/// {x : normal . x = offset}
struct Plane {
    UnitVec3 normal;
    double offset = 0.0;

    double signed_distance(const Vec3& x) const { return normal.dot(x) - offset; }
};

/// r r^T - cos^2(theta) I. Eigenvalues are 1 - cos^2(theta) on the axis and
/// -cos^2(theta) on its orthogonal complement. The endpoint apertures 0 and
/// pi/2 are accepted here; classify() reports them Degenerate.
SymMat3 cone_matrix(const UnitVec3& axis, double aperture);

/// Quadratic-form value (x - apex)^T C (x - apex); zero iff x lies on the cone.
double membership_residual(const QuadricCone& cone, const Vec3& x);

/// Classification by eigenvalue signs; an eigenvalue within kRelTol of the
/// largest magnitude counts as zero.
ConeClass classify(const SymMat3& c);

struct CircularParams {
    UnitVec3 axis;
    double aperture = 0.0;
};

/// Recovers (axis, aperture) when the two same-sign eigenvalues coincide
/// within `gap_tol` relative to the dominant eigenvalue; empty otherwise.
/// The result is invariant under scaling C by any nonzero scalar.
/// Throws NotACone unless classify(c) == RealCone.
std::optional<CircularParams> circular_parameters(const SymMat3& c,
                                                  double gap_tol = kCircularGapTol);

struct SymmetryPlanes {
    std::array<Plane, 3> planes;
    /// Set when two eigenvalues coincide: the cone is rotationally symmetric
    /// about the first plane's normal and planes[1], planes[2] are just two
    /// representatives of the one-parameter family.
    bool rotational_family = false;
};

/// The principal planes: through the apex, normal to the eigenvectors.
SymmetryPlanes symmetry_planes(const QuadricCone& cone);

/// True iff reflecting across the plane through the apex perpendicular to p
/// maps the cone to itself (R C R = C within 1e-9 relative), equivalently
/// iff p is an eigenvector of C.
bool is_reflection_symmetry(const QuadricCone& cone, const UnitVec3& p);

/// The quadric form of a circular cone.
QuadricCone as_quadric(const CircularCone& cone);

}  // namespace circumcone
