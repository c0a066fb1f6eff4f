#pragma once

#include <span>

#include "circumcone/confocal.hpp"

namespace circumcone {

/// Closed-form eigensystem of a tangent-cone matrix. The eigenvectors are
/// the (unnormalized) surface normals A_{k_i} u of the three confocal
/// surfaces through the apex, ordered by ascending k_i; they depend on the
/// apex only, not on the target surface.
struct TangentConeEigensystem {
    std::array<Vec3, 3> eigenvectors;
    std::array<double, 3> eigenvalues;
    ConfocalCoords coords;
};

/// The cone of lines through u with double contact with the surface
/// x^T A_ell x = 1: matrix A u u^T A + (1 - u^T A u) A with apex u.
/// Throws CriticalParameter when ell hits {a, b, c} and ApexOnSurface when
/// |u^T A u - 1| <= 1e-8 (the cone would collapse to the tangent plane).
QuadricCone tangent_cone_matrix(const ConfocalSystem& sys, const Vec3& u, double ell);

/// (x^T A u - 1)^2 - (x^T A x - 1)(u^T A u - 1): the double-contact
/// discriminant. Vanishes exactly on the tangent cone and agrees identically
/// with membership_residual of tangent_cone_matrix.
double discriminant_residual(const ConfocalSystem& sys, const Vec3& u, double ell,
                             const Vec3& x);

/// Eigenvalues lambda_i = (u^T A_ell u - 1)/(ell - k_i), evaluated through
/// the equivalent product form
///   (ell - k_j)(ell - k_m) / ((a - ell)(b - ell)(c - ell)), {i,j,m} = {1,2,3}.
/// Requires a generic apex and ell away from {a, b, c} (CriticalParameter)
/// and from {k1, k2, k3} (ApexOnConfocalSurface).
TangentConeEigensystem tangent_cone_eigensystem(const ConfocalSystem& sys, const Vec3& u,
                                                double ell);

/// Eigen-data of the limit cone lim (m - ell) K_{u, ell} as ell approaches
/// the critical value m: same eigenvectors, eigenvalues
/// prod_{j != i} (m - k_j) / prod_{p in {a,b,c} \ m} (p - m).
TangentConeEigensystem degenerate_cone_eigensystem(const ConfocalSystem& sys, const Vec3& u,
                                                   CriticalValue which);

/// The cone from u over a focal curve (the ell -> critical limit), built by
/// spectral synthesis from degenerate_cone_eigensystem. For CriticalValue::C
/// this is the cone over the focal ellipse, for B over the focal hyperbola,
/// and for A the imaginary cone (classify reports PointOnly).
QuadricCone degenerate_cone_matrix(const ConfocalSystem& sys, const Vec3& u,
                                   CriticalValue which);

struct ConeFit {
    /// Unit-Frobenius-norm matrix minimizing sum ((p_i - apex)^T C (p_i - apex))^2,
    /// sign-fixed so the largest-magnitude entry is positive.
    SymMat3 matrix;
    /// Smallest singular value of the constraint system relative to the
    /// largest: the rms misfit of the returned cone.
    double residual = 0;
    /// Second-smallest singular value relative to the largest: how far the
    /// constraints are from admitting a second cone.
    double conditioning = 0;
};

/// Independent least-squares recovery of a cone with known apex from sampled
/// points (a quadric cone has five projective degrees of freedom). Needs at
/// least nine points; throws RankDeficient when the constraints determine
/// the cone only up to a family.
ConeFit fit_cone_through_points(const Vec3& apex, std::span<const Vec3> points);

}  // namespace circumcone
