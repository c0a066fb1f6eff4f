#pragma once

#include <array>

#include "circumcone/cone.hpp"
#include "circumcone/linalg3.hpp"

namespace circumcone {

enum class SurfaceClass {
    Ellipsoid,
    HyperboloidOneSheet,
    HyperboloidTwoSheets,
    Imaginary,
    FocalDegenerate,
};

enum class FocalKind { Ellipse, Hyperbola, Imaginary };

/// One of the three critical parameters of a system, named in canonical
/// (sorted, a > b > c) order. The surface family degenerates to the focal
/// ellipse at C, the focal hyperbola at B and the imaginary focal curve at A.
enum class CriticalValue { A, B, C };

/// The family x^2/(a-k) + y^2/(b-k) + z^2/(c-k) = 1 for pairwise distinct
/// a, b, c (attached to the user's x, y, z axes in that order). Internally
/// the parameters are sorted descending and the axis permutation recorded,
/// so every formula below can assume c < b < a; all inputs and outputs are
/// in user axes.
class ConfocalSystem {
public:
    /// Throws DegenerateParameters when two parameters coincide within
    /// 1e-9 * max(|a|, |b|, |c|, 1).
    static ConfocalSystem make(double a, double b, double c);

    double a() const { return canon_[0]; }  ///< largest parameter
    double b() const { return canon_[1]; }
    double c() const { return canon_[2]; }  ///< smallest parameter
    double span() const { return canon_[0] - canon_[2]; }
    double critical(CriticalValue v) const { return canon_[static_cast<int>(v)]; }

    const std::array<double, 3>& user_params() const { return user_; }

    /// canonical axis i (0 for a, 1 for b, 2 for c) -> user axis index
    int user_axis(int canonical_axis) const { return perm_[canonical_axis]; }

    Vec3 to_canonical(const Vec3& user) const {
        return {user[perm_[0]], user[perm_[1]], user[perm_[2]]};
    }
    Vec3 to_user(const Vec3& canonical) const {
        Vec3 r;
        for (int i = 0; i < 3; ++i) r[perm_[i]] = canonical[i];
        return r;
    }

private:
    ConfocalSystem() = default;
    std::array<double, 3> user_{};
    std::array<double, 3> canon_{};
    std::array<int, 3> perm_{0, 1, 2};
};

/// k1 < c < k2 < b < k3 < a for generic points; focal-curve points carry a
/// collided pair (k1 = k2 = c on the ellipse, k2 = k3 = b on the hyperbola).
struct ConfocalCoords {
    double k1 = 0, k2 = 0, k3 = 0;

    double operator[](int i) const { return i == 0 ? k1 : (i == 1 ? k2 : k3); }
};

/// A focal curve in user axes: coordinate `plane_axis` vanishes and the curve
/// is x[axis1]^2/denom1 + x[axis2]^2/denom2 = 1 in its plane. denom2 < 0
/// for the hyperbola; both denominators are negative for the imaginary curve.
struct FocalCurve {
    FocalKind kind = FocalKind::Ellipse;
    int plane_axis = 2;
    int axis1 = 0, axis2 = 1;
    double denom1 = 1, denom2 = 1;

    /// Ellipse: (sqrt(d1) cos t, sqrt(d2) sin t). Hyperbola: branch = +/-1
    /// selects the sign of the first coordinate, (branch sqrt(d1) cosh t,
    /// sqrt(-d2) sinh t). Throws ImaginaryCurve for the imaginary curve.
    Vec3 point_at(double t, int branch = +1) const;

    /// d/dt of point_at.
    Vec3 velocity_at(double t, int branch = +1) const;

    /// x[axis1]^2/d1 + x[axis2]^2/d2 - 1 (ignores the out-of-plane coordinate).
    double implicit_residual(const Vec3& x) const;
};

ConfocalSystem make_system(double a, double b, double c);

/// diag(1/(a-k), 1/(b-k), 1/(c-k)) on the user axes.
/// Throws CriticalParameter when k is within kRelTol * span of {a, b, c}.
SymMat3 matrix_at(const ConfocalSystem& sys, double k);

SurfaceClass classify_surface(const ConfocalSystem& sys, double k);

/// The monic cubic in k whose roots are the confocal coordinates of u:
///   (b-k)(c-k) ux^2 + (a-k)(c-k) uy^2 + (a-k)(b-k) uz^2 - (a-k)(b-k)(c-k),
/// built on canonical axes. Satisfies p(c) = (a-c)(b-c) uz'^2,
/// p(b) = (a-b)(c-b) uy'^2, p(a) = (b-a)(c-a) ux'^2 (primes canonical).
MonicCubic confocal_cubic(const ConfocalSystem& sys, const Vec3& u);

/// Genericity threshold: every canonical component must exceed
/// 1e-7 * max(1, |u|) in magnitude, else NonGenericPoint.
ConfocalCoords confocal_coords(const ConfocalSystem& sys, const Vec3& u);

/// The point with the chosen per-user-axis signs; inverse of confocal_coords
/// up to signs. Throws NegativeSquare when the interlacing invariant fails.
Vec3 cartesian_from_confocal(const ConfocalSystem& sys, const ConfocalCoords& coords,
                             const std::array<int, 3>& signs);

/// Tangent plane at a point u on the surface with parameter k (normal along
/// A_k u). Throws NotOnSurface when |u^T A_k u - 1| > 1e-8.
Plane tangent_plane(const ConfocalSystem& sys, double k, const Vec3& u);

FocalCurve focal_curve(const ConfocalSystem& sys, FocalKind which);

struct FocalPoint {
    Vec3 point;
    UnitVec3 tangent;
    /// Collided coordinates: (c, c, k3) on the ellipse, (k1, b, b) on the
    /// hyperbola.
    ConfocalCoords coords;
    /// The free coordinate (k3 on the ellipse, k1 on the hyperbola).
    double free_param = 0;
    /// Set when the free coordinate sits at an end of its range (curve
    /// vertex or co-vertex).
    bool at_boundary = false;
};

/// Point, unit tangent and (degenerate) confocal coordinates of a focal-curve
/// point. Throws ImaginaryCurve for the imaginary curve.
FocalPoint focal_point_and_tangent(const ConfocalSystem& sys, FocalKind which, double t,
                                   int branch = +1);

}  // namespace circumcone
