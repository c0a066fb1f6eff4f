#include "circumcone/confocal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace circumcone {

namespace {

double param_scale(double a, double b, double c) {
    return std::max({std::abs(a), std::abs(b), std::abs(c), 1.0});
}

void check_not_critical(const ConfocalSystem& sys, double k) {
    const double tol = kRelTol * sys.span();
    for (double crit : {sys.a(), sys.b(), sys.c()})
        if (std::abs(k - crit) <= tol)
            throw CriticalParameter("k = " + std::to_string(k) +
                                    " coincides with a family parameter");
}

}  // namespace

ConfocalSystem ConfocalSystem::make(double a, double b, double c) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
        throw InvalidArgument("confocal parameters must be finite");
    const double tol = 1e-9 * param_scale(a, b, c);
    if (std::abs(a - b) <= tol || std::abs(b - c) <= tol || std::abs(a - c) <= tol)
        throw DegenerateParameters("confocal parameters must be pairwise distinct");

    ConfocalSystem sys;
    sys.user_ = {a, b, c};
    sys.perm_ = {0, 1, 2};
    std::sort(sys.perm_.begin(), sys.perm_.end(),
              [&](int i, int j) { return sys.user_[i] > sys.user_[j]; });
    for (int i = 0; i < 3; ++i) sys.canon_[i] = sys.user_[sys.perm_[i]];
    return sys;
}

ConfocalSystem make_system(double a, double b, double c) {
    return ConfocalSystem::make(a, b, c);
}

SymMat3 matrix_at(const ConfocalSystem& sys, double k) {
    check_not_critical(sys, k);
    const auto& p = sys.user_params();
    return SymMat3::diag(1.0 / (p[0] - k), 1.0 / (p[1] - k), 1.0 / (p[2] - k));
}

SurfaceClass classify_surface(const ConfocalSystem& sys, double k) {
    const double tol = kRelTol * sys.span();
    for (double crit : {sys.a(), sys.b(), sys.c()})
        if (std::abs(k - crit) <= tol) return SurfaceClass::FocalDegenerate;
    if (k < sys.c()) return SurfaceClass::Ellipsoid;
    if (k < sys.b()) return SurfaceClass::HyperboloidOneSheet;
    if (k < sys.a()) return SurfaceClass::HyperboloidTwoSheets;
    return SurfaceClass::Imaginary;
}

MonicCubic confocal_cubic(const ConfocalSystem& sys, const Vec3& u) {
    // Symmetric under the (parameter, component) pairing, so user axes work
    // directly.
    const auto& p = sys.user_params();
    const double a = p[0], b = p[1], c = p[2];
    const double u2 = u.x * u.x, v2 = u.y * u.y, w2 = u.z * u.z;
    MonicCubic q;
    q.c2 = (u2 + v2 + w2) - (a + b + c);
    q.c1 = (a * b + a * c + b * c) - ((b + c) * u2 + (a + c) * v2 + (a + b) * w2);
    q.c0 = b * c * u2 + a * c * v2 + a * b * w2 - a * b * c;
    return q;
}

ConfocalCoords confocal_coords(const ConfocalSystem& sys, const Vec3& u) {
    const Vec3 uc = sys.to_canonical(u);
    const double thresh = 1e-7 * std::max(1.0, u.norm());
    for (int i = 0; i < 3; ++i)
        if (std::abs(uc[i]) <= thresh)
            throw NonGenericPoint("point lies on (or too near) a principal plane");

    const MonicCubic p = confocal_cubic(sys, u);
    // p -> -inf to the left and p(c) > 0, so any endpoint below the smallest
    // root brackets it; k1 >= c - |u|^2 bounds that root.
    const double lo = sys.c() - u.norm2() - sys.span() - 1.0;
    const auto roots = solve_bracketed_cubic(
        p, {Interval{lo, sys.c()}, Interval{sys.c(), sys.b()}, Interval{sys.b(), sys.a()}});
    return {roots[0], roots[1], roots[2]};
}

Vec3 cartesian_from_confocal(const ConfocalSystem& sys, const ConfocalCoords& coords,
                             const std::array<int, 3>& signs) {
    const double a = sys.a(), b = sys.b(), c = sys.c();
    const double den[3] = {(b - a) * (c - a), (a - b) * (c - b), (a - c) * (b - c)};
    double sq[3];
    double top = 1.0;
    for (int i = 0; i < 3; ++i) {
        const double m = sys.critical(static_cast<CriticalValue>(i));
        sq[i] = (m - coords.k1) * (m - coords.k2) * (m - coords.k3) / den[i];
        top = std::max(top, std::abs(sq[i]));
    }
    Vec3 canon;
    for (int i = 0; i < 3; ++i) {
        // Allow roundoff-scale negatives (exact zeros at focal-curve points).
        if (sq[i] < -1e-10 * top)
            throw NegativeSquare("coordinates violate the interlacing invariant");
        canon[i] = sq[i] > 0.0 ? std::sqrt(sq[i]) : 0.0;
    }
    Vec3 user = sys.to_user(canon);
    for (int i = 0; i < 3; ++i) user[i] *= static_cast<double>(signs[i]);
    return user;
}

Plane tangent_plane(const ConfocalSystem& sys, double k, const Vec3& u) {
    const SymMat3 ak = matrix_at(sys, k);
    if (std::abs(ak.quad(u) - 1.0) > 1e-8)
        throw NotOnSurface("point does not satisfy the surface equation");
    const Vec3 n = ak * u;
    const UnitVec3 normal(n);
    return Plane{normal, normal.dot(u)};
}

FocalCurve focal_curve(const ConfocalSystem& sys, FocalKind which) {
    const double a = sys.a(), b = sys.b(), c = sys.c();
    FocalCurve fc;
    fc.kind = which;
    switch (which) {
        case FocalKind::Ellipse:
            fc.axis1 = sys.user_axis(0);
            fc.axis2 = sys.user_axis(1);
            fc.plane_axis = sys.user_axis(2);
            fc.denom1 = a - c;
            fc.denom2 = b - c;
            break;
        case FocalKind::Hyperbola:
            fc.axis1 = sys.user_axis(0);
            fc.axis2 = sys.user_axis(2);
            fc.plane_axis = sys.user_axis(1);
            fc.denom1 = a - b;
            fc.denom2 = c - b;
            break;
        case FocalKind::Imaginary:
            fc.axis1 = sys.user_axis(1);
            fc.axis2 = sys.user_axis(2);
            fc.plane_axis = sys.user_axis(0);
            fc.denom1 = b - a;
            fc.denom2 = c - a;
            break;
    }
    return fc;
}

Vec3 FocalCurve::point_at(double t, int branch) const {
    Vec3 p;
    switch (kind) {
        case FocalKind::Ellipse:
            p[axis1] = std::sqrt(denom1) * std::cos(t);
            p[axis2] = std::sqrt(denom2) * std::sin(t);
            break;
        case FocalKind::Hyperbola:
            p[axis1] = static_cast<double>(branch) * std::sqrt(denom1) * std::cosh(t);
            p[axis2] = std::sqrt(-denom2) * std::sinh(t);
            break;
        case FocalKind::Imaginary:
            throw ImaginaryCurve("the imaginary focal curve has no real points");
    }
    return p;
}

Vec3 FocalCurve::velocity_at(double t, int branch) const {
    Vec3 v;
    switch (kind) {
        case FocalKind::Ellipse:
            v[axis1] = -std::sqrt(denom1) * std::sin(t);
            v[axis2] = std::sqrt(denom2) * std::cos(t);
            break;
        case FocalKind::Hyperbola:
            v[axis1] = static_cast<double>(branch) * std::sqrt(denom1) * std::sinh(t);
            v[axis2] = std::sqrt(-denom2) * std::cosh(t);
            break;
        case FocalKind::Imaginary:
            throw ImaginaryCurve("the imaginary focal curve has no real points");
    }
    return v;
}

double FocalCurve::implicit_residual(const Vec3& x) const {
    return x[axis1] * x[axis1] / denom1 + x[axis2] * x[axis2] / denom2 - 1.0;
}

FocalPoint focal_point_and_tangent(const ConfocalSystem& sys, FocalKind which, double t,
                                   int branch) {
    if (which == FocalKind::Imaginary)
        throw ImaginaryCurve("the imaginary focal curve has no real points");
    const FocalCurve curve = focal_curve(sys, which);
    const double a = sys.a(), b = sys.b(), c = sys.c();
    const double boundary_tol = 1e-9 * sys.span();

    FocalPoint fp{curve.point_at(t, branch), UnitVec3(curve.velocity_at(t, branch)), {}, 0,
                  false};
    if (which == FocalKind::Ellipse) {
        // k1 = k2 = c; the free coordinate follows from
        // x1^2 = (a-c)(a-k3)/(a-b) on the curve.
        const double ct = std::cos(t);
        const double k3 = a - (a - b) * ct * ct;
        fp.coords = {c, c, k3};
        fp.free_param = k3;
        fp.at_boundary = (k3 - b <= boundary_tol) || (a - k3 <= boundary_tol);
    } else {
        // k2 = k3 = b; x1^2 = (a-b)(a-k1)/(a-c) on the curve.
        const double ch = std::cosh(t);
        const double k1 = a - (a - c) * ch * ch;
        fp.coords = {k1, b, b};
        fp.free_param = k1;
        fp.at_boundary = (c - k1 <= boundary_tol);
    }
    return fp;
}

}  // namespace circumcone
