#pragma once

#include <array>
#include <cmath>

#include "circumcone/errors.hpp"

namespace circumcone {

/// Library-wide relative comparison tolerance. Operations that need a
/// different bound state it explicitly at their declaration.
inline constexpr double kRelTol = 1e-9;

/// Unit-length enforcement bound for UnitVec3.
inline constexpr double kUnitTol = 1e-12;

/// Relative eigenvalue gap below which a cone counts as circular.
inline constexpr double kCircularGapTol = 1e-7;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
    bool finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// A direction: length one within kUnitTol, enforced by normalizing at
/// construction. The default direction is +x.
class UnitVec3 {
public:
    UnitVec3() : v_{1.0, 0.0, 0.0} {}

    explicit UnitVec3(const Vec3& v) {
        const double n = v.norm();
        if (!(n > 0.0) || !v.finite())
            throw InvalidArgument("cannot normalize zero or non-finite vector");
        v_ = v / n;
    }

    const Vec3& vec() const { return v_; }
    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }
    double dot(const Vec3& o) const { return v_.dot(o); }

    UnitVec3 operator-() const {
        UnitVec3 r;
        r.v_ = -v_;
        return r;
    }

private:
    Vec3 v_;
};

/// Dense 3x3 matrix, used for the few places where a product of symmetric
/// matrices is needed in full generality.
struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    double operator()(int i, int j) const { return m[i][j]; }
    double& operator()(int i, int j) { return m[i][j]; }

    Mat3 operator-(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
        return r;
    }

    double max_abs() const {
        double r = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r = std::max(r, std::abs(m[i][j]));
        return r;
    }
};

/// Symmetric 3x3 matrix; only the six independent entries are stored.
struct SymMat3 {
    double m11 = 0, m12 = 0, m13 = 0, m22 = 0, m23 = 0, m33 = 0;

    static SymMat3 identity() { return {1, 0, 0, 1, 0, 1}; }
    static SymMat3 diag(double d1, double d2, double d3) { return {d1, 0, 0, d2, 0, d3}; }
    /// v v^T
    static SymMat3 outer(const Vec3& v) {
        return {v.x * v.x, v.x * v.y, v.x * v.z, v.y * v.y, v.y * v.z, v.z * v.z};
    }

    double operator()(int i, int j) const {
        if (i > j) std::swap(i, j);
        if (i == 0) return j == 0 ? m11 : (j == 1 ? m12 : m13);
        if (i == 1) return j == 1 ? m22 : m23;
        return m33;
    }

    SymMat3 operator+(const SymMat3& o) const {
        return {m11 + o.m11, m12 + o.m12, m13 + o.m13, m22 + o.m22, m23 + o.m23, m33 + o.m33};
    }
    SymMat3 operator-(const SymMat3& o) const {
        return {m11 - o.m11, m12 - o.m12, m13 - o.m13, m22 - o.m22, m23 - o.m23, m33 - o.m33};
    }
    SymMat3 operator*(double s) const {
        return {m11 * s, m12 * s, m13 * s, m22 * s, m23 * s, m33 * s};
    }

    Vec3 operator*(const Vec3& v) const {
        return {m11 * v.x + m12 * v.y + m13 * v.z,
                m12 * v.x + m22 * v.y + m23 * v.z,
                m13 * v.x + m23 * v.y + m33 * v.z};
    }

    /// x^T M x
    double quad(const Vec3& v) const { return v.dot(*this * v); }

    double trace() const { return m11 + m22 + m33; }

    double det() const {
        return m11 * (m22 * m33 - m23 * m23) - m12 * (m12 * m33 - m23 * m13) +
               m13 * (m12 * m23 - m22 * m13);
    }

    double frobenius_norm() const {
        return std::sqrt(m11 * m11 + m22 * m22 + m33 * m33 +
                         2.0 * (m12 * m12 + m13 * m13 + m23 * m23));
    }

    double max_abs() const {
        double r = std::abs(m11);
        for (double e : {m12, m13, m22, m23, m33}) r = std::max(r, std::abs(e));
        return r;
    }

    bool finite() const {
        for (double e : {m11, m12, m13, m22, m23, m33})
            if (!std::isfinite(e)) return false;
        return true;
    }

    Mat3 full() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = (*this)(i, j);
        return r;
    }
};

inline SymMat3 operator*(double s, const SymMat3& m) { return m * s; }

/// General product; the result is not symmetric in general.
Mat3 mul(const SymMat3& a, const SymMat3& b);

/// R M R for symmetric R and M (the result is symmetric by construction).
SymMat3 sandwich(const SymMat3& r, const SymMat3& m);

/// Full eigendecomposition of a symmetric 3x3 matrix.
/// Eigenvalues ascend; eigenvectors match and are mutually orthogonal with
/// residual |M v - lambda v| <= 1e-10 (1 + |M|). Each eigenvector is
/// sign-fixed so its first nonzero component is positive; exact eigenvalue
/// ties are ordered by lexicographically larger eigenvector first.
struct EigenDecomp3 {
    std::array<double, 3> eigenvalues{};
    std::array<UnitVec3, 3> eigenvectors{};
};

EigenDecomp3 eigen_sym3(const SymMat3& m);

/// Monic cubic k^3 + c2 k^2 + c1 k + c0.
struct MonicCubic {
    double c2 = 0, c1 = 0, c0 = 0;

    double operator()(double k) const { return ((k + c2) * k + c1) * k + c0; }
    double derivative(double k) const { return (3.0 * k + 2.0 * c2) * k + c1; }

    /// Coefficients from roots (Vieta).
    static MonicCubic from_roots(double r1, double r2, double r3) {
        return {-(r1 + r2 + r3), r1 * r2 + r1 * r3 + r2 * r3, -r1 * r2 * r3};
    }
};

struct Interval {
    double lo = 0, hi = 0;
};

/// Locates the three real roots of `p`, one per bracket. Each bracket must
/// change sign; bisection narrows to width 1e-10, then at most five Newton
/// steps polish. Roots are returned ascending.
/// Throws NoSignChange when a bracket fails the sign test.
std::array<double, 3> solve_bracketed_cubic(const MonicCubic& p,
                                            const std::array<Interval, 3>& brackets);

/// I - 2 p p^T: reflects orthogonally across the plane through the origin
/// perpendicular to p.
SymMat3 reflection_across_plane(const UnitVec3& p);

}  // namespace circumcone
