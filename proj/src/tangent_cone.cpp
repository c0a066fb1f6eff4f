#include "circumcone/tangent_cone.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace circumcone {

namespace {

constexpr double kOnSurfaceTol = 1e-8;

void ensure_not_critical(const ConfocalSystem& sys, double ell) {
    const double tol = kRelTol * sys.span();
    for (double crit : {sys.a(), sys.b(), sys.c()})
        if (std::abs(ell - crit) <= tol)
            throw CriticalParameter("ell coincides with a family parameter");
}

// Family matrix without the proximity guard: the confocal coordinates of a
// generic point may sit arbitrarily close to a critical value, and A_{k_i} u
// stays meaningful there.
SymMat3 family_matrix(const ConfocalSystem& sys, double k) {
    const auto& p = sys.user_params();
    return SymMat3::diag(1.0 / (p[0] - k), 1.0 / (p[1] - k), 1.0 / (p[2] - k));
}

void check_ell_vs_coords(const ConfocalSystem& sys, const ConfocalCoords& coords, double ell) {
    const double tol = kRelTol * sys.span();
    for (double k : {coords.k1, coords.k2, coords.k3})
        if (std::abs(ell - k) <= tol)
            throw ApexOnConfocalSurface(
                "ell coincides with a confocal coordinate of the apex");
}

// One-sided Jacobi SVD of an n x 6 column system: returns singular values
// (descending) and the matching right singular vectors as columns of v.
void svd6(std::vector<std::array<double, 6>>& rows, double sigma[6], double v[6][6]) {
    const size_t n = rows.size();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) v[i][j] = (i == j) ? 1.0 : 0.0;

    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < 5; ++p) {
            for (int q = p + 1; q < 6; ++q) {
                double app = 0, aqq = 0, apq = 0;
                for (size_t r = 0; r < n; ++r) {
                    app += rows[r][p] * rows[r][p];
                    aqq += rows[r][q] * rows[r][q];
                    apq += rows[r][p] * rows[r][q];
                }
                if (std::abs(apq) <= 1e-30 + 1e-15 * std::sqrt(app * aqq)) continue;
                rotated = true;
                const double zeta = (aqq - app) / (2.0 * apq);
                double t = 1.0 / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                if (zeta < 0.0) t = -t;
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = cs * t;
                for (size_t r = 0; r < n; ++r) {
                    const double rp = rows[r][p], rq = rows[r][q];
                    rows[r][p] = cs * rp - sn * rq;
                    rows[r][q] = sn * rp + cs * rq;
                }
                for (int r = 0; r < 6; ++r) {
                    const double vp = v[r][p], vq = v[r][q];
                    v[r][p] = cs * vp - sn * vq;
                    v[r][q] = sn * vp + cs * vq;
                }
            }
        }
        if (!rotated) break;
    }

    int order[6] = {0, 1, 2, 3, 4, 5};
    for (int j = 0; j < 6; ++j) {
        double s = 0;
        for (size_t r = 0; r < n; ++r) s += rows[r][j] * rows[r][j];
        sigma[j] = std::sqrt(s);
    }
    std::sort(order, order + 6, [&](int i, int j) { return sigma[i] > sigma[j]; });
    double sig_sorted[6];
    double v_sorted[6][6];
    for (int j = 0; j < 6; ++j) {
        sig_sorted[j] = sigma[order[j]];
        for (int i = 0; i < 6; ++i) v_sorted[i][j] = v[i][order[j]];
    }
    for (int j = 0; j < 6; ++j) {
        sigma[j] = sig_sorted[j];
        for (int i = 0; i < 6; ++i) v[i][j] = v_sorted[i][j];
    }
}

}  // namespace

QuadricCone tangent_cone_matrix(const ConfocalSystem& sys, const Vec3& u, double ell) {
    const SymMat3 a = matrix_at(sys, ell);
    const double uau = a.quad(u);
    if (std::abs(uau - 1.0) <= kOnSurfaceTol)
        throw ApexOnSurface("apex lies on the target surface; the cone degenerates to the tangent plane");
    const Vec3 au = a * u;
    return {u, SymMat3::outer(au) + (1.0 - uau) * a};
}

double discriminant_residual(const ConfocalSystem& sys, const Vec3& u, double ell,
                             const Vec3& x) {
    const SymMat3 a = matrix_at(sys, ell);
    const double xau = x.dot(a * u);
    return (xau - 1.0) * (xau - 1.0) - (a.quad(x) - 1.0) * (a.quad(u) - 1.0);
}

TangentConeEigensystem tangent_cone_eigensystem(const ConfocalSystem& sys, const Vec3& u,
                                                double ell) {
    ensure_not_critical(sys, ell);
    const ConfocalCoords coords = confocal_coords(sys, u);
    check_ell_vs_coords(sys, coords, ell);

    TangentConeEigensystem es;
    es.coords = coords;
    const double den = (sys.a() - ell) * (sys.b() - ell) * (sys.c() - ell);
    const double k[3] = {coords.k1, coords.k2, coords.k3};
    for (int i = 0; i < 3; ++i) {
        es.eigenvectors[i] = family_matrix(sys, k[i]) * u;
        const int j = (i + 1) % 3, m = (i + 2) % 3;
        es.eigenvalues[i] = (ell - k[j]) * (ell - k[m]) / den;
    }
    return es;
}

TangentConeEigensystem degenerate_cone_eigensystem(const ConfocalSystem& sys, const Vec3& u,
                                                   CriticalValue which) {
    const ConfocalCoords coords = confocal_coords(sys, u);
    const double m = sys.critical(which);
    double den = 1.0;
    for (double p : {sys.a(), sys.b(), sys.c()})
        if (p != m) den *= (p - m);

    TangentConeEigensystem es;
    es.coords = coords;
    const double k[3] = {coords.k1, coords.k2, coords.k3};
    for (int i = 0; i < 3; ++i) {
        es.eigenvectors[i] = family_matrix(sys, k[i]) * u;
        const int j = (i + 1) % 3, q = (i + 2) % 3;
        es.eigenvalues[i] = (m - k[j]) * (m - k[q]) / den;
    }
    return es;
}

QuadricCone degenerate_cone_matrix(const ConfocalSystem& sys, const Vec3& u,
                                   CriticalValue which) {
    const TangentConeEigensystem es = degenerate_cone_eigensystem(sys, u, which);
    SymMat3 k;
    for (int i = 0; i < 3; ++i) {
        const UnitVec3 dir(es.eigenvectors[i]);
        k = k + es.eigenvalues[i] * SymMat3::outer(dir.vec());
    }
    return {u, k};
}

ConeFit fit_cone_through_points(const Vec3& apex, std::span<const Vec3> points) {
    if (points.size() < 9)
        throw RankDeficient("need at least nine sample points, got " +
                            std::to_string(points.size()));
    std::vector<std::array<double, 6>> rows;
    rows.reserve(points.size());
    for (const Vec3& p : points) {
        const Vec3 d = p - apex;
        rows.push_back({d.x * d.x, 2.0 * d.x * d.y, 2.0 * d.x * d.z, d.y * d.y,
                        2.0 * d.y * d.z, d.z * d.z});
    }

    double sigma[6];
    double v[6][6];
    svd6(rows, sigma, v);
    if (!(sigma[0] > 0.0) || sigma[4] <= 1e-10 * sigma[0])
        throw RankDeficient("sample points do not pin down the cone");

    SymMat3 c{v[0][5], v[1][5], v[2][5], v[3][5], v[4][5], v[5][5]};
    c = c * (1.0 / c.frobenius_norm());

    // Deterministic sign: largest-magnitude entry positive.
    const double entries[6] = {c.m11, c.m12, c.m13, c.m22, c.m23, c.m33};
    int top = 0;
    for (int i = 1; i < 6; ++i)
        if (std::abs(entries[i]) > std::abs(entries[top])) top = i;
    if (entries[top] < 0.0) c = c * -1.0;

    return ConeFit{c, sigma[5] / sigma[0], sigma[4] / sigma[0]};
}

}  // namespace circumcone
