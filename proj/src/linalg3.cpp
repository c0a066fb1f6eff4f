#include "circumcone/linalg3.hpp"

#include <algorithm>
#include <cmath>

namespace circumcone {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Cyclic Jacobi rotations; converges to machine precision in a handful of
// sweeps and is immune to eigenvalue collisions.
void jacobi3(const SymMat3& m, double eval[3], Vec3 evec[3]) {
    double a[3][3];
    double v[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[i][j] = m(i, j);

    for (int sweep = 0; sweep < 32; ++sweep) {
        double off = std::abs(a[0][1]) + std::abs(a[0][2]) + std::abs(a[1][2]);
        if (off == 0.0) break;
        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                if (a[p][q] == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double apq = a[p][q];
                a[p][p] -= t * apq;
                a[q][q] += t * apq;
                a[p][q] = a[q][p] = 0.0;
                for (int r = 0; r < 3; ++r) {
                    if (r != p && r != q) {
                        const double arp = a[r][p], arq = a[r][q];
                        a[r][p] = a[p][r] = arp - s * (arq + tau * arp);
                        a[r][q] = a[q][r] = arq + s * (arp - tau * arq);
                    }
                    const double vrp = v[r][p], vrq = v[r][q];
                    v[r][p] = vrp - s * (vrq + tau * vrp);
                    v[r][q] = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }
    for (int j = 0; j < 3; ++j) {
        eval[j] = a[j][j];
        evec[j] = Vec3{v[0][j], v[1][j], v[2][j]};
    }
}

// Analytic eigenvalues via the trigonometric solution of the characteristic
// polynomial, returned ascending.
void analytic_eigenvalues(const SymMat3& m, double out[3]) {
    const double q = m.trace() / 3.0;
    const SymMat3 b = m - SymMat3::diag(q, q, q);
    const double p2 = b.m11 * b.m11 + b.m22 * b.m22 + b.m33 * b.m33 +
                      2.0 * (b.m12 * b.m12 + b.m13 * b.m13 + b.m23 * b.m23);
    if (p2 <= 0.0) {
        out[0] = out[1] = out[2] = q;
        return;
    }
    const double p = std::sqrt(p2 / 6.0);
    const double r = std::clamp(b.det() / (2.0 * p * p * p), -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double hi = q + 2.0 * p * std::cos(phi);
    const double lo = q + 2.0 * p * std::cos(phi + 2.0 * kPi / 3.0);
    out[0] = lo;
    out[1] = 3.0 * q - hi - lo;
    out[2] = hi;
}

// Eigenvector from the two most independent rows of (M - lambda I).
// Returns false when every row cross-product is too small to trust.
bool eigvec_from_rows(const SymMat3& m, double lambda, double scale, Vec3* out) {
    const Vec3 r0{m.m11 - lambda, m.m12, m.m13};
    const Vec3 r1{m.m12, m.m22 - lambda, m.m23};
    const Vec3 r2{m.m13, m.m23, m.m33 - lambda};
    const Vec3 cands[3] = {r0.cross(r1), r0.cross(r2), r1.cross(r2)};
    int best = 0;
    double best_n2 = -1.0;
    for (int i = 0; i < 3; ++i) {
        const double n2 = cands[i].norm2();
        if (n2 > best_n2) {
            best_n2 = n2;
            best = i;
        }
    }
    const double floor2 = 1e-24 * scale * scale * scale * scale;
    if (!(best_n2 > floor2)) return false;
    *out = cands[best] / std::sqrt(best_n2);
    return true;
}

void sign_fix(Vec3* v) {
    for (int i = 0; i < 3; ++i) {
        if (std::abs((*v)[i]) > kUnitTol) {
            if ((*v)[i] < 0.0) *v = -*v;
            return;
        }
    }
}

bool lex_greater(const Vec3& a, const Vec3& b) {
    if (a.x != b.x) return a.x > b.x;
    if (a.y != b.y) return a.y > b.y;
    return a.z > b.z;
}

}  // namespace

Mat3 mul(const SymMat3& a, const SymMat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
            r.m[i][j] = s;
        }
    return r;
}

SymMat3 sandwich(const SymMat3& r, const SymMat3& m) {
    const Mat3 rm = mul(r, m);
    SymMat3 out;
    double full[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += rm.m[i][k] * r(k, j);
            full[i][j] = s;
        }
    out.m11 = full[0][0];
    out.m22 = full[1][1];
    out.m33 = full[2][2];
    out.m12 = 0.5 * (full[0][1] + full[1][0]);
    out.m13 = 0.5 * (full[0][2] + full[2][0]);
    out.m23 = 0.5 * (full[1][2] + full[2][1]);
    return out;
}

EigenDecomp3 eigen_sym3(const SymMat3& m) {
    const double scale = std::max(m.max_abs(), 1e-300);

    double eval[3];
    Vec3 evec[3];
    analytic_eigenvalues(m, eval);

    const double gap_lo = eval[1] - eval[0];
    const double gap_hi = eval[2] - eval[1];
    const double rel_gap = std::min(gap_lo, gap_hi) / scale;

    // The trigonometric eigenvalues degrade like eps * |M|^2 / gap near a
    // collision; below this gap the analytic path cannot hold the 1e-10
    // residual bound, so switch to Jacobi well before that.
    bool ok = rel_gap >= 1e-4;
    if (ok) {
        // Fast path: resolve the better-separated end first, then the other
        // end, re-orthogonalized; the middle one closes the right-handed set.
        const int first = gap_lo >= gap_hi ? 0 : 2;
        const int second = 2 - first;
        Vec3 vf, vs;
        ok = eigvec_from_rows(m, eval[first], scale, &vf) &&
             eigvec_from_rows(m, eval[second], scale, &vs);
        if (ok) {
            vs = vs - vf * vf.dot(vs);
            const double n = vs.norm();
            ok = n > 0.5;
            if (ok) {
                vs = vs / n;
                evec[first] = vf;
                evec[second] = vs;
                evec[1] = (first == 0 ? vf.cross(vs) : vs.cross(vf));
                // Rayleigh-quotient polish: the trigonometric eigenvalues lose
                // accuracy near collisions, the quotients do not.
                for (int i = 0; i < 3; ++i) eval[i] = evec[i].dot(m * evec[i]);
            }
        }
    }
    if (!ok) {
        // Near-degenerate spectrum (the circular-cone regime): Jacobi keeps
        // the eigenbasis orthonormal regardless of collisions.
        jacobi3(m, eval, evec);
    }

    int order[3] = {0, 1, 2};
    std::sort(order, order + 3, [&](int i, int j) { return eval[i] < eval[j]; });

    EigenDecomp3 out;
    for (int i = 0; i < 3; ++i) {
        out.eigenvalues[i] = eval[order[i]];
        Vec3 v = evec[order[i]];
        sign_fix(&v);
        evec[order[i]] = v;
    }
    // Tie break: among (near-)equal eigenvalues, lexicographically larger
    // eigenvector first.
    const double tie = 1e-12 * (1.0 + scale);
    for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i < 2; ++i) {
            if (std::abs(out.eigenvalues[i + 1] - out.eigenvalues[i]) <= tie &&
                lex_greater(evec[order[i + 1]], evec[order[i]])) {
                std::swap(order[i], order[i + 1]);
                std::swap(out.eigenvalues[i], out.eigenvalues[i + 1]);
            }
        }
    }
    for (int i = 0; i < 3; ++i) {
        UnitVec3 u(evec[order[i]]);
        out.eigenvectors[i] = u;
    }
    return out;
}

std::array<double, 3> solve_bracketed_cubic(const MonicCubic& p,
                                            const std::array<Interval, 3>& brackets) {
    std::array<double, 3> roots{};
    for (int i = 0; i < 3; ++i) {
        double lo = brackets[i].lo, hi = brackets[i].hi;
        double flo = p(lo), fhi = p(hi);
        if (flo == 0.0) {
            roots[i] = lo;
            continue;
        }
        if (fhi == 0.0) {
            roots[i] = hi;
            continue;
        }
        if ((flo > 0.0) == (fhi > 0.0))
            throw NoSignChange("bracket [" + std::to_string(lo) + ", " + std::to_string(hi) +
                               "] does not straddle a root");
        while (hi - lo > 1e-10) {
            const double mid = 0.5 * (lo + hi);
            const double fmid = p(mid);
            if (fmid == 0.0) {
                lo = hi = mid;
                break;
            }
            if ((fmid > 0.0) == (flo > 0.0)) {
                lo = mid;
                flo = fmid;
            } else {
                hi = mid;
            }
        }
        double x = 0.5 * (lo + hi);
        for (int it = 0; it < 5; ++it) {
            const double d = p.derivative(x);
            if (d == 0.0) break;
            const double step = p(x) / d;
            const double next = x - step;
            if (next < brackets[i].lo || next > brackets[i].hi) break;
            x = next;
            if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
        }
        roots[i] = x;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

SymMat3 reflection_across_plane(const UnitVec3& p) {
    return SymMat3::identity() - 2.0 * SymMat3::outer(p.vec());
}

}  // namespace circumcone
