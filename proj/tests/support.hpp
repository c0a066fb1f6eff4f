#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "circumcone/linalg3.hpp"

namespace testsupport {

// SplitMix64-based generator: identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    circumcone::Vec3 vec(double lo, double hi) {
        return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
    }

    circumcone::UnitVec3 unit() {
        for (;;) {
            const circumcone::Vec3 v = vec(-1.0, 1.0);
            const double n2 = v.norm2();
            if (n2 > 0.01 && n2 <= 1.0) return circumcone::UnitVec3(v);
        }
    }

    circumcone::SymMat3 sym(double lo, double hi) {
        return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi),
                uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
    }

private:
    std::uint64_t state_;
};

// Root isolation by dense sign scanning plus bisection; independent of the
// production bracketed solver (it only evaluates the callable).
inline std::vector<double> scan_roots(const std::function<double(double)>& f, double lo,
                                      double hi, double step) {
    std::vector<double> roots;
    double x0 = lo, f0 = f(lo);
    while (x0 < hi) {
        const double x1 = std::min(x0 + step, hi);
        const double f1 = f(x1);
        if (f0 == 0.0) {
            roots.push_back(x0);
        } else if ((f0 > 0.0) != (f1 > 0.0)) {
            double a = x0, b = x1, fa = f0;
            for (int i = 0; i < 200; ++i) {
                const double m = 0.5 * (a + b);
                const double fm = f(m);
                if ((fa > 0.0) == (fm > 0.0)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
                if (b - a <= 1e-15 * std::max(1.0, std::abs(m))) break;
            }
            roots.push_back(0.5 * (a + b));
        }
        x0 = x1;
        f0 = f1;
    }
    return roots;
}

inline double mat_rel_err(const circumcone::SymMat3& got, const circumcone::SymMat3& want) {
    const double scale = std::max(want.max_abs(), 1e-300);
    return (got - want).max_abs() / scale;
}

// |cos| of the angle between two directions: 1 means parallel up to sign.
inline double abs_cos(const circumcone::Vec3& a, const circumcone::Vec3& b) {
    return std::abs(a.dot(b)) / (a.norm() * b.norm());
}

}  // namespace testsupport
