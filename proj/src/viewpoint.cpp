#include "circumcone/viewpoint.hpp"

#include <algorithm>
#include <cmath>

namespace circumcone {

namespace {

void validate(const Conic& conic) {
    const double scale = std::max({std::abs(conic.alpha), std::abs(conic.beta), 1.0});
    if (!std::isfinite(conic.alpha) || !std::isfinite(conic.beta))
        throw InvalidArgument("conic parameters must be finite");
    if (std::abs(conic.alpha) <= 1e-9 * scale || std::abs(conic.beta) <= 1e-9 * scale)
        throw DegenerateParameters("conic parameters must be nonzero");
    if (std::abs(conic.alpha - conic.beta) <= 1e-9 * scale)
        throw DegenerateParameters("circles have no circular-view locus in this family");
    if (conic.alpha < conic.beta)
        throw InvalidArgument("conic requires alpha > beta");
    if (conic.alpha < 0.0)
        throw DegenerateParameters("conic has no real points (alpha and beta both negative)");
}

}  // namespace

EmbeddedConic embed_conic(const Conic& conic) {
    validate(conic);
    ConfocalSystem sys = make_system(conic.alpha, conic.beta, 0.0);
    const bool is_ellipse = conic.beta > 0.0;
    EmbeddedConic out{sys,
                      focal_curve(sys, is_ellipse ? FocalKind::Ellipse : FocalKind::Hyperbola),
                      focal_curve(sys, is_ellipse ? FocalKind::Hyperbola : FocalKind::Ellipse),
                      is_ellipse ? CriticalValue::C : CriticalValue::B};
    return out;
}

ViewpointResult viewing_cone_on_curve(const ConfocalSystem& sys, FocalKind apex_curve,
                                      double t, int branch) {
    const FocalPoint fp = focal_point_and_tangent(sys, apex_curve, t, branch);
    double cos2;
    double free_k = fp.free_param;
    if (apex_curve == FocalKind::Ellipse) {
        // Target is the focal hyperbola (ell -> b).
        cos2 = (free_k - sys.b()) / (free_k - sys.c());
    } else {
        // Target is the focal ellipse (ell -> c).
        cos2 = (free_k - sys.c()) / (free_k - sys.b());
    }
    cos2 = std::clamp(cos2, 0.0, 1.0);
    const double theta = std::acos(std::sqrt(cos2));
    return ViewpointResult{CircularCone{fp.point, fp.tangent, theta}, free_k, cos2,
                           fp.at_boundary};
}

ViewpointResult viewing_cone(const Conic& conic, double t, int branch) {
    const EmbeddedConic emb = embed_conic(conic);
    return viewing_cone_on_curve(emb.sys, emb.locus.kind, t, branch);
}

CircularityReport verify_circularity(const Vec3& apex, const UnitVec3& axis,
                                     const FocalCurve& curve, int samples) {
    if (samples < 8) throw InvalidArgument("need at least eight samples");
    if (curve.kind == FocalKind::Imaginary)
        throw ImaginaryCurve("cannot sample the imaginary focal curve");

    constexpr double kHyperbolaRange = 1.5;
    std::vector<double> angles;
    angles.reserve(static_cast<size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        Vec3 p;
        if (curve.kind == FocalKind::Ellipse) {
            p = curve.point_at(2.0 * 3.14159265358979323846 * i / samples);
        } else {
            // Alternate branches, spreading t symmetrically on each.
            const int branch = (i % 2 == 0) ? +1 : -1;
            const int j = i / 2;
            const int per_branch = (samples + 1) / 2;
            const double t = per_branch > 1
                                 ? -kHyperbolaRange + 2.0 * kHyperbolaRange * j / (per_branch - 1)
                                 : 0.0;
            p = curve.point_at(t, branch);
        }
        const Vec3 d = p - apex;
        const double n = d.norm();
        if (n <= 1e-12 * (1.0 + apex.norm()))
            throw DegenerateRay("a curve sample coincides with the apex");
        // theta and pi - theta describe the same cone.
        const double cosang = std::min(1.0, std::abs(axis.dot(d)) / n);
        angles.push_back(std::acos(cosang));
    }

    // Compensated mean, independent of sample order.
    double sum = 0.0, comp = 0.0;
    for (double a : angles) {
        const double y = a - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    const double mean = sum / static_cast<double>(angles.size());
    double dev = 0.0;
    for (double a : angles) dev = std::max(dev, std::abs(a - mean));
    return CircularityReport{mean, dev};
}

ApertureExtremes aperture_extremes(const Conic& conic) {
    validate(conic);
    const double f = std::sqrt(conic.alpha - conic.beta);
    ApertureExtremes out;
    out.flat_points = {Vec3{f, 0, 0}, Vec3{-f, 0, 0}};
    if (conic.beta > 0.0) {
        out.aperture_infimum_zero = true;
    } else {
        out.min_aperture = std::acos(std::sqrt(conic.alpha / (conic.alpha - conic.beta)));
        const double h = std::sqrt(-conic.beta);
        out.min_points = {Vec3{0, 0, h}, Vec3{0, 0, -h}};
    }
    return out;
}

}  // namespace circumcone
