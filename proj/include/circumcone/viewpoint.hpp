#pragma once

#include <array>
#include <optional>

#include "circumcone/confocal.hpp"
#include "circumcone/tangent_cone.hpp"

namespace circumcone {

/// The plane curve x^2/alpha + y^2/beta = 1 in the user's x,y-plane.
/// Valid when alpha > beta, both nonzero, not both negative (so: an ellipse
/// when beta > 0, a hyperbola when beta < 0; circles are rejected).
struct Conic {
    double alpha = 0;
    double beta = 0;
};

struct EmbeddedConic {
    ConfocalSystem sys;          ///< the system with parameters (alpha, beta, 0)
    FocalCurve conic_curve;      ///< the conic itself, as a focal curve
    FocalCurve locus;            ///< the other real focal curve: the viewpoints
    CriticalValue conic_critical;  ///< the critical parameter degenerating to the conic
};

/// Identifies the conic as the focal ellipse or focal hyperbola of the
/// confocal system with parameters (alpha, beta, 0); the viewpoint locus is
/// the other real focal curve. Throws DegenerateParameters for circles and
/// for alpha or beta equal to zero.
EmbeddedConic embed_conic(const Conic& conic);

struct ViewpointResult {
    CircularCone cone;          ///< apex on the locus, axis tangent to it there
    double confocal_parameter;  ///< the free coordinate of the apex (k1 or k3)
    double aperture_cos2;       ///< cos^2 of the aperture
    bool at_locus_vertex;       ///< apex at a locus vertex (flat cone, theta = pi/2)
};

/// The circular cone under which the conic is seen from the locus point with
/// parameter t (branch selects the locus branch when it is a hyperbola).
ViewpointResult viewing_cone(const Conic& conic, double t, int branch = +1);

/// Same construction for an arbitrary system: apex on the named real focal
/// curve, target the other one. Apertures come from the collided-coordinate
/// closed forms: cos^2(theta) = (k1 - c)/(k1 - b) for an apex on the
/// hyperbola, (k3 - b)/(k3 - c) for an apex on the ellipse.
ViewpointResult viewing_cone_on_curve(const ConfocalSystem& sys, FocalKind apex_curve,
                                      double t, int branch = +1);

struct CircularityReport {
    double mean_half_angle = 0;
    double max_deviation = 0;
};

/// Samples `samples` points on the curve and measures the angle between each
/// ray from the apex and the axis, folding theta and pi - theta together.
/// A circular cone yields max_deviation at roundoff scale.
/// Throws DegenerateRay if a sample coincides with the apex; requires
/// samples >= 8.
CircularityReport verify_circularity(const Vec3& apex, const UnitVec3& axis,
                                     const FocalCurve& curve, int samples);

struct ApertureExtremes {
    /// The conic's foci: the aperture tends to pi/2 (flat cone) there.
    std::array<Vec3, 2> flat_points;
    /// Ellipse conic: the aperture tends to zero as the viewpoint recedes
    /// along the locus hyperbola (infimum, not attained).
    bool aperture_infimum_zero = false;
    /// Hyperbola conic: the minimum aperture arccos(sqrt(alpha/(alpha-beta))),
    /// attained at min_points = (0, 0, +-sqrt(-beta)).
    std::optional<double> min_aperture;
    std::array<Vec3, 2> min_points;
};

ApertureExtremes aperture_extremes(const Conic& conic);

}  // namespace circumcone
