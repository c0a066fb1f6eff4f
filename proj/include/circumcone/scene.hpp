#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "circumcone/viewpoint.hpp"

namespace circumcone {

struct SampledCurve {
    std::string role;  ///< "conic", "locus", "focal_ellipse", "focal_hyperbola"
    FocalCurve curve;
    std::vector<double> params;
    std::vector<int> branches;
    std::vector<Vec3> points;
};

struct SampledSurface {
    double k = 0;
    SurfaceClass cls = SurfaceClass::Ellipsoid;
    int nu = 0, nv = 0;  ///< points are stored row-major over (nu, nv)
    std::vector<Vec3> points;
};

struct SampledRulings {
    Vec3 apex;
    Vec3 axis;
    double theta = 0;
    double cos2 = 0;
    std::vector<double> params;
    std::vector<int> branches;
    std::vector<Vec3> endpoints;  ///< on the conic; one segment apex -> endpoint each
};

/// Plot-ready sampling of a scene. Every sampled point satisfies its defining
/// equation to roundoff; JSON is the primary format, CSV and OBJ are
/// projections of it.
struct SceneExport {
    nlohmann::ordered_json metadata;
    std::vector<SampledCurve> curves;
    std::vector<SampledSurface> surfaces;
    std::optional<SampledRulings> rulings;

    nlohmann::ordered_json to_json() const;
    void write_csv(std::ostream& os) const;
    void write_obj(std::ostream& os) const;
};

/// The conic, its viewpoint locus, and the rulings of the viewing cone from
/// the locus point with parameter t.
SceneExport scene_for_conic(const Conic& conic, double t, int branch = +1);

/// The two real focal curves plus one sampled surface of each class.
SceneExport scene_for_system(double a, double b, double c);

const char* surface_class_name(SurfaceClass cls);

/// Shortest round-trip decimal form (also used by the CSV and OBJ writers).
std::string format_double(double v);

}  // namespace circumcone
