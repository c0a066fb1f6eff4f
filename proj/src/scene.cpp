#include "circumcone/scene.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace circumcone {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kEllipseSamples = 96;
constexpr int kHyperbolaSamplesPerBranch = 33;
constexpr double kHyperbolaRange = 1.75;
constexpr int kRulingCount = 24;
constexpr int kSurfaceNu = 24;
constexpr int kSurfaceNv = 12;

const char* axis_name(int i) { return i == 0 ? "x" : (i == 1 ? "y" : "z"); }

SampledCurve sample_curve(const FocalCurve& curve, const std::string& role) {
    SampledCurve out;
    out.role = role;
    out.curve = curve;
    if (curve.kind == FocalKind::Ellipse) {
        for (int i = 0; i < kEllipseSamples; ++i) {
            const double t = 2.0 * kPi * i / kEllipseSamples;
            out.params.push_back(t);
            out.branches.push_back(+1);
            out.points.push_back(curve.point_at(t));
        }
    } else {
        for (int branch : {+1, -1}) {
            for (int i = 0; i < kHyperbolaSamplesPerBranch; ++i) {
                const double t = -kHyperbolaRange +
                                 2.0 * kHyperbolaRange * i / (kHyperbolaSamplesPerBranch - 1);
                out.params.push_back(t);
                out.branches.push_back(branch);
                out.points.push_back(curve.point_at(t, branch));
            }
        }
    }
    return out;
}

// Sampling grids in the canonical frame, mapped back to user axes. Each
// parametrization satisfies the surface equation identically.
SampledSurface sample_surface(const ConfocalSystem& sys, double k) {
    SampledSurface s;
    s.k = k;
    s.cls = classify_surface(sys, k);
    s.nu = kSurfaceNu;
    s.nv = kSurfaceNv;
    const double a = sys.a(), b = sys.b(), c = sys.c();
    switch (s.cls) {
        case SurfaceClass::Ellipsoid: {
            const double sa = std::sqrt(a - k), sb = std::sqrt(b - k), sc = std::sqrt(c - k);
            for (int i = 0; i < s.nu; ++i) {
                const double ph = 2.0 * kPi * i / s.nu;
                for (int j = 0; j < s.nv; ++j) {
                    const double ps = -0.5 * kPi + kPi * (j + 0.5) / s.nv;
                    s.points.push_back(sys.to_user({sa * std::cos(ph) * std::cos(ps),
                                                    sb * std::sin(ph) * std::cos(ps),
                                                    sc * std::sin(ps)}));
                }
            }
            break;
        }
        case SurfaceClass::HyperboloidOneSheet: {
            const double sa = std::sqrt(a - k), sb = std::sqrt(b - k), sc = std::sqrt(k - c);
            for (int i = 0; i < s.nu; ++i) {
                const double ph = 2.0 * kPi * i / s.nu;
                for (int j = 0; j < s.nv; ++j) {
                    const double ps = -1.0 + 2.0 * j / (s.nv - 1);
                    s.points.push_back(sys.to_user({sa * std::cos(ph) * std::cosh(ps),
                                                    sb * std::sin(ph) * std::cosh(ps),
                                                    sc * std::sinh(ps)}));
                }
            }
            break;
        }
        case SurfaceClass::HyperboloidTwoSheets: {
            const double sa = std::sqrt(a - k), sb = std::sqrt(k - b), sc = std::sqrt(k - c);
            // nu covers both sheets: even i on +, odd i on -.
            for (int i = 0; i < s.nu; ++i) {
                const double sheet = (i % 2 == 0) ? 1.0 : -1.0;
                const double ph = 2.0 * kPi * (i / 2) / (s.nu / 2);
                for (int j = 0; j < s.nv; ++j) {
                    const double ps = 1.2 * (j + 1) / s.nv;
                    s.points.push_back(sys.to_user({sheet * sa * std::cosh(ps),
                                                    sb * std::sinh(ps) * std::cos(ph),
                                                    sc * std::sinh(ps) * std::sin(ph)}));
                }
            }
            break;
        }
        default:
            throw InvalidArgument("cannot sample an imaginary or degenerate surface");
    }
    return s;
}

nlohmann::ordered_json vec_json(const Vec3& v) {
    return nlohmann::ordered_json::array({v.x, v.y, v.z});
}

nlohmann::ordered_json curve_json(const SampledCurve& c) {
    nlohmann::ordered_json j;
    j["role"] = c.role;
    j["kind"] = c.curve.kind == FocalKind::Ellipse ? "ellipse" : "hyperbola";
    j["axes"] = {axis_name(c.curve.axis1), axis_name(c.curve.axis2)};
    j["plane_axis"] = axis_name(c.curve.plane_axis);
    j["denominators"] = {c.curve.denom1, c.curve.denom2};
    j["params"] = c.params;
    j["branches"] = c.branches;
    auto pts = nlohmann::ordered_json::array();
    for (const Vec3& p : c.points) pts.push_back(vec_json(p));
    j["points"] = std::move(pts);
    return j;
}

}  // namespace

const char* surface_class_name(SurfaceClass cls) {
    switch (cls) {
        case SurfaceClass::Ellipsoid: return "ellipsoid";
        case SurfaceClass::HyperboloidOneSheet: return "hyperboloid_one_sheet";
        case SurfaceClass::HyperboloidTwoSheets: return "hyperboloid_two_sheets";
        case SurfaceClass::Imaginary: return "imaginary";
        case SurfaceClass::FocalDegenerate: return "focal_degenerate";
    }
    return "unknown";
}

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

SceneExport scene_for_conic(const Conic& conic, double t, int branch) {
    const EmbeddedConic emb = embed_conic(conic);
    const ViewpointResult view = viewing_cone_on_curve(emb.sys, emb.locus.kind, t, branch);

    SceneExport scene;
    scene.curves.push_back(sample_curve(emb.conic_curve, "conic"));
    scene.curves.push_back(sample_curve(emb.locus, "locus"));

    SampledRulings r;
    r.apex = view.cone.apex;
    r.axis = view.cone.axis.vec();
    r.theta = view.cone.aperture;
    r.cos2 = view.aperture_cos2;
    if (emb.conic_curve.kind == FocalKind::Ellipse) {
        for (int i = 0; i < kRulingCount; ++i) {
            const double s = 2.0 * kPi * i / kRulingCount;
            r.params.push_back(s);
            r.branches.push_back(+1);
            r.endpoints.push_back(emb.conic_curve.point_at(s));
        }
    } else {
        for (int i = 0; i < kRulingCount; ++i) {
            const int br = (i % 2 == 0) ? +1 : -1;
            const int per = kRulingCount / 2;
            const double s = -1.5 + 3.0 * (i / 2) / (per - 1);
            r.params.push_back(s);
            r.branches.push_back(br);
            r.endpoints.push_back(emb.conic_curve.point_at(s, br));
        }
    }
    scene.rulings = std::move(r);

    const ApertureExtremes ext = aperture_extremes(conic);
    scene.metadata["alpha"] = conic.alpha;
    scene.metadata["beta"] = conic.beta;
    scene.metadata["conic_kind"] = conic.beta > 0 ? "ellipse" : "hyperbola";
    scene.metadata["t"] = t;
    scene.metadata["branch"] = branch;
    scene.metadata["apex"] = vec_json(view.cone.apex);
    scene.metadata["axis"] = vec_json(view.cone.axis.vec());
    scene.metadata["theta_rad"] = view.cone.aperture;
    scene.metadata["theta_deg"] = view.cone.aperture * 180.0 / kPi;
    scene.metadata["cos2"] = view.aperture_cos2;
    scene.metadata["confocal_parameter"] = view.confocal_parameter;
    scene.metadata["foci"] = {vec_json(ext.flat_points[0]), vec_json(ext.flat_points[1])};
    return scene;
}

SceneExport scene_for_system(double a, double b, double c) {
    const ConfocalSystem sys = make_system(a, b, c);
    SceneExport scene;
    scene.curves.push_back(sample_curve(focal_curve(sys, FocalKind::Ellipse), "focal_ellipse"));
    scene.curves.push_back(
        sample_curve(focal_curve(sys, FocalKind::Hyperbola), "focal_hyperbola"));

    const double span = sys.span();
    scene.surfaces.push_back(sample_surface(sys, sys.c() - 0.5 * span));
    scene.surfaces.push_back(sample_surface(sys, 0.5 * (sys.c() + sys.b())));
    scene.surfaces.push_back(sample_surface(sys, 0.5 * (sys.b() + sys.a())));

    scene.metadata["abc"] = {a, b, c};
    scene.metadata["canonical"] = {sys.a(), sys.b(), sys.c()};
    scene.metadata["surface_parameters"] = {scene.surfaces[0].k, scene.surfaces[1].k,
                                            scene.surfaces[2].k};
    return scene;
}

nlohmann::ordered_json SceneExport::to_json() const {
    nlohmann::ordered_json j;
    j["metadata"] = metadata;
    auto cj = nlohmann::ordered_json::array();
    for (const auto& c : curves) cj.push_back(curve_json(c));
    j["curves"] = std::move(cj);
    auto sj = nlohmann::ordered_json::array();
    for (const auto& s : surfaces) {
        nlohmann::ordered_json e;
        e["k"] = s.k;
        e["class"] = surface_class_name(s.cls);
        e["nu"] = s.nu;
        e["nv"] = s.nv;
        auto pts = nlohmann::ordered_json::array();
        for (const Vec3& p : s.points) pts.push_back(vec_json(p));
        e["points"] = std::move(pts);
        sj.push_back(std::move(e));
    }
    j["surfaces"] = std::move(sj);
    if (rulings) {
        nlohmann::ordered_json e;
        e["apex"] = vec_json(rulings->apex);
        e["axis"] = vec_json(rulings->axis);
        e["theta"] = rulings->theta;
        e["cos2"] = rulings->cos2;
        e["params"] = rulings->params;
        e["branches"] = rulings->branches;
        auto pts = nlohmann::ordered_json::array();
        for (const Vec3& p : rulings->endpoints) pts.push_back(vec_json(p));
        e["endpoints"] = std::move(pts);
        j["cone"] = std::move(e);
    } else {
        j["cone"] = nullptr;
    }
    return j;
}

void SceneExport::write_csv(std::ostream& os) const {
    os << "role,x,y,z,param\n";
    auto row = [&os](const std::string& role, const Vec3& p, double param) {
        os << role << ',' << format_double(p.x) << ',' << format_double(p.y) << ','
           << format_double(p.z) << ',' << format_double(param) << '\n';
    };
    for (const auto& c : curves)
        for (size_t i = 0; i < c.points.size(); ++i) row(c.role, c.points[i], c.params[i]);
    for (const auto& s : surfaces) {
        const std::string role = std::string("surface_") + surface_class_name(s.cls);
        for (const Vec3& p : s.points) row(role, p, s.k);
    }
    if (rulings) {
        row("apex", rulings->apex, rulings->theta);
        for (size_t i = 0; i < rulings->endpoints.size(); ++i)
            row("ruling", rulings->endpoints[i], rulings->params[i]);
    }
}

void SceneExport::write_obj(std::ostream& os) const {
    int base = 1;
    auto vertex = [&os](const Vec3& p) {
        os << "v " << format_double(p.x) << ' ' << format_double(p.y) << ' '
           << format_double(p.z) << '\n';
    };
    for (const auto& c : curves) {
        os << "o " << c.role << '\n';
        for (const Vec3& p : c.points) vertex(p);
        if (c.curve.kind == FocalKind::Ellipse) {
            os << 'l';
            for (size_t i = 0; i < c.points.size(); ++i) os << ' ' << base + i;
            os << ' ' << base << '\n';  // close the loop
        } else {
            const size_t per = c.points.size() / 2;
            for (int half = 0; half < 2; ++half) {
                os << 'l';
                for (size_t i = 0; i < per; ++i) os << ' ' << base + half * per + i;
                os << '\n';
            }
        }
        base += static_cast<int>(c.points.size());
    }
    for (const auto& s : surfaces) {
        os << "o surface:" << surface_class_name(s.cls) << ":k=" << format_double(s.k) << '\n';
        for (const Vec3& p : s.points) vertex(p);
        for (int i = 0; i < s.nu; ++i) {
            os << 'l';
            for (int j = 0; j < s.nv; ++j) os << ' ' << base + i * s.nv + j;
            os << '\n';
        }
        for (int j = 0; j < s.nv; ++j) {
            os << 'l';
            for (int i = 0; i < s.nu; ++i) os << ' ' << base + i * s.nv + j;
            os << '\n';
        }
        base += s.nu * s.nv;
    }
    if (rulings) {
        os << "o rulings\n";
        vertex(rulings->apex);
        for (const Vec3& p : rulings->endpoints) vertex(p);
        for (size_t i = 0; i < rulings->endpoints.size(); ++i)
            os << "l " << base << ' ' << base + 1 + i << '\n';
        base += static_cast<int>(rulings->endpoints.size()) + 1;
    }
}

}  // namespace circumcone
