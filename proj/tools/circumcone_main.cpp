#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "circumcone/scene.hpp"
#include "circumcone/viewpoint.hpp"

namespace {

using circumcone::Conic;
using circumcone::Vec3;
using ordered_json = nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;

std::vector<double> parse_reals(const std::string& s, size_t count, const char* what) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            const double v = std::stod(tok, &pos);
            if (pos != tok.size() || !std::isfinite(v)) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw circumcone::InvalidArgument(std::string(what) + ": cannot parse '" + tok +
                                              "' as a finite real");
        }
    }
    if (out.size() != count)
        throw circumcone::InvalidArgument(std::string(what) + ": expected " +
                                          std::to_string(count) + " comma-separated values");
    return out;
}

std::array<int, 3> parse_signs(const std::string& s) {
    std::array<int, 3> out{};
    std::stringstream ss(s);
    std::string tok;
    int i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i >= 3 || (tok != "+" && tok != "-" && tok != "+1" && tok != "-1"))
            throw circumcone::InvalidArgument("--signs: expected three of +,-");
        out[i++] = (tok[0] == '-') ? -1 : +1;
    }
    if (i != 3) throw circumcone::InvalidArgument("--signs: expected three of +,-");
    return out;
}

ordered_json vec_json(const Vec3& v) { return ordered_json::array({v.x, v.y, v.z}); }

std::string curve_equation(const circumcone::FocalCurve& c) {
    auto axis = [](int i) { return i == 0 ? "x" : (i == 1 ? "y" : "z"); };
    auto term = [&](int ax, double d) {
        std::string t = std::string(axis(ax)) + "^2";
        if (std::abs(d) != 1.0) t += "/" + circumcone::format_double(std::abs(d));
        return t;
    };
    std::string eq = term(c.axis1, c.denom1);
    eq += (c.denom2 < 0 ? " - " : " + ") + term(c.axis2, c.denom2);
    eq += " = 1 (" + std::string(axis(c.plane_axis)) + "=0)";
    return eq;
}

ordered_json locus_json(const circumcone::EmbeddedConic& emb) {
    ordered_json j;
    j["kind"] = emb.locus.kind == circumcone::FocalKind::Ellipse ? "ellipse" : "hyperbola";
    j["equation"] = curve_equation(emb.locus);
    j["denominators"] = {emb.locus.denom1, emb.locus.denom2};
    return j;
}

ordered_json viewpoint_json(const circumcone::ViewpointResult& v, double t, int branch) {
    ordered_json j;
    j["t"] = t;
    j["branch"] = branch;
    j["apex"] = vec_json(v.cone.apex);
    j["axis"] = vec_json(v.cone.axis.vec());
    j["theta_rad"] = v.cone.aperture;
    j["theta_deg"] = v.cone.aperture * 180.0 / kPi;
    j["cos2"] = v.aperture_cos2;
    j["confocal_parameter"] = v.confocal_parameter;
    j["at_vertex"] = v.at_locus_vertex;
    return j;
}

void emit(const std::string& command, ordered_json inputs, ordered_json result) {
    ordered_json j;
    j["version"] = "1";
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["result"] = std::move(result);
    std::cout << j.dump() << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Circular cones over conics: confocal-quadric computations and plot data"};
    app.require_subcommand(1);

    std::string abc_arg, conic_arg, point_arg, confocal_arg, signs_arg = "+,+,+";
    std::string format = "json", out_path;
    double k_arg = 0, at_arg = 0;
    int grid_arg = 0, branch_arg = +1;

    auto* classify_cmd =
        app.add_subcommand("classify", "Classify the family surface with parameter k");
    classify_cmd->add_option("--abc", abc_arg, "family parameters a,b,c")->required();
    classify_cmd->add_option("--k", k_arg, "surface parameter")->required();

    auto* coords_cmd =
        app.add_subcommand("coords", "Convert between Cartesian and confocal coordinates");
    coords_cmd->add_option("--abc", abc_arg, "family parameters a,b,c")->required();
    auto* point_opt = coords_cmd->add_option("--point", point_arg, "Cartesian point x,y,z");
    auto* confocal_opt =
        coords_cmd->add_option("--confocal", confocal_arg, "confocal coordinates k1,k2,k3");
    coords_cmd->add_option("--signs", signs_arg, "octant signs for --confocal (default +,+,+)");
    point_opt->excludes(confocal_opt);

    auto* view_cmd =
        app.add_subcommand("viewpoints", "Where does the conic look like a circle?");
    view_cmd->add_option("--conic", conic_arg, "conic parameters alpha,beta")->required();
    auto* at_opt = view_cmd->add_option("--at", at_arg, "locus curve parameter");
    auto* grid_opt = view_cmd->add_option("--grid", grid_arg, "sample the locus at N parameters");
    view_cmd->add_option("--branch", branch_arg, "locus branch (+1 or -1) for --at")
        ->check(CLI::IsMember({-1, 1}));
    at_opt->excludes(grid_opt);

    auto* export_cmd = app.add_subcommand("export", "Write plot data (json, csv or obj)");
    export_cmd->add_option("--conic", conic_arg, "conic parameters alpha,beta");
    export_cmd->add_option("--abc", abc_arg, "family parameters a,b,c");
    export_cmd->add_option("--at", at_arg, "viewpoint parameter (with --conic)");
    export_cmd->add_option("--branch", branch_arg, "locus branch for --at")
        ->check(CLI::IsMember({-1, 1}));
    export_cmd->add_option("--format", format, "json|csv|obj")
        ->check(CLI::IsMember({"json", "csv", "obj"}));
    export_cmd->add_option("-o,--out", out_path, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        throw circumcone::InvalidArgument(e.what());
    }

    if (classify_cmd->parsed()) {
        const auto abc = parse_reals(abc_arg, 3, "--abc");
        const auto sys = circumcone::make_system(abc[0], abc[1], abc[2]);
        const circumcone::SymMat3 m = circumcone::matrix_at(sys, k_arg);
        ordered_json result;
        result["class"] = circumcone::surface_class_name(classify_surface(sys, k_arg));
        result["matrix_diag"] = {m.m11, m.m22, m.m33};
        emit("classify", {{"abc", abc}, {"k", k_arg}}, std::move(result));
        return 0;
    }

    if (coords_cmd->parsed()) {
        const auto abc = parse_reals(abc_arg, 3, "--abc");
        const auto sys = circumcone::make_system(abc[0], abc[1], abc[2]);
        if (point_opt->count() == confocal_opt->count())
            throw circumcone::InvalidArgument("give exactly one of --point / --confocal");
        Vec3 cartesian;
        circumcone::ConfocalCoords coords;
        ordered_json inputs{{"abc", abc}};
        if (point_opt->count()) {
            const auto p = parse_reals(point_arg, 3, "--point");
            cartesian = {p[0], p[1], p[2]};
            coords = circumcone::confocal_coords(sys, cartesian);
            inputs["point"] = p;
        } else {
            const auto kk = parse_reals(confocal_arg, 3, "--confocal");
            const auto signs = parse_signs(signs_arg);
            coords = {kk[0], kk[1], kk[2]};
            cartesian = circumcone::cartesian_from_confocal(sys, coords, signs);
            inputs["confocal"] = kk;
            inputs["signs"] = signs;
        }
        const circumcone::MonicCubic cubic = circumcone::confocal_cubic(sys, cartesian);
        ordered_json result;
        result["cartesian"] = vec_json(cartesian);
        result["confocal"] = {coords.k1, coords.k2, coords.k3};
        result["residuals"] = {cubic(coords.k1), cubic(coords.k2), cubic(coords.k3)};
        emit("coords", std::move(inputs), std::move(result));
        return 0;
    }

    if (view_cmd->parsed()) {
        const auto ab = parse_reals(conic_arg, 2, "--conic");
        const Conic conic{ab[0], ab[1]};
        const auto emb = circumcone::embed_conic(conic);
        const auto ext = circumcone::aperture_extremes(conic);
        ordered_json result;
        result["conic_kind"] = conic.beta > 0 ? "ellipse" : "hyperbola";
        result["locus"] = locus_json(emb);
        result["foci"] = {vec_json(ext.flat_points[0]), vec_json(ext.flat_points[1])};
        ordered_json inputs{{"conic", ab}};
        if (grid_opt->count()) {
            if (grid_arg < 2) throw circumcone::InvalidArgument("--grid must be at least 2");
            inputs["grid"] = grid_arg;
            auto samples = ordered_json::array();
            for (int i = 0; i < grid_arg; ++i) {
                double t;
                if (emb.locus.kind == circumcone::FocalKind::Ellipse)
                    t = 2.0 * kPi * i / grid_arg;
                else
                    t = -1.5 + 3.0 * i / (grid_arg - 1);
                const auto v = circumcone::viewing_cone_on_curve(emb.sys, emb.locus.kind, t, +1);
                samples.push_back(viewpoint_json(v, t, +1));
            }
            result["samples"] = std::move(samples);
        } else if (at_opt->count()) {
            inputs["at"] = at_arg;
            inputs["branch"] = branch_arg;
            const auto v =
                circumcone::viewing_cone_on_curve(emb.sys, emb.locus.kind, at_arg, branch_arg);
            result["viewpoint"] = viewpoint_json(v, at_arg, branch_arg);
        } else {
            throw circumcone::InvalidArgument("give one of --at / --grid");
        }
        emit("viewpoints", std::move(inputs), std::move(result));
        return 0;
    }

    if (export_cmd->parsed()) {
        const bool conic_mode = !conic_arg.empty();
        if (conic_mode == !abc_arg.empty())
            throw circumcone::InvalidArgument("give exactly one of --conic / --abc");
        circumcone::SceneExport scene;
        ordered_json inputs;
        if (conic_mode) {
            const auto ab = parse_reals(conic_arg, 2, "--conic");
            scene = circumcone::scene_for_conic(Conic{ab[0], ab[1]}, at_arg, branch_arg);
            inputs = {{"conic", ab}, {"at", at_arg}, {"branch", branch_arg}};
        } else {
            const auto abc = parse_reals(abc_arg, 3, "--abc");
            scene = circumcone::scene_for_system(abc[0], abc[1], abc[2]);
            inputs = {{"abc", abc}};
        }
        inputs["format"] = format;
        inputs["out"] = out_path;

        std::ofstream os(out_path);
        if (!os) throw circumcone::IoError("cannot open '" + out_path + "' for writing");
        if (format == "csv")
            scene.write_csv(os);
        else if (format == "obj")
            scene.write_obj(os);
        else {
            ordered_json j;
            j["version"] = "1";
            j["command"] = "export";
            j["inputs"] = inputs;
            j["result"] = scene.to_json();
            os << j.dump() << "\n";
        }
        os.flush();
        if (!os) throw circumcone::IoError("failed writing '" + out_path + "'");

        ordered_json result;
        result["written"] = out_path;
        result["format"] = format;
        emit("export", std::move(inputs), std::move(result));
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const circumcone::IoError& e) {
        ordered_json j{{"error", "io_error"}, {"detail", e.what()}};
        std::cout << j.dump() << "\n";
        return 3;
    } catch (const circumcone::DomainError& e) {
        ordered_json j{{"error", e.code()}, {"detail", e.detail()}};
        std::cout << j.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        ordered_json j{{"error", "internal_error"}, {"detail", e.what()}};
        std::cout << j.dump() << "\n";
        return 1;
    }
}
