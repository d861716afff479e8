#include "entcone/cli.hpp"

#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entcone/io.hpp"

namespace entcone {

namespace {

constexpr int kErrorExit = 10;

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        write_text_file(out_path, content);
}

void emit_json(const json& j, const std::string& out_path) {
    emit(j.dump(2) + "\n", out_path);
}

struct ConeArtifacts {
    std::vector<LinearInequality> ineqs;
    std::vector<ExtremeRay> rays;
    std::vector<FacePair> faces;
    std::vector<RayName> names;
};

ConeArtifacts build_cone(int n) {
    ConeArtifacts art;
    art.ineqs = elemental_inequalities(GroundSet(n));
    art.rays = double_description(art.ineqs);
    art.faces = enumerate_2faces(art.rays, art.ineqs);
    art.names = name_rays(art.rays, art.faces);
    return art;
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        const size_t comma = std::min(s.find(',', pos), s.size());
        const std::string tok = s.substr(pos, comma - pos);
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("bad ") + what + ": " + s);
        }
        if (used != tok.size())
            throw std::invalid_argument(std::string("bad ") + what + ": " + s);
        out.push_back(v);
        pos = comma + 1;
        if (comma == s.size())
            break;
    }
    if (out.empty())
        throw std::invalid_argument(std::string("empty ") + what);
    return out;
}

std::vector<double> parse_double_list(const std::string& s, const char* what) {
    std::vector<double> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        const size_t comma = std::min(s.find(',', pos), s.size());
        const std::string tok = s.substr(pos, comma - pos);
        size_t used = 0;
        double v = 0;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("bad ") + what + ": " + s);
        }
        if (used != tok.size())
            throw std::invalid_argument(std::string("bad ") + what + ": " + s);
        out.push_back(v);
        pos = comma + 1;
        if (comma == s.size())
            break;
    }
    return out;
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Polymatroidal cone toolkit: facets, extreme rays, the "
                 "two-face catalog, and entropic-point checks with witness "
                 "distributions"};
    app.require_subcommand(1);

    int n = 4;
    double tol = 1e-9;
    std::string format = "json";
    std::string out_path;
    std::string face_id;
    double a = 0, b = 0;
    int k = 0, k2 = 0;
    std::string partition_arg;
    std::string grid_arg;
    size_t max_support = 200000;

    auto add_common = [&](CLI::App* cmd, bool with_format) {
        cmd->add_option("--out", out_path, "Write to this file instead of standard output");
        if (with_format)
            cmd->add_option("--format", format, "Output format")
                ->check(CLI::IsMember({"json", "csv"}));
    };

    auto* cmd_ineq = app.add_subcommand(
        "inequalities", "Elemental inequalities (the facet normals) for the chosen n");
    cmd_ineq->add_option("--n", n, "Ground set size (2..4 for cone work)")
        ->check(CLI::Range(2, 4));
    add_common(cmd_ineq, true);

    auto* cmd_rays = app.add_subcommand(
        "rays", "Extreme rays via double description, with names and tight sets");
    cmd_rays->add_option("--n", n, "Ground set size")->check(CLI::Range(2, 4));
    add_common(cmd_rays, true);

    auto* cmd_faces = app.add_subcommand(
        "faces", "All ray pairs with the 2-face flag (CSV)");
    cmd_faces->add_option("--n", n, "Ground set size")->check(CLI::Range(2, 4));
    add_common(cmd_faces, false);

    auto* cmd_table = app.add_subcommand(
        "table", "The 59-row catalog of two-face types of the n = 4 cone");
    add_common(cmd_table, true);

    auto* cmd_member = app.add_subcommand(
        "membership", "Decide whether a*r1 + b*r2 on a 2-face is entropic");
    cmd_member->add_option("--face", face_id, "Face id, e.g. \"(U23^123,U12^12)\"")
        ->required();
    cmd_member->add_option("--a", a, "Coefficient of the first named ray")->required();
    cmd_member->add_option("--b", b, "Coefficient of the second named ray")->required();
    cmd_member->add_option("--tol", tol, "Numeric tolerance");

    auto* cmd_witness = app.add_subcommand(
        "witness", "Construct a joint distribution whose entropy vector is a*r1 + b*r2");
    cmd_witness->add_option("--face", face_id, "Face id")->required();
    cmd_witness->add_option("--a", a, "Coefficient of the first named ray");
    cmd_witness->add_option("--b", b, "Coefficient of the second named ray");
    cmd_witness->add_option("--k", k, "Integer parameter (alphabet size)");
    cmd_witness->add_option("--k2", k2, "Second integer parameter where the face needs two");
    cmd_witness->add_option("--partition", partition_arg,
                            "Number partition, e.g. 2,1,1");
    cmd_witness->add_option("--max-support", max_support,
                            "Cap on the constructed support size");
    cmd_witness->add_option("--tol", tol, "Numeric tolerance");
    cmd_witness->add_option("--out", out_path,
                            "Write the distribution here; the report goes to standard output");

    auto* cmd_region = app.add_subcommand(
        "region", "Sweep membership over a coordinate grid (CSV)");
    cmd_region->add_option("--face", face_id, "Face id")->required();
    cmd_region->add_option("--grid", grid_arg, "AMAX,BMAX,STEP")->required();
    cmd_region->add_option("--tol", tol, "Numeric tolerance");
    cmd_region->add_option("--out", out_path, "Write to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (cmd_ineq->parsed()) {
            const auto ineqs = elemental_inequalities(GroundSet(n));
            if (format == "csv")
                emit(inequalities_to_csv(ineqs), out_path);
            else
                emit_json(inequalities_to_json(ineqs), out_path);
            return 0;
        }
        if (cmd_rays->parsed()) {
            const auto art = build_cone(n);
            if (format == "csv")
                emit(rays_to_csv(art.rays, art.names), out_path);
            else
                emit_json(rays_to_json(art.rays, art.names), out_path);
            return 0;
        }
        if (cmd_faces->parsed()) {
            const auto art = build_cone(n);
            emit(faces_to_csv(art.faces), out_path);
            return 0;
        }
        if (cmd_table->parsed()) {
            const auto art = build_cone(4);
            const auto table = face_type_table(art.rays, art.faces);
            if (format == "csv")
                emit(table_to_csv(table), out_path);
            else
                emit_json(table_to_json(table), out_path);
            return 0;
        }
        if (cmd_member->parsed()) {
            const FacePoint fp = parse_face_point(face_id, a, b);
            const Verdict v = membership(fp, tol);
            emit_json(verdict_to_json(fp, v), "");
            return exit_code(v.status);
        }
        if (cmd_witness->parsed()) {
            WitnessParams params;
            if (cmd_witness->count("--k"))
                params.k = k;
            if (cmd_witness->count("--k2"))
                params.k2 = k2;
            if (!partition_arg.empty())
                params.partition = parse_int_list(partition_arg, "partition");
            params.max_support = max_support;

            double wa = a, wb = b;
            const bool have_a = cmd_witness->count("--a") > 0;
            const bool have_b = cmd_witness->count("--b") > 0;
            if (have_a != have_b)
                throw std::invalid_argument("give both --a and --b, or neither");
            if (!have_a) {
                const auto pt = point_from_params(face_id, params);
                wa = pt.first;
                wb = pt.second;
            }
            const FacePoint fp = parse_face_point(face_id, wa, wb);
            const JointDist d = witness(fp, params, tol);

            const auto got = entropy_vector(d);
            const auto want = face_point_vector(fp);
            double max_error = 0;
            for (size_t t = 0; t < got.raw().size(); ++t)
                max_error = std::max(max_error,
                                     std::abs(got.raw()[t] - want.raw()[t]));
            if (max_error > std::max(tol, 1e-9))
                throw std::runtime_error("witness verification failed: max error " +
                                         format_double(max_error));

            Verdict v = membership(fp, tol);
            if (params.k)
                v.k = params.k;
            if (params.k2)
                v.k2 = params.k2;
            if (params.partition)
                v.partition = params.partition;
            const json report = witness_report(fp, v, d, max_error);
            if (out_path.empty()) {
                emit_json(dist_to_json(d), "");
                std::cerr << report.dump(2) << "\n";
            } else {
                emit_json(dist_to_json(d), out_path);
                emit_json(report, "");
            }
            return 0;
        }
        if (cmd_region->parsed()) {
            const auto grid = parse_double_list(grid_arg, "grid");
            if (grid.size() != 3)
                throw std::invalid_argument("--grid needs AMAX,BMAX,STEP");
            const auto rows = region_sample(face_id, grid[0], grid[1], grid[2], tol);
            emit(region_to_csv(rows), out_path);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kErrorExit;
    }
    return kErrorExit;
}

} // namespace entcone
