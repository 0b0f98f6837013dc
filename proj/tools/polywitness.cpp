/**
 * Command line surface for the witness kernel: membership checks, witness
 * synthesis, certificate/polytope verification, atlas tables, the standard
 * fixture set, and a raw exact-hull runner.
 *
 * Exit codes: 0 success / inside; 1 outside, unreachable, or verification
 * failure; 2 usage or input-format error.
 */

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polywitness/json_io.hpp"

namespace pw = polywitness;

namespace {

int write_or_print(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return 2;
    }
    out << text << "\n";
    return 0;
}

pw::Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) pw::fail("ParseError", "cannot open " + path);
    pw::Json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        pw::fail("ParseError", std::string("invalid JSON: ") + ex.what());
    }
    return j;
}

int run_check(int dim, int v, long long e) {
    pw::MembershipVerdict verdict = pw::in_E(dim, v, e);
    if (verdict.in) {
        std::cout << "IN\n";
        return 0;
    }
    std::cout << "OUT: " << pw::display_reason(verdict.reason) << "\n";
    return 1;
}

int run_synthesize(int dim, int v, long long e, const std::string& out_path,
                   bool with_coords) {
    pw::Synthesizer synth;
    pw::WitnessCertificate cert = synth.synthesize(dim, v, e);
    const pw::Polytope* poly = nullptr;
    pw::Synthesizer::Witness w;
    if (with_coords) {
        w = synth.witness(dim, v, e);
        poly = w.poly.get();
    }
    return write_or_print(pw::certificate_to_json(cert, poly).dump(2), out_path);
}

int run_verify(const std::string& path) {
    pw::VerifyTranscript t = pw::verify_json(load_json(path));
    for (const pw::VerifyCheck& c : t.checks) {
        std::cout << "check " << c.name << ": " << (c.pass ? "PASS" : "FAIL");
        if (!c.note.empty()) std::cout << " (" << c.note << ")";
        std::cout << "\n";
    }
    std::cout << (t.pass() ? "VERIFIED" : "REJECTED") << "\n";
    return t.pass() ? 0 : 1;
}

int run_atlas(int dim, int vmax, const std::string& format, const std::string& out_path) {
    pw::Synthesizer synth;
    std::vector<pw::Synthesizer::AtlasRow> rows = synth.atlas(dim, vmax);
    std::ostringstream out;
    if (format == "csv") {
        out << "v,e,status,recipe\n";
        for (const auto& r : rows)
            out << r.v << "," << r.e << "," << r.status << ","
                << (r.recipe.empty() ? "" : "\"" + r.recipe + "\"") << "\n";
    } else {
        for (const auto& r : rows) out << r.v << " " << r.e << " " << r.status << "\n";
    }
    std::string text = out.str();
    if (!text.empty() && text.back() == '\n') text.pop_back();
    return write_or_print(text, out_path);
}

int run_fixtures(const std::string& out_dir) {
    struct Item {
        const char* file;
        const char* recipe;
    };
    const std::vector<Item> items = {
        {"fixture_pa.json", "(pyr (pyr (cyclic 2 4)))"},
        {"fixture_pb.json", "(pyr (prod (simplex 1) (simplex 2)))"},
        {"fixture_pc.json", "(trunc (simplex 4))"},
        {"fixture_pd.json", "(prod (simplex 2) (simplex 2))"},
        {"cyclic_5_7.json", "(cyclic 5 7)"},
        {"cyclic_5_7_dual.json", "(dual (cyclic 5 7))"},
        {"chain_17_45.json", "(stack (trunc (dual (cyclic 5 7))))"},
    };
    for (const Item& item : items) {
        pw::Polytope p = pw::evaluate(pw::parse_recipe(item.recipe));
        pw::Json j = pw::polytope_to_json(p, true);
        j["recipe"] = item.recipe;
        // A certificate-shaped document: verify re-evaluates the recipe.
        j["v"] = static_cast<int>(p.predicted[0]);
        j["e"] = p.predicted[1];
        j["f_vector"] = p.predicted;
        std::string path = out_dir.empty() ? item.file : out_dir + "/" + item.file;
        std::ofstream out(path);
        if (!out) {
            std::cerr << "error: cannot open " << path << " for writing\n";
            return 2;
        }
        out << j.dump(2) << "\n";
        std::cout << path << "\n";
    }
    return 0;
}

int run_hull(const std::string& path) {
    pw::Json j = load_json(path);
    pw::require(j.contains("points"), "ParseError", "points file needs a points array");
    std::vector<pw::Point> pts = pw::points_from_json(j["points"]);
    pw::HullResult hull = pw::convex_hull(pts);
    pw::FaceLattice lattice = pw::lattice_from_hull(hull);
    pw::Json out;
    out["dim"] = hull.dimension;
    out["vertices"] = hull.vertices;
    pw::Json facets = pw::Json::array();
    for (const pw::HullFacet& f : hull.facets) facets.push_back(f.vertices);
    out["facets"] = std::move(facets);
    out["f_vector"] = pw::f_vector(lattice);
    std::cout << out.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified (vertex, edge) witnesses for 3-, 4- and 5-polytopes"};
    app.require_subcommand(1);

    int dim = 5, v = 0;
    long long e = 0;
    std::string out_path, format = "csv", file_path, out_dir;
    int vmax = 0;
    bool with_coords = false;

    CLI::App* c_check = app.add_subcommand("check", "decide whether (v, e) is attained");
    c_check->add_option("--dim", dim, "polytope dimension (3, 4 or 5)")->required();
    c_check->add_option("--v", v, "vertex count")->required();
    c_check->add_option("--e", e, "edge count")->required();

    CLI::App* c_synth = app.add_subcommand("synthesize", "build a certified witness");
    c_synth->add_option("--dim", dim, "polytope dimension (3, 4 or 5)")->required();
    c_synth->add_option("--v", v, "vertex count")->required();
    c_synth->add_option("--e", e, "edge count")->required();
    c_synth->add_option("--out", out_path, "write the certificate JSON here");
    c_synth->add_flag("--coords", with_coords, "embed exact rational coordinates");

    CLI::App* c_verify = app.add_subcommand("verify", "re-check an emitted document");
    c_verify->add_option("file", file_path, "certificate or polytope JSON")->required();

    CLI::App* c_atlas = app.add_subcommand("atlas", "verdict table for a dimension");
    c_atlas->add_option("--dim", dim, "polytope dimension (3, 4 or 5)")->required();
    c_atlas->add_option("--vmax", vmax, "largest vertex count")->required();
    c_atlas->add_option("--format", format, "csv or plotdata")
        ->check(CLI::IsMember({"csv", "plotdata"}));
    c_atlas->add_option("--out", out_path, "write the table here");

    CLI::App* c_fix = app.add_subcommand("fixtures", "emit the standard polytope fixtures");
    c_fix->add_option("--out", out_dir, "output directory (default: current)");

    CLI::App* c_hull = app.add_subcommand("hull", "exact convex hull of a point list");
    c_hull->add_option("file", file_path, "JSON with a points array")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        app.exit(ex);
        return 2;
    }

    try {
        if (c_check->parsed()) return run_check(dim, v, e);
        if (c_synth->parsed()) return run_synthesize(dim, v, e, out_path, with_coords);
        if (c_verify->parsed()) return run_verify(file_path);
        if (c_atlas->parsed()) return run_atlas(dim, vmax, format, out_path);
        if (c_fix->parsed()) return run_fixtures(out_dir);
        if (c_hull->parsed()) return run_hull(file_path);
    } catch (const pw::Error& err) {
        const std::string& code = err.code();
        if (code == "ParseError" || code == "BadDimension" ||
            code == "UnsupportedDimension") {
            std::cerr << "error: " << err.what() << "\n";
            return 2;
        }
        std::cout << err.message() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 2;
}
