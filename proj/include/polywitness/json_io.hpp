#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polywitness/constructions.hpp"
#include "polywitness/simplicial.hpp"
#include "polywitness/synthesis.hpp"

namespace polywitness {

using Json = nlohmann::json;

/* ------------------------------------------------------------------ */
/* Serialization: rationals as "p/q" strings, facets as sorted lists.  */
/* ------------------------------------------------------------------ */

inline Json coords_to_json(const std::vector<Point>& coords) {
    Json arr = Json::array();
    for (const Point& p : coords) {
        Json row = Json::array();
        for (const Rational& x : p) row.push_back(format_rational(x));
        arr.push_back(std::move(row));
    }
    return arr;
}

inline Json polytope_to_json(const Polytope& p, bool with_coords) {
    Json j;
    j["dim"] = p.dim;
    j["n_vertices"] = static_cast<int>(p.coords.size());
    Json facets = Json::array();
    for (const HullFacet& f : p.hull.facets) facets.push_back(f.vertices);
    j["facets"] = std::move(facets);
    if (with_coords) j["coords"] = coords_to_json(p.coords);
    return j;
}

inline Json certificate_to_json(const WitnessCertificate& c,
                                const Polytope* coords_of = nullptr) {
    Json j;
    j["dim"] = c.dim;
    j["v"] = c.v;
    j["e"] = c.e;
    j["recipe"] = print_recipe(c.recipe);
    j["f_vector"] = c.f;
    j["checks"] = {{"combinatorial", c.checks.combinatorial},
                   {"hull", c.checks.hull},
                   {"euler", c.checks.euler},
                   {"degree_sum", c.checks.degree_sum}};
    if (coords_of != nullptr) j["coords"] = coords_to_json(coords_of->coords);
    return j;
}

inline Json complex_to_json(const SimplicialComplex& k) {
    Json j;
    j["n"] = k.n;
    j["facets"] = k.facets;
    return j;
}

/* ------------------------------------------------------------------ */
/* Parsing.                                                             */
/* ------------------------------------------------------------------ */

inline std::vector<std::vector<int>> facets_from_json(const Json& j) {
    require(j.is_array(), "ParseError", "facets must be an array");
    std::vector<std::vector<int>> out;
    for (const Json& row : j) {
        require(row.is_array(), "ParseError", "facet must be an array of vertex indices");
        std::vector<int> f;
        for (const Json& x : row) {
            require(x.is_number_integer(), "ParseError", "vertex index must be an integer");
            f.push_back(x.get<int>());
        }
        out.push_back(std::move(f));
    }
    return out;
}

inline std::vector<Point> points_from_json(const Json& j) {
    require(j.is_array(), "ParseError", "points must be an array");
    std::vector<Point> pts;
    for (const Json& row : j) {
        require(row.is_array(), "ParseError", "point must be an array");
        Point p;
        for (const Json& x : row) {
            if (x.is_number_integer())
                p.push_back(Rational(x.get<long long>()));
            else if (x.is_string())
                p.push_back(parse_rational(x.get<std::string>()));
            else
                fail("ParseError", "coordinate must be an integer or a \"p/q\" string");
        }
        pts.push_back(std::move(p));
    }
    return pts;
}

inline SimplicialComplex complex_from_json(const Json& j) {
    require(j.contains("n") && j["n"].is_number_integer(), "ParseError",
            "complex needs an integer field n");
    require(j.contains("facets"), "ParseError", "complex needs facets");
    return make_complex(j["n"].get<int>(), facets_from_json(j["facets"]));
}

/* ------------------------------------------------------------------ */
/* Verification of emitted documents.                                  */
/* ------------------------------------------------------------------ */

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string note;
};

struct VerifyTranscript {
    std::vector<VerifyCheck> checks;
    bool pass() const {
        for (const VerifyCheck& c : checks)
            if (!c.pass) return false;
        return !checks.empty();
    }
};

namespace detail {

inline void add_check(VerifyTranscript& t, const std::string& name, bool pass,
                      std::string note = "") {
    t.checks.push_back(VerifyCheck{name, pass, std::move(note)});
}

} // namespace detail

/** Re-run every check a certificate claims: the recipe is re-evaluated
 *  from scratch and the stored f-vector compared against both semantics. */
inline VerifyTranscript verify_certificate_json(const Json& j) {
    VerifyTranscript t;
    for (const char* field : {"dim", "v", "e", "recipe", "f_vector"})
        require(j.contains(field), "ParseError",
                std::string("certificate is missing field ") + field);
    const int dim = j["dim"].get<int>();
    const int v = j["v"].get<int>();
    const long long e = j["e"].get<long long>();
    FVector stored;
    for (const Json& x : j["f_vector"]) stored.push_back(x.get<long long>());

    MembershipVerdict verdict = in_E(dim, v, e);
    detail::add_check(t, "membership", verdict.in,
                      verdict.in ? "" : std::string("OUT: ") + display_reason(verdict.reason));

    Recipe recipe;
    try {
        recipe = parse_recipe(j["recipe"].get<std::string>());
        detail::add_check(t, "recipe_parses", true);
    } catch (const Error& err) {
        detail::add_check(t, "recipe_parses", false, err.what());
        return t;
    }
    try {
        Polytope p = evaluate(recipe);
        detail::add_check(t, "recipe_evaluates", true);
        detail::add_check(t, "f_vector_matches", p.predicted == stored);
        detail::add_check(t, "target_pair", p.predicted[0] == v && p.predicted[1] == e);
        WitnessChecks c = run_checks(p);
        detail::add_check(t, "combinatorial", c.combinatorial);
        detail::add_check(t, "hull", c.hull);
        detail::add_check(t, "euler", c.euler);
        detail::add_check(t, "degree_sum", c.degree_sum);
    } catch (const Error& err) {
        detail::add_check(t, "recipe_evaluates", false, err.what());
    }
    return t;
}

/** Re-run the lattice axioms (and the hull cross-check when coordinates
 *  are present) on a standalone polytope document. */
inline VerifyTranscript verify_polytope_json(const Json& j) {
    VerifyTranscript t;
    for (const char* field : {"dim", "n_vertices", "facets"})
        require(j.contains(field), "ParseError",
                std::string("polytope document is missing field ") + field);
    const int dim = j["dim"].get<int>();
    const int n = j["n_vertices"].get<int>();
    std::vector<std::vector<int>> facets = facets_from_json(j["facets"]);

    FaceLattice lattice;
    try {
        std::vector<VSet> sets;
        for (const auto& f : facets) sets.push_back(VSet::of(f));
        lattice = lattice_from_incidence(dim, n, sets);
        detail::add_check(t, "lattice_axioms", true);
    } catch (const Error& err) {
        detail::add_check(t, "lattice_axioms", false, err.what());
        return t;
    }
    FVector f = f_vector(lattice);
    detail::add_check(t, "euler", euler_holds(dim, f));
    long long degsum = 0;
    for (long long d : degree_sequence(lattice)) degsum += d;
    detail::add_check(t, "degree_sum", degsum == 2 * f[1]);

    if (j.contains("coords")) {
        std::vector<Point> pts = points_from_json(j["coords"]);
        bool match = false;
        std::string note;
        try {
            require(static_cast<int>(pts.size()) == n, "CrossCheckMismatch",
                    "coordinate count differs from n_vertices");
            HullResult hull = convex_hull(pts);
            require(hull.vertices.size() == pts.size(), "CrossCheckMismatch",
                    "a listed point is not a hull vertex");
            std::vector<std::vector<int>> got;
            for (const HullFacet& hf : hull.facets) got.push_back(hf.vertices);
            std::vector<std::vector<int>> want = facets;
            for (auto& w : want) std::sort(w.begin(), w.end());
            std::sort(want.begin(), want.end());
            require(got == want, "CrossCheckMismatch",
                    "hull facets differ from the facet list");
            match = true;
        } catch (const Error& err) {
            note = err.what();
        }
        detail::add_check(t, "hull_cross_check", match, note);
    }
    return t;
}

/** Dispatch on document shape: certificates carry a recipe, polytopes a
 *  facet list, complexes a vertex count n. */
inline VerifyTranscript verify_json(const Json& j) {
    require(j.is_object(), "ParseError", "expected a JSON object");
    if (j.contains("recipe")) return verify_certificate_json(j);
    if (j.contains("facets") && j.contains("n_vertices")) return verify_polytope_json(j);
    if (j.contains("facets") && j.contains("n")) {
        VerifyTranscript t;
        try {
            SimplicialComplex k = complex_from_json(j);
            detail::add_check(t, "complex_parses", true);
            detail::add_check(t, "facets_incomparable", true);
            (void)k;
        } catch (const Error& err) {
            detail::add_check(t, "complex_parses", false, err.what());
        }
        return t;
    }
    fail("ParseError", "unrecognized document shape");
}

} // namespace polywitness
