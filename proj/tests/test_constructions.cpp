#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "polywitness/constructions.hpp"
#include "polywitness/recipe.hpp"

using namespace polywitness;

namespace {

FVector fv(const char* recipe) { return evaluate(parse_recipe(recipe)).predicted; }

} // namespace

TEST_CASE("simplices across supported dimensions") {
    for (int d = 1; d <= 6; ++d) {
        Polytope s = simplex(d);
        CHECK(s.dim == d);
        REQUIRE(static_cast<int>(s.predicted.size()) == d);
        for (int k = 0; k < d; ++k)
            CHECK(s.predicted[static_cast<std::size_t>(k)] == binom(d + 1, k + 1));
    }
    CHECK_THROWS_AS(simplex(0), Error);
    CHECK_THROWS_AS(simplex(7), Error);
}

TEST_CASE("cyclic polytopes") {
    CHECK(cyclic(2, 5).predicted == FVector{5, 5});
    CHECK(cyclic(4, 6).predicted == FVector{6, 15, 18, 9});
    CHECK(cyclic(5, 7).predicted == FVector{7, 21, 34, 30, 12});
    // Combinatorics comes straight from the evenness rule; cross-check the
    // realized hull on one instance.
    Polytope c = cyclic(4, 7);
    std::vector<std::vector<int>> hull_facets;
    for (const auto& f : c.hull.facets) hull_facets.push_back(f.vertices);
    CHECK(hull_facets == oracles::cyclic_facets(4, 7));
    CHECK_THROWS_AS(cyclic(1, 4), Error);
    CHECK_THROWS_AS(cyclic(4, 4), Error); // needs n >= d + 1
}

TEST_CASE("pyramid puts the apex last") {
    Polytope sp = pyramid(cyclic(2, 4));
    CHECK(sp.predicted == FVector{5, 8, 5});
    CHECK(sp.dim == 3);
    CHECK(sp.coords.back().back() == 1); // apex is the appended point
    for (std::size_t i = 0; i + 1 < sp.coords.size(); ++i)
        CHECK(sp.coords[i].back() == 0);
    CHECK(fv("(pyr (pyr (cyclic 2 4)))") == FVector{6, 13, 13, 6});
}

TEST_CASE("dual reverses the f-vector and inverts twice") {
    Polytope c = cyclic(5, 7);
    Polytope d = dual(c);
    CHECK(d.predicted == FVector{12, 30, 34, 21, 7});
    Polytope dd = dual(d);
    CHECK(dd.predicted == c.predicted);
    // All vertices of the dual of a simplicial polytope are simple.
    CHECK(simple_vertices(d.lattice).size() == 12);
}

TEST_CASE("products convolve face counts and faces are literal pairs") {
    Polytope sq_tri = product(cyclic(2, 4), simplex(2));
    CHECK(sq_tri.predicted == FVector{12, 24, 19, 7});

    Polytope prism = product(simplex(1), simplex(2));
    CHECK(prism.predicted == FVector{6, 9, 5});

    // Face lattice equals the set product of the factors' face posets.
    auto got = oracles::face_sets(prism.lattice);
    auto expect = oracles::product_faces(simplex(1).lattice, simplex(2).lattice);
    CHECK(got == expect);

    auto got2 = oracles::face_sets(sq_tri.lattice);
    auto expect2 = oracles::product_faces(cyclic(2, 4).lattice, simplex(2).lattice);
    CHECK(got2 == expect2);

    CHECK_THROWS_AS(product(cyclic(4, 6), simplex(3)), Error); // dim 7 > 6
}

TEST_CASE("truncating a simple vertex") {
    CHECK(fv("(trunc (simplex 3))") == FVector{6, 9, 5});
    CHECK(fv("(trunc (simplex 4))") == FVector{8, 16, 14, 6});
    // Any vertex of a simplex works via the selector.
    CHECK(fv("(trunc (simplex 3) 2)") == FVector{6, 9, 5});
    // Cyclic 4-polytopes with n > 5 have no simple vertex.
    CHECK_THROWS_WITH(truncate_simple_vertex(cyclic(4, 7)),
                      Catch::Matchers::ContainsSubstring("NotSimple"));
    // The apex of a square pyramid is not simple.
    Polytope sp = pyramid(cyclic(2, 4));
    CHECK_THROWS_WITH(truncate_simple_vertex(sp, 4),
                      Catch::Matchers::ContainsSubstring("NotSimple"));
    CHECK(truncate_simple_vertex(sp, 0).predicted == FVector{7, 11, 6});
}

TEST_CASE("stacking onto a simplex facet") {
    CHECK(fv("(stack (simplex 3))") == FVector{5, 9, 6});
    Polytope sp = pyramid(cyclic(2, 4));
    // Facet 0 in canonical order is the square base: not stackable.
    CHECK_THROWS_WITH(stack_on_simplex_facet(sp, 0),
                      Catch::Matchers::ContainsSubstring("NotASimplexFacet"));
    CHECK_THROWS_AS(stack_on_simplex_facet(sp, 99), Error);
    // The default selector skips it and finds a triangle.
    CHECK(stack_on_simplex_facet(sp).predicted == FVector{6, 11, 7});
    CHECK(stack_on_simplex_facet(sp, 1).predicted == FVector{6, 11, 7});
}

TEST_CASE("placing a point beyond a facet subset") {
    // Beyond one simplex facet is exactly a stacking.
    Polytope stacked = place_beyond(simplex(3), {0});
    CHECK(stacked.predicted == FVector{5, 9, 6});

    // The pyramid-over-square-pyramid chain used for the 6-vertex family.
    Polytope pa = evaluate(parse_recipe("(pyr (pyr (cyclic 2 4)))"));
    Polytope grown = place_beyond(pa, {2, 4, 5});
    CHECK(grown.predicted == FVector{7, 19, 23, 11});
    CHECK(dual(grown).predicted == FVector{11, 23, 19, 7});

    // Bad subsets are rejected up front.
    CHECK_THROWS_AS(place_beyond(simplex(3), {}), Error);
    CHECK_THROWS_AS(place_beyond(simplex(3), {0, 1, 2, 3}), Error);
    CHECK_THROWS_AS(place_beyond(simplex(3), {7}), Error);
    CHECK_THROWS_AS(place_beyond(simplex(3), {0, 0}), Error);

    // No point sees exactly two opposite edges of a square.
    CHECK_THROWS_WITH(place_beyond(cyclic(2, 4), {0, 3}),
                      Catch::Matchers::ContainsSubstring("PlacementFailed"));
}

TEST_CASE("recipes print and parse losslessly") {
    for (const char* s : {"(simplex 4)", "(cyclic 5 7)", "(pyr (cyclic 2 4))",
                          "(dual (stack (simplex 3) 0))", "(trunc (simplex 4) 1)",
                          "(prod (simplex 1) (cyclic 2 5))",
                          "(beyond (pyr (pyr (cyclic 2 4))) (2 4 5))",
                          "(stack (trunc (dual (cyclic 5 7))))"}) {
        CAPTURE(s);
        CHECK(print_recipe(parse_recipe(s)) == s);
    }
    CHECK_THROWS_AS(parse_recipe(""), Error);
    CHECK_THROWS_AS(parse_recipe("(simplex)"), Error);
    CHECK_THROWS_AS(parse_recipe("(cyclic 4)"), Error);
    CHECK_THROWS_AS(parse_recipe("(frobnicate 3)"), Error);
    CHECK_THROWS_AS(parse_recipe("(pyr (simplex 3)"), Error);
    CHECK_THROWS_AS(parse_recipe("(simplex 3) junk"), Error);
    CHECK_THROWS_AS(parse_recipe("(beyond (simplex 3) ())"), Error);
}

TEST_CASE("evaluate round-trips recipes through real geometry") {
    oracles::RecipeChains chains(2026);
    for (int i = 0; i < 12; ++i) {
        auto [recipe, poly] = chains.next();
        CAPTURE(print_recipe(recipe));
        Polytope again = evaluate(parse_recipe(print_recipe(recipe)));
        CHECK(again.predicted == poly.predicted);
        CHECK(euler_holds(again.dim, f_vector(again.lattice)));
    }
}

TEST_CASE("realize cross-checks the prediction") {
    std::vector<Point> sq;
    for (int t = 1; t <= 4; ++t) sq.push_back(moment_point(2, Rational(t)));
    CHECK_THROWS_WITH(realize(2, sq, FVector{4, 5}),
                      Catch::Matchers::ContainsSubstring("CrossCheckMismatch"));
    std::vector<Point> sq2 = sq;
    CHECK(realize(2, sq2, FVector{4, 4}).predicted == FVector{4, 4});
    // A non-vertex input point is an error, not a silent drop.
    std::vector<Point> with_mid = sq;
    with_mid.push_back(barycenter(sq));
    CHECK_THROWS_AS(realize(2, with_mid, FVector{5, 5}), Error);
}
