#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "polywitness/constructions.hpp"
#include "polywitness/recipe.hpp"
#include "polywitness/simplicial.hpp"

using namespace polywitness;

namespace {

SimplicialComplex boundary_of_simplex(int d) {
    // All d-subsets of {0..d}: the boundary sphere of the d-simplex.
    std::vector<std::vector<int>> facets;
    for (int omit = 0; omit <= d; ++omit) {
        std::vector<int> f;
        for (int v = 0; v <= d; ++v)
            if (v != omit) f.push_back(v);
        facets.push_back(std::move(f));
    }
    return make_complex(d + 1, std::move(facets));
}

SimplicialComplex two_tetrahedra() {
    return make_complex(8, {{0, 1, 2, 3}, {4, 5, 6, 7}});
}

HVector h_oracle(const SimplicialComplex& k) {
    std::vector<long long> f;
    for (long long x : complex_f_vector(k)) f.push_back(x);
    return oracles::h_by_polynomial(f, static_cast<int>(k.facets[0].size()));
}

} // namespace

TEST_CASE("make_complex normalizes and validates") {
    SimplicialComplex k = make_complex(4, {{2, 1}, {1, 2}, {0, 3}});
    CHECK(k.facets == std::vector<std::vector<int>>{{0, 3}, {1, 2}});
    CHECK_THROWS_AS(make_complex(3, {{0, 1, 2}, {1, 2}}), Error); // contained facet
    CHECK_THROWS_AS(make_complex(2, {{0, 5}}), Error);            // out of range
}

TEST_CASE("cycle complexes") {
    SimplicialComplex c5 = cycle_complex(5);
    CHECK(c5.n == 5);
    CHECK(c5.facets.size() == 5);
    CHECK(complex_f_vector(c5) == FVector{5, 5});
    CHECK_THROWS_AS(cycle_complex(2), Error);
}

TEST_CASE("h-vectors match the polynomial-expansion oracle") {
    SimplicialComplex sphere = boundary_of_simplex(4);
    CHECK(h_vector(sphere) == HVector{1, 1, 1, 1, 1});
    CHECK(h_vector(sphere) == h_oracle(sphere));

    SimplicialComplex solid = make_complex(5, {{0, 1, 2, 3, 4}});
    CHECK(h_vector(solid) == HVector{1, 0, 0, 0, 0, 0});
    CHECK(h_vector(solid) == h_oracle(solid));

    SimplicialComplex tori = join(cycle_complex(5), cycle_complex(4));
    CHECK(tori.n == 9);
    CHECK(tori.facets.size() == 20);
    CHECK(complex_f_vector(tori) == FVector{9, 29, 40, 20});
    CHECK(h_vector(tori) == HVector{1, 5, 8, 5, 1});
    CHECK(h_vector(tori) == h_oracle(tori));

    SimplicialComplex cyc = make_complex(7, oracles::cyclic_facets(4, 7));
    CHECK(h_vector(cyc) == h_oracle(cyc));

    CHECK(h_vector(two_tetrahedra()) == h_oracle(two_tetrahedra()));
    CHECK_THROWS_AS(h_vector(make_complex(4, {{0, 1, 2}, {0, 3}})), Error); // not pure
}

TEST_CASE("ball h-vector conditions") {
    // A cone over a disc is a ball; the solid simplex is the smallest one.
    BallHReport good = ball_h_checks(make_complex(5, {{0, 1, 2, 3, 4}}));
    CHECK(good.pass());

    // Disjoint tetrahedra violate both the closing zero and nonnegativity.
    BallHReport bad = ball_h_checks(two_tetrahedra());
    CHECK_FALSE(bad.starts_at_one);
    CHECK_FALSE(bad.nonnegative);
    CHECK_FALSE(bad.pass());
}

TEST_CASE("boundary h-vector from a ball h-vector") {
    CHECK(boundary_h_from_ball({1, 4, 3, 0, 0, 0}) == HVector{1, 5, 8, 5, 1});
    CHECK(boundary_h_from_ball({1, 0, 0, 0, 0, 0}) == HVector{1, 1, 1, 1, 1});
    CHECK_THROWS_AS(boundary_h_from_ball({2, 0, 0}), Error);
    CHECK_THROWS_AS(boundary_h_from_ball({1, 1, 1}), Error); // misses the zero
}

TEST_CASE("neighbourliness") {
    CHECK(is_neighbourly(boundary_of_simplex(4)));
    CHECK(is_neighbourly(make_complex(7, oracles::cyclic_facets(4, 7))));
    CHECK_FALSE(is_neighbourly(join(cycle_complex(5), cycle_complex(4))));
    CHECK_FALSE(is_neighbourly(cycle_complex(4)));
}

TEST_CASE("facet-count bounds for simplicial 3-spheres") {
    CHECK(lbt_min_facets_3sphere(5) == 5);
    CHECK(lbt_min_facets_3sphere(8) == 14);
    CHECK(lbt_min_facets_3sphere(11) == 23);
    CHECK(ubt_max_facets_3sphere(5) == 5);
    CHECK(ubt_max_facets_3sphere(8) == 20);
    CHECK(ubt_max_facets_3sphere(11) == 44);
    for (int n = 6; n <= 10; ++n)
        CHECK(ubt_max_facets_3sphere(n) ==
              static_cast<long long>(oracles::cyclic_facets(4, n).size()));
    CHECK_THROWS_AS(lbt_min_facets_3sphere(4), Error);
    CHECK_THROWS_AS(ubt_max_facets_3sphere(4), Error);
}

TEST_CASE("minimal non-faces") {
    auto diag = missing_faces(cycle_complex(4), 0);
    CHECK(diag == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
    // A join has exactly the parts' missing faces, all of dimension 1 here.
    CHECK(missing_faces(join(cycle_complex(5), cycle_complex(4)), 2).empty());
    auto top = missing_faces(boundary_of_simplex(4), 0);
    CHECK(top == std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});
}

TEST_CASE("pseudomanifold boundary facet bound") {
    CHECK(pm_boundary_min_facets(5, 0, 4) == 1);
    CHECK(pm_boundary_min_facets(5, 1, 4) == 5);
    CHECK(pm_boundary_min_facets(5, 2, 4) == 9);
    CHECK_THROWS_AS(pm_boundary_min_facets(5, 0, 3), Error);
}

TEST_CASE("six-facet 4-polytopes classify by facet shapes") {
    struct Case {
        const char* recipe;
        SixFacetClass expect;
    };
    const std::vector<Case> cases = {
        {"(pyr (pyr (cyclic 2 4)))", SixFacetClass::P_A},
        {"(pyr (prod (simplex 1) (simplex 2)))", SixFacetClass::P_B},
        {"(trunc (simplex 4))", SixFacetClass::P_C},
        {"(prod (simplex 2) (simplex 2))", SixFacetClass::P_D},
    };
    std::set<SixFacetClass> seen;
    for (const Case& c : cases) {
        CAPTURE(c.recipe);
        Polytope p = evaluate(parse_recipe(c.recipe));
        CHECK(classify_6facet_4polytope(p.lattice) == c.expect);
        seen.insert(classify_6facet_4polytope(p.lattice));
    }
    CHECK(seen.size() == 4);
    CHECK(std::string(six_facet_class_name(SixFacetClass::P_C)) == "P_C");

    // Wrong facet count and wrong dimension are rejected.
    CHECK_THROWS_AS(classify_6facet_4polytope(simplex(4).lattice), Error);
    CHECK_THROWS_AS(classify_6facet_4polytope(simplex(3).lattice), Error);
}
