#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "polywitness/errors.hpp"
#include "polywitness/hull.hpp"

namespace polywitness {

/** Face counts by dimension, (f_0, ..., f_{d-1}). */
using FVector = std::vector<long long>;

inline long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/** Euler relation for a d-polytope: sum (-1)^i f_i = 1 - (-1)^d. */
inline bool euler_holds(int dim, const FVector& f) {
    if (static_cast<int>(f.size()) != dim) return false;
    long long s = 0;
    for (int i = 0; i < dim; ++i) s += (i % 2 == 0) ? f[static_cast<std::size_t>(i)]
                                                    : -f[static_cast<std::size_t>(i)];
    return s == 1 - (dim % 2 == 0 ? 1 : -1);
}

/** Vertex set as a fixed-width bitset; faces never exceed 128 vertices. */
struct VSet {
    static constexpr int capacity = 128;
    std::array<std::uint64_t, 2> w{0, 0};

    static VSet full(int n) {
        VSet s;
        for (int i = 0; i < n; ++i) s.set(i);
        return s;
    }
    static VSet of(const std::vector<int>& idx) {
        VSet s;
        for (int i : idx) s.set(i);
        return s;
    }
    void set(int i) {
        require(0 <= i && i < capacity, "CapacityExceeded",
                "vertex index " + std::to_string(i) + " outside 0..127");
        w[static_cast<std::size_t>(i / 64)] |= std::uint64_t(1) << (i % 64);
    }
    bool test(int i) const {
        return (w[static_cast<std::size_t>(i / 64)] >> (i % 64)) & 1;
    }
    VSet operator&(const VSet& o) const { return {{w[0] & o.w[0], w[1] & o.w[1]}}; }
    VSet operator|(const VSet& o) const { return {{w[0] | o.w[0], w[1] | o.w[1]}}; }
    bool subset_of(const VSet& o) const {
        return (w[0] & ~o.w[0]) == 0 && (w[1] & ~o.w[1]) == 0;
    }
    int count() const {
        return __builtin_popcountll(w[0]) + __builtin_popcountll(w[1]);
    }
    bool empty() const { return (w[0] | w[1]) == 0; }
    std::vector<int> members() const {
        std::vector<int> out;
        for (int i = 0; i < capacity; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }
    bool operator==(const VSet&) const = default;
    auto operator<=>(const VSet&) const = default;
};

/**
 * The full face lattice of a d-polytope, proper faces grouped by rank
 * 0..d-1 (vertices up to facets).  The empty face and the polytope itself
 * are implicit bottom and top.  Built and validated by
 * lattice_from_incidence; immutable afterwards.
 */
struct FaceLattice {
    int dim = 0;
    int n_vertices = 0;
    std::vector<std::vector<VSet>> by_rank; // by_rank[r] sorted ascending

    const std::vector<VSet>& facets() const {
        return by_rank[static_cast<std::size_t>(dim - 1)];
    }

    /** Rank of a proper face, or -2 when absent (-1 is the empty face). */
    int rank_of(const VSet& f) const {
        for (int r = 0; r < dim; ++r) {
            const auto& level = by_rank[static_cast<std::size_t>(r)];
            if (std::binary_search(level.begin(), level.end(), f)) return r;
        }
        return -2;
    }
};

inline FVector f_vector(const FaceLattice& l) {
    FVector f;
    for (const auto& level : l.by_rank) f.push_back(static_cast<long long>(level.size()));
    return f;
}

/**
 * Build the face lattice from vertex-facet incidences by closing the facet
 * sets under intersection, then rank by longest chain.  Validates that the
 * result is the lattice of a d-polytope: atoms are single vertices, facets
 * sit at rank d-1, every rank-2 interval is a diamond (bottom and top
 * included), and Euler's relation holds.  Anything else throws NotALattice.
 */
inline FaceLattice lattice_from_incidence(int dim, int n_vertices,
                                          const std::vector<VSet>& facets) {
    require(dim >= 1, "BadDimension", "lattice needs dim >= 1");
    require(n_vertices >= dim + 1 && !facets.empty(), "NotALattice",
            "too few vertices or facets");
    require(n_vertices <= VSet::capacity, "CapacityExceeded",
            "more than 128 vertices");
    const VSet full = VSet::full(n_vertices);

    // Incidence sanity: proper distinct facets, vertex degrees, separation.
    {
        std::set<VSet> distinct;
        for (const VSet& f : facets) {
            require(f.subset_of(full) && !(f == full), "NotALattice",
                    "facet must be a proper vertex subset");
            require(f.count() >= dim, "NotALattice", "facet with fewer than d vertices");
            require(distinct.insert(f).second, "NotALattice", "duplicate facet");
        }
        for (int v = 0; v < n_vertices; ++v) {
            int deg = 0;
            for (const VSet& f : facets) deg += f.test(v);
            require(deg >= dim, "NotALattice", "vertex on fewer than d facets");
        }
        for (int v = 0; v < n_vertices; ++v)
            for (int u = v + 1; u < n_vertices; ++u) {
                bool same = true;
                for (const VSet& f : facets)
                    if (f.test(v) != f.test(u)) { same = false; break; }
                require(!same, "NotALattice", "two vertices on identical facet sets");
            }
    }

    // Closure under intersection (every face is an intersection of facets).
    std::set<VSet> faces(facets.begin(), facets.end());
    std::vector<VSet> work(facets.begin(), facets.end());
    while (!work.empty()) {
        VSet f = work.back();
        work.pop_back();
        for (const VSet& g : facets) {
            VSet h = f & g;
            if (h == f) continue;
            if (faces.insert(h).second) work.push_back(h);
        }
    }
    faces.erase(VSet{}); // empty face handled implicitly as rank -1

    // Rank by longest chain from the bottom.
    std::vector<VSet> order(faces.begin(), faces.end());
    std::stable_sort(order.begin(), order.end(),
                     [](const VSet& a, const VSet& b) { return a.count() < b.count(); });
    std::map<VSet, int> rank;
    int max_rank = -1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int r = 0;
        for (std::size_t j = 0; j < i; ++j) {
            if (order[j].count() >= order[i].count()) break;
            if (order[j].subset_of(order[i])) r = std::max(r, rank[order[j]] + 1);
        }
        rank[order[i]] = r;
        max_rank = std::max(max_rank, r);
    }
    require(max_rank == dim - 1, "NotALattice", "face chain length does not match dim");

    FaceLattice l;
    l.dim = dim;
    l.n_vertices = n_vertices;
    l.by_rank.assign(static_cast<std::size_t>(dim), {});
    for (const auto& [f, r] : rank) {
        require(r < dim, "NotALattice", "face above facet rank");
        l.by_rank[static_cast<std::size_t>(r)].push_back(f);
    }
    for (auto& level : l.by_rank) std::sort(level.begin(), level.end());

    // Atoms are exactly the vertices.
    require(l.by_rank[0].size() == static_cast<std::size_t>(n_vertices), "NotALattice",
            "atom count differs from vertex count");
    for (const VSet& a : l.by_rank[0])
        require(a.count() == 1, "NotALattice", "atom spanning several vertices");
    // Input facets all sit at top rank.
    require(l.facets().size() == facets.size(), "NotALattice",
            "facet absorbed below top rank");

    // Diamond property on every rank-2 interval, bottom and top included.
    for (int r = -1; r <= dim - 2; ++r) {
        const std::vector<VSet> bottom_level =
            r == -1 ? std::vector<VSet>{VSet{}} : l.by_rank[static_cast<std::size_t>(r)];
        const bool top_is_poly = (r + 2 == dim);
        const std::vector<VSet> top_level =
            top_is_poly ? std::vector<VSet>{full} : l.by_rank[static_cast<std::size_t>(r + 2)];
        const auto& mids = l.by_rank[static_cast<std::size_t>(r + 1)];
        for (const VSet& g : top_level)
            for (const VSet& f : bottom_level) {
                if (!f.subset_of(g) || f == g) continue;
                int count = 0;
                for (const VSet& h : mids)
                    if (f.subset_of(h) && h.subset_of(g) && !(h == f) && !(h == g)) ++count;
                require(count == 2, "NotALattice", "rank-2 interval is not a diamond");
            }
    }

    require(euler_holds(dim, f_vector(l)), "NotALattice", "Euler relation fails");
    return l;
}

/** Lattice straight from a hull whose input points are all vertices. */
inline FaceLattice lattice_from_hull(const HullResult& hull) {
    require(hull.vertices.size() <= static_cast<std::size_t>(VSet::capacity),
            "CapacityExceeded", "more than 128 vertices");
    std::map<int, int> dense;
    for (std::size_t i = 0; i < hull.vertices.size(); ++i)
        dense[hull.vertices[i]] = static_cast<int>(i);
    std::vector<VSet> facets;
    for (const HullFacet& f : hull.facets) {
        VSet s;
        for (int v : f.vertices) s.set(dense.at(v));
        facets.push_back(s);
    }
    return lattice_from_incidence(hull.dimension, static_cast<int>(hull.vertices.size()),
                                  facets);
}

/** Order-reversed lattice, built from the transposed incidence matrix. */
inline FaceLattice dual(const FaceLattice& l) {
    const auto& facets = l.facets();
    const int nf = static_cast<int>(facets.size());
    require(nf <= VSet::capacity, "CapacityExceeded", "dual needs more than 128 vertices");
    std::vector<VSet> dual_facets(static_cast<std::size_t>(l.n_vertices));
    for (int v = 0; v < l.n_vertices; ++v)
        for (int f = 0; f < nf; ++f)
            if (facets[static_cast<std::size_t>(f)].test(v))
                dual_facets[static_cast<std::size_t>(v)].set(f);
    return lattice_from_incidence(l.dim, nf, dual_facets);
}

/** Vertex degrees sorted descending (the degree multiset D). */
inline std::vector<long long> degree_sequence(const FaceLattice& l) {
    require(l.dim >= 2, "BadDimension", "degrees need dim >= 2");
    std::vector<long long> deg(static_cast<std::size_t>(l.n_vertices), 0);
    for (const VSet& e : l.by_rank[1])
        for (int v : e.members()) ++deg[static_cast<std::size_t>(v)];
    std::sort(deg.rbegin(), deg.rend());
    return deg;
}

/** Vertices of degree exactly d. */
inline std::set<int> simple_vertices(const FaceLattice& l) {
    require(l.dim >= 2, "BadDimension", "simple vertices need dim >= 2");
    std::vector<long long> deg(static_cast<std::size_t>(l.n_vertices), 0);
    for (const VSet& e : l.by_rank[1])
        for (int v : e.members()) ++deg[static_cast<std::size_t>(v)];
    std::set<int> out;
    for (int v = 0; v < l.n_vertices; ++v)
        if (deg[static_cast<std::size_t>(v)] == l.dim) out.insert(v);
    return out;
}

/**
 * Boundary of the subcomplex spanned by facet subset S: the ridges lying in
 * exactly one member of S, returned as vertex sets.
 */
inline std::vector<VSet> boundary_of_facet_set(const FaceLattice& l,
                                               const std::set<int>& facet_indices) {
    require(!facet_indices.empty(), "DegenerateInput", "empty facet subset");
    const auto& facets = l.facets();
    std::vector<VSet> out;
    for (const VSet& ridge : l.by_rank[static_cast<std::size_t>(l.dim - 2)]) {
        int hits = 0;
        for (int fi : facet_indices)
            if (ridge.subset_of(facets[static_cast<std::size_t>(fi)])) ++hits;
        if (hits == 1) out.push_back(ridge);
    }
    return out;
}

/** f-vector of one face of the lattice (the face's own polytope). */
inline FVector face_f_vector(const FaceLattice& l, const VSet& face) {
    int r = l.rank_of(face);
    require(r >= 0, "DegenerateInput", "not a face of the lattice");
    FVector f(static_cast<std::size_t>(r), 0);
    for (int k = 0; k < r; ++k)
        for (const VSet& g : l.by_rank[static_cast<std::size_t>(k)])
            if (g.subset_of(face)) ++f[static_cast<std::size_t>(k)];
    return f;
}

enum class ShapeTag { Simplex, Square, SquarePyramid, TriangularPrism,
                      TriangularBipyramid, Other };

struct FaceShape {
    ShapeTag tag = ShapeTag::Other;
    FVector f; // the face's own f-vector

    bool operator==(const FaceShape&) const = default;
    bool operator<(const FaceShape& o) const {
        return tag != o.tag ? tag < o.tag : f < o.f;
    }
};

inline const char* shape_name(ShapeTag t) {
    switch (t) {
        case ShapeTag::Simplex: return "simplex";
        case ShapeTag::Square: return "square";
        case ShapeTag::SquarePyramid: return "square pyramid";
        case ShapeTag::TriangularPrism: return "triangular prism";
        case ShapeTag::TriangularBipyramid: return "triangular bipyramid";
        case ShapeTag::Other: return "other";
    }
    return "other";
}

/** Classify a face by its own f-vector (the handful of shapes we need). */
inline FaceShape facet_shape(const FaceLattice& l, const VSet& face) {
    int r = l.rank_of(face);
    require(r >= 0, "DegenerateInput", "not a face of the lattice");
    FaceShape s;
    s.f = face_f_vector(l, face);
    if (face.count() == r + 1) { s.tag = ShapeTag::Simplex; return s; }
    if (r == 2 && face.count() == 4) { s.tag = ShapeTag::Square; return s; }
    if (r == 3) {
        if (s.f == FVector{5, 8, 5}) s.tag = ShapeTag::SquarePyramid;
        else if (s.f == FVector{6, 9, 5}) s.tag = ShapeTag::TriangularPrism;
        else if (s.f == FVector{5, 9, 6}) s.tag = ShapeTag::TriangularBipyramid;
    }
    return s;
}

} // namespace polywitness
