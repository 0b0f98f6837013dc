#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "polywitness/errors.hpp"
#include "polywitness/lattice.hpp"

namespace polywitness {

using HVector = std::vector<long long>;

/**
 * Abstract simplicial complex given by its facets (inclusion-maximal faces).
 * Vertices are 0..n-1; facet vertex lists are kept sorted.  Operations that
 * need purity (equal facet cardinality) check it and throw NotPure.
 */
struct SimplicialComplex {
    int n = 0;
    std::vector<std::vector<int>> facets;
};

inline SimplicialComplex make_complex(int n, std::vector<std::vector<int>> facets) {
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (int v : f)
            require(0 <= v && v < n, "ParseError", "facet vertex out of range");
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (const auto& f : facets)
        for (const auto& g : facets)
            require(f == g || !std::includes(g.begin(), g.end(), f.begin(), f.end()),
                    "ParseError", "facets must be pairwise non-contained");
    return {n, std::move(facets)};
}

/** The k-cycle as a 1-dimensional complex. */
inline SimplicialComplex cycle_complex(int k) {
    require(k >= 3, "BadDimension", "cycle needs at least 3 vertices");
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < k; ++i) {
        std::vector<int> e{i, (i + 1) % k};
        std::sort(e.begin(), e.end());
        facets.push_back(e);
    }
    return make_complex(k, std::move(facets));
}

namespace detail {

inline void check_pure(const SimplicialComplex& k) {
    require(!k.facets.empty(), "NotPure", "empty complex");
    for (const auto& f : k.facets)
        require(f.size() == k.facets[0].size(), "NotPure", "facets of mixed cardinality");
}

/** All distinct faces (nonempty), as sorted vertex lists. */
inline std::set<std::vector<int>> all_faces(const SimplicialComplex& k) {
    std::set<std::vector<int>> faces;
    for (const auto& f : k.facets) {
        const std::size_t m = f.size();
        for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
            std::vector<int> s;
            for (std::size_t b = 0; b < m; ++b)
                if (mask & (std::size_t(1) << b)) s.push_back(f[b]);
            faces.insert(std::move(s));
        }
    }
    return faces;
}

} // namespace detail

/** Face counts (f_0, ..., f_{dim}) of the complex. */
inline FVector complex_f_vector(const SimplicialComplex& k) {
    std::size_t maxcard = 0;
    for (const auto& f : k.facets) maxcard = std::max(maxcard, f.size());
    FVector f(maxcard, 0);
    for (const auto& face : detail::all_faces(k)) ++f[face.size() - 1];
    return f;
}

/**
 * h-vector of a pure (d-1)-dimensional complex with m = d vertices per
 * facet: h_i = sum_j (-1)^(i-j) C(m-j, i-j) f_{j-1}, with f_{-1} = 1.
 */
inline HVector h_vector(const SimplicialComplex& k) {
    detail::check_pure(k);
    const long long m = static_cast<long long>(k.facets[0].size());
    FVector f = complex_f_vector(k);
    auto f_at = [&f](long long j) -> long long {
        if (j == -1) return 1;
        return f[static_cast<std::size_t>(j)];
    };
    HVector h(static_cast<std::size_t>(m) + 1, 0);
    for (long long i = 0; i <= m; ++i) {
        long long s = 0;
        for (long long j = 0; j <= i; ++j) {
            long long term = binom(m - j, i - j) * f_at(j - 1);
            s += ((i - j) % 2 == 0) ? term : -term;
        }
        h[static_cast<std::size_t>(i)] = s;
    }
    return h;
}

/** The three h-vector conditions satisfied by every simplicial ball. */
struct BallHReport {
    HVector h;
    bool starts_at_one = false; // h_0 = 1 and h_{d+1} = 0
    bool sum_is_facet_count = false;
    bool nonnegative = false;

    bool pass() const { return starts_at_one && sum_is_facet_count && nonnegative; }
};

inline BallHReport ball_h_checks(const SimplicialComplex& k) {
    BallHReport r;
    r.h = h_vector(k);
    r.starts_at_one = r.h.front() == 1 && r.h.back() == 0;
    long long sum = 0;
    for (long long x : r.h) sum += x;
    r.sum_is_facet_count = sum == static_cast<long long>(k.facets.size());
    r.nonnegative = std::all_of(r.h.begin(), r.h.end(), [](long long x) { return x >= 0; });
    return r;
}

/**
 * h-vector of the boundary sphere of a d-ball from the ball's h-vector:
 * entry i is (h_0 + ... + h_i) - (h_{d+1-i} + ... + h_d).
 */
inline HVector boundary_h_from_ball(const HVector& h) {
    require(h.size() >= 2, "BadDimension", "ball h-vector too short");
    require(h.front() == 1 && h.back() == 0, "DegenerateInput",
            "input is not a ball h-vector (needs h_0 = 1, h_{d+1} = 0)");
    const long long d = static_cast<long long>(h.size()) - 2; // ball dimension
    HVector g(static_cast<std::size_t>(d) + 1, 0);
    for (long long i = 0; i <= d; ++i) {
        long long s = 0;
        for (long long j = 0; j <= i; ++j) s += h[static_cast<std::size_t>(j)];
        for (long long j = d + 1 - i; j <= d; ++j) s -= h[static_cast<std::size_t>(j)];
        g[static_cast<std::size_t>(i)] = s;
    }
    return g;
}

/** True iff every vertex pair lies in some common facet. */
inline bool is_neighbourly(const SimplicialComplex& k) {
    for (int v = 0; v < k.n; ++v)
        for (int u = v + 1; u < k.n; ++u) {
            bool found = false;
            for (const auto& f : k.facets)
                if (std::binary_search(f.begin(), f.end(), v) &&
                    std::binary_search(f.begin(), f.end(), u)) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
    return true;
}

/** Lower bound theorem for simplicial 3-spheres: minimum facet count. */
inline long long lbt_min_facets_3sphere(long long n) {
    require(n >= 5, "BadDimension", "3-sphere needs at least 5 vertices");
    return n == 5 ? 5 : 3 * n - 10;
}

/** Upper bound theorem for simplicial 3-spheres: the cyclic facet count. */
inline long long ubt_max_facets_3sphere(long long n) {
    require(n >= 5, "BadDimension", "3-sphere needs at least 5 vertices");
    return n * (n - 3) / 2;
}

/**
 * Minimal non-faces of dimension >= min_dim: vertex sets that are not faces
 * while all their proper subsets are.  Exhaustive over subsets one larger
 * than a facet, which bounds every minimal non-face.
 */
inline std::vector<std::vector<int>> missing_faces(const SimplicialComplex& k, int min_dim) {
    require(k.n <= 32, "CapacityExceeded", "missing-face search is exhaustive; n <= 32");
    std::size_t maxcard = 0;
    for (const auto& f : k.facets) maxcard = std::max(maxcard, f.size());
    auto is_face = [&k](const std::vector<int>& s) {
        for (const auto& f : k.facets)
            if (std::includes(f.begin(), f.end(), s.begin(), s.end())) return true;
        return false;
    };
    std::vector<std::vector<int>> out;
    std::vector<int> comb;
    auto rec = [&](auto&& self, int start, std::size_t want) -> void {
        if (comb.size() == want) {
            if (is_face(comb)) return;
            for (std::size_t drop = 0; drop < comb.size(); ++drop) {
                std::vector<int> sub;
                for (std::size_t i = 0; i < comb.size(); ++i)
                    if (i != drop) sub.push_back(comb[i]);
                if (!sub.empty() && !is_face(sub)) return; // not minimal
            }
            out.push_back(comb);
            return;
        }
        for (int v = start; v < k.n; ++v) {
            comb.push_back(v);
            self(self, v + 1, want);
            comb.pop_back();
        }
    };
    for (std::size_t card = 1; card <= maxcard + 1; ++card) {
        if (static_cast<int>(card) - 1 < min_dim) continue;
        rec(rec, 0, card);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/** Join of two complexes on disjoint vertex sets (second one shifted). */
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<std::vector<int>> facets;
    for (const auto& fa : a.facets)
        for (const auto& fb : b.facets) {
            std::vector<int> f = fa;
            for (int v : fb) f.push_back(v + a.n);
            facets.push_back(std::move(f));
        }
    return make_complex(a.n + b.n, std::move(facets));
}

/**
 * Minimum facet count of a 3-pseudomanifold whose boundary has b vertices
 * and which has n_i interior vertices; only the d = 4 instance is exposed.
 */
inline long long pm_boundary_min_facets(long long boundary_vertex_count,
                                        long long interior_vertex_count, int d) {
    require(d == 4, "UnsupportedDimension", "bound instantiated for d = 4 only");
    return boundary_vertex_count + 4 * interior_vertex_count - 4;
}

enum class SixFacetClass { P_A, P_B, P_C, P_D };

inline const char* six_facet_class_name(SixFacetClass c) {
    switch (c) {
        case SixFacetClass::P_A: return "P_A";
        case SixFacetClass::P_B: return "P_B";
        case SixFacetClass::P_C: return "P_C";
        case SixFacetClass::P_D: return "P_D";
    }
    return "?";
}

/**
 * Classify a 4-polytope with 6 facets by its facet-shape multiset:
 *   P_A: 2 square pyramids + 4 tetrahedra      (pyramid over a square pyramid)
 *   P_B: 3 square pyramids + prism + 2 tetrahedra (pyramid over a prism)
 *   P_C: 4 prisms + 2 tetrahedra               (truncated 4-simplex)
 *   P_D: 6 prisms                              (product of two triangles)
 */
inline SixFacetClass classify_6facet_4polytope(const FaceLattice& l) {
    require(l.dim == 4, "BadDimension", "classifier expects a 4-polytope");
    require(l.facets().size() == 6, "Unclassifiable", "classifier expects 6 facets");
    std::map<ShapeTag, int> shapes;
    for (const VSet& f : l.facets()) ++shapes[facet_shape(l, f).tag];
    using M = std::map<ShapeTag, int>;
    if (shapes == M{{ShapeTag::SquarePyramid, 2}, {ShapeTag::Simplex, 4}})
        return SixFacetClass::P_A;
    if (shapes == M{{ShapeTag::SquarePyramid, 3}, {ShapeTag::TriangularPrism, 1},
                    {ShapeTag::Simplex, 2}})
        return SixFacetClass::P_B;
    if (shapes == M{{ShapeTag::TriangularPrism, 4}, {ShapeTag::Simplex, 2}})
        return SixFacetClass::P_C;
    if (shapes == M{{ShapeTag::TriangularPrism, 6}})
        return SixFacetClass::P_D;
    fail("Unclassifiable", "facet-shape multiset matches no 6-facet class");
}

} // namespace polywitness
