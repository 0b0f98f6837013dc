#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polywitness/errors.hpp"
#include "polywitness/hull.hpp"
#include "polywitness/lattice.hpp"
#include "polywitness/linalg.hpp"
#include "polywitness/rational.hpp"
#include "polywitness/recipe.hpp"

namespace polywitness {

/**
 * A certified realized polytope: exact coordinates, their hull, the face
 * lattice derived from the hull, and the f-vector predicted by the
 * combinatorial rule of the construction that produced it.  The invariant
 * `f_vector(lattice) == predicted` is established at construction; facet
 * indices used by selectors refer to hull.facets (sorted by vertex set).
 */
struct Polytope {
    int dim = 0;
    std::vector<Point> coords;
    HullResult hull;
    FaceLattice lattice;
    FVector predicted;
};

namespace detail {

inline std::string fvec_str(const FVector& f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
    return s + ")";
}

} // namespace detail

/**
 * Run the geometric semantics (exact hull) and check it against the
 * combinatorial rule's full f-vector.  Every construction goes through
 * here; a disagreement is CrossCheckMismatch.
 */
inline Polytope realize(int dim, std::vector<Point> coords, FVector predicted) {
    require(predicted.size() == static_cast<std::size_t>(dim), "CrossCheckMismatch",
            "predicted f-vector length differs from dimension");
    require(predicted[0] == static_cast<long long>(coords.size()), "CrossCheckMismatch",
            "predicted vertex count differs from coordinate count");
    Polytope p;
    p.dim = dim;
    p.coords = std::move(coords);
    p.hull = convex_hull(p.coords);
    require(p.hull.vertices.size() == p.coords.size(), "CrossCheckMismatch",
            "an input point is not a hull vertex");
    p.lattice = lattice_from_hull(p.hull);
    FVector actual = f_vector(p.lattice);
    require(actual == predicted, "CrossCheckMismatch",
            "hull f-vector " + detail::fvec_str(actual) + " differs from rule " +
                detail::fvec_str(predicted));
    p.predicted = std::move(predicted);
    return p;
}

/* ------------------------------------------------------------------ */
/* Combinatorial semantics: predicted f-vectors per operation.         */
/* ------------------------------------------------------------------ */

inline FVector predicted_simplex(int d) {
    FVector f(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) f[static_cast<std::size_t>(k)] = binom(d + 1, k + 1);
    return f;
}

inline FVector predicted_pyramid(const FVector& f) {
    const std::size_t d = f.size();
    FVector g(d + 1);
    g[0] = f[0] + 1;
    for (std::size_t k = 1; k < d; ++k) g[k] = f[k] + f[k - 1];
    g[d] = 1 + f[d - 1];
    return g;
}

/** Truncating a simple vertex in dim d: +d-1 vertices, +C(d,k+1) k-faces. */
inline FVector predicted_truncate(const FVector& f) {
    const long long d = static_cast<long long>(f.size());
    FVector g = f;
    g[0] += d - 1;
    for (std::size_t k = 1; k < f.size(); ++k)
        g[k] += binom(d, static_cast<long long>(k) + 1);
    return g;
}

/** Stacking a pyramid onto a simplex facet in dim d: +1 vertex, +C(d,k) k-faces,
 *  net facet change -1 + d. */
inline FVector predicted_stack(const FVector& f) {
    const long long d = static_cast<long long>(f.size());
    FVector g = f;
    g[0] += 1;
    for (std::size_t k = 1; k + 1 < f.size(); ++k)
        g[k] += binom(d, static_cast<long long>(k));
    g[f.size() - 1] += d - 1;
    return g;
}

/** Product f-vector: convolution of the operands' f-vectors extended by a
 *  top 1, with the full-times-full term dropped. */
inline FVector predicted_product(const FVector& fa, const FVector& fb) {
    FVector ea = fa, eb = fb;
    ea.push_back(1);
    eb.push_back(1);
    FVector g(ea.size() + eb.size() - 2, 0);
    for (std::size_t i = 0; i < ea.size(); ++i)
        for (std::size_t j = 0; j < eb.size(); ++j) {
            if (i + j == g.size()) continue; // the product polytope itself
            g[i + j] += ea[i] * eb[j];
        }
    return g;
}

inline FVector predicted_dual(const FVector& f) {
    FVector g = f;
    std::reverse(g.begin(), g.end());
    return g;
}

/**
 * Beneath-beyond face count: adding one point beyond exactly the `dead`
 * facets (general position).  A face survives iff it lies in a live facet;
 * a face on the horizon (in a live and a dead facet) grows a cone; the
 * empty face's cone is the new vertex.
 */
inline FVector predicted_beyond(const Polytope& p, const std::set<int>& dead_idx) {
    const std::size_t nf = p.hull.facets.size();
    require(!dead_idx.empty() && dead_idx.size() < nf, "PlacementFailed",
            "beyond subset must be a proper nonempty facet subset");
    std::vector<VSet> live, dead;
    for (std::size_t i = 0; i < nf; ++i) {
        VSet s = VSet::of(p.hull.facets[i].vertices);
        (dead_idx.count(static_cast<int>(i)) ? dead : live).push_back(s);
    }
    FVector g(static_cast<std::size_t>(p.dim), 0);
    g[0] += 1; // cone over the empty face: the new vertex
    for (int r = 0; r < p.dim; ++r)
        for (const VSet& face : p.lattice.by_rank[static_cast<std::size_t>(r)]) {
            bool in_live = std::any_of(live.begin(), live.end(),
                                       [&face](const VSet& f) { return face.subset_of(f); });
            if (!in_live) continue;
            ++g[static_cast<std::size_t>(r)];
            bool in_dead = std::any_of(dead.begin(), dead.end(),
                                       [&face](const VSet& f) { return face.subset_of(f); });
            if (in_dead && r + 1 < p.dim) ++g[static_cast<std::size_t>(r) + 1];
        }
    return g;
}

/* ------------------------------------------------------------------ */
/* Geometric semantics and the evaluator.                              */
/* ------------------------------------------------------------------ */

/** Facets of the cyclic polytope by Gale's evenness condition (0-based). */
inline std::vector<std::vector<int>> cyclic_facets_gale(int d, int n) {
    require(n >= d + 1, "BadDimension", "cyclic needs n >= d+1");
    std::vector<std::vector<int>> out;
    if (d == 2) {
        for (int i = 0; i + 1 < n; ++i) out.push_back({i, i + 1});
        out.push_back({0, n - 1});
        std::sort(out.begin(), out.end());
        return out;
    }
    std::vector<bool> in_set(static_cast<std::size_t>(n), false);
    std::vector<int> cur;
    auto even_between = [&cur](int i, int j) {
        int c = 0;
        for (int s : cur)
            if (i < s && s < j) ++c;
        return c % 2 == 0;
    };
    auto emit = [&]() {
        // Gale evenness: between any two outsiders the run of members is even.
        for (int i = 0; i < n; ++i) {
            if (in_set[static_cast<std::size_t>(i)]) continue;
            for (int j = i + 1; j < n; ++j) {
                if (in_set[static_cast<std::size_t>(j)]) continue;
                if (!even_between(i, j)) return;
            }
        }
        out.push_back(cur);
    };
    auto gen = [&](auto&& self, int start, int remaining) -> void {
        if (remaining == 0) {
            emit();
            return;
        }
        for (int v = start; v <= n - remaining; ++v) {
            cur.push_back(v);
            in_set[static_cast<std::size_t>(v)] = true;
            self(self, v + 1, remaining - 1);
            in_set[static_cast<std::size_t>(v)] = false;
            cur.pop_back();
        }
    };
    gen(gen, 0, d);
    std::sort(out.begin(), out.end());
    return out;
}

inline Point moment_point(int d, const Rational& t) {
    Point p(static_cast<std::size_t>(d));
    Rational v = 1;
    for (int i = 0; i < d; ++i) {
        v *= t;
        p[static_cast<std::size_t>(i)] = v;
    }
    return p;
}

inline Polytope simplex(int d) {
    require(1 <= d && d <= 6, "BadDimension", "simplex dimension out of range");
    std::vector<Point> coords;
    for (int i = 0; i < d; ++i) {
        Point e(static_cast<std::size_t>(d), Rational(0));
        e[static_cast<std::size_t>(i)] = 1;
        coords.push_back(std::move(e));
    }
    coords.emplace_back(static_cast<std::size_t>(d), Rational(0));
    return realize(d, std::move(coords), predicted_simplex(d));
}

inline Polytope cyclic(int d, int n) {
    require(2 <= d && d <= 5, "BadDimension", "cyclic dimension out of range");
    require(n >= d + 1, "BadDimension", "cyclic needs n >= d+1");
    std::vector<VSet> facets;
    for (const auto& f : cyclic_facets_gale(d, n)) facets.push_back(VSet::of(f));
    FVector predicted = f_vector(lattice_from_incidence(d, n, facets));
    std::vector<Point> coords;
    for (int t = 1; t <= n; ++t) coords.push_back(moment_point(d, Rational(t)));
    return realize(d, std::move(coords), std::move(predicted));
}

inline Polytope pyramid(const Polytope& base) {
    require(base.dim <= 5, "BadDimension", "pyramid would exceed dimension 6");
    std::vector<Point> coords;
    for (const Point& p : base.coords) {
        Point q = p;
        q.push_back(Rational(0));
        coords.push_back(std::move(q));
    }
    Point apex = barycenter(base.coords);
    apex.push_back(Rational(1));
    coords.push_back(std::move(apex));
    return realize(base.dim + 1, std::move(coords), predicted_pyramid(base.predicted));
}

/** Polar dual after translating the vertex barycenter to the origin. */
inline Polytope dual(const Polytope& p) {
    Point b = barycenter(p.coords);
    std::vector<Point> coords;
    for (const HullFacet& f : p.hull.facets) {
        Rational shifted = f.plane.offset - dot(f.plane.normal, b);
        require(shifted > 0, "DegenerateInput", "barycenter not interior");
        Point v(f.plane.normal);
        for (Rational& x : v) x /= shifted;
        coords.push_back(std::move(v));
    }
    return realize(p.dim, std::move(coords), predicted_dual(p.predicted));
}

inline Polytope product(const Polytope& a, const Polytope& b) {
    require(a.dim + b.dim <= 6, "BadDimension", "product would exceed dimension 6");
    std::vector<Point> coords;
    for (const Point& pa : a.coords)
        for (const Point& pb : b.coords) {
            Point q = pa;
            q.insert(q.end(), pb.begin(), pb.end());
            coords.push_back(std::move(q));
        }
    return realize(a.dim + b.dim, std::move(coords),
                   predicted_product(a.predicted, b.predicted));
}

/**
 * Cut off a simple vertex with a hyperplane through points v + t(u_i - v),
 * halving t until the hull reproduces the predicted f-vector.
 */
inline Polytope truncate_simple_vertex(const Polytope& p, int selector = -1) {
    require(p.dim >= 2, "BadDimension", "truncation needs dim >= 2");
    std::set<int> simple = simple_vertices(p.lattice);
    int v;
    if (selector < 0) {
        require(!simple.empty(), "NotSimple", "polytope has no simple vertex");
        v = *simple.begin();
    } else {
        require(simple.count(selector) > 0, "NotSimple",
                "vertex " + std::to_string(selector) + " is not simple");
        v = selector;
    }
    std::vector<int> neighbours;
    for (const VSet& e : p.lattice.by_rank[1])
        if (e.test(v))
            for (int u : e.members())
                if (u != v) neighbours.push_back(u);
    std::sort(neighbours.begin(), neighbours.end());

    FVector predicted = predicted_truncate(p.predicted);
    const Point& pv = p.coords[static_cast<std::size_t>(v)];
    Rational t(1, 2);
    for (int iter = 0; iter < 60; ++iter, t /= 2) {
        std::vector<Point> coords;
        for (std::size_t i = 0; i < p.coords.size(); ++i)
            if (static_cast<int>(i) != v) coords.push_back(p.coords[i]);
        for (int u : neighbours)
            coords.push_back(
                add(pv, scale(t, sub(p.coords[static_cast<std::size_t>(u)], pv))));
        try {
            return realize(p.dim, std::move(coords), predicted);
        } catch (const Error&) {
            // cut too deep; halve the step
        }
    }
    fail("PlacementFailed", "no truncation depth reproduced the predicted f-vector");
}

namespace detail {

/** True iff p lies strictly beyond exactly `target`, off every hyperplane. */
inline bool beyond_exactly(const HullResult& hull, const Point& p,
                           const std::set<int>& target) {
    for (std::size_t f = 0; f < hull.facets.size(); ++f) {
        int s = hull.facets[f].plane.side(p);
        if (s == 0) return false;
        if ((s > 0) != (target.count(static_cast<int>(f)) > 0)) return false;
    }
    return true;
}

} // namespace detail

/**
 * Add a pyramid apex beyond exactly one simplex facet; the apex walks in
 * from the facet barycenter along the outward normal, halving the step
 * until the beyond-set is exactly that facet.
 */
inline Polytope stack_on_simplex_facet(const Polytope& p, int selector = -1) {
    const auto& facets = p.hull.facets;
    int fi = -1;
    if (selector < 0) {
        for (std::size_t i = 0; i < facets.size(); ++i)
            if (facets[i].vertices.size() == static_cast<std::size_t>(p.dim)) {
                fi = static_cast<int>(i);
                break;
            }
        require(fi >= 0, "NotASimplexFacet", "polytope has no simplex facet");
    } else {
        require(selector < static_cast<int>(facets.size()), "NotASimplexFacet",
                "facet index out of range");
        require(facets[static_cast<std::size_t>(selector)].vertices.size() ==
                    static_cast<std::size_t>(p.dim),
                "NotASimplexFacet", "selected facet is not a simplex");
        fi = selector;
    }
    const HullFacet& f = facets[static_cast<std::size_t>(fi)];
    Point base = barycenter(detail::gather(p.coords, f.vertices));
    FVector predicted = predicted_stack(p.predicted);
    std::set<int> target{fi};
    Rational eps(1);
    for (int iter = 0; iter < 100; ++iter, eps /= 2) {
        Point apex = add(base, scale(eps, f.plane.normal));
        if (!detail::beyond_exactly(p.hull, apex, target)) continue;
        std::vector<Point> coords = p.coords;
        coords.push_back(std::move(apex));
        try {
            return realize(p.dim, std::move(coords), predicted);
        } catch (const Error&) {
            // accidental incidence elsewhere; keep shrinking
        }
    }
    fail("PlacementFailed", "no stacking apex realized the predicted f-vector");
}

/**
 * Deterministic candidate positions for beyond-placement: displaced moment
 * curve points (half-integer parameters, shrinking displacement along the
 * last axis).  Exact rational points; the order fixes the search.
 */
inline std::vector<Point> beyond_candidate_pool(const Polytope& p) {
    std::vector<Point> pool;
    const int n = static_cast<int>(p.coords.size());
    for (int num = -1; num <= 2 * n + 1; num += 2) {
        Rational t(num, 2);
        Point on_curve = moment_point(p.dim, t);
        for (const Rational& mu : {Rational(1), Rational(1, 4), Rational(1, 16), Rational(1, 64)})
            for (int sgn : {1, -1}) {
                Point q = on_curve;
                q[static_cast<std::size_t>(p.dim) - 1] += Rational(sgn) * mu;
                pool.push_back(std::move(q));
            }
    }
    return pool;
}

/**
 * Exact placement: find p with side_F(p) > 0 for F in target and < 0
 * otherwise, by homogenizing (x, t), t > 0, and solving the strict system
 * with Fourier-Motzkin.  nullopt when infeasible (or past the row budget).
 */
inline std::optional<Point> exact_beyond_point(const Polytope& p, const std::set<int>& target) {
    const std::size_t d = static_cast<std::size_t>(p.dim);
    Matrix rows;
    for (std::size_t i = 0; i < p.hull.facets.size(); ++i) {
        const Hyperplane& h = p.hull.facets[i].plane;
        Point row = h.normal;
        row.push_back(-h.offset);
        if (!target.count(static_cast<int>(i)))
            for (Rational& x : row) x = -x;
        rows.push_back(std::move(row));
    }
    Point tpos(d + 1, Rational(0));
    tpos[d] = 1;
    rows.push_back(std::move(tpos));
    auto sol = feasible_direction(rows);
    if (!sol) return std::nullopt;
    Point out(d);
    for (std::size_t i = 0; i < d; ++i) out[i] = (*sol)[i] / (*sol)[d];
    return out;
}

/**
 * Realize one point beyond exactly the given facet subset.  Tries cheap
 * anchored rays, then the displaced moment-curve pool, then an exact
 * Fourier-Motzkin solve (with a direction-walk fallback).  PlacementFailed
 * when every candidate is exhausted.
 */
inline Polytope place_beyond(const Polytope& p, const std::vector<int>& subset) {
    const auto& facets = p.hull.facets;
    std::set<int> target(subset.begin(), subset.end());
    require(!target.empty(), "PlacementFailed", "empty beyond subset");
    require(target.size() == subset.size(), "PlacementFailed", "repeated facet index");
    require(*target.rbegin() < static_cast<int>(facets.size()) && *target.begin() >= 0,
            "PlacementFailed", "facet index out of range");
    require(target.size() < facets.size(), "PlacementFailed",
            "cannot go beyond every facet");

    FVector predicted = predicted_beyond(p, target);
    auto try_point = [&](const Point& cand) -> std::optional<Polytope> {
        if (!detail::beyond_exactly(p.hull, cand, target)) return std::nullopt;
        std::vector<Point> coords = p.coords;
        coords.push_back(cand);
        try {
            return realize(p.dim, std::move(coords), predicted);
        } catch (const Error&) {
            return std::nullopt;
        }
    };

    // Anchored rays: union barycenter, pushed along mixes of facet normals.
    {
        std::set<int> uni;
        for (int fidx : target) {
            const auto& vs = facets[static_cast<std::size_t>(fidx)].vertices;
            uni.insert(vs.begin(), vs.end());
        }
        Point anchor = barycenter(
            detail::gather(p.coords, std::vector<int>(uni.begin(), uni.end())));
        auto l1 = [](const Point& v) {
            Rational s = 0;
            for (const Rational& x : v) s += abs(x);
            return s;
        };
        Point push(static_cast<std::size_t>(p.dim), Rational(0));
        Point pull(static_cast<std::size_t>(p.dim), Rational(0));
        for (std::size_t i = 0; i < facets.size(); ++i) {
            const Point& nrm = facets[i].plane.normal;
            Point unit = scale(Rational(1) / l1(nrm), nrm);
            if (target.count(static_cast<int>(i)))
                push = add(push, unit);
            else
                pull = add(pull, unit);
        }
        for (const Rational& mu :
             {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1), Rational(2)}) {
            Point dir = sub(push, scale(mu, pull));
            if (std::all_of(dir.begin(), dir.end(), [](const Rational& x) { return x == 0; }))
                continue;
            Rational eps(1);
            for (int iter = 0; iter < 40; ++iter, eps /= 2)
                if (auto got = try_point(add(anchor, scale(eps, dir)))) return *got;
        }

        // Displaced moment-curve pool.
        for (const Point& cand : beyond_candidate_pool(p))
            if (auto got = try_point(cand)) return *got;

        // Exact solve: homogenize side_F(p) = n.p - c and demand strict signs.
        if (auto exact = exact_beyond_point(p, target)) {
            if (auto got = try_point(*exact)) return *got;
            // Accidental incidences among the new facets: slide toward the
            // anchor through fresh positions, staying inside the open region.
            Rational lam(1, 2);
            for (int iter = 0; iter < 40; ++iter, lam /= 2) {
                Point mid = add(scale(1 - lam, *exact), scale(lam, anchor));
                if (auto got = try_point(mid)) return *got;
            }
        }

        // Direction-only fallback: walk from the anchor with a doubling step.
        Matrix rows;
        for (std::size_t i = 0; i < facets.size(); ++i) {
            Point row = facets[i].plane.normal;
            if (!target.count(static_cast<int>(i)))
                for (Rational& x : row) x = -x;
            rows.push_back(std::move(row));
        }
        if (auto dir = feasible_direction(rows)) {
            Rational eps(1);
            for (int iter = 0; iter < 64; ++iter, eps *= 2)
                if (auto got = try_point(add(anchor, scale(eps, *dir)))) return *got;
        }
    }
    fail("PlacementFailed", "no candidate point lies beyond exactly the requested facets");
}

/**
 * Evaluate a recipe: run the combinatorial and geometric semantics in
 * lock-step and return the certified polytope.
 */
inline Polytope evaluate(const Recipe& r) {
    switch (r.kind) {
        case Recipe::Kind::Simplex: return simplex(r.a);
        case Recipe::Kind::Cyclic: return cyclic(r.a, r.b);
        case Recipe::Kind::Pyramid: return pyramid(evaluate(r.kids[0]));
        case Recipe::Kind::Dual: return dual(evaluate(r.kids[0]));
        case Recipe::Kind::Truncate: return truncate_simple_vertex(evaluate(r.kids[0]), r.selector);
        case Recipe::Kind::Stack: return stack_on_simplex_facet(evaluate(r.kids[0]), r.selector);
        case Recipe::Kind::Product: {
            Polytope left = evaluate(r.kids[0]);
            return product(left, evaluate(r.kids[1]));
        }
        case Recipe::Kind::Beyond: return place_beyond(evaluate(r.kids[0]), r.subset);
    }
    fail("ParseError", "unknown recipe node");
}

/** True iff some facet is a simplex (stacking substrate test). */
inline bool has_simplex_facet(const Polytope& p) {
    for (const HullFacet& f : p.hull.facets)
        if (f.vertices.size() == static_cast<std::size_t>(p.dim)) return true;
    return false;
}

} // namespace polywitness
