#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "polywitness/errors.hpp"
#include "polywitness/linalg.hpp"
#include "polywitness/rational.hpp"

namespace polywitness {

/** One facet: the input points on its hyperplane, oriented interior-negative. */
struct HullFacet {
    std::vector<int> vertices; // ascending input indices
    Hyperplane plane;          // side(p) > 0 means p is beyond (outside)
};

/**
 * Exact convex hull of a full-dimensional point set.  Facets are sorted by
 * vertex set, ridges are the facet pairs sharing a (d-2)-face, and every
 * listed facet vertex is an input point incident to that facet hyperplane.
 */
struct HullResult {
    int dimension = 0;
    std::vector<int> vertices;                // hull vertices, ascending
    std::vector<HullFacet> facets;            // deterministic order
    std::vector<std::pair<int, int>> ridges;  // adjacent facet index pairs
};

namespace detail {

inline std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::vector<Point> gather(const std::vector<Point>& pts, const std::vector<int>& idx) {
    std::vector<Point> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(pts[static_cast<std::size_t>(i)]);
    return out;
}

/** Pick d affinely independent points from `pool` (greedy, input order). */
inline std::vector<Point> spanning_subset(const std::vector<Point>& pool, std::size_t d) {
    std::vector<Point> sel;
    for (const Point& p : pool) {
        sel.push_back(p);
        if (affine_rank(sel) != static_cast<int>(sel.size()) - 1) sel.pop_back();
        if (sel.size() == d) return sel;
    }
    fail("DegenerateInput", "could not span a facet hyperplane");
}

inline HullResult hull_1d(const std::vector<Point>& pts) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i][0] < pts[lo][0]) lo = i;
        if (pts[i][0] > pts[hi][0]) hi = i;
    }
    require(pts[lo][0] != pts[hi][0], "DegenerateInput", "all points equal");
    HullResult r;
    r.dimension = 1;
    r.vertices = {static_cast<int>(std::min(lo, hi)), static_cast<int>(std::max(lo, hi))};
    for (std::size_t i : {lo, hi}) {
        HullFacet f;
        f.vertices = {static_cast<int>(i)};
        f.plane.normal = {i == hi ? Rational(1) : Rational(-1)};
        f.plane.offset = i == hi ? pts[i][0] : -pts[i][0];
        f.plane.canonicalize();
        r.facets.push_back(std::move(f));
    }
    std::sort(r.facets.begin(), r.facets.end(),
              [](const HullFacet& a, const HullFacet& b) { return a.vertices < b.vertices; });
    return r;
}

} // namespace detail

/**
 * Beneath-beyond insertion in input order.  The initial simplex uses the
 * first d+1 affinely independent points; its barycenter stays strictly
 * interior throughout and fixes every facet orientation.  Coplanar points
 * merge into existing facets (never duplicated), so non-simplicial facets
 * come out as single facets with full vertex lists.
 */
inline HullResult convex_hull(const std::vector<Point>& pts) {
    require(!pts.empty(), "DegenerateInput", "no points");
    const std::size_t d = pts[0].size();
    for (const Point& p : pts)
        require(p.size() == d, "BadDimension", "mixed point dimensions");
    require(pts.size() >= d + 1, "DegenerateInput", "need at least d+1 points");
    if (d == 1) return detail::hull_1d(pts);

    // Initial simplex: greedy affinely independent scan in input order.
    std::vector<int> chosen;
    {
        std::vector<Point> sel;
        for (std::size_t i = 0; i < pts.size() && sel.size() < d + 1; ++i) {
            sel.push_back(pts[i]);
            if (affine_rank(sel) == static_cast<int>(sel.size()) - 1)
                chosen.push_back(static_cast<int>(i));
            else
                sel.pop_back();
        }
        require(sel.size() == d + 1, "DegenerateInput", "points are not full-dimensional");
    }
    const Point ref = barycenter(detail::gather(pts, chosen));

    struct Facet {
        std::vector<int> vertices;
        Hyperplane plane;
    };
    std::vector<Facet> facets;
    for (std::size_t omit = 0; omit < chosen.size(); ++omit) {
        std::vector<int> vs;
        for (std::size_t k = 0; k < chosen.size(); ++k)
            if (k != omit) vs.push_back(chosen[k]);
        Hyperplane h = hyperplane_through(detail::gather(pts, vs));
        if (h.side(ref) > 0) h.flip();
        facets.push_back({std::move(vs), std::move(h)});
    }

    std::vector<int> candidates = chosen; // points eligible to be hull vertices
    std::vector<bool> in_initial(pts.size(), false);
    for (int i : chosen) in_initial[static_cast<std::size_t>(i)] = true;

    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (in_initial[i]) continue;
        const Point& p = pts[i];
        std::vector<int> sides(facets.size());
        bool any_beyond = false;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            sides[f] = facets[f].plane.side(p);
            any_beyond |= sides[f] > 0;
        }
        if (!any_beyond) continue; // inside or on the boundary: not a vertex
        candidates.push_back(static_cast<int>(i));

        // New facet set, merged by oriented hyperplane.
        std::map<Hyperplane, std::set<int>> next;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            if (sides[f] > 0) continue;
            next[facets[f].plane].insert(facets[f].vertices.begin(), facets[f].vertices.end());
        }
        require(!next.empty(), "DegenerateInput", "point beyond every facet");
        for (std::size_t f = 0; f < facets.size(); ++f) {
            if (sides[f] <= 0) continue; // cones grow from dead facets only
            for (std::size_t g = 0; g < facets.size(); ++g) {
                if (sides[g] >= 0) continue; // coplanar neighbours merge instead
                std::vector<int> ridge =
                    detail::intersect_sorted(facets[f].vertices, facets[g].vertices);
                if (ridge.size() < d - 1) continue;
                std::vector<Point> rpts = detail::gather(pts, ridge);
                if (affine_rank(rpts) != static_cast<int>(d) - 2) continue;
                std::vector<Point> pool;
                pool.push_back(p);
                for (Point& q : rpts) pool.push_back(std::move(q));
                Hyperplane h = hyperplane_through(detail::spanning_subset(pool, d));
                if (h.side(ref) > 0) h.flip();
                auto& vs = next[h];
                vs.insert(ridge.begin(), ridge.end());
                vs.insert(static_cast<int>(i));
            }
        }

        // Re-derive vertex sets from hyperplane incidence over candidates.
        facets.clear();
        for (auto& [plane, verts] : next) {
            Facet nf;
            nf.plane = plane;
            for (int c : candidates)
                if (plane.side(pts[static_cast<std::size_t>(c)]) == 0) nf.vertices.push_back(c);
            std::sort(nf.vertices.begin(), nf.vertices.end());
            if (nf.vertices.size() >= d) facets.push_back(std::move(nf));
            (void)verts;
        }
    }

    HullResult result;
    result.dimension = static_cast<int>(d);
    std::sort(facets.begin(), facets.end(),
              [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });
    std::set<int> vset;
    for (const Facet& f : facets) vset.insert(f.vertices.begin(), f.vertices.end());
    result.vertices.assign(vset.begin(), vset.end());
    for (Facet& f : facets) result.facets.push_back({std::move(f.vertices), std::move(f.plane)});
    for (std::size_t a = 0; a < result.facets.size(); ++a)
        for (std::size_t b = a + 1; b < result.facets.size(); ++b) {
            std::vector<int> common = detail::intersect_sorted(result.facets[a].vertices,
                                                               result.facets[b].vertices);
            if (common.size() < d - 1) continue;
            if (affine_rank(detail::gather(pts, common)) != static_cast<int>(d) - 2) continue;
            result.ridges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    return result;
}

/** Facet indices whose hyperplane has p strictly on the outer side. */
inline std::set<int> beyond_set(const HullResult& hull, const Point& p) {
    std::set<int> out;
    for (std::size_t f = 0; f < hull.facets.size(); ++f)
        if (hull.facets[f].plane.side(p) > 0) out.insert(static_cast<int>(f));
    return out;
}

} // namespace polywitness
