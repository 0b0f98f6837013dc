#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "polywitness/errors.hpp"
#include "polywitness/rational.hpp"

namespace polywitness {

using Matrix = std::vector<std::vector<Rational>>;

/**
 * Rank by Gaussian elimination with deterministic pivoting: columns are
 * scanned left to right and the first row with a nonzero entry becomes the
 * pivot.  Exact, reproducible, no row scaling heuristics.
 */
inline int matrix_rank(Matrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

/** Dimension of the affine hull of a nonempty point list. */
inline int affine_rank(const std::vector<Point>& pts) {
    require(!pts.empty(), "DegenerateInput", "affine_rank of empty list");
    Matrix diffs;
    diffs.reserve(pts.size() - 1);
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
    if (diffs.empty()) return 0;
    return matrix_rank(std::move(diffs));
}

/**
 * The set {x : normal.x = offset}.  Stored with integer entries of content 1
 * (denominators cleared, common factor removed), so equal hyperplanes with
 * equal orientation compare equal field-by-field.  The sign is only
 * normalized where stated: `through` flips the first nonzero normal entry
 * positive, while hull facets keep an outward orientation instead.
 */
struct Hyperplane {
    std::vector<Rational> normal; // nonzero
    Rational offset{0};

    /** side: sign of normal.p - offset; +1 = outer side for hull facets. */
    int side(const Point& p) const {
        require(p.size() == normal.size(), "BadDimension", "side: dimension mismatch");
        Rational v = dot(normal, p) - offset;
        return v.sign();
    }

    /** Clear denominators and divide by content; preserves orientation. */
    void canonicalize() {
        Integer l = 1;
        auto fold_den = [&l](const Rational& x) { l = lcm(l, denominator(x)); };
        for (const Rational& x : normal) fold_den(x);
        fold_den(offset);
        Integer g = 0;
        auto scaled = [&l](const Rational& x) { return numerator(x) * (l / denominator(x)); };
        for (const Rational& x : normal) g = gcd(g, scaled(x));
        g = gcd(g, scaled(offset));
        require(g != 0, "DegenerateInput", "zero hyperplane");
        for (Rational& x : normal) x = Rational(scaled(x) / g);
        offset = Rational(scaled(offset) / g);
    }

    void flip() {
        for (Rational& x : normal) x = -x;
        offset = -offset;
    }

    /** Canonical sign: first nonzero normal entry positive. */
    void normalize_sign() {
        for (const Rational& x : normal) {
            if (x == 0) continue;
            if (x < 0) flip();
            return;
        }
    }

    bool operator==(const Hyperplane& o) const {
        return offset == o.offset && normal == o.normal;
    }

    /** Lexicographic order (offset, then normal); used as a map key. */
    bool operator<(const Hyperplane& o) const {
        if (offset != o.offset) return offset < o.offset;
        for (std::size_t i = 0; i < normal.size() && i < o.normal.size(); ++i)
            if (normal[i] != o.normal[i]) return normal[i] < o.normal[i];
        return normal.size() < o.normal.size();
    }
};

/**
 * Unique hyperplane through d affinely independent points in dimension d,
 * sign-normalized.  Throws AffinelyDependent when the points do not span.
 */
inline Hyperplane hyperplane_through(const std::vector<Point>& pts) {
    require(!pts.empty(), "AffinelyDependent", "no points given");
    const std::size_t d = pts[0].size();
    require(pts.size() == d, "BadDimension",
            "hyperplane_through needs exactly d points in dimension d");

    // Solve (p_i - p_0).n = 0 by Gauss-Jordan; nullspace must be a line.
    Matrix a;
    for (std::size_t i = 1; i < pts.size(); ++i) a.push_back(sub(pts[i], pts[0]));
    std::vector<int> pivot_col; // pivot_col[r] = column of pivot in row r
    std::size_t r = 0;
    for (std::size_t c = 0; c < d && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[r], a[p]);
        Rational inv = Rational(1) / a[r][c];
        for (std::size_t j = 0; j < d; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < d; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    require(pivot_col.size() == d - 1, "AffinelyDependent",
            "points do not affinely span a hyperplane");

    std::vector<bool> is_pivot(d, false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;

    Hyperplane h;
    h.normal.assign(d, Rational(0));
    h.normal[free_col] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        h.normal[static_cast<std::size_t>(pivot_col[i])] = -a[i][free_col];
    h.offset = dot(h.normal, pts[0]);
    h.canonicalize();
    h.normalize_sign();
    return h;
}

inline int side_of(const Hyperplane& h, const Point& p) { return h.side(p); }

namespace detail {

/** Primitive integer form of a row, orientation preserved; empty if zero. */
inline bool canon_row(std::vector<Rational>& row) {
    Integer l = 1;
    for (const Rational& x : row) l = lcm(l, denominator(x));
    Integer g = 0;
    for (const Rational& x : row) g = gcd(g, numerator(x) * (l / denominator(x)));
    if (g == 0) return false; // all-zero row
    for (Rational& x : row) x = Rational(numerator(x) * (l / denominator(x)) / g);
    return true;
}

} // namespace detail

/**
 * Strict homogeneous feasibility: find x with row.x > 0 for every row, by
 * Fourier-Motzkin elimination (exact).  Returns nullopt when the system is
 * infeasible or when intermediate systems exceed an internal row budget
 * (callers treat that as "unknown" and fall back to other searches).
 */
inline std::optional<Point> feasible_direction(const Matrix& rows_in) {
    if (rows_in.empty()) return Point{};
    const std::size_t n = rows_in[0].size();
    constexpr std::size_t kRowBudget = 4000;

    auto dedup = [](std::vector<std::vector<Rational>> rows)
        -> std::optional<std::vector<std::vector<Rational>>> {
        std::set<std::vector<Rational>> seen;
        std::vector<std::vector<Rational>> out;
        for (auto& row : rows) {
            if (!detail::canon_row(row)) return std::nullopt; // 0 > 0
            if (seen.insert(row).second) out.push_back(row);
        }
        return out;
    };

    // levels[j] = constraints over variables x_0..x_{j-1}
    std::vector<std::vector<std::vector<Rational>>> levels(n + 1);
    auto first = dedup(rows_in);
    if (!first) return std::nullopt;
    levels[n] = *first;

    for (std::size_t j = n; j >= 2; --j) {
        const std::size_t v = j - 1; // variable being eliminated
        std::vector<std::vector<Rational>> pos, neg, next;
        for (const auto& row : levels[j]) {
            std::vector<Rational> rest(row.begin(), row.begin() + static_cast<long>(v));
            if (row[v] > 0) pos.push_back(row);
            else if (row[v] < 0) neg.push_back(row);
            else next.push_back(rest);
        }
        if (!pos.empty() && !neg.empty()) {
            for (const auto& p : pos)
                for (const auto& q : neg) {
                    std::vector<Rational> comb(v);
                    for (std::size_t i = 0; i < v; ++i)
                        comb[i] = p[v] * q[i] - q[v] * p[i];
                    next.push_back(std::move(comb));
                    if (next.size() > kRowBudget) return std::nullopt;
                }
        }
        auto clean = dedup(std::move(next));
        if (!clean) return std::nullopt;
        levels[j - 1] = *clean;
    }

    // Solve the single-variable system, then back-substitute upward.
    Point x(n, Rational(0));
    {
        bool want_pos = false, want_neg = false;
        for (const auto& row : levels[1]) (row[0] > 0 ? want_pos : want_neg) = true;
        if (want_pos && want_neg) return std::nullopt;
        x[0] = want_neg ? -1 : 1;
    }
    for (std::size_t j = 2; j <= n; ++j) {
        const std::size_t v = j - 1;
        bool has_lo = false, has_hi = false;
        Rational lo = 0, hi = 0;
        for (const auto& row : levels[j]) {
            if (row[v] == 0) continue; // holds by induction on lower level
            Rational r = 0;
            for (std::size_t i = 0; i < v; ++i) r += row[i] * x[i];
            Rational bound = -r / row[v];
            if (row[v] > 0) {
                if (!has_lo || bound > lo) lo = bound;
                has_lo = true;
            } else {
                if (!has_hi || bound < hi) hi = bound;
                has_hi = true;
            }
        }
        if (has_lo && has_hi) {
            require(lo < hi, "DegenerateInput", "FM back-substitution window empty");
            x[v] = (lo + hi) / 2;
        } else if (has_lo) {
            x[v] = lo + 1;
        } else if (has_hi) {
            x[v] = hi - 1;
        } else {
            x[v] = 0;
        }
    }
    return x;
}

} // namespace polywitness
