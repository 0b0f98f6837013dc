#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "polywitness/errors.hpp"

namespace polywitness {

/**
 * Exact arbitrary-precision rational scalar.  GMP keeps values canonical
 * (positive denominator, coprime numerator/denominator) after every
 * operation, so equality is plain value comparison and arithmetic never
 * rounds.  Expression templates are disabled: every operator returns a
 * plain Rational, which keeps generic code (accumulate, sort, ...) safe.
 */
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer =
    boost::multiprecision::number<boost::multiprecision::gmp_int,
                                  boost::multiprecision::et_off>;

/** Point in Q^d; the ambient dimension is coords.size(). */
using Point = std::vector<Rational>;

inline int sign_of(const Rational& x) { return x.sign(); }

/** Parse "p/q" or "p"; rejects zero denominators and junk. */
inline Rational parse_rational(const std::string& text) {
    try {
        Rational r(text);
        // The string constructor neither canonicalizes nor rejects a zero
        // denominator; both must be handled before r escapes.
        require(denominator(r) != 0, "ParseError", "zero denominator: '" + text + "'");
        mpq_canonicalize(r.backend().data());
        return r;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail("ParseError", "not a rational: '" + text + "'");
    }
}

/** Render as "p/q", or "p" when the denominator is 1. */
inline std::string format_rational(const Rational& x) { return x.str(); }

inline Rational dot(const Point& a, const Point& b) {
    require(a.size() == b.size(), "BadDimension", "dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Point sub(const Point& a, const Point& b) {
    require(a.size() == b.size(), "BadDimension", "sub: dimension mismatch");
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Point add(const Point& a, const Point& b) {
    require(a.size() == b.size(), "BadDimension", "add: dimension mismatch");
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Point scale(const Rational& t, const Point& a) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
    return r;
}

/** Arithmetic mean of a nonempty point set; exact. */
inline Point barycenter(const std::vector<Point>& pts) {
    require(!pts.empty(), "DegenerateInput", "barycenter of empty set");
    Point s(pts[0].size(), Rational(0));
    for (const Point& p : pts) s = add(s, p);
    Rational inv = Rational(1) / Rational(static_cast<long>(pts.size()));
    return scale(inv, s);
}

} // namespace polywitness
