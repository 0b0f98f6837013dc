#pragma once

#include <string>

#include "polywitness/errors.hpp"
#include "polywitness/lattice.hpp"
#include "polywitness/rational.hpp"

namespace polywitness {

/** Why a pair (v, e) is excluded, or OK when it is realizable. */
enum class Reason {
    OK,
    BelowDegreeBound,
    AboveBinomialBound,
    InL,
    InG,
    Grunbaum4Exception,
    Steinitz3Violation,
    BelowPhi,
};

struct MembershipVerdict {
    bool in = false;
    Reason reason = Reason::OK;
};

inline const char* reason_token(Reason r) {
    switch (r) {
        case Reason::OK: return "OK";
        case Reason::BelowDegreeBound: return "BelowDegreeBound";
        case Reason::AboveBinomialBound: return "AboveBinomialBound";
        case Reason::InL: return "InL";
        case Reason::InG: return "InG";
        case Reason::Grunbaum4Exception: return "Grunbaum4Exception";
        case Reason::Steinitz3Violation: return "Steinitz3Violation";
        case Reason::BelowPhi: return "BelowPhi";
    }
    return "OK";
}

/**
 * Exact decision: does some d-polytope have v vertices and e edges?
 * Supported for d in {3, 4, 5}; exclusions are reported with the first
 * applicable reason in the order bounds, then the sporadic families.
 */
inline MembershipVerdict in_E(int d, int v, long long e) {
    require(d == 3 || d == 4 || d == 5, "BadDimension", "membership known for d in {3,4,5}");
    require(v >= d + 1, "BadDimension", "a d-polytope has at least d+1 vertices");
    const long long vv = v;
    const long long top = binom(vv, 2);
    if (d == 3) {
        // Steinitz band: ceil(3v/2) <= e <= 3v - 6.
        if (2 * e < 3 * vv) return {false, Reason::BelowDegreeBound};
        if (e > top) return {false, Reason::AboveBinomialBound};
        if (e > 3 * vv - 6) return {false, Reason::Steinitz3Violation};
        return {true, Reason::OK};
    }
    if (d == 4) {
        if (e < 2 * vv) return {false, Reason::BelowDegreeBound};
        if (e > top) return {false, Reason::AboveBinomialBound};
        if ((v == 6 && e == 12) || (v == 7 && e == 14) || (v == 8 && e == 17) ||
            (v == 10 && e == 20))
            return {false, Reason::Grunbaum4Exception};
        return {true, Reason::OK};
    }
    if (2 * e < 5 * vv) return {false, Reason::BelowDegreeBound};
    if (e > top) return {false, Reason::AboveBinomialBound};
    if (v >= 7 && e == (5 * vv + 2) / 2) return {false, Reason::InL};
    if ((v == 8 && e == 20) || (v == 9 && e == 25) || (v == 13 && e == 35))
        return {false, Reason::InG};
    return {true, Reason::OK};
}

/**
 * Minimum edge count of a d-polytope with v vertices for v <= 2d:
 * phi(v, d) = dv/2 + (v - d - 1)(2d - v)/2.
 */
inline Rational phi(int v, int d) {
    Rational rv(v), rd(d);
    return rd * rv / 2 + (rv - rd - 1) * (2 * rd - rv) / 2;
}

/**
 * True iff (v, e) can be written as a pyramid over a 4-polytope with
 * v - 1 vertices and e - v + 1 edges: the band 3v - 3 <= e <= C(v,2)
 * minus the four pyramid-lifted exceptional pairs.
 */
inline bool pyramid_region_check(int v, long long e) {
    const long long vv = v;
    if (e < 3 * vv - 3 || e > binom(vv, 2)) return false;
    if ((v == 7 && e == 18) || (v == 8 && e == 21) || (v == 9 && e == 25) ||
        (v == 11 && e == 30))
        return false;
    return true;
}

} // namespace polywitness
