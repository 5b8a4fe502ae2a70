#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "syzcurve/errors.hpp"
#include "syzcurve/poly.hpp"

namespace syzcurve {

// A curve C together with a line L that is not a component of C, and their
// union C' = C u L.  The restriction of C to L is kept for intersection
// bookkeeping.
struct CurveLinePair {
    HomogeneousPoly f;          // C
    LinearForm ell;             // L
    HomogeneousPoly f_union;    // C' = C u L
    long r = 0;                 // number of points of C n L
    LineRestriction restriction;
};

inline CurveLinePair make_union_pair(const HomogeneousPoly& f, const LinearForm& ell) {
    if (divides(f, ell))
        throw LineIsComponent("line " + to_string(ell) + " is a component of the curve");
    CurveLinePair p{f, ell,
                    HomogeneousPoly(f.poly() * ell.to_poly(), f.degree() + 1), 0,
                    restrict_to_line(f, ell)};
    long n = p.restriction.p.degree() <= 0 ? 0 : squarefree_part(p.restriction.p).degree();
    if (p.restriction.inf_mult > 0) ++n;
    p.r = n;
    return p;
}

// Inverse construction: strip a line off a union.  NotDivisible when the line
// is not a component, NotReduced when it is a repeated component.
inline CurveLinePair delete_line(const HomogeneousPoly& f_union, const LinearForm& ell) {
    HomogeneousPoly f = divide_exact(f_union, ell);
    if (divides(f, ell))
        throw NotReduced("line " + to_string(ell) + " is a repeated component of the union");
    CurveLinePair p{std::move(f), ell, f_union, 0, LineRestriction{}};
    p.restriction = restrict_to_line(p.f, ell);
    long n = p.restriction.p.degree() <= 0 ? 0 : squarefree_part(p.restriction.p).degree();
    if (p.restriction.inf_mult > 0) ++n;
    p.r = n;
    return p;
}

// epsilon(C, L) via global invariants: with d = deg C,
//   epsilon = 2d - r - (tau(C') - tau(C)).
inline long epsilon_global(const CurveLinePair& p, long tau_c, long tau_union) {
    return 2 * p.f.degree() - p.r - (tau_union - tau_c);
}

struct IntersectionPoints {
    std::vector<ProjPoint> points; // the rational points of C n L
    bool all_rational = false;     // true when these are all of C n L
};

inline IntersectionPoints intersection_points(const CurveLinePair& p) {
    IntersectionPoints out;
    const UnivariatePoly sf =
        p.restriction.p.degree() <= 0 ? UnivariatePoly() : squarefree_part(p.restriction.p);
    long found = 0;
    if (sf.degree() >= 1) {
        for (const auto& root : rational_roots(sf)) {
            out.points.push_back(line_point_at_parameter(p.ell, Rat(1), root.first));
            ++found;
        }
    }
    if (p.restriction.inf_mult > 0)
        out.points.push_back(line_point_at_parameter(p.ell, Rat(0), Rat(1)));
    out.all_rational = found == std::max<long>(sf.degree(), 0);
    return out;
}

} // namespace syzcurve
