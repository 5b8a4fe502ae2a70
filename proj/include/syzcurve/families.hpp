#pragma once

// Parametric curve families and the named reference corpus: a gallery of
// curves with known classification data and a list of (curve, line) pairs
// exercising every addition-deletion case.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "syzcurve/errors.hpp"
#include "syzcurve/incidence.hpp"
#include "syzcurve/parse.hpp"
#include "syzcurve/poly.hpp"

namespace syzcurve {

// m - 1 concurrent lines x = s_j y together with y = 0, all through (0:0:1),
// plus a conic tangent to y = 0; degree m + 2, free with exponents (2, m-1),
// tau = m^2 + 3, and local Tjurina number m^2 - m + 4 at (0:0:1).
inline HomogeneousPoly conic_line_family(long m, std::vector<long> slopes = {}) {
    if (m < 3) throw BadParameters("conic_line_family: m must be at least 3");
    if (slopes.empty())
        for (long j = 1; j <= m - 1; ++j) slopes.push_back(j);
    if (static_cast<long>(slopes.size()) != m - 1)
        throw BadParameters("conic_line_family: expected m - 1 slopes");
    if (std::set<long>(slopes.begin(), slopes.end()).size() != slopes.size())
        throw BadParameters("conic_line_family: slopes must be distinct");
    const Poly x = Poly::variable(0), y = Poly::variable(1), z = Poly::variable(2);
    Poly f = y;
    for (long s : slopes) f = f * (x - y * Rat(s));
    f = f * (y * z + x * x);
    return HomogeneousPoly::from_poly(f);
}

// z^{d-1} y + x^d + a x^2 z^{d-2} + b x z^{d-1} + c z^d; for a != 0 and
// d >= 5 this is free with exponents (2, d - 3).
inline HomogeneousPoly free_rkC_family(long d, const Rat& a, const Rat& b, const Rat& c) {
    if (d < 5) throw BadParameters("free_rkC_family: degree must be at least 5");
    if (a == 0) throw BadParameters("free_rkC_family: a must be nonzero");
    const Poly x = Poly::variable(0), y = Poly::variable(1), z = Poly::variable(2);
    Poly f = z.pow(d - 1) * y + x.pow(d) + x.pow(2) * z.pow(d - 2) * a + x * z.pow(d - 1) * b +
             z.pow(d) * c;
    return HomogeneousPoly::from_poly(f);
}

// (z^{k-1} y + x^k)^2 z - x^{2k+1}: an irreducible curve of degree 2k + 1
// with a single cusp at (0:1:0); free with exponents (k, k), tau = 3k^2,
// and mu - tau = k^2 - 2k at the cusp.
inline HomogeneousPoly cuspidal_family(long k) {
    if (k < 2) throw BadParameters("cuspidal_family: k must be at least 2");
    const Poly x = Poly::variable(0), y = Poly::variable(1), z = Poly::variable(2);
    const Poly g = z.pow(k - 1) * y + x.pow(k);
    return HomogeneousPoly::from_poly(g * g * z - x.pow(2 * k + 1));
}

// ---------------------------------------------------------------------------
// Reference corpus
// ---------------------------------------------------------------------------

struct NamedCurve {
    std::string id;
    HomogeneousPoly f;
    std::string expected_kind;
    std::vector<long> expected_exponents;
    long expected_tau = 0;
    std::optional<ProjPoint> point;  // a distinguished singular point, if pinned
    std::optional<long> expected_mu_at_point;
    std::optional<long> expected_tau_at_point;
};

struct NamedPair {
    std::string id;
    HomogeneousPoly f;  // C
    LinearForm ell;     // L; the union curve is C u L
    std::optional<long> expected_r;
    std::optional<long> expected_eps;
    std::optional<int> expected_addition_case;  // when C is free
    std::optional<int> expected_deletion_case;  // when C u L is free
};

inline std::vector<NamedCurve> gallery() {
    std::vector<NamedCurve> g;
    auto add = [&g](const std::string& id, const std::string& src, const std::string& kind,
                    std::vector<long> exps, long tau) -> NamedCurve& {
        g.push_back(NamedCurve{id, parse_curve(src), kind, std::move(exps), tau, {}, {}, {}});
        return g.back();
    };
    add("ex4.1.i.a", "x*(x*y - z^2)", "free", {1, 1}, 3);
    add("ex4.1.i.b", "x*y*(x*y - z^2)", "free", {1, 2}, 7);
    add("ex4.1.i.c", "x*z*(x*y - z^2)", "free", {1, 2}, 7);
    add("ex4.1.iii.a", "x*(x + y)*(x*y - z^2)", "nearly_free", {2, 2, 2}, 6);
    add("ex4.1.iii.b", "x*y*(x + 2*y - z)*(x*y - z^2)", "nearly_free", {2, 3, 3}, 11);
    add("ex4.1.iii.c", "(x^3 + y^3)*(x^3 + y^3 + z^3)", "free", {2, 3}, 19);
    add("ex4.1.iii.d", "(x^3 + y^3)*(x^3 + y^3 + z^3)*(x + 2*y - z)", "plus_one_generated",
        {3, 4, 5}, 25);
    {
        auto& c = add("ex4.1.iv.a", "x*z*(x - z)*(x*y - z^2)", "free", {2, 2}, 12);
        c.point = ProjPoint{Rat(0), Rat(1), Rat(0)};
        c.expected_mu_at_point = 11;
        c.expected_tau_at_point = 10;
    }
    add("ex4.1.iv.b", "z*(x - z)*(x*y - z^2)", "nearly_free", {2, 2, 2}, 6);
    add("ex4.1.iv.c", "x*y*(x - z)*(y - z)*(x*y - z^2)", "free", {2, 3}, 19);
    add("ex4.1.iv.d", "x*y*z*(x - z)*(y - z)*(x*y - z^2)", "free", {3, 3}, 27);
    add("rkS", "x*(x^4 + z^4)*(x^8 + (x*z + y^2)^4)", "free", {5, 7}, 109);
    add("rkS.del", "(x^4 + z^4)*(x^8 + (x*z + y^2)^4)", "plus_one_generated", {5, 7, 9}, 88);
    return g;
}

inline const NamedCurve& find_gallery(const std::vector<NamedCurve>& g, const std::string& id) {
    for (const auto& c : g)
        if (c.id == id) return c;
    throw BadParameters("no gallery curve with id " + id);
}

// The five line types against the conic-line arrangement C_m (slopes 1..m-1):
//   1: a line of the pencil through (0:0:1)        -> x
//   2: the tangent to the conic at (1:1:-1)        -> 2x - y + z
//   3: the chord of the tangency points over the   -> 3x - 2y + z   (m > 3)
//      slopes 1 and 2
//   4: a chord through one tangency point and one  -> 8x - 7y + z
//      transversal conic point
//   5: a generic line                              -> x + 2y + 5z
struct ConicLineCase {
    long m = 0;
    int line_type = 0;
    LinearForm ell;
    long expected_r = 0;
    long expected_eps = 0;
    std::vector<long> expected_union_exponents;
    std::string expected_union_kind;
    long expected_union_tau = 0;
};

inline std::vector<ConicLineCase> conic_line_cases(long m) {
    if (m < 3) throw BadParameters("conic_line_cases: m must be at least 3");
    std::vector<ConicLineCase> rows;
    const long dp = m + 3;  // degree of the union curve
    auto add = [&](int type, const std::string& line, long r, long eps, std::vector<long> exps) {
        std::string kind;
        long union_tau;
        if (exps.size() == 2) {
            kind = "free";
            union_tau = (dp - 1) * (dp - 1) - exps[0] * exps[1];
        } else {
            kind = exps[1] == exps[2] ? "nearly_free" : "plus_one_generated";
            union_tau = (dp - 1) * (dp - 1) - exps[0] * (exps[1] - 1) - (exps[2] - exps[1] + 1);
        }
        rows.push_back(ConicLineCase{m, type, parse_line(line), r, eps, std::move(exps), kind,
                                     union_tau});
    };
    // r and the union data follow the addition cases: types 1-3 keep the
    // union free, types 4 and 5 make it plus-one generated.
    add(1, "x", 2, 1, {2, m});
    add(2, "2*x - y + z", m, 0, m == 3 ? std::vector<long>{2, 3} : std::vector<long>{3, m - 1});
    if (m > 3) add(3, "3*x - 2*y + z", m, 0, {3, m - 1});
    add(4, "8*x - 7*y + z", m + 1, 0, {3, m, m});
    add(5, "x + 2*y + 5*z", m + 2, 0, {3, m, m + 1});
    return rows;
}

inline std::vector<NamedPair> corpus_pairs() {
    std::vector<NamedPair> ps;
    const auto g = gallery();
    auto curve = [&g](const std::string& id) { return find_gallery(g, id).f; };
    auto add = [&ps](const std::string& id, const HomogeneousPoly& f, const std::string& line,
                     std::optional<long> r, std::optional<long> eps, std::optional<int> add_case,
                     std::optional<int> del_case) {
        ps.push_back(NamedPair{id, f, parse_line(line), r, eps, add_case, del_case});
    };
    add("pr.1", curve("ex4.1.i.a"), "y", 2, 0, 1, 1);
    add("pr.2", curve("ex4.1.i.a"), "z", 2, 0, 1, 1);
    add("pr.3", curve("ex4.1.i.a"), "x + y", 3, 0, 3, {});
    add("pr.4", curve("ex4.1.i.b"), "x + 2*y - z", 4, 0, 3, {});
    add("pr.5", curve("ex4.1.iii.c"), "x + 2*y - z", {}, {}, 3, {});
    add("pr.6", curve("ex4.1.i.c"), "x - z", 2, 1, 2, 2);
    add("pr.7", curve("ex4.1.iv.b"), "x", 1, 1, {}, 3);
    add("pr.8", curve("ex4.1.iv.c"), "z", 2, 2, 2, 2);
    add("pr.9", curve("rkS.del"), "x", 2, 1, {}, 3);
    for (long m : {3L, 4L, 5L}) {
        const HomogeneousPoly cm = conic_line_family(m);
        for (const auto& row : conic_line_cases(m)) {
            const std::string id =
                "cm" + std::to_string(m) + "." + std::to_string(row.line_type);
            std::optional<int> add_case;
            switch (row.line_type) {
                case 1: add_case = 1; break;
                case 2: add_case = m == 3 ? 1 : 2; break;
                case 3: add_case = 2; break;
                default: add_case = 3; break;
            }
            std::optional<int> del_case;
            if (row.expected_union_exponents.size() == 2)
                del_case = row.line_type == 1 || (row.line_type == 2 && m == 3) ? 1 : 2;
            ps.push_back(NamedPair{id, cm, row.ell, row.expected_r, row.expected_eps, add_case,
                                   del_case});
        }
    }
    for (long k : {2L, 3L, 4L})
        add("cusp" + std::to_string(k) + ".z", cuspidal_family(k), "z", 1, k, 1, 1);
    return ps;
}

}  // namespace syzcurve
