#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "syzcurve/errors.hpp"
#include "syzcurve/matrix.hpp"
#include "syzcurve/poly.hpp"

namespace syzcurve {

// --- local models ---
//
// A projective point is moved to the origin of the affine chart of its
// absolutely largest coordinate (first such on ties).  The local model is a
// polynomial in two variables (u, v), stored in the x, y slots of Poly.

inline int chart_index(const ProjPoint& p) {
    const Rat ax = abs(p.x), ay = abs(p.y), az = abs(p.z);
    if (ax >= ay && ax >= az) return 0;
    if (ay >= az) return 1;
    return 2;
}

inline Poly local_model(const HomogeneousPoly& f, const ProjPoint& p) {
    const int ch = chart_index(p);
    const Rat coords[3] = {p.x, p.y, p.z};
    const Rat s = Rat(1) / coords[ch];
    const Poly u = Poly::variable(0);
    const Poly v = Poly::variable(1);
    std::array<Poly, 3> img;
    int next = 0;
    for (int w = 0; w < 3; ++w) {
        if (w == ch) {
            img[static_cast<std::size_t>(w)] = Poly(Rat(1));
        } else {
            const Poly& var = next == 0 ? u : v;
            img[static_cast<std::size_t>(w)] = var + Poly(coords[w] * s);
            ++next;
        }
    }
    return f.poly().subst(img);
}

// --- truncated colengths ---
//
// dim Q[[u,v]] / (gens + m^N); pairs of consecutive values decide
// stabilization: D(N) = D(N+1) forces m^N into the ideal (Nakayama), so the
// shared value is the exact colength.
namespace detail {

inline long truncation_index(int i, int j) { // monomials ordered by degree, then i desc
    const int a = i + j;
    return static_cast<long>(a) * (a + 1) / 2 + j;
}

inline long truncated_colength(const std::vector<Poly>& gens, long N) {
    const long ncols = N * (N + 1) / 2; // monomials of degree < N
    std::vector<SparseRowZ> rows;
    for (const Poly& g : gens) {
        if (g.is_zero()) continue;
        const long ord = g.order_at_origin();
        for (long a = 0; a + ord < N; ++a) {
            for (int i = static_cast<int>(a); i >= 0; --i) {
                const int j = static_cast<int>(a) - i;
                std::vector<std::pair<std::int32_t, Rat>> row;
                for (const auto& term : g.terms()) {
                    const int ti = term.first[0] + i;
                    const int tj = term.first[1] + j;
                    if (ti + tj >= N) continue;
                    row.emplace_back(static_cast<std::int32_t>(truncation_index(ti, tj)),
                                     term.second);
                }
                if (row.empty()) continue;
                std::sort(row.begin(), row.end(),
                          [](const auto& x, const auto& y) { return x.first < y.first; });
                rows.push_back(row_from_rat(row));
            }
        }
    }
    return ncols - rank_sparse(std::move(rows));
}

template <class E>
inline long stabilized_colength(const std::vector<Poly>& gens, long cap,
                                const std::string& what) {
    long n = 4;
    for (;;) {
        const long N = std::min(n, cap);
        const long a = truncated_colength(gens, N);
        const long b = truncated_colength(gens, N + 1);
        if (a == b) return a;
        if (N >= cap) throw E(what + " (no stabilization by jet order " + std::to_string(cap) + ")");
        n *= 2;
    }
}

} // namespace detail

struct LocalInvariants {
    long mu = 0;  // Milnor number
    long tau = 0; // Tjurina number
};

// Milnor and Tjurina numbers of the curve germ at a rational point.
inline LocalInvariants local_mu_tau(const HomogeneousPoly& f, const ProjPoint& p) {
    if (f.poly().eval(p.x, p.y, p.z) != 0)
        throw PointNotOnCurve("point " + to_string(p) + " is not on the curve");
    const Poly g = local_model(f, p);
    const Poly gu = g.partial(0);
    const Poly gv = g.partial(1);
    const long cap = (f.degree() - 1) * (f.degree() - 1) + 2;
    LocalInvariants li;
    li.mu = detail::stabilized_colength<NonIsolated>({gu, gv}, cap,
                                                     "singularity at " + to_string(p) +
                                                         " is not isolated");
    li.tau = detail::stabilized_colength<NonIsolated>({gu, gv, g}, cap,
                                                      "singularity at " + to_string(p) +
                                                          " is not isolated");
    if (li.tau > li.mu || li.tau < 0)
        throw InconsistentProfile("local invariants out of range at " + to_string(p));
    return li;
}

inline long local_epsilon(const HomogeneousPoly& f, const ProjPoint& p) {
    const LocalInvariants li = local_mu_tau(f, p);
    return li.mu - li.tau;
}

// Intersection multiplicity (C1 . C2)_p; SharedComponent when the germs share
// a branch (the colength never stabilizes below the Bezout cap).
inline long intersection_multiplicity(const HomogeneousPoly& f1, const HomogeneousPoly& f2,
                                      const ProjPoint& p) {
    if (f1.poly().eval(p.x, p.y, p.z) != 0 || f2.poly().eval(p.x, p.y, p.z) != 0)
        throw PointNotOnCurve("point " + to_string(p) + " is not on both curves");
    const Poly g1 = local_model(f1, p);
    const Poly g2 = local_model(f2, p);
    const long cap = f1.degree() * f2.degree() + 2;
    return detail::stabilized_colength<SharedComponent>(
        {g1, g2}, cap, "curves share a component through " + to_string(p));
}

// mu(C1 u C2, p) = mu(C1, p) + mu(C2, p) + 2 (C1 . C2)_p - 1.
inline bool mu_union_check(const HomogeneousPoly& f1, const HomogeneousPoly& f2,
                           const ProjPoint& p) {
    const LocalInvariants a = local_mu_tau(f1, p);
    const LocalInvariants b = local_mu_tau(f2, p);
    const long im = intersection_multiplicity(f1, f2, p);
    const HomogeneousPoly fu(f1.poly() * f2.poly(), f1.degree() + f2.degree());
    const LocalInvariants u = local_mu_tau(fu, p);
    return u.mu == a.mu + b.mu + 2 * im - 1;
}

// Everything the two Tjurina-type conjectures need at one intersection point:
//   eps_q = mu(C1 u C2, q) - mu(C1, q) - (tau(C1 u C2, q) - tau(C1, q))
//   conjecture 1: eps_q >= 0
//   conjecture 2: tau(C1 u C2, q) <= tau(C1, q) + tau(C2, q) + 2 (C1.C2)_q - 1
struct ConjecturePointCheck {
    LocalInvariants c1, c2, curve_union;
    long imult = 0;
    long eps_q = 0;
    bool conj1_ok = false;
    bool conj2_ok = false;
    bool mu_identity_ok = false;
};

inline ConjecturePointCheck conjecture_check(const HomogeneousPoly& f1,
                                             const HomogeneousPoly& f2, const ProjPoint& p) {
    ConjecturePointCheck out;
    out.c1 = local_mu_tau(f1, p);
    out.c2 = local_mu_tau(f2, p);
    out.imult = intersection_multiplicity(f1, f2, p);
    const HomogeneousPoly fu(f1.poly() * f2.poly(), f1.degree() + f2.degree());
    out.curve_union = local_mu_tau(fu, p);
    out.eps_q = out.curve_union.mu - out.c1.mu - (out.curve_union.tau - out.c1.tau);
    out.conj1_ok = out.eps_q >= 0;
    out.conj2_ok = out.curve_union.tau <= out.c1.tau + out.c2.tau + 2 * out.imult - 1;
    out.mu_identity_ok =
        out.curve_union.mu == out.c1.mu + out.c2.mu + 2 * out.imult - 1;
    return out;
}

} // namespace syzcurve
