#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "syzcurve/graded.hpp"
#include "syzcurve/matrix.hpp"
#include "syzcurve/poly.hpp"

namespace syzcurve {

// One element of D_0(f): a triple (a, b, c) of forms of equal degree with
// a*f_x + b*f_y + c*f_z = 0.
struct SyzygyTriple {
    long degree = 0;
    HomogeneousPoly a, b, c;
};

// Environment toggle for the modular prefilter inside the generator scan
// (certified skips only; results are identical either way).
inline bool prime_filter_enabled() {
    const char* v = std::getenv("SYZ_PRIME_FILTER");
    return !(v && std::string(v) == "off");
}

namespace detail {

// Equations cutting out D_0(f)_k from S_k^3: one row per monomial of degree
// k + d - 1, one column per (component, monomial of degree k).
inline std::vector<SparseRowZ> syzygy_rows(const CurveData& cd, long k) {
    const long d = cd.degree();
    const long t = k + d - 1;
    const long nsk = dim_forms(k);
    std::vector<std::vector<std::pair<std::int32_t, Rat>>> acc(
        static_cast<std::size_t>(dim_forms(t)));
    const auto ms = monomials_of_degree(k);
    for (int v = 0; v < 3; ++v) {
        for (std::size_t c = 0; c < ms.size(); ++c) {
            const std::int32_t col =
                static_cast<std::int32_t>(v * nsk + static_cast<long>(c));
            for (const auto& term : cd.partial_terms(v)) {
                const Exp3 e{ms[c][0] + term.first[0], ms[c][1] + term.first[1],
                             ms[c][2] + term.first[2]};
                acc[static_cast<std::size_t>(index_in_degree(e, t))].emplace_back(col,
                                                                                  term.second);
            }
        }
    }
    std::vector<SparseRowZ> rows;
    rows.reserve(acc.size());
    for (auto& r : acc) {
        std::sort(r.begin(), r.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(row_from_rat(r));
    }
    return rows;
}

// Rows spanning the degree-k multiples of the given generators inside
// S_k^3 (same column layout as syzygy_rows).
inline std::vector<SparseRowZ> multiple_rows(const std::vector<SyzygyTriple>& gens, long k) {
    const long nsk = dim_forms(k);
    std::vector<SparseRowZ> rows;
    for (const auto& g : gens) {
        const long md = k - g.degree;
        if (md < 0) continue;
        const HomogeneousPoly* comps[3] = {&g.a, &g.b, &g.c};
        for (const Exp3& m : monomials_of_degree(md)) {
            std::vector<std::pair<std::int32_t, Rat>> row;
            for (int v = 0; v < 3; ++v) {
                for (const auto& term : comps[v]->poly().terms()) {
                    const Exp3 e{m[0] + term.first[0], m[1] + term.first[1],
                                 m[2] + term.first[2]};
                    row.emplace_back(
                        static_cast<std::int32_t>(v * nsk + index_in_degree(e, k)),
                        term.second);
                }
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            rows.push_back(row_from_rat(row));
        }
    }
    return rows;
}

inline SyzygyTriple triple_from_vector(const std::vector<Rat>& v, long k) {
    const long nsk = dim_forms(k);
    const auto ms = monomials_of_degree(k);
    Poly comp[3];
    for (long c = 0; c < 3 * nsk; ++c) {
        const Rat& val = v[static_cast<std::size_t>(c)];
        if (val == 0) continue;
        comp[c / nsk].add_term(ms[static_cast<std::size_t>(c % nsk)], val);
    }
    SyzygyTriple g;
    g.degree = k;
    g.a = HomogeneousPoly(comp[0], k);
    g.b = HomogeneousPoly(comp[1], k);
    g.c = HomogeneousPoly(comp[2], k);
    return g;
}

} // namespace detail

// dim D_0(f)_k, exact.
inline long dim_syzygy(CurveData& cd, long k) {
    if (k < 0) return 0;
    return 3 * dim_forms(k) - rank_sparse(detail::syzygy_rows(cd, k));
}

// dim D_0(f)_k via rank(A) = rank(A^T): the syzygy equations at degree k and
// the Macaulay rows at degree k + d - 1 are transposes, so the certified
// modular shortcut for high Jacobian degrees applies.
inline long dim_syzygy_high(CurveData& cd, long k) {
    if (k < 0) return 0;
    return 3 * dim_forms(k) - (dim_forms(k + cd.degree() - 1) -
                               cd.dim_module_high(k + cd.degree() - 1));
}

// Basis of D_0(f)_k (canonical kernel basis of the syzygy equations).
inline std::vector<SyzygyTriple> syzygy_space(CurveData& cd, long k) {
    std::vector<SyzygyTriple> out;
    if (k < 0) return out;
    for (const auto& v : kernel_sparse(detail::syzygy_rows(cd, k), 3 * dim_forms(k)))
        out.push_back(detail::triple_from_vector(v, k));
    return out;
}

inline long hilbert_polynomial_d0(long d, long tau, long t) {
    return 3 * binom(t + 2, 2) - binom(t + 1 + d, 2) + tau;
}

// Result of the minimal-generator scan over degrees 0..bound.
struct GeneratorScan {
    std::vector<long> degrees;          // generator degrees, ascending
    std::vector<SyzygyTriple> generators;
    std::vector<long> new_by_degree;    // new generators found at each degree 0..bound
    long bound = 0;
    bool complete = false;              // certified: no generators above `bound`
};

// Scan D_0(f) degree by degree; at degree k the number of new generators is
// dim D_0(f)_k minus the rank of the multiples of the generators already
// found.  A modular rank can only undershoot the rational one, so
// dim_p ker - rank_p(multiples) == 0 certifies that a degree contributes
// nothing and the exact computation may be skipped.
inline GeneratorScan minimal_generator_degrees(CurveData& cd, long bound) {
    GeneratorScan scan;
    scan.bound = bound;
    scan.new_by_degree.assign(static_cast<std::size_t>(bound + 1), 0);
    const bool use_filter = prime_filter_enabled();

    for (long k = 0; k <= bound; ++k) {
        auto eq = detail::syzygy_rows(cd, k);
        auto mult = detail::multiple_rows(scan.generators, k);
        if (use_filter) {
            const std::uint64_t p = default_primes[0];
            const long dim_ker_p =
                3 * dim_forms(k) - rank_sparse_mod_p(eq, p);
            const long rank_mult_p = rank_sparse_mod_p(mult, p);
            if (dim_ker_p - rank_mult_p <= 0) continue; // certified: nothing new here
        }
        const long dim_d0 = 3 * dim_forms(k) - rank_sparse(eq);
        const long rank_mult = rank_sparse(mult);
        const long fresh = dim_d0 - rank_mult;
        if (fresh < 0)
            throw InconsistentProfile("generator multiples exceed dim D_0 at degree " +
                                      std::to_string(k));
        if (fresh == 0) continue;
        scan.new_by_degree[static_cast<std::size_t>(k)] = fresh;

        SparseEliminatorZ el;
        for (auto& r : mult) el.add_row(std::move(r));
        long added = 0;
        for (const auto& v : kernel_sparse(std::move(eq), 3 * dim_forms(k))) {
            std::vector<std::pair<std::int32_t, Rat>> sr;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (v[j] != 0) sr.emplace_back(static_cast<std::int32_t>(j), v[j]);
            if (!el.add_row(row_from_rat(sr))) continue;
            SyzygyTriple g = detail::triple_from_vector(v, k);
            const Poly check = g.a.poly() * cd.f().poly().partial(0) +
                               g.b.poly() * cd.f().poly().partial(1) +
                               g.c.poly() * cd.f().poly().partial(2);
            if (!check.is_zero())
                throw InconsistentProfile("kernel vector is not a Jacobian relation");
            scan.generators.push_back(std::move(g));
            scan.degrees.push_back(k);
            if (++added == fresh) break;
        }
        if (added != fresh)
            throw InconsistentProfile("kernel basis did not complete the generator set at degree " +
                                      std::to_string(k));
    }

    const long tau = cd.total_tjurina();
    const bool tail_quiet = scan.new_by_degree[static_cast<std::size_t>(bound)] == 0 &&
                            bound >= 1 &&
                            scan.new_by_degree[static_cast<std::size_t>(bound - 1)] == 0;
    if (tail_quiet) {
        const long dim_b = dim_syzygy_high(cd, bound);
        scan.complete = dim_b == hilbert_polynomial_d0(cd.degree(), tau, bound);
    }
    return scan;
}

// Modular shortcut: an empty syzygy kernel mod p certifies an empty rational
// kernel at that degree.
inline bool certified_empty_mod_p(CurveData& cd, long k) {
    if (!prime_filter_enabled()) return false;
    auto eq = detail::syzygy_rows(cd, k);
    return 3 * dim_forms(k) - rank_sparse_mod_p(eq, default_primes[0]) == 0;
}

// Minimal degree of a relation: smallest k with D_0(f)_k != 0.
inline long mdr(CurveData& cd) {
    for (long k = 0;; ++k) {
        if (k > 2 * cd.degree())
            throw InconsistentProfile("no Jacobian relation found up to degree " +
                                      std::to_string(2 * cd.degree()));
        if (certified_empty_mod_p(cd, k)) continue;
        if (dim_syzygy(cd, k) > 0) return k;
    }
}

struct Classification {
    long d = 0;
    std::vector<long> exponents;      // generator degrees, ascending
    std::string kind;                 // free | nearly_free | plus_one_generated | m_syzygy
    long m = 0;                       // number of minimal generators
    std::optional<long> level;        // d_3 for plus-one generated / nearly free curves
    long mdr = 0;                     // exponents[0]
    bool complete = false;
    long bound = 0;
    GeneratorScan scan;
};

inline Classification classify(CurveData& cd, std::optional<long> initial_bound = {}) {
    const long d = cd.degree();
    long bound = initial_bound.value_or(std::max<long>(2 * d - 3, 1));
    const long cap = std::max(3 * d, bound);
    GeneratorScan scan = minimal_generator_degrees(cd, bound);
    while (!scan.complete && bound < cap) {
        bound = std::min(2 * bound, cap);
        scan = minimal_generator_degrees(cd, bound);
    }
    if (!scan.complete)
        throw BoundTooSmall("generator scan not certified complete at degree bound " +
                            std::to_string(bound));

    Classification cl;
    cl.d = d;
    cl.exponents = scan.degrees;
    cl.m = static_cast<long>(scan.degrees.size());
    cl.complete = scan.complete;
    cl.bound = bound;
    if (cl.m < 2) throw InconsistentProfile("fewer than two minimal generators");
    cl.mdr = scan.degrees.front();
    const long d1 = scan.degrees[0];
    const long d2 = scan.degrees[1];
    if (cl.m == 2) {
        if (d1 + d2 != d - 1)
            throw InconsistentProfile("two generators with d1 + d2 = " +
                                      std::to_string(d1 + d2) + " != d - 1");
        cl.kind = "free";
    } else if (cl.m == 3 && d1 + d2 == d) {
        const long d3 = scan.degrees[2];
        cl.kind = d2 == d3 ? "nearly_free" : "plus_one_generated";
        cl.level = d3;
    } else {
        if (d1 + d2 <= d)
            throw InconsistentProfile("unexpected generator degrees: d1 + d2 = " +
                                      std::to_string(d1 + d2) + " with m = " +
                                      std::to_string(cl.m));
        cl.kind = "m_syzygy";
    }
    cl.scan = std::move(scan);
    return cl;
}

inline Classification classify(const HomogeneousPoly& f) {
    CurveData cd(f);
    return classify(cd);
}

inline long mdr(const HomogeneousPoly& f) {
    CurveData cd(f);
    return mdr(cd);
}

} // namespace syzcurve
