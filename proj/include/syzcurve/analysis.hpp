#pragma once

// Top-level drivers: full single-curve analysis documents, pair documents
// for adding or deleting a line, per-point defect decompositions, and the
// conjecture scans over the reference corpus and seeded random branch pairs.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syzcurve/errors.hpp"
#include "syzcurve/families.hpp"
#include "syzcurve/graded.hpp"
#include "syzcurve/incidence.hpp"
#include "syzcurve/local.hpp"
#include "syzcurve/parallel.hpp"
#include "syzcurve/rng.hpp"
#include "syzcurve/theorems.hpp"

namespace syzcurve {

struct AnalyzeOptions {
    std::optional<long> bound;  // initial degree bound for the generator scan
    std::optional<long> kmax;   // dimension tables run over k = 0..kmax (default T)
};

struct AnalysisDocument {
    std::string input;  // canonical form of the defining polynomial
    long degree = 0;
    long T = 0;
    long tau = 0;
    long nu = 0;
    std::optional<long> sigma;
    Classification cl;
    long kmax = 0;
    std::vector<long> dims_M;   // dim M(f)_k = dim (S/J_f)_k
    std::vector<long> dims_N;   // dim N(f)_k = dim (I_f/J_f)_k
    std::vector<long> dims_D0;  // dim D0(f)_k
};

namespace detail {

inline long module_dim_at(CurveData& cd, const JacobianModuleTable& tb, long t) {
    if (t < 0) return 0;
    if (t <= tb.T) return tb.dims_M[static_cast<std::size_t>(t)];
    return cd.dim_module_high(t);
}

inline AnalysisDocument assemble_document(CurveData& cd, const JacobianModuleTable& tb,
                                          const Classification& cl,
                                          std::optional<long> kmax_opt) {
    AnalysisDocument doc;
    doc.input = to_string(cd.f().poly());
    doc.degree = cd.degree();
    doc.T = tb.T;
    doc.tau = tb.tau;
    doc.nu = tb.nu;
    doc.sigma = tb.sigma;
    doc.cl = cl;
    doc.kmax = std::max<long>(kmax_opt.value_or(tb.T), 0);
    const long d = cd.degree();
    for (long k = 0; k <= doc.kmax; ++k) {
        doc.dims_M.push_back(module_dim_at(cd, tb, k));
        doc.dims_N.push_back(n_value(tb, k));
        doc.dims_D0.push_back(3 * dim_forms(k) - dim_forms(k + d - 1) +
                              module_dim_at(cd, tb, k + d - 1));
    }
    return doc;
}

}  // namespace detail

inline AnalysisDocument analyze_curve(const HomogeneousPoly& f, const AnalyzeOptions& opt = {}) {
    if (f.degree() < 3)
        throw NotHomogeneous("expected a homogeneous curve of degree at least 3, got degree " +
                             std::to_string(f.degree()));
    require_reduced(f);
    CurveData cd(f);
    const JacobianModuleTable tb = jacobian_module_table(cd);
    const Classification cl = classify(cd, opt.bound);
    return detail::assemble_document(cd, tb, cl, opt.kmax);
}

// ---------------------------------------------------------------------------
// Pair documents
// ---------------------------------------------------------------------------

struct PairDocument {
    std::string direction;  // "add-line" | "delete-line"
    std::string line;
    long r = 0;
    long eps = 0;
    AnalysisDocument curve;        // C
    AnalysisDocument curve_union;  // C u L
    std::optional<AdditionReport> addition;      // present when C is free
    std::optional<DeletionReport> deletion;      // present when C u L is free
    std::optional<SequenceScanReport> union_scan;
    std::optional<SequenceScanReport> curve_scan;
    BiconditionalReport bicond_add;
    BiconditionalReport bicond_del;
    MdrStepReport mdr_step;
    std::string notice;
};

inline PairDocument analyze_pair(CurveLinePair pair, const std::string& direction,
                                 const AnalyzeOptions& opt = {}) {
    if (pair.f.degree() < 3)
        throw NotHomogeneous("the curve without the line must have degree at least 3, got " +
                             std::to_string(pair.f.degree()));
    require_reduced(pair.f);
    PairAnalysis pa(std::move(pair), opt.bound);

    PairDocument doc;
    doc.direction = direction;
    doc.line = to_string(pa.pair.ell);
    doc.r = pa.pair.r;
    doc.eps = pa.eps;
    doc.curve = detail::assemble_document(pa.curve, pa.table_c, pa.cl_c, opt.kmax);
    doc.curve_union = detail::assemble_document(pa.curve_union, pa.table_u, pa.cl_u, opt.kmax);
    if (pa.cl_c.kind == "free") {
        doc.addition = addition_report(pa);
        doc.union_scan = addition_dimension_scan(pa);
    }
    if (pa.cl_u.kind == "free") {
        doc.deletion = deletion_report(pa);
        doc.curve_scan = deletion_dimension_scan(pa);
    }
    if (direction == "add-line" && pa.cl_c.kind != "free")
        doc.notice = "the curve is not free: no addition case applies, reporting both analyses";
    if (direction == "delete-line" && pa.cl_u.kind != "free")
        doc.notice = "the union curve is not free: no deletion case applies, reporting both analyses";
    doc.bicond_add = addition_biconditional(pa);
    doc.bicond_del = deletion_biconditional(pa);
    doc.mdr_step = mdr_step_report(pa);
    return doc;
}

// ---------------------------------------------------------------------------
// Per-point defect decomposition along C n L
// ---------------------------------------------------------------------------

struct PointBreakdown {
    ProjPoint point;
    ConjecturePointCheck check;
};

struct PairPointScan {
    std::string id;
    long r = 0;
    bool all_rational = false;
    long points_checked = 0;
    long points_skipped = 0;  // intersection points not defined over the rationals
    std::vector<PointBreakdown> breakdown;
    long eps_sum = 0;
    std::optional<long> eps_global;       // 2 deg(C) - r - (tau(C') - tau(C))
    std::optional<bool> decomposition_ok; // eps_sum == eps_global over all points
};

inline PairPointScan pair_point_scan(const std::string& id, const CurveLinePair& pair,
                                     std::optional<long> tau_c = {},
                                     std::optional<long> tau_u = {}) {
    PairPointScan out;
    out.id = id;
    out.r = pair.r;
    const IntersectionPoints pts = intersection_points(pair);
    out.all_rational = pts.all_rational;
    out.points_skipped = pair.r - static_cast<long>(pts.points.size());
    const HomogeneousPoly lf = pair.ell.to_homogeneous();
    for (const auto& p : pts.points) {
        PointBreakdown b{p, conjecture_check(pair.f, lf, p)};
        out.eps_sum += b.check.eps_q;
        out.breakdown.push_back(std::move(b));
        ++out.points_checked;
    }
    if (tau_c && tau_u) {
        out.eps_global = epsilon_global(pair, *tau_c, *tau_u);
        out.decomposition_ok = out.all_rational && out.eps_sum == *out.eps_global;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Conjecture scans: the local defect eps_q is nonnegative, and the local
// Tjurina number of a union is at most tau_1 + tau_2 + 2 (C1,C2)_q - 1.
// ---------------------------------------------------------------------------

struct ConjectureScanResult {
    long pairs = 0;
    long checked = 0;  // points checked
    long conj1_violations = 0;
    long conj2_violations = 0;
    long mu_identity_failures = 0;
    long skipped_points = 0;  // non-rational intersection points
    std::vector<std::string> violation_notes;
};

namespace detail {

inline void tally_check(ConjectureScanResult& res, const std::string& label,
                        const ConjecturePointCheck& c) {
    ++res.checked;
    if (!c.conj1_ok) {
        ++res.conj1_violations;
        res.violation_notes.push_back(label + ": eps_q = " + std::to_string(c.eps_q) + " < 0");
    }
    if (!c.conj2_ok) {
        ++res.conj2_violations;
        res.violation_notes.push_back(label + ": tau(union) = " +
                                      std::to_string(c.curve_union.tau) + " exceeds " +
                                      std::to_string(c.c1.tau + c.c2.tau + 2 * c.imult - 1));
    }
    if (!c.mu_identity_ok) {
        ++res.mu_identity_failures;
        res.violation_notes.push_back(label + ": Milnor additivity failed");
    }
}

}  // namespace detail

inline ConjectureScanResult conjecture_scan_corpus() {
    ConjectureScanResult res;
    for (const auto& np : corpus_pairs()) {
        const CurveLinePair pair = make_union_pair(np.f, np.ell);
        const PairPointScan scan = pair_point_scan(np.id, pair);
        ++res.pairs;
        res.skipped_points += scan.points_skipped;
        for (const auto& b : scan.breakdown)
            detail::tally_check(res, np.id + " at " + to_string(b.point), b.check);
    }
    return res;
}

struct SeededPairOptions {
    std::uint64_t seed = 1;
    long count = 500;
    long max_imult = 12;  // regenerate pairs meeting more deeply than this
};

namespace detail {

// z^{deg g} g(x/z, y/z) for a germ g at the origin of the z = 1 chart.
inline HomogeneousPoly homogenize_germ(const Poly& g) {
    const long d = g.total_degree();
    Poly out;
    for (const auto& t : g.terms())
        out.add_term(Exp3{t.first[0], t.first[1], static_cast<int>(d) - t.first[0] - t.first[1]},
                     t.second);
    return HomogeneousPoly(std::move(out), d);
}

// u^p - v^q for coprime (p, q) in unimodularly mixed local coordinates:
// an irreducible quasi-homogeneous branch through the origin.
inline Poly random_branch(SplitMix64& rng) {
    static constexpr std::pair<long, long> pq[] = {{2, 3}, {2, 5}, {3, 4}, {3, 5}};
    const auto [p, q] = pq[rng.below(4)];
    Poly u = Poly::variable(0);
    Poly v = Poly::variable(1);
    const long shears = 1 + static_cast<long>(rng.below(3));
    for (long s = 0; s < shears; ++s) {
        const Rat t(static_cast<long>(rng.below(5)) - 2);
        if (rng.below(2) == 0)
            u = u + v * t;
        else
            v = v + u * t;
    }
    if (rng.below(2) == 0) std::swap(u, v);
    return u.pow(p) - v.pow(q);
}

}  // namespace detail

inline ConjectureScanResult conjecture_scan_random(const SeededPairOptions& opt = {}) {
    ConjectureScanResult res;
    res.pairs = opt.count;
    const std::size_t n = static_cast<std::size_t>(opt.count);
    std::vector<ConjecturePointCheck> checks(n);
    std::vector<std::string> labels(n);
    parallel_for(opt.count, [&](long idx) {
        const ProjPoint origin(Rat(0), Rat(0), Rat(1));
        SplitMix64 rng(opt.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(idx + 1));
        for (int attempt = 0; attempt < 64; ++attempt) {
            const Poly g1 = detail::random_branch(rng);
            const Poly g2 = detail::random_branch(rng);
            if (g1 == g2) continue;
            const HomogeneousPoly f1 = detail::homogenize_germ(g1);
            const HomogeneousPoly f2 = detail::homogenize_germ(g2);
            try {
                if (intersection_multiplicity(f1, f2, origin) > opt.max_imult) continue;
                checks[static_cast<std::size_t>(idx)] = conjecture_check(f1, f2, origin);
                labels[static_cast<std::size_t>(idx)] =
                    "pair " + std::to_string(idx) + " (" + to_string(g1) + " | " + to_string(g2) +
                    ")";
                return;
            } catch (const SharedComponent&) {
                // proportional branches: draw again
            } catch (const NonIsolated&) {
                // non-reduced union: draw again
            }
        }
        throw InconsistentProfile("branch pair generation stalled at index " +
                                  std::to_string(idx));
    });
    for (std::size_t i = 0; i < n; ++i) detail::tally_check(res, labels[i], checks[i]);
    return res;
}

// ---------------------------------------------------------------------------
// Family sweeps
// ---------------------------------------------------------------------------

struct FamilyScanRow {
    std::string id;
    long param = 0;
    long degree = 0;
    std::string kind;
    std::vector<long> exponents;
    long tau = 0;
    std::optional<long> mu_at_point;   // at the distinguished singular point
    std::optional<long> tau_at_point;
};

inline std::vector<FamilyScanRow> family_scan(const std::string& family, long from, long to) {
    if (from > to) throw BadParameters("family scan: empty parameter range");
    std::vector<FamilyScanRow> rows;
    for (long n = from; n <= to; ++n) {
        FamilyScanRow row;
        row.param = n;
        HomogeneousPoly f;
        std::optional<ProjPoint> point;
        if (family == "conic-line") {
            f = conic_line_family(n);
            point = ProjPoint(Rat(0), Rat(0), Rat(1));
            row.id = "cm" + std::to_string(n);
        } else if (family == "cuspidal") {
            f = cuspidal_family(n);
            point = ProjPoint(Rat(0), Rat(1), Rat(0));
            row.id = "cusp" + std::to_string(n);
        } else if (family == "free-rkC") {
            f = free_rkC_family(n, Rat(1), Rat(0), Rat(0));
            row.id = "rkC" + std::to_string(n);
        } else {
            throw UnknownFamily("unknown family '" + family +
                                "' (expected conic-line, cuspidal or free-rkC)");
        }
        row.degree = f.degree();
        CurveData cd(f);
        const JacobianModuleTable tb = jacobian_module_table(cd);
        const Classification cl = classify(cd);
        row.kind = cl.kind;
        row.exponents = cl.exponents;
        row.tau = tb.tau;
        if (point) {
            const LocalInvariants li = local_mu_tau(f, *point);
            row.mu_at_point = li.mu;
            row.tau_at_point = li.tau;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace syzcurve
