#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "syzcurve/errors.hpp"
#include "syzcurve/matrix.hpp"
#include "syzcurve/parallel.hpp"
#include "syzcurve/poly.hpp"

namespace syzcurve {

// Shared per-curve computation state: the partials of f and memoized graded
// dimensions.  All mutation happens on the calling thread; the parallel
// helpers below compute into index-owned slots and merge afterwards.
class CurveData {
  public:
    explicit CurveData(HomogeneousPoly f)
        : f_(std::move(f)), d_(f_.degree()) {
        for (int v = 0; v < 3; ++v) {
            const Poly p = f_.poly().partial(v);
            partials_[static_cast<std::size_t>(v)].assign(p.terms().begin(), p.terms().end());
        }
    }

    const HomogeneousPoly& f() const { return f_; }
    long degree() const { return d_; }

    // Terms of f_x, f_y, f_z in canonical order (v = 0, 1, 2).
    const std::vector<std::pair<Exp3, Rat>>& partial_terms(int v) const {
        return partials_[static_cast<std::size_t>(v)];
    }

    // Top degree of the graded module N(f); tables run over 0..T.
    long T() const { return 3 * (d_ - 2); }

    // Rows m * f_x, m * f_y, m * f_z over the monomials of degree t, for all
    // monomials m of degree t - d + 1.  The row space is (J_f)_t.
    std::vector<SparseRowZ> macaulay_rows(long t) const {
        std::vector<SparseRowZ> rows;
        const long md = t - d_ + 1;
        if (md < 0) return rows;
        const auto ms = monomials_of_degree(md);
        rows.reserve(3 * ms.size());
        for (int v = 0; v < 3; ++v) {
            for (const Exp3& m : ms) {
                std::vector<std::pair<std::int32_t, Rat>> row;
                row.reserve(partials_[static_cast<std::size_t>(v)].size());
                for (const auto& term : partials_[static_cast<std::size_t>(v)]) {
                    const Exp3 e{m[0] + term.first[0], m[1] + term.first[1],
                                 m[2] + term.first[2]};
                    row.emplace_back(static_cast<std::int32_t>(index_in_degree(e, t)),
                                     term.second);
                }
                rows.push_back(row_from_rat(row));
            }
        }
        return rows;
    }

    // dim (J_f)_t, exact.
    long dim_jacobian_ideal(long t) {
        if (t < d_ - 1) return 0;
        auto it = dimJ_.find(t);
        if (it != dimJ_.end()) return it->second;
        const long r = rank_sparse(macaulay_rows(t));
        dimJ_.emplace(t, r);
        return r;
    }

    long dim_module(long t) { return dim_forms(t) - dim_jacobian_ideal(t); } // dim (S/J_f)_t

    // Parallel precompute of dim (J_f)_t for a set of degrees.
    void prime_jacobian_dims(const std::vector<long>& degrees) {
        std::vector<long> missing;
        for (long t : degrees)
            if (t >= d_ - 1 && dimJ_.find(t) == dimJ_.end()) missing.push_back(t);
        if (missing.empty()) return;
        std::vector<long> out(missing.size());
        parallel_for(static_cast<long>(missing.size()), [&](long i) {
            out[static_cast<std::size_t>(i)] =
                rank_sparse(macaulay_rows(missing[static_cast<std::size_t>(i)]));
        });
        for (std::size_t i = 0; i < missing.size(); ++i) dimJ_.emplace(missing[i], out[i]);
    }

    // Canonical kernel basis of the Macaulay rows at degree t: the linear
    // functionals on S_t vanishing on (J_f)_t.
    const std::vector<std::vector<Rat>>& jacobian_annihilator(long t) {
        auto it = macker_.find(t);
        if (it != macker_.end()) return it->second;
        auto ker = kernel_sparse(macaulay_rows(t), dim_forms(t));
        dimJ_.emplace(t, dim_forms(t) - static_cast<long>(ker.size()));
        return macker_.emplace(t, std::move(ker)).first->second;
    }

    // dim (I_f)_k for the saturation I_f = J_f : m^infinity.  I_f/J_f
    // vanishes in degrees above T, so (I_f)_{T+1} = (J_f)_{T+1}; and I_f is
    // saturated, so (I_f)_k = {g in S_k : x g, y g, z g all in (I_f)_{k+1}}.
    // The profile is therefore computed by one descent from the Macaulay
    // kernel at degree T + 1: at each degree the pivot rows of the
    // elimination are exactly the functionals cutting out the slice just
    // computed, and they feed the next step.
    long saturated_dim(long k) {
        if (k > T() + 1) return dim_jacobian_ideal(k);
        if (satprof_.empty()) build_saturation_profile();
        return satprof_[static_cast<std::size_t>(k)];
    }

    // Total Tjurina number: the stable value of dim (S/J_f)_t, reached for
    // t > T.  In that range S/J_f and S/I_f agree degreewise, and the Hilbert
    // function of S/I_f is nondecreasing with a repeat only at its stable
    // value, so marching until two consecutive degrees agree is exact.
    long total_tjurina() {
        if (tau_) return *tau_;
        const long start = T() + 1;
        const long cap = T() + (d_ - 1) * (d_ - 1) + 2;
        prime_jacobian_dims({start, start + 1});
        long prev = dim_module(start);
        for (long t = start + 1;; ++t) {
            if (t > cap)
                throw NotStabilized("dim (S/J)_t did not stabilize by degree " +
                                    std::to_string(cap));
            const long cur = dim_module(t);
            if (cur == prev) {
                tau_ = prev;
                tau_stable_from_ = t - 1;
                return prev;
            }
            prev = cur;
        }
    }

    // First degree at which dim (S/J_f)_t was observed at its stable value.
    long tjurina_stable_degree() {
        total_tjurina();
        return tau_stable_from_;
    }

    // First k at which the Hilbert function of S/I_f reaches its stable value
    // (the total Tjurina number); set by build_table.
    std::optional<long> saturation_onset() const { return onset_; }
    void set_saturation_onset(long k) { onset_ = k; }

    // dim (S/J_f)_t for t > T with a certified modular shortcut: in this
    // range dim (J_f)_t = dim S_t - tau, so a modular rank reaching that
    // bound proves the rational rank (modular rank can only undershoot).
    // Falls back to an exact rational rank when no prime certifies.
    long dim_module_high(long t) {
        const long tau = total_tjurina();
        if (dimJ_.count(t)) return dim_module(t);
        if (tau > 0 && onset_ && t >= *onset_ && t > T()) {
            const long ub = dim_forms(t) - tau;
            for (std::uint64_t p : default_primes) {
                if (rank_sparse_mod_p(macaulay_rows(t), p, ub) == ub) {
                    dimJ_.emplace(t, ub);
                    return tau;
                }
            }
        }
        return dim_module(t);
    }

  private:
    // Fills satprof_[k] = dim (I_f)_k for k = 0..T+1 by the descent described
    // at saturated_dim.  lam holds integer functionals on S_{k+1} whose
    // common kernel is exactly (I_f)_{k+1}; the constraint matrix for degree
    // k has one row per (functional, variable) pair, g |-> lam(v * g).
    void build_saturation_profile() {
        const long top = T() + 1;
        std::vector<SparseRowZ> lam;
        for (const auto& kappa : jacobian_annihilator(top)) {
            std::vector<std::pair<std::int32_t, Rat>> row;
            for (std::size_t j = 0; j < kappa.size(); ++j)
                if (kappa[j] != 0) row.emplace_back(static_cast<std::int32_t>(j), kappa[j]);
            lam.push_back(row_from_rat(row));
        }
        satprof_.assign(static_cast<std::size_t>(top + 1), 0);
        satprof_[static_cast<std::size_t>(top)] =
            dim_forms(top) - static_cast<long>(lam.size());
        for (long k = top - 1; k >= 0; --k) {
            const auto ms = monomials_of_degree(k + 1);
            SparseEliminatorZ el;
            for (const auto& l : lam) {
                for (int v = 0; v < 3; ++v) {
                    // The monomial order compares exponent tuples, so shifting
                    // every entry down by the same variable keeps rows sorted.
                    SparseRowZ row;
                    row.reserve(l.size());
                    for (const auto& e : l) {
                        Exp3 m = ms[static_cast<std::size_t>(e.first)];
                        if (m[static_cast<std::size_t>(v)] == 0) continue;
                        --m[static_cast<std::size_t>(v)];
                        row.emplace_back(static_cast<std::int32_t>(index_in_degree(m, k)),
                                         e.second);
                    }
                    el.add_row(std::move(row));
                }
            }
            satprof_[static_cast<std::size_t>(k)] = dim_forms(k) - el.rank();
            lam.clear();
            for (const auto& pr : el.pivot_rows()) lam.push_back(pr.second);
        }
    }

    HomogeneousPoly f_;
    long d_;
    std::array<std::vector<std::pair<Exp3, Rat>>, 3> partials_;
    std::map<long, long> dimJ_;
    std::vector<long> satprof_;
    std::map<long, std::vector<std::vector<Rat>>> macker_;
    std::optional<long> tau_;
    long tau_stable_from_ = 0;
    std::optional<long> onset_;
};

// Graded dimension tables of M(f) = S/J_f and N(f) = I_f/J_f over 0..T,
// with the summary invariants read off the table.
struct JacobianModuleTable {
    long d = 0;
    long T = 0;
    long tau = 0;
    std::vector<long> dims_M;    // dim (S/J_f)_k,  k = 0..T
    std::vector<long> dims_N;    // dim (I_f/J_f)_k, k = 0..T
    long nu = 0;                 // max of dims_N
    std::optional<long> sigma;   // min k with dims_N[k] != 0 (absent when N(f) = 0)
};

inline JacobianModuleTable jacobian_module_table(CurveData& cd) {
    JacobianModuleTable tb;
    tb.d = cd.degree();
    tb.T = cd.T();
    tb.tau = cd.total_tjurina();

    std::vector<long> degs;
    for (long k = 0; k <= tb.T; ++k) degs.push_back(k);
    cd.prime_jacobian_dims(degs);
    tb.dims_M.resize(static_cast<std::size_t>(tb.T + 1));
    for (long k = 0; k <= tb.T; ++k) tb.dims_M[static_cast<std::size_t>(k)] = cd.dim_module(k);

    tb.dims_N.resize(static_cast<std::size_t>(tb.T + 1));
    if (tb.tau == 0) {
        // Smooth curve: J_f is a complete intersection primary to the
        // irrelevant ideal, so I_f = S and N(f)_k = (S/J_f)_k.
        tb.dims_N = tb.dims_M;
        cd.set_saturation_onset(0);
    } else {
        long prev_hf = 0;
        long onset = -1;
        for (long k = 0; k <= tb.T; ++k) {
            const long dim_i = cd.saturated_dim(k);
            const long hf = dim_forms(k) - dim_i;
            if (hf < prev_hf || hf > tb.tau)
                throw InconsistentProfile(
                    "Hilbert function of S/I reaches " + std::to_string(hf) +
                    " at degree " + std::to_string(k) + " against a total Tjurina number of " +
                    std::to_string(tb.tau));
            prev_hf = hf;
            if (onset < 0 && hf == tb.tau) onset = k;
            const long n = dim_i - cd.dim_jacobian_ideal(k);
            if (n < 0)
                throw InconsistentProfile("negative dim N(f)_" + std::to_string(k));
            tb.dims_N[static_cast<std::size_t>(k)] = n;
        }
        cd.set_saturation_onset(onset >= 0 ? onset : cd.tjurina_stable_degree());
    }

    for (long a = 0; a <= tb.T; ++a) {
        const long na = tb.dims_N[static_cast<std::size_t>(a)];
        const long nb = tb.dims_N[static_cast<std::size_t>(tb.T - a)];
        if (na != nb)
            throw SymmetryViolation("dim N(f)_" + std::to_string(a) + " = " +
                                    std::to_string(na) + " but dim N(f)_" +
                                    std::to_string(tb.T - a) + " = " + std::to_string(nb));
    }
    for (long a = 1; a <= tb.T / 2; ++a) {
        if (tb.dims_N[static_cast<std::size_t>(a)] < tb.dims_N[static_cast<std::size_t>(a - 1)])
            throw UnimodalityViolation("dim N(f) drops from " +
                                       std::to_string(tb.dims_N[static_cast<std::size_t>(a - 1)]) +
                                       " to " +
                                       std::to_string(tb.dims_N[static_cast<std::size_t>(a)]) +
                                       " at degree " + std::to_string(a));
    }

    for (long k = 0; k <= tb.T; ++k) {
        const long n = tb.dims_N[static_cast<std::size_t>(k)];
        if (n > tb.nu) tb.nu = n;
        if (n != 0 && !tb.sigma) tb.sigma = k;
    }
    return tb;
}

// --- convenience wrappers on a bare polynomial ---
inline long dim_jacobian_ideal(const HomogeneousPoly& f, long t) {
    CurveData cd(f);
    return cd.dim_jacobian_ideal(t);
}

inline long saturation_dims(const HomogeneousPoly& f, long k) {
    CurveData cd(f);
    return cd.saturated_dim(k);
}

inline long total_tjurina(const HomogeneousPoly& f) {
    CurveData cd(f);
    return cd.total_tjurina();
}

inline JacobianModuleTable jacobian_module_table(const HomogeneousPoly& f) {
    CurveData cd(f);
    return jacobian_module_table(cd);
}

} // namespace syzcurve
