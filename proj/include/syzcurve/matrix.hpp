#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "syzcurve/errors.hpp"
#include "syzcurve/modular.hpp"
#include "syzcurve/rational.hpp"

namespace syzcurve {

// Rows are kept sparse internally: sorted (column, value) pairs with integer
// entries.  Row operations preserve the row space and the kernel, so ranks
// and kernels computed here agree with the dense rational matrix they came
// from.  The public Matrix type below stays dense.
using SparseRowZ = std::vector<std::pair<std::int32_t, Int>>;

// Divide out the gcd of the entries and make the leading entry positive.
inline void strip_content(SparseRowZ& r) {
    if (r.empty()) return;
    Int g = 0;
    for (const auto& e : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
        if (g == 1) break;
    }
    if (r.front().second < 0) g = -g;
    if (g == 1) return;
    for (auto& e : r) e.second /= g;
}

// Clear denominators of a sparse rational row (entries sorted by column).
inline SparseRowZ row_from_rat(const std::vector<std::pair<std::int32_t, Rat>>& row) {
    Int l = 1;
    for (const auto& e : row) {
        Int d = e.second.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        l = l / g * d;
    }
    SparseRowZ out;
    out.reserve(row.size());
    for (const auto& e : row) {
        Int v = e.second.get_num() * (l / e.second.get_den());
        if (v != 0) out.emplace_back(e.first, std::move(v));
    }
    strip_content(out);
    return out;
}

// Incremental fraction-free Gaussian elimination.  Pivot rows are indexed by
// their leading column; feeding rows in a fixed order makes the result
// deterministic.  Content is stripped after every combination to keep entry
// growth in check.
class SparseEliminatorZ {
  public:
    // Returns true when the row was independent of the rows seen so far.
    bool add_row(SparseRowZ r) {
        strip_content(r);
        while (!r.empty()) {
            auto it = pivots_.find(r.front().first);
            if (it == pivots_.end()) {
                pivots_.emplace(r.front().first, std::move(r));
                return true;
            }
            const SparseRowZ& p = it->second;
            const Int a = p.front().second; // positive by normalization
            const Int c = r.front().second;
            SparseRowZ out;
            out.reserve(r.size() + p.size());
            std::size_t i = 0, j = 0;
            while (i < r.size() || j < p.size()) {
                if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
                    out.emplace_back(r[i].first, a * r[i].second);
                    ++i;
                } else if (i == r.size() || p[j].first < r[i].first) {
                    out.emplace_back(p[j].first, -c * p[j].second);
                    ++j;
                } else {
                    Int v = a * r[i].second - c * p[j].second;
                    if (v != 0) out.emplace_back(r[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            strip_content(out);
            r = std::move(out);
        }
        return false;
    }

    long rank() const { return static_cast<long>(pivots_.size()); }

    const std::map<std::int32_t, SparseRowZ>& pivot_rows() const { return pivots_; }

  private:
    std::map<std::int32_t, SparseRowZ> pivots_;
};

inline long rank_sparse(std::vector<SparseRowZ> rows, long max_rank = -1) {
    SparseEliminatorZ el;
    for (auto& r : rows) {
        el.add_row(std::move(r));
        if (max_rank >= 0 && el.rank() == max_rank) break;
    }
    return el.rank();
}

// Canonical kernel basis of the matrix with the given rows (equations) and
// ncols unknowns: reduced row echelon form, then one vector per free column
// (ascending), with a 1 in the free column.
inline std::vector<std::vector<Rat>> kernel_sparse(std::vector<SparseRowZ> rows, long ncols) {
    SparseEliminatorZ el;
    for (auto& r : rows) el.add_row(std::move(r));

    std::vector<std::int32_t> pcols;
    std::vector<std::map<std::int32_t, Rat>> rr; // ascending pivot column, pivot scaled to 1
    pcols.reserve(el.pivot_rows().size());
    rr.reserve(el.pivot_rows().size());
    for (const auto& pr : el.pivot_rows()) {
        pcols.push_back(pr.first);
        std::map<std::int32_t, Rat> m;
        Rat lead(pr.second.front().second);
        for (const auto& e : pr.second) {
            Rat q(e.second);
            q /= lead;
            m.emplace(e.first, std::move(q));
        }
        rr.push_back(std::move(m));
    }

    for (long i = static_cast<long>(rr.size()) - 2; i >= 0; --i) {
        auto& row = rr[i];
        for (std::size_t j = i + 1; j < rr.size(); ++j) {
            auto it = row.find(pcols[j]);
            if (it == row.end()) continue;
            Rat v = it->second;
            if (v == 0) continue;
            for (const auto& e : rr[j]) {
                auto pos = row.find(e.first);
                if (pos == row.end()) {
                    row.emplace(e.first, -v * e.second);
                } else {
                    pos->second -= v * e.second;
                    if (pos->second == 0) row.erase(pos);
                }
            }
        }
    }

    std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
    for (auto c : pcols) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::int32_t fc = 0; fc < ncols; ++fc) {
        if (is_pivot[static_cast<std::size_t>(fc)]) continue;
        std::vector<Rat> v(static_cast<std::size_t>(ncols), Rat(0));
        v[static_cast<std::size_t>(fc)] = 1;
        for (std::size_t i = 0; i < rr.size(); ++i) {
            auto it = rr[i].find(fc);
            if (it != rr[i].end()) v[static_cast<std::size_t>(pcols[i])] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// --- modular rank (sparse, prime < 2^31) ---
using SparseRowP = std::vector<std::pair<std::int32_t, std::uint64_t>>;

class SparseEliminatorP {
  public:
    explicit SparseEliminatorP(std::uint64_t p) : p_(p) {}

    bool add_row(SparseRowP r) {
        while (!r.empty()) {
            auto it = pivots_.find(r.front().first);
            if (it == pivots_.end()) {
                // normalize pivot to 1
                std::uint64_t inv = modp::inv(r.front().second, p_);
                for (auto& e : r) e.second = modp::mul(e.second, inv, p_);
                pivots_.emplace(r.front().first, std::move(r));
                return true;
            }
            const SparseRowP& p = it->second;
            const std::uint64_t c = r.front().second;
            SparseRowP out;
            out.reserve(r.size() + p.size());
            std::size_t i = 0, j = 0;
            while (i < r.size() || j < p.size()) {
                if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
                    out.push_back(r[i]);
                    ++i;
                } else if (i == r.size() || p[j].first < r[i].first) {
                    out.emplace_back(p[j].first, modp::sub(0, modp::mul(c, p[j].second, p_), p_));
                    ++j;
                } else {
                    std::uint64_t v = modp::sub(r[i].second, modp::mul(c, p[j].second, p_), p_);
                    if (v != 0) out.emplace_back(r[i].first, v);
                    ++i;
                    ++j;
                }
            }
            r = std::move(out);
        }
        return false;
    }

    long rank() const { return static_cast<long>(pivots_.size()); }

  private:
    std::uint64_t p_;
    std::map<std::int32_t, SparseRowP> pivots_;
};

inline SparseRowP reduce_row_mod_p(const SparseRowZ& r, std::uint64_t p) {
    SparseRowP out;
    out.reserve(r.size());
    for (const auto& e : r) {
        std::uint64_t v = modp::from_int(e.second, p);
        if (v != 0) out.emplace_back(e.first, v);
    }
    return out;
}

inline long rank_sparse_mod_p(const std::vector<SparseRowZ>& rows, std::uint64_t p,
                              long max_rank = -1) {
    SparseEliminatorP el(p);
    for (const auto& r : rows) {
        el.add_row(reduce_row_mod_p(r, p));
        if (max_rank >= 0 && el.rank() == max_rank) break;
    }
    return el.rank();
}

// Dense matrix over the rationals.  This is the exposed linear-algebra type;
// the sparse machinery above is an implementation detail of the engine.
class Matrix {
  public:
    Matrix(long nrows, long ncols)
        : nr_(nrows), nc_(ncols),
          a_(static_cast<std::size_t>(nrows),
             std::vector<Rat>(static_cast<std::size_t>(ncols), Rat(0))) {}

    static Matrix from_rows(std::vector<std::vector<Rat>> rows) {
        Matrix m(0, 0);
        m.nr_ = static_cast<long>(rows.size());
        m.nc_ = rows.empty() ? 0 : static_cast<long>(rows.front().size());
        m.a_ = std::move(rows);
        return m;
    }

    long nrows() const { return nr_; }
    long ncols() const { return nc_; }

    const Rat& at(long i, long j) const {
        return a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    void set(long i, long j, const Rat& v) {
        a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    }

    std::vector<SparseRowZ> sparse_rows() const {
        std::vector<SparseRowZ> rows;
        rows.reserve(a_.size());
        for (const auto& dr : a_) {
            std::vector<std::pair<std::int32_t, Rat>> sr;
            for (std::size_t j = 0; j < dr.size(); ++j)
                if (dr[j] != 0) sr.emplace_back(static_cast<std::int32_t>(j), dr[j]);
            rows.push_back(row_from_rat(sr));
        }
        return rows;
    }

    long rank() const { return rank_sparse(sparse_rows()); }

    // Rank of the entrywise reduction mod p; BadPrime when a denominator
    // vanishes mod p.
    long rank_mod_p(std::uint64_t p) const {
        SparseEliminatorP el(p);
        for (const auto& dr : a_) {
            SparseRowP r;
            for (std::size_t j = 0; j < dr.size(); ++j) {
                if (dr[j] == 0) continue;
                std::uint64_t v = modp::from_rat(dr[j], p);
                if (v != 0) r.emplace_back(static_cast<std::int32_t>(j), v);
            }
            el.add_row(std::move(r));
        }
        return el.rank();
    }

    // Canonical basis of {x : A x = 0}.
    std::vector<std::vector<Rat>> kernel_basis() const {
        return kernel_sparse(sparse_rows(), nc_);
    }

  private:
    long nr_, nc_;
    std::vector<std::vector<Rat>> a_;
};

} // namespace syzcurve
