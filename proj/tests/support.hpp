#pragma once

// Shared helpers for the unit-test suite.  The rank oracle here is an
// independent dense rational Gaussian elimination, deliberately written
// without reusing the library's elimination code so that the two can
// cross-check each other.

#include <vector>

#include "syzcurve/matrix.hpp"
#include "syzcurve/parse.hpp"
#include "syzcurve/poly.hpp"
#include "syzcurve/rational.hpp"

namespace testsupport {

using syzcurve::HomogeneousPoly;
using syzcurve::Rat;
using syzcurve::SparseRowZ;

inline std::vector<std::vector<Rat>> dense_from_sparse(const std::vector<SparseRowZ>& rows,
                                                       int ncols) {
    std::vector<std::vector<Rat>> out(rows.size(), std::vector<Rat>(ncols, Rat(0)));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (const auto& [col, val] : rows[i]) {
            out[i][static_cast<std::size_t>(col)] = Rat(val);
        }
    }
    return out;
}

// Plain fraction Gaussian elimination over the rationals.
inline long naive_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    const std::size_t ncols = m[0].size();
    long rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        const Rat inv = Rat(1) / m[row][col];
        for (std::size_t j = col; j < ncols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rat factor = m[i][col];
            for (std::size_t j = col; j < ncols; ++j) m[i][j] -= factor * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

inline long naive_rank_sparse(const std::vector<SparseRowZ>& rows, int ncols) {
    return naive_rank(dense_from_sparse(rows, ncols));
}

// Multiply a sparse integer matrix by a rational vector.
inline std::vector<Rat> apply_rows(const std::vector<SparseRowZ>& rows,
                                   const std::vector<Rat>& v) {
    std::vector<Rat> out(rows.size(), Rat(0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (const auto& [col, val] : rows[i]) {
            out[i] += Rat(val) * v[static_cast<std::size_t>(col)];
        }
    }
    return out;
}

inline HomogeneousPoly curve(const std::string& text) { return syzcurve::parse_curve(text); }

}  // namespace testsupport
