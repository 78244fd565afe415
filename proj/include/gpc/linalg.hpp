#pragma once

#include "gpc/eigen_support.hpp"

#include <optional>
#include <vector>

namespace gpc {

// Exact Gaussian elimination over the rationals. Spans are stored as matrices
// whose rows are the spanning vectors; the reduced row echelon form is a
// canonical basis of the row space, so two spans are equal iff their rref
// matrices (zero rows dropped) are identical.

/// Reduce A in place; returns the pivot column of each nonzero row.
inline std::vector<Index> rref_inplace(RMat& a) {
    std::vector<Index> pivots;
    Index row = 0;
    for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
        Index p = -1;
        for (Index r = row; r < a.rows(); ++r)
            if (!a(r, col).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        a.row(row).swap(a.row(p));
        Rational inv = Rational(1) / a(row, col);
        for (Index c = 0; c < a.cols(); ++c) a(row, c) *= inv;
        for (Index r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            Rational f = a(r, col);
            for (Index c = 0; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline Index rank(RMat a) { return static_cast<Index>(rref_inplace(a).size()); }

/// Canonical basis (rref rows) of the row space of A.
inline RMat row_space_basis(RMat a) {
    auto pivots = rref_inplace(a);
    RMat out(static_cast<Index>(pivots.size()), a.cols());
    for (Index r = 0; r < out.rows(); ++r) out.row(r) = a.row(r);
    return out;
}

inline bool span_equal(const RMat& a, const RMat& b) {
    return same(row_space_basis(a), row_space_basis(b));
}

/// Residual of v after reduction against the rows of span; zero iff v lies in
/// the row space.
inline RVec span_residual(const RMat& span, const RVec& v) {
    RMat basis = row_space_basis(span);
    std::vector<Index> pivots;
    for (Index r = 0; r < basis.rows(); ++r)
        for (Index c = 0; c < basis.cols(); ++c)
            if (basis(r, c).is_one()) {
                bool leading = true;
                for (Index cc = 0; cc < c; ++cc)
                    if (!basis(r, cc).is_zero()) leading = false;
                if (leading) {
                    pivots.push_back(c);
                    break;
                }
            }
    RVec res = v;
    for (Index r = 0; r < basis.rows(); ++r) {
        Rational f = res(pivots[static_cast<size_t>(r)]);
        if (f.is_zero()) continue;
        for (Index c = 0; c < basis.cols(); ++c) res(c) -= f * basis(r, c);
    }
    return res;
}

inline bool in_span(const RMat& span, const RVec& v) { return is_zero(RVec(span_residual(span, v))); }

/// Basis of { x : A x = 0 }, one kernel vector per column of the result.
inline RMat kernel_basis(RMat a) {
    const Index n = a.cols();
    auto pivots = rref_inplace(a);
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (Index p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<Index> free_cols;
    for (Index c = 0; c < n; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
    RMat out = RMat::Zero(n, static_cast<Index>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        out(free_cols[k], static_cast<Index>(k)) = Rational(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            out(pivots[r], static_cast<Index>(k)) = -a(static_cast<Index>(r), free_cols[k]);
    }
    return out;
}

} // namespace gpc
