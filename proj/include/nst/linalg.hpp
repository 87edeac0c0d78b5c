#pragma once

// Exact linear algebra over the integers / rationals: reduced row echelon
// form, rank, kernel bases, and Smith normal form.  Everything is dense and
// exact; these run on matching systems and chain complexes, which are small.

#include "nst/arith.hpp"

#include <vector>

namespace nst {

/// In-place reduced row echelon form with pivot columns scanned left to
/// right (fixed pivot order).  Returns the pivot columns.
inline std::vector<int> rowReduce(RatMat& m) {
    std::vector<int> pivots;
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index sel = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (m(i, c) != 0) { sel = i; break; }
        if (sel < 0) continue;
        m.row(sel).swap(m.row(r));
        Rational inv = m(r, c);
        for (Eigen::Index j = c; j < cols; ++j) m(r, j) /= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

inline RatMat toRat(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

inline RatVec toRat(const IntVec& v) {
    RatVec r(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

inline int rankOf(const IntMat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    RatMat r = toRat(m);
    return static_cast<int>(rowReduce(r).size());
}

/// Rank of the matrix restricted to the given columns.
inline int rankOfColumns(const IntMat& m, const std::vector<int>& cols) {
    if (m.rows() == 0 || cols.empty()) return 0;
    RatMat r(m.rows(), static_cast<Eigen::Index>(cols.size()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) r(i, static_cast<Eigen::Index>(j)) = Rational(m(i, cols[j]));
    return static_cast<int>(rowReduce(r).size());
}

/// Canonical representative of v modulo the row space of `rows`: subtract
/// the RREF pivots.  The result evaluates identically on the kernel.
inline RatVec reduceModuloRows(const IntMat& rows, const IntVec& v) {
    RatVec x = toRat(v);
    if (rows.rows() == 0) return x;
    RatMat r = toRat(rows);
    std::vector<int> pivots = rowReduce(r);
    for (size_t k = 0; k < pivots.size(); ++k) {
        int c = pivots[k];
        if (x[c] == 0) continue;
        Rational f = x[c];
        for (Eigen::Index j = 0; j < x.size(); ++j) x[j] -= f * r(static_cast<Eigen::Index>(k), j);
    }
    return x;
}

/// Basis of the rational kernel of Ax = 0, as primitive integer vectors
/// (one per free column, in increasing free-column order).
inline std::vector<IntVec> kernelBasis(const IntMat& a) {
    const Eigen::Index cols = a.cols();
    RatMat r = toRat(a);
    std::vector<int> pivots = rowReduce(r);
    std::vector<bool> isPivot(cols, false);
    for (int c : pivots) isPivot[c] = true;
    std::vector<IntVec> basis;
    for (Eigen::Index free = 0; free < cols; ++free) {
        if (isPivot[free]) continue;
        RatVec v = RatVec::Zero(cols);
        v[free] = 1;
        for (size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -r(static_cast<Eigen::Index>(k), free);
        basis.push_back(ratToPrimitiveInt(v));
    }
    return basis;
}

/// Smith normal form diagonal of an integer matrix (non-negative invariant
/// factors d1 | d2 | ...; zeros trimmed).  Destroys its argument.
std::vector<Integer> smithInvariantFactors(IntMat m);

/// Solve A x = b over the integers; returns false when no integer solution
/// exists.  Used for expressing cycles in homology bases.
bool solveIntegerSystem(const IntMat& a, const IntVec& b, IntVec& solution);

} // namespace nst
