#include "nst/linalg.hpp"

#include <cstdlib>

namespace nst {

namespace {

// Locate a nonzero entry of minimal absolute value in the submatrix
// starting at (r, r).  Returns false when the submatrix is zero.
bool findPivot(const IntMat& m, Eigen::Index r, Eigen::Index& pi, Eigen::Index& pj) {
    bool found = false;
    Integer best = 0;
    for (Eigen::Index i = r; i < m.rows(); ++i)
        for (Eigen::Index j = r; j < m.cols(); ++j) {
            if (m(i, j) == 0) continue;
            Integer a = boost::multiprecision::abs(m(i, j));
            if (!found || a < best) {
                best = a;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

} // namespace

std::vector<Integer> smithInvariantFactors(IntMat m) {
    std::vector<Integer> diag;
    Eigen::Index r = 0;
    const Eigen::Index n = std::min(m.rows(), m.cols());
    while (r < n) {
        Eigen::Index pi, pj;
        if (!findPivot(m, r, pi, pj)) break;
        m.row(pi).swap(m.row(r));
        m.col(pj).swap(m.col(r));
        // clear row and column r
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (Eigen::Index i = r + 1; i < m.rows(); ++i) {
                if (m(i, r) == 0) continue;
                Integer q = m(i, r) / m(r, r);
                if (q != 0)
                    for (Eigen::Index j = r; j < m.cols(); ++j) m(i, j) -= q * m(r, j);
                if (m(i, r) != 0) {
                    // remainder smaller than pivot: swap up and retry
                    m.row(i).swap(m.row(r));
                    dirty = true;
                }
            }
            for (Eigen::Index j = r + 1; j < m.cols(); ++j) {
                if (m(r, j) == 0) continue;
                Integer q = m(r, j) / m(r, r);
                if (q != 0)
                    for (Eigen::Index i = r; i < m.rows(); ++i) m(i, j) -= q * m(i, r);
                if (m(r, j) != 0) {
                    m.col(j).swap(m.col(r));
                    dirty = true;
                }
            }
        }
        // divisibility fix-up: pivot must divide every later entry
        bool restart = false;
        for (Eigen::Index i = r + 1; i < m.rows() && !restart; ++i)
            for (Eigen::Index j = r + 1; j < m.cols() && !restart; ++j) {
                if (m(i, j) % m(r, r) != 0) {
                    for (Eigen::Index jj = r; jj < m.cols(); ++jj) m(r, jj) += m(i, jj);
                    restart = true;
                }
            }
        if (restart) continue;
        diag.push_back(boost::multiprecision::abs(m(r, r)));
        ++r;
    }
    return diag;
}

bool solveIntegerSystem(const IntMat& a, const IntVec& b, IntVec& solution) {
    // Hermite-style elimination on the augmented system using rational RREF
    // followed by an integrality check is not sufficient for Z-solvability;
    // go through the Smith decomposition with explicit transforms.
    const Eigen::Index rows = a.rows(), cols = a.cols();
    IntMat m = a;
    IntMat left = IntMat::Identity(rows, rows);
    IntMat right = IntMat::Identity(cols, cols);

    Eigen::Index r = 0;
    const Eigen::Index n = std::min(rows, cols);
    while (r < n) {
        Eigen::Index pi, pj;
        bool found = false;
        Integer best = 0;
        for (Eigen::Index i = r; i < rows; ++i)
            for (Eigen::Index j = r; j < cols; ++j) {
                if (m(i, j) == 0) continue;
                Integer v = boost::multiprecision::abs(m(i, j));
                if (!found || v < best) { best = v; pi = i; pj = j; found = true; }
            }
        if (!found) break;
        m.row(pi).swap(m.row(r)); left.row(pi).swap(left.row(r));
        m.col(pj).swap(m.col(r)); right.col(pj).swap(right.col(r));
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (Eigen::Index i = r + 1; i < rows; ++i) {
                if (m(i, r) == 0) continue;
                Integer q = m(i, r) / m(r, r);
                if (q != 0) {
                    m.row(i) -= (m.row(r) * q).eval();
                    left.row(i) -= (left.row(r) * q).eval();
                }
                if (m(i, r) != 0) {
                    m.row(i).swap(m.row(r));
                    left.row(i).swap(left.row(r));
                    dirty = true;
                }
            }
            for (Eigen::Index j = r + 1; j < cols; ++j) {
                if (m(r, j) == 0) continue;
                Integer q = m(r, j) / m(r, r);
                if (q != 0) {
                    m.col(j) -= (m.col(r) * q).eval();
                    right.col(j) -= (right.col(r) * q).eval();
                }
                if (m(r, j) != 0) {
                    m.col(j).swap(m.col(r));
                    right.col(j).swap(right.col(r));
                    dirty = true;
                }
            }
        }
        ++r;
    }
    // m = left * a * right is diagonal with r nonzero entries.
    IntVec c = left * b;
    IntVec y = IntVec::Zero(cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        if (i < r) {
            if (c[i] % m(i, i) != 0) return false;
            y[i] = c[i] / m(i, i);
        } else if (c[i] != 0) {
            return false;
        }
    }
    solution = right * y;
    return true;
}

} // namespace nst
