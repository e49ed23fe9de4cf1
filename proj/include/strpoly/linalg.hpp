// Exact Gaussian elimination over a field scalar (Rational in practice).
//
// Eigen's decompositions rely on pivot thresholds that only make sense for
// floating point; these routines never compare against anything but zero.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "strpoly/types.hpp"

namespace strpoly::linalg {

/// Reduces `m` in place to reduced row echelon form and returns the pivot columns.
template <typename Scalar>
std::vector<Index> rref(Matrix<Scalar>& m)
{
    std::vector<Index> pivots;
    Index row = 0;
    for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Index sel = -1;
        for (Index r = row; r < m.rows(); ++r)
            if (m(r, col) != 0) {
                sel = r;
                break;
            }
        if (sel < 0)
            continue;
        if (sel != row)
            m.row(sel).swap(m.row(row));
        const Scalar inv = Scalar(1) / m(row, col);
        for (Index c = col; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (Index r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0)
                continue;
            const Scalar f = m(r, col);
            for (Index c = col; c < m.cols(); ++c)
                if (m(row, c) != 0)
                    m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <typename Scalar>
Index rank(Matrix<Scalar> m)
{
    return static_cast<Index>(rref(m).size());
}

/// Basis of the right null space, one vector per column.
template <typename Scalar>
Matrix<Scalar> nullspace(Matrix<Scalar> m)
{
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (Index p : pivots)
        is_pivot[static_cast<std::size_t>(p)] = true;
    Matrix<Scalar> basis(m.cols(), m.cols() - static_cast<Index>(pivots.size()));
    basis.setZero();
    Index out = 0;
    for (Index free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)])
            continue;
        basis(free, out) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            basis(pivots[r], out) = -m(static_cast<Index>(r), free);
        ++out;
    }
    return basis;
}

/// Unique solution of a square system, or nullopt when singular.
template <typename Scalar>
std::optional<Vector<Scalar>> solve(const Matrix<Scalar>& a, const Vector<Scalar>& b)
{
    Matrix<Scalar> aug(a.rows(), a.cols() + 1);
    aug << a, b;
    const auto pivots = rref(aug);
    if (static_cast<Index>(pivots.size()) != a.cols() || a.rows() != a.cols())
        return std::nullopt;
    return Vector<Scalar>(aug.col(a.cols()));
}

/// Affine rank (dimension of the affine hull) of a point set.
template <typename Scalar>
Index affine_rank(const std::vector<Vector<Scalar>>& points)
{
    if (points.empty())
        return -1;
    Matrix<Scalar> diffs(static_cast<Index>(points.size()) - 1, points.front().size());
    for (std::size_t i = 1; i < points.size(); ++i)
        diffs.row(static_cast<Index>(i) - 1) = (points[i] - points.front()).transpose();
    return diffs.rows() == 0 ? 0 : rank(diffs);
}

}  // namespace strpoly::linalg
