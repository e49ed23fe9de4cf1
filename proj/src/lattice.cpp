#include "strpoly/algebra/lattice.hpp"

#include <algorithm>
#include <limits>

namespace strpoly {

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;  // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        q -= 1;
    return q;
}

namespace {

void row_axpy(MatrixZ& m, Index dst, Index src, const Integer& f)
{
    if (f == 0)
        return;
    for (Index c = 0; c < m.cols(); ++c)
        if (m(src, c) != 0)
            m(dst, c) -= f * m(src, c);
}

// Echelonizes the first `ncols` columns with unimodular row operations applied
// to whole rows. Returns the pivot columns; rows [pivots.size(), rows) end up
// zero in those columns.
std::vector<Index> echelonize(MatrixZ& m, Index ncols)
{
    std::vector<Index> pivots;
    Index row = 0;
    for (Index col = 0; col < ncols && row < m.rows(); ++col) {
        for (;;) {
            Index best = -1;
            for (Index r = row; r < m.rows(); ++r)
                if (m(r, col) != 0 && (best < 0 || abs(m(r, col)) < abs(m(best, col))))
                    best = r;
            if (best < 0)
                break;
            if (best != row)
                m.row(best).swap(m.row(row));
            if (m(row, col) < 0)
                m.row(row) = -m.row(row);
            bool clean = true;
            for (Index r = row + 1; r < m.rows(); ++r) {
                if (m(r, col) == 0)
                    continue;
                row_axpy(m, r, row, floor_div(m(r, col), m(row, col)));
                if (m(r, col) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (row >= m.rows() || m(row, col) == 0)
            continue;
        for (Index r = 0; r < row; ++r)
            row_axpy(m, r, row, floor_div(m(r, col), m(row, col)));
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

EchelonForm hermite_normal_form(MatrixZ m)
{
    const auto pivots = echelonize(m, m.cols());
    EchelonForm out;
    out.pivots = pivots;
    out.rows = m.topRows(static_cast<Index>(pivots.size()));
    return out;
}

std::vector<Integer> smith_invariants(MatrixZ a)
{
    std::vector<Integer> out;
    const Index lim = std::min(a.rows(), a.cols());
    for (Index t = 0; t < lim; ++t) {
        bool exhausted = false;
        for (;;) {
            Index br = -1, bc = -1;
            for (Index r = t; r < a.rows(); ++r)
                for (Index c = t; c < a.cols(); ++c)
                    if (a(r, c) != 0 && (br < 0 || abs(a(r, c)) < abs(a(br, bc)))) {
                        br = r;
                        bc = c;
                    }
            if (br < 0) {
                exhausted = true;
                break;
            }
            a.row(br).swap(a.row(t));
            a.col(bc).swap(a.col(t));
            bool clean = true;
            for (Index r = t + 1; r < a.rows(); ++r) {
                const Integer q = floor_div(a(r, t), a(t, t));
                row_axpy(a, r, t, q);
                if (a(r, t) != 0)
                    clean = false;
            }
            for (Index c = t + 1; c < a.cols(); ++c) {
                const Integer q = floor_div(a(t, c), a(t, t));
                if (q != 0)
                    for (Index r = 0; r < a.rows(); ++r)
                        a(r, c) -= q * a(r, t);
                if (a(t, c) != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // divisibility: fold an offending row into row t and retry
            Index bad = -1;
            for (Index r = t + 1; r < a.rows() && bad < 0; ++r)
                for (Index c = t + 1; c < a.cols(); ++c)
                    if (a(r, c) % a(t, t) != 0) {
                        bad = r;
                        break;
                    }
            if (bad < 0)
                break;
            row_axpy(a, t, bad, Integer(-1));
        }
        if (exhausted)
            break;
        out.push_back(abs(a(t, t)));
    }
    return out;
}

MatrixZ integer_kernel(const MatrixZ& m)
{
    const Index r = m.cols();
    MatrixZ aug(r, m.rows() + r);
    aug.leftCols(m.rows()) = m.transpose();
    aug.rightCols(r) = MatrixZ::Identity(r, r);
    const auto pivots = echelonize(aug, m.rows());
    const Index rank = static_cast<Index>(pivots.size());
    MatrixZ basis = aug.bottomRows(r - rank).rightCols(r).transpose();
    // tidy the basis so results are stable across runs
    MatrixZ t = basis.transpose();
    const auto h = hermite_normal_form(t);
    return h.rows.transpose();
}

IntegerLattice::IntegerLattice(std::size_t dim, const std::vector<IntVec>& generators)
    : dim_(dim), generators_(generators)
{
    MatrixZ g(static_cast<Index>(generators.size()), static_cast<Index>(dim));
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].size() != dim)
            throw InvalidInput("lattice generator has wrong dimension");
        for (std::size_t j = 0; j < dim; ++j)
            g(static_cast<Index>(i), static_cast<Index>(j)) = generators[i][j];
    }
    hnf_ = hermite_normal_form(std::move(g));
}

IntVec IntegerLattice::reduce(const IntVec& v) const
{
    if (v.size() != dim_)
        throw InvalidInput("vector has wrong dimension for lattice");
    VectorZ w(static_cast<Index>(dim_));
    for (std::size_t j = 0; j < dim_; ++j)
        w(static_cast<Index>(j)) = v[j];
    for (Index r = 0; r < hnf_.rows.rows(); ++r) {
        const Index p = hnf_.pivots[static_cast<std::size_t>(r)];
        const Integer q = floor_div(w(p), hnf_.rows(r, p));
        if (q != 0)
            w -= q * hnf_.rows.row(r).transpose();
    }
    IntVec out(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        const Integer& x = w(static_cast<Index>(j));
        if (abs(x) > std::numeric_limits<int>::max())
            throw Error("lattice reduction overflowed an exponent");
        out[j] = x.convert_to<int>();
    }
    return out;
}

bool IntegerLattice::contains(const IntVec& v) const
{
    const IntVec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](int x) { return x == 0; });
}

Integer IntegerLattice::saturation_index() const
{
    Integer index = 1;
    for (const auto& d : smith_invariants(hnf_.rows))
        index *= d;
    return index;
}

std::vector<IntVec> IntegerLattice::orthogonal_basis() const
{
    MatrixZ g = hnf_.rows;
    if (g.rows() == 0)
        g = MatrixZ::Zero(1, static_cast<Index>(dim_));
    const MatrixZ k = integer_kernel(g);
    std::vector<IntVec> out;
    for (Index c = 0; c < k.cols(); ++c) {
        IntVec v(dim_);
        for (std::size_t j = 0; j < dim_; ++j)
            v[j] = k(static_cast<Index>(j), c).convert_to<int>();
        out.push_back(std::move(v));
    }
    return out;
}

bool lattice_contains(const IntegerLattice& lattice, const IntVec& v)
{
    return lattice.contains(v);
}

Integer lattice_saturation_index(const IntegerLattice& lattice)
{
    return lattice.saturation_index();
}

}  // namespace strpoly
