#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <vector>

#include "genstab/field.hpp"

namespace Eigen {

template <>
struct NumTraits<genstab::FieldElement> : GenericNumTraits<genstab::FieldElement> {
    using Real = genstab::FieldElement;
    using NonInteger = genstab::FieldElement;
    using Literal = genstab::FieldElement;
    using Nested = genstab::FieldElement;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 4,
        MulCost = 8
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

}  // namespace Eigen

namespace genstab {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = Mat<FieldElement>;
using Vector = Vec<FieldElement>;

Matrix zeros(Eigen::Index rows, Eigen::Index cols, const FieldDescriptor& f);
Matrix identity(Eigen::Index n, const FieldDescriptor& f);
/// Every entry moved into f (rational constants promote).
Matrix in_field(const Matrix& m, const FieldDescriptor& f);
/// Hash of the entries after moving them into f.
std::size_t matrix_hash(const Matrix& m, const FieldDescriptor& f);
std::string to_string(const Matrix& m);

template <typename Scalar>
struct RrefResult {
    Mat<Scalar> reduced;
    std::vector<Eigen::Index> pivots;
    Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Reduced row echelon form with pivot columns.
template <typename Scalar>
RrefResult<Scalar> rref(Mat<Scalar> m) {
    RrefResult<Scalar> out;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index piv = row;
        while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row) m.row(piv).swap(m.row(row));
        Scalar inv = Scalar(1) / m(row, col);
        for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m(i, col))) continue;
            Scalar f = m(i, col);
            for (Eigen::Index j = col; j < m.cols(); ++j)
                if (!is_zero(m(row, j))) m(i, j) = m(i, j) - f * m(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

template <typename Scalar>
Eigen::Index rank(const Mat<Scalar>& m) {
    return rref(m).rank();
}

/// Columns spanning {x : m x = 0}.
template <typename Scalar>
Mat<Scalar> kernel(const Mat<Scalar>& m) {
    auto r = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (auto c : r.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    Eigen::Index nfree = m.cols() - r.rank();
    Mat<Scalar> k(m.cols(), nfree);
    for (Eigen::Index i = 0; i < k.rows(); ++i)
        for (Eigen::Index j = 0; j < k.cols(); ++j) k(i, j) = Scalar(0);
    Eigen::Index fi = 0;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        k(c, fi) = Scalar(1);
        for (Eigen::Index pi = 0; pi < r.rank(); ++pi) k(r.pivots[static_cast<std::size_t>(pi)], fi) = -r.reduced(pi, c);
        ++fi;
    }
    return k;
}

/// The unique X with a X = b, for a of full column rank.
template <typename Scalar>
Mat<Scalar> solve_exact(const Mat<Scalar>& a, const Mat<Scalar>& b) {
    Mat<Scalar> aug(a.rows(), a.cols() + b.cols());
    aug << a, b;
    auto r = rref(aug);
    if (r.rank() < a.cols() || (r.rank() > 0 && r.pivots.back() >= a.cols()))
        throw std::domain_error("solve_exact: system has no unique solution");
    return r.reduced.block(0, a.cols(), a.cols(), b.cols());
}

/// A subspace stored as its canonical rref basis (rows, no zero rows).
template <typename Scalar>
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(Eigen::Index ambient) : ambient_(ambient), rows_(0, ambient) {}

    static Subspace from_rows(const Mat<Scalar>& rows) {
        Subspace s(rows.cols());
        auto r = rref(rows);
        s.rows_ = r.reduced.topRows(r.rank());
        s.pivots_ = r.pivots;
        return s;
    }
    static Subspace from_columns(const Mat<Scalar>& cols) { return from_rows(cols.transpose()); }

    Eigen::Index ambient() const { return ambient_; }
    Eigen::Index dim() const { return rows_.rows(); }
    const Mat<Scalar>& rows() const { return rows_; }
    Mat<Scalar> columns() const { return rows_.transpose(); }
    const std::vector<Eigen::Index>& pivots() const { return pivots_; }

    /// v minus its reduction against the basis; zero iff v lies in the space.
    Vec<Scalar> reduce(Vec<Scalar> v) const {
        for (Eigen::Index i = 0; i < dim(); ++i) {
            Scalar c = v(pivots_[static_cast<std::size_t>(i)]);
            if (is_zero(c)) continue;
            for (Eigen::Index j = 0; j < ambient_; ++j)
                if (!is_zero(rows_(i, j))) v(j) = v(j) - c * rows_(i, j);
        }
        return v;
    }
    bool contains(const Vec<Scalar>& v) const {
        Vec<Scalar> r = reduce(v);
        for (Eigen::Index i = 0; i < r.size(); ++i)
            if (!is_zero(r(i))) return false;
        return true;
    }
    bool contains(const Subspace& o) const {
        for (Eigen::Index i = 0; i < o.dim(); ++i)
            if (!contains(Vec<Scalar>(o.rows_.row(i).transpose()))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_ || a.dim() != b.dim()) return false;
        for (Eigen::Index i = 0; i < a.rows_.rows(); ++i)
            for (Eigen::Index j = 0; j < a.rows_.cols(); ++j)
                if (!(a.rows_(i, j) == b.rows_(i, j))) return false;
        return true;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    Eigen::Index ambient_ = 0;
    Mat<Scalar> rows_;
    std::vector<Eigen::Index> pivots_;
};

template <typename Scalar>
Subspace<Scalar> subspace_sum(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("subspace_sum: ambient dimensions differ");
    Mat<Scalar> s(a.dim() + b.dim(), a.ambient());
    s << a.rows(), b.rows();
    return Subspace<Scalar>::from_rows(s);
}

template <typename Scalar>
Subspace<Scalar> subspace_intersect(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("subspace_intersect: ambient dimensions differ");
    if (a.dim() == 0 || b.dim() == 0) return Subspace<Scalar>(a.ambient());
    // x A = y B  <=>  [A; -B]^T (x, y) = 0
    Mat<Scalar> stacked(a.dim() + b.dim(), a.ambient());
    stacked << a.rows(), -b.rows();
    Mat<Scalar> k = kernel<Scalar>(stacked.transpose());
    Mat<Scalar> vecs = k.topRows(a.dim()).transpose() * a.rows();
    return Subspace<Scalar>::from_rows(vecs);
}

using FieldSubspace = Subspace<FieldElement>;

}  // namespace genstab
