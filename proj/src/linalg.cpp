#include "genstab/linalg.hpp"

#include <sstream>

namespace genstab {

Matrix zeros(Eigen::Index rows, Eigen::Index cols, const FieldDescriptor& f) {
    Matrix m(rows, cols);
    FieldElement z = FieldElement::zero(f);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = z;
    return m;
}

Matrix identity(Eigen::Index n, const FieldDescriptor& f) {
    Matrix m = zeros(n, n, f);
    FieldElement o = FieldElement::one(f);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = o;
    return m;
}

Matrix in_field(const Matrix& m, const FieldDescriptor& f) {
    Matrix r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).in(f);
    return r;
}

std::size_t matrix_hash(const Matrix& m, const FieldDescriptor& f) {
    std::size_t h = static_cast<std::size_t>(m.rows() * 131 + m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) h = h * 1000003u ^ m(i, j).in(f).hash();
    return h;
}

std::string to_string(const Matrix& m) {
    std::ostringstream os;
    os << "[";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).to_string();
    }
    os << "]";
    return os.str();
}

}  // namespace genstab
