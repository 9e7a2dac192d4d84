#include "rotorkit/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace rotorkit {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = int(rows.size());
    cols_ = rows_ > 0 ? int(rows.begin()->size()) : 0;
    data_.reserve(std::size_t(rows_) * cols_);
    for (const auto& row : rows) {
        if (int(row.size()) != cols_) throw std::invalid_argument("ragged initializer for IntegerMatrix");
        for (const auto& x : row) data_.push_back(x);
    }
}

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void IntegerMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntegerMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntegerMatrix::add_row_multiple(int i, int j, const Int& c) {
    for (int k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
}

void IntegerMatrix::add_col_multiple(int i, int j, const Int& c) {
    for (int k = 0; k < rows_; ++k) (*this)(k, i) += c * (*this)(k, j);
}

void IntegerMatrix::negate_row(int i) {
    for (int k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntegerMatrix::negate_col(int i) {
    for (int k = 0; k < rows_; ++k) (*this)(k, i) = -(*this)(k, i);
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntegerMatrix IntegerMatrix::minor_matrix(int drop_row, int drop_col) const {
    IntegerMatrix m(rows_ - (drop_row >= 0 ? 1 : 0), cols_ - (drop_col >= 0 ? 1 : 0));
    int r = 0;
    for (int i = 0; i < rows_; ++i) {
        if (i == drop_row) continue;
        int c = 0;
        for (int j = 0; j < cols_; ++j) {
            if (j == drop_col) continue;
            m(r, c) = (*this)(i, j);
            ++c;
        }
        ++r;
    }
    return m;
}

std::vector<Int> IntegerMatrix::column(int j) const {
    std::vector<Int> col(rows_);
    for (int i = 0; i < rows_; ++i) col[i] = (*this)(i, j);
    return col;
}

std::vector<Int> IntegerMatrix::diagonal() const {
    int n = rows_ < cols_ ? rows_ : cols_;
    std::vector<Int> d(n);
    for (int i = 0; i < n; ++i) d[i] = (*this)(i, i);
    return d;
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << (*this)(i, j).get_str();
        }
        os << '\n';
    }
    return os.str();
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    IntegerMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

std::vector<Int> operator*(const IntegerMatrix& a, const std::vector<Int>& x) {
    if (a.cols() != int(x.size())) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<Int> y(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

}  // namespace rotorkit
