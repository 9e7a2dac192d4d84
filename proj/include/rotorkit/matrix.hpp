#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "rotorkit/bigint.hpp"

namespace rotorkit {

// Dense exact-integer matrix. Graphs here are desk-scale, so density costs
// nothing and keeps the determinant and normal-form code simple.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntegerMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

    bool operator==(const IntegerMatrix& other) const = default;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    // row i += c * row j, and the column analogue
    void add_row_multiple(int i, int j, const Int& c);
    void add_col_multiple(int i, int j, const Int& c);
    void negate_row(int i);
    void negate_col(int i);

    IntegerMatrix transposed() const;
    // new matrix with row i and column j removed (pass -1 to keep all)
    IntegerMatrix minor_matrix(int drop_row, int drop_col) const;

    std::vector<Int> column(int j) const;
    std::vector<Int> diagonal() const;

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
std::vector<Int> operator*(const IntegerMatrix& a, const std::vector<Int>& x);

}  // namespace rotorkit
