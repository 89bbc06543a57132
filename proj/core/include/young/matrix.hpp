#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "young/field.hpp"

namespace young {

using SparseColumn = std::vector<std::pair<int, Scalar>>;  // (row, value), rows ascending, no zeros

// Column-major sparse matrix over one field. Dense input and output are views.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, FieldDesc field);
    static Matrix identity(int n, FieldDesc field);
    static Matrix from_dense(const std::vector<std::vector<Scalar>>& rows, FieldDesc field);
    static Matrix from_rationals(const std::vector<std::vector<Rational>>& rows);
    static Matrix diagonal(const std::vector<Scalar>& d, FieldDesc field);

    int rows() const { return rows_; }
    int cols() const { return static_cast<int>(cols_.size()); }
    const FieldDesc& field() const { return field_; }
    const SparseColumn& column(int j) const { return cols_[j]; }
    void set_column(int j, SparseColumn c);
    Scalar at(int i, int j) const;
    void set(int i, int j, const Scalar& v);
    std::size_t nonzeros() const;
    std::vector<std::vector<Scalar>> dense() const;

    Matrix transposed() const;
    Matrix permuted(const std::vector<int>& order) const;  // result(a, b) = this(order[a], order[b])
    Matrix map(const std::function<Scalar(const Scalar&)>& f, FieldDesc target) const;
    bool is_upper_triangular() const;
    bool is_zero() const;
    bool is_identity() const;

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    // Optional basis labels in canonical order, carried into exports.
    std::vector<std::string> basis;

private:
    int rows_ = 0;
    FieldDesc field_;
    std::vector<SparseColumn> cols_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, const Scalar& c);
SparseColumn apply(const Matrix& a, const SparseColumn& v);
Matrix triangular_inverse(const Matrix& a);
// Kronecker product; the row and column index of a is the slower one.
Matrix tensor_product(const Matrix& a, const Matrix& b);
Matrix direct_sum(const std::vector<Matrix>& blocks);

}  // namespace young
