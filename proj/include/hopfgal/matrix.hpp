#pragma once

// Dense exact matrices and the deterministic elimination kernel.
// Normal-form conventions used everywhere downstream:
//   * rref scans columns left to right and picks the first nonzero row;
//   * kernel_basis returns one vector per free column, free entry set to 1,
//     ordered by free column index;
//   * solve returns the particular solution with all free variables zero.

#include "hopfgal/scalar.hpp"

#include <optional>
#include <vector>

namespace hopfgal {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, int n);
Vec unit_vec(const Field& f, int n, int i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& a);
bool is_zero_vec(const Vec& v);
std::string vec_str(const Vec& v);

class Matrix {
public:
    Matrix() : field_(Field::rationals()), rows_(0), cols_(0) {}
    Matrix(const Field& f, int rows, int cols);

    static Matrix identity(const Field& f, int n);
    static Matrix zero(const Field& f, int rows, int cols) { return Matrix(f, rows, cols); }
    static Matrix from_rows(const Field& f, const std::vector<Vec>& rows, int cols);
    static Matrix from_cols(const Field& f, const std::vector<Vec>& cols, int rows);

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Scalar& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
    Scalar& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }

    Vec row(int r) const;
    Vec col(int c) const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Scalar& c) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Vec apply(const Vec& v) const;
    Matrix transpose() const;
    bool is_zero() const;

    Matrix hstack(const Matrix& o) const;
    Matrix vstack(const Matrix& o) const;

    std::string str() const;

private:
    Field field_;
    int rows_, cols_;
    std::vector<Scalar> data_;
};

struct Rref {
    Matrix m;
    std::vector<int> pivots;
    int rank = 0;
};

Rref rref(const Matrix& m);
int rank(const Matrix& m);
std::vector<Vec> kernel_basis(const Matrix& m);
std::optional<Vec> solve(const Matrix& m, const Vec& rhs);
std::optional<Matrix> inverse(const Matrix& m);

// Kronecker product with row-major pairing: (a⊗b)(i*rowsB+k, j*colsB+l) = a(i,j)b(k,l),
// matching the index convention e_i⊗e_j ↦ i*dimN+j used for tensor ambients.
Matrix kron(const Matrix& a, const Matrix& b);
Vec vec_tensor(const Vec& a, const Vec& b);

}  // namespace hopfgal
