#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "koszulkit/scalar.hpp"

namespace koszulkit {

/// Dense row-major matrix over a fixed field.
class Matrix {
public:
    Matrix() = default;
    Matrix(const Field& field, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& field, std::size_t n);
    static Matrix from_rows(const Field& field, const std::vector<std::vector<long>>& rows);
    static Matrix column(const Field& field, const Vector& v);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector column_vector(std::size_t c) const;
    Vector row_vector(std::size_t r) const;
    void set_column(std::size_t c, const Vector& v);

    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
    Matrix select_columns(const std::vector<std::size_t>& cols) const;
    Matrix select_rows(const std::vector<std::size_t>& rows) const;

    bool is_zero() const;

    Matrix operator*(const Matrix& o) const;
    Vector operator*(const Vector& v) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Columns form a basis of the right kernel.
Matrix kernel_basis(const Matrix& m);

/// Some x with A x = b, or nullopt when b is not in the column space.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Indices of a maximal linearly independent subset of the columns, chosen greedily left to right.
std::vector<std::size_t> independent_columns(const Matrix& m);

} // namespace koszulkit
