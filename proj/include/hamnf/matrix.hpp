#pragma once

#include "hamnf/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace hamnf {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
    static Matrix diagonal(const Vector& diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;

    Matrix transpose() const;
    bool is_zero() const;

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(const Scalar& factor);

    friend bool operator==(const Matrix&, const Matrix&) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator*(const Matrix& lhs, const Matrix& rhs);
Matrix operator*(Matrix lhs, const Scalar& factor);
Vector operator*(const Matrix& lhs, const Vector& v);

/// Reduced row-echelon form together with its pivot columns.
struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const noexcept { return pivots.size(); }
};

RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);
Scalar determinant(Matrix m);
/// Throws Error(SingularMatrix) when m is not invertible.
Matrix inverse(const Matrix& m);
/// Basis of {v : m v = 0}, one vector per free column of rref(m).
std::vector<Vector> nullspace(const Matrix& m);

/// Particular solution of m v = b with every non-pivot coordinate set to zero,
/// or nullopt when b is outside the column space of m.
std::optional<Vector> solve_particular(const Matrix& m, const Vector& b);

bool is_zero_vector(const Vector& v);

} // namespace hamnf
