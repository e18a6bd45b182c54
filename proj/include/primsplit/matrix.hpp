#pragma once

#include "primsplit/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace primsplit {

using Vec = std::vector<Rational>;

/// Dense matrix over Q, row-major. Dimensions of zero are legal and behave as
/// maps to or from the zero space (products with them yield zero matrices of
/// the right shape).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);
    static Matrix column(const Vec& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty_shape() const { return rows_ == 0 || cols_ == 0; }

    Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_identity() const;
    Matrix transposed() const;
    Vec col(std::size_t j) const;
    Vec row(std::size_t i) const;

    /// Columns of `other` appended on the right; row counts must agree.
    Matrix hcat(const Matrix& other) const;
    /// Rows of `other` appended below; column counts must agree.
    Matrix vcat(const Matrix& other) const;

    Vec apply(const Vec& x) const; // matrix * column vector

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b); // threaded kernel
    friend Matrix operator*(const Rational& s, const Matrix& a);
    Matrix operator-() const;
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> e_;
};

/// Serial reference product, identical arithmetic to operator*. Kept so tests
/// and the benchmark can compare the threaded kernel against it exactly.
Matrix mul_serial(const Matrix& a, const Matrix& b);

/// Reduced row echelon form with deterministic pivoting (first nonzero row).
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
};
Echelon reduced_row_echelon(Matrix m);
Echelon reduced_row_echelon_serial(Matrix m); // serial reference

std::size_t rank(const Matrix& m);

/// Basis of the right null space; empty when the kernel is trivial.
/// Every returned v satisfies m * v = 0 exactly.
std::vector<Vec> kernel_basis(const Matrix& m);

/// Some exact solution of m * x = b, or nullopt when b is outside the image.
/// Deterministic: free variables are set to zero.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Solves A * X = B for invertible square A; nullopt when A is singular.
std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Least k >= 0 with m^k = 0, or nullopt when m is not nilpotent.
/// The search stops at k = n (Cayley-Hamilton bound).
std::optional<std::size_t> nilpotency_index(const Matrix& m);

Matrix matrix_power(const Matrix& m, std::size_t k);

/// rank of the column span of [a | b] — handy for image comparisons.
std::size_t rank_of_columns(const Matrix& a, const Matrix& b);

/// True iff every column of `inner` lies in the column span of `outer`.
bool columns_contained_in(const Matrix& inner, const Matrix& outer);

} // namespace primsplit
