#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace kmap {

/// Row-major dense matrix of doubles. The maps handled here have a few dozen
/// concepts at most, so nothing fancier is needed.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<double> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> row(std::size_t r) const noexcept {
        return {data_.data() + r * cols_, cols_};
    }

    std::span<const double> data() const noexcept { return data_; }

    Matrix transposed() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
Matrix operator-(const Matrix& a, const Matrix& b);
std::vector<double> operator*(const Matrix& a, std::span<const double> x);

double frobenius_norm(const Matrix& a);
double max_abs(std::span<const double> x);

/// Solves L x = rhs for symmetric positive definite L by Cholesky
/// factorization. Throws NotPositiveDefinite when a pivot falls to
/// 1e-12 * max|diag| or below, std::invalid_argument on shape mismatch or
/// asymmetry beyond 1e-12.
std::vector<double> solve_spd(const Matrix& l, std::span<const double> rhs);

/// Inverse of a general square matrix via LU with partial pivoting.
/// Throws SingularSystem when a pivot vanishes.
Matrix inverse(const Matrix& a);

}  // namespace kmap
