#include "kmap/dense.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kmap/errors.hpp"

namespace kmap {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("Matrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("Matrix product: shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

Matrix operator*(double s, const Matrix& a) {
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = s * a(i, j);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("Matrix difference: shape mismatch");
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j) - b(i, j);
    return out;
}

std::vector<double> operator*(const Matrix& a, std::span<const double> x) {
    if (a.cols() != x.size())
        throw std::invalid_argument("Matrix-vector product: shape mismatch");
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j)
            acc += a(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (double v : a.data())
        s += v * v;
    return std::sqrt(s);
}

double max_abs(std::span<const double> x) {
    double m = 0.0;
    for (double v : x)
        m = std::max(m, std::abs(v));
    return m;
}

std::vector<double> solve_spd(const Matrix& l, std::span<const double> rhs) {
    const std::size_t n = l.rows();
    if (l.cols() != n || rhs.size() != n)
        throw std::invalid_argument("solve_spd: dimension mismatch");

    double max_diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        max_diag = std::max(max_diag, std::abs(l(i, i)));
        for (std::size_t j = 0; j < i; ++j)
            if (std::abs(l(i, j) - l(j, i)) > 1e-12 * std::max(1.0, std::abs(l(i, j))))
                throw std::invalid_argument("solve_spd: matrix is not symmetric");
    }
    const double pivot_floor = 1e-12 * std::max(max_diag, 1e-300);

    // Lower-triangular factor, L = C C^T.
    Matrix c(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = l(j, j);
        for (std::size_t k = 0; k < j; ++k)
            d -= c(j, k) * c(j, k);
        if (!(d > pivot_floor))
            throw NotPositiveDefinite("solve_spd: non-positive pivot at row " + std::to_string(j));
        const double cjj = std::sqrt(d);
        c(j, j) = cjj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = l(i, j);
            for (std::size_t k = 0; k < j; ++k)
                s -= c(i, k) * c(j, k);
            c(i, j) = s / cjj;
        }
    }

    std::vector<double> y(rhs.begin(), rhs.end());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < i; ++k)
            y[i] -= c(i, k) * y[k];
        y[i] /= c(i, i);
    }
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t k = i + 1; k < n; ++k)
            y[i] -= c(k, i) * y[k];
        y[i] /= c(i, i);
    }
    return y;
}

Matrix inverse(const Matrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n)
        throw std::invalid_argument("inverse: matrix is not square");

    Matrix lu = a;
    Matrix inv = Matrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(lu(r, col)) > std::abs(lu(pivot, col)))
                pivot = r;
        if (lu(pivot, col) == 0.0 || !std::isfinite(lu(pivot, col)))
            throw SingularSystem("inverse: matrix is singular");
        if (pivot != col) {
            std::swap_ranges(lu.row(col).begin(), lu.row(col).end(), lu.row(pivot).begin());
            std::swap_ranges(inv.row(col).begin(), inv.row(col).end(), inv.row(pivot).begin());
        }
        const double p = lu(col, col);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col)
                continue;
            const double f = lu(r, col) / p;
            if (f == 0.0)
                continue;
            for (std::size_t k = 0; k < n; ++k) {
                lu(r, k) -= f * lu(col, k);
                inv(r, k) -= f * inv(col, k);
            }
        }
    }
    for (std::size_t r = 0; r < n; ++r) {
        const double p = lu(r, r);
        for (std::size_t k = 0; k < n; ++k)
            inv(r, k) /= p;
    }
    return inv;
}

}  // namespace kmap
