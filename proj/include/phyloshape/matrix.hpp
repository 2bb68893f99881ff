#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "phyloshape/errors.hpp"

namespace phyloshape {

/// Dense row-major matrix of doubles. Just enough linear algebra for the
/// encoder; weights are stored [out][in] so forward passes run on contiguous
/// rows.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    double* row(std::size_t i) { return data.data() + i * cols; }
    const double* row(std::size_t i) const { return data.data() + i * cols; }

    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }

    bool all_finite() const {
        for (double v : data)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

/// C = A(m x k) * B(k x n). axpy inner loop, rows of B contiguous.
inline Matrix matmul_nn(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw ContractError("matmul_nn: shape mismatch");
    Matrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        const double* arow = a.row(i);
        double* crow = c.row(i);
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double av = arow[k];
            const double* brow = b.row(k);
            for (std::size_t j = 0; j < b.cols; ++j) crow[j] += av * brow[j];
        }
    }
    return c;
}

/// C = A(m x k) * B(n x k)^T. Contiguous dot products.
inline Matrix matmul_nt(const Matrix& a, const Matrix& b) {
    if (a.cols != b.cols) throw ContractError("matmul_nt: shape mismatch");
    Matrix c(a.rows, b.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
        const double* arow = a.row(i);
        for (std::size_t j = 0; j < b.rows; ++j) {
            const double* brow = b.row(j);
            double s = 0.0;
            for (std::size_t k = 0; k < a.cols; ++k) s += arow[k] * brow[k];
            c(i, j) = s;
        }
    }
    return c;
}

/// C = A(b x m)^T * B(b x n), i.e. sum of outer products over the batch axis.
inline Matrix matmul_tn(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows) throw ContractError("matmul_tn: shape mismatch");
    Matrix c(a.cols, b.cols);
    for (std::size_t r = 0; r < a.rows; ++r) {
        const double* arow = a.row(r);
        const double* brow = b.row(r);
        for (std::size_t i = 0; i < a.cols; ++i) {
            const double av = arow[i];
            double* crow = c.row(i);
            for (std::size_t j = 0; j < b.cols; ++j) crow[j] += av * brow[j];
        }
    }
    return c;
}

inline void add_row_inplace(Matrix& m, const std::vector<double>& v) {
    if (m.cols != v.size()) throw ContractError("add_row_inplace: shape mismatch");
    for (std::size_t i = 0; i < m.rows; ++i) {
        double* row = m.row(i);
        for (std::size_t j = 0; j < m.cols; ++j) row[j] += v[j];
    }
}

inline double euclidean_distance(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

}  // namespace phyloshape
