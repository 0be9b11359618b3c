#pragma once

#include <cstddef>
#include <vector>

#include "chebadj/rational.hpp"

namespace chebadj {

// Dense exact rational matrix, row-major. Zero-sized dimensions are allowed
// (a 2p x 0 matrix multiplies to a zero Gram matrix).
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& rhs) const;
    std::vector<Rational> apply(const std::vector<Rational>& x) const; // M * x

    void scale_column(std::size_t j, const Rational& factor);

    // max over rows of the l1 norm of the row (the operator norm for a
    // row-vector left multiplication).
    Rational row_l1_max() const;
    Rational col_l1_max() const;

    friend bool operator==(const RatMatrix&, const RatMatrix&);

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// Exact inverse by rational Gauss-Jordan elimination; pivots on exact nonzero
// test, no magnitude heuristics. Throws SingularMatrixError with the failing column.
RatMatrix invert(const RatMatrix& m);

// Exact solve of M x = rhs for square symmetric M (Gram systems).
std::vector<Rational> solve_gram(const RatMatrix& m, const std::vector<Rational>& rhs);

// ||M||_2 estimated by power iteration on M^T M in double precision. The one
// inexact quantity in the library; never feed the result back into exact paths.
double spectral_norm_estimate(const RatMatrix& m, double tolerance);

} // namespace chebadj
