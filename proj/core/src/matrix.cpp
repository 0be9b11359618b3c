#include "chebadj/matrix.hpp"

#include <cmath>
#include <cstdint>

namespace chebadj {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DomainError("matrix product: dimension mismatch");
    RatMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t t = 0; t < cols_; ++t) {
            const Rational& a = (*this)(i, t);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Rational& b = rhs(t, j);
                if (!b.is_zero()) out(i, j) += a * b;
            }
        }
    return out;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& x) const {
    if (x.size() != cols_) throw DomainError("matrix apply: dimension mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * x[j];
    return out;
}

void RatMatrix::scale_column(std::size_t j, const Rational& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) *= factor;
}

Rational RatMatrix::row_l1_max() const {
    Rational best;
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational sum;
        for (std::size_t j = 0; j < cols_; ++j) sum += abs((*this)(i, j));
        if (sum > best) best = sum;
    }
    return best;
}

Rational RatMatrix::col_l1_max() const {
    Rational best;
    for (std::size_t j = 0; j < cols_; ++j) {
        Rational sum;
        for (std::size_t i = 0; i < rows_; ++i) sum += abs((*this)(i, j));
        if (sum > best) best = sum;
    }
    return best;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RatMatrix invert(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("invert: matrix must be square");
    const std::size_t n = m.rows();
    RatMatrix work = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && work(piv, c).is_zero()) ++piv;
        if (piv == n) throw SingularMatrixError(c);
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(c, j), work(piv, j));
                std::swap(inv(c, j), inv(piv, j));
            }
        const Rational d = work(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            work(c, j) /= d;
            inv(c, j) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || work(r, c).is_zero()) continue;
            const Rational f = work(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                work(r, j) -= f * work(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

std::vector<Rational> solve_gram(const RatMatrix& m, const std::vector<Rational>& rhs) {
    if (m.rows() != m.cols()) throw DomainError("solve_gram: matrix must be square");
    if (rhs.size() != m.rows()) throw DomainError("solve_gram: rhs length mismatch");
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m(i, j) != m(j, i)) throw DomainError("solve_gram: matrix is not symmetric");

    RatMatrix work = m;
    std::vector<Rational> x = rhs;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && work(piv, c).is_zero()) ++piv;
        if (piv == n) throw SingularMatrixError(c);
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(work(c, j), work(piv, j));
            std::swap(x[c], x[piv]);
        }
        const Rational d = work(c, c);
        for (std::size_t j = c; j < n; ++j) work(c, j) /= d;
        x[c] /= d;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || work(r, c).is_zero()) continue;
            const Rational f = work(r, c);
            for (std::size_t j = c; j < n; ++j) work(r, j) -= f * work(c, j);
            x[r] -= f * x[c];
        }
    }
    return x;
}

namespace {

// Deterministic start vector; avoids pathological orthogonality to the top
// singular vector without platform-dependent randomness.
std::vector<double> seed_vector(std::size_t n) {
    std::vector<double> v(n);
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    for (auto& x : v) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        x = 0.5 + static_cast<double>(state >> 11) / static_cast<double>(1ull << 53);
    }
    return v;
}

} // namespace

double spectral_norm_estimate(const RatMatrix& m, double tolerance) {
    if (m.rows() == 0 || m.cols() == 0) throw DomainError("spectral_norm_estimate: empty matrix");
    if (!(tolerance > 0)) throw DomainError("spectral_norm_estimate: tolerance must be positive");
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<double> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m(i, j).to_double();

    std::vector<double> v = seed_vector(cols), av(rows), u(cols);
    double lambda = 0.0;
    const int max_iter = 200000;
    for (int it = 0; it < max_iter; ++it) {
        for (std::size_t i = 0; i < rows; ++i) {
            double s = 0;
            for (std::size_t j = 0; j < cols; ++j) s += a[i * cols + j] * v[j];
            av[i] = s;
        }
        for (std::size_t j = 0; j < cols; ++j) {
            double s = 0;
            for (std::size_t i = 0; i < rows; ++i) s += a[i * cols + j] * av[i];
            u[j] = s;
        }
        double vv = 0, vu = 0;
        for (std::size_t j = 0; j < cols; ++j) {
            vv += v[j] * v[j];
            vu += v[j] * u[j];
        }
        const double next = vu / vv; // Rayleigh quotient for M^T M
        double norm_u = 0;
        for (double x : u) norm_u += x * x;
        norm_u = std::sqrt(norm_u);
        if (norm_u == 0.0) return 0.0; // v is in the null space; for M^T M v = 0 the norm is 0 only if M v = 0 held from a generic start
        for (std::size_t j = 0; j < cols; ++j) v[j] = u[j] / norm_u;
        if (it > 0 && std::abs(next - lambda) <= tolerance * std::max(std::abs(next), 1e-300)) {
            return std::sqrt(std::max(next, 0.0));
        }
        lambda = next;
    }
    throw ConvergenceError("spectral_norm_estimate: power iteration did not converge");
}

} // namespace chebadj
