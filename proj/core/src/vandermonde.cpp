#include "chebadj/vandermonde.hpp"

#include <cmath>
#include <vector>

#include "chebadj/bounds.hpp"
#include "chebadj/combinatorics.hpp"

namespace chebadj {

void VandermondeSpec::validate() const {
    if (p < 1) throw DomainError("vandermonde: p must be positive");
    if (s < 1) throw DomainError("vandermonde: s must be >= 1");
    if (node_count() < 2 * p) throw DomainError("vandermonde: need r - s + 1 >= 2p nodes");
}

namespace {

RatMatrix power_matrix(long p, long first_node, long cols) {
    RatMatrix m(static_cast<std::size_t>(2 * p), static_cast<std::size_t>(cols));
    for (long j = 0; j < cols; ++j) {
        const BigInt node(first_node + j);
        BigInt pw(1);
        for (long i = 0; i < 2 * p; ++i) {
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Rational(pw);
            pw *= node;
        }
    }
    return m;
}

} // namespace

RatMatrix build_V(const VandermondeSpec& spec) {
    spec.validate();
    return power_matrix(spec.p, spec.s, spec.node_count());
}

RatMatrix build_W(long p, long r) {
    if (p < 1) throw DomainError("build_W: p must be positive");
    if (r < 2 * p) throw DomainError("build_W: need r >= 2p");
    return power_matrix(p, 1, r);
}

RatMatrix build_Z(long p, long s) {
    if (p < 1) throw DomainError("build_Z: p must be positive");
    if (s < 1) throw DomainError("build_Z: s must be >= 1");
    return power_matrix(p, 1, s - 1);
}

RatMatrix pinv_exact(const RatMatrix& m) {
    if (m.rows() > m.cols()) throw DomainError("pinv_exact: matrix must be wide (rows <= cols)");
    const RatMatrix mt = m.transpose();
    return mt * invert(m * mt);
}

namespace detail {

Rational w_dagger_closed_conv(long q, long k, long p, long r, StirlingConvention sc, InnerSign is) {
    if (p < 1 || r < 2 * p) throw DomainError("w_dagger_closed: need p >= 1 and r >= 2p");
    if (q < 0 || q > 2 * p - 1) throw DomainError("w_dagger_closed: row out of range");
    if (k < 0 || k > r - 1) throw DomainError("w_dagger_closed: column out of range");

    Rational total;
    for (long w = q; w <= 2 * p - 1; ++w) {
        BigInt st = rising_stirling(w + 1, q + 1);
        if (sc == StirlingConvention::signed_first_kind && (w - q) % 2 != 0) st = -st;
        if (sgn(st) == 0) continue;
        Rational inner;
        for (long t = w; t <= 2 * p - 1; ++t) {
            const Rational mid(binomial(t + w, w) * binomial(r - w - 1, r - t - 1),
                               binomial(2 * t, t) * binomial(r + t, 2 * t + 1));
            Rational a(A_sum(t, k, r));
            if (is == InnerSign::alternating_j_plus_one) a = -a;
            inner += mid * a;
        }
        total += Rational(st, factorial(w)) * inner;
    }
    return q % 2 == 0 ? total : -total;
}

} // namespace detail

Rational w_dagger_closed(long q, long k, long p, long r) {
    return detail::w_dagger_closed_conv(q, k, p, r, detail::StirlingConvention::unsigned_rising,
                                        detail::InnerSign::alternating_j);
}

RatMatrix neumann_X(const VandermondeSpec& spec) {
    spec.validate();
    const RatMatrix v = build_V(spec);
    const RatMatrix w = build_W(spec.p, spec.r);
    const RatMatrix vvt = v * v.transpose();
    const RatMatrix wwt = w * w.transpose();
    RatMatrix x = invert(vvt) * wwt;
    for (std::size_t i = 0; i < x.rows(); ++i) x(i, i) -= 1;
    return x;
}

namespace {

// Eigenvalues of a small symmetric matrix by cyclic Jacobi rotations.
std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    double fro2 = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) fro2 += a[i][j] * a[i][j];
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off <= 1e-30 * fro2) break;
        for (std::size_t pi = 0; pi < n; ++pi)
            for (std::size_t qi = pi + 1; qi < n; ++qi) {
                if (a[pi][qi] == 0.0) continue;
                const double theta = (a[qi][qi] - a[pi][pi]) / (2.0 * a[pi][qi]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][pi], akq = a[k][qi];
                    a[k][pi] = c * akp - s * akq;
                    a[k][qi] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[pi][k], aqk = a[qi][k];
                    a[pi][k] = c * apk - s * aqk;
                    a[qi][k] = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
    return ev;
}

} // namespace

GramConditionDiagnostic gram_condition_diagnostic(long p, long r) {
    if (p < 1 || r < 2 * p) throw DomainError("gram_condition_diagnostic: need r >= 2p");
    const RatMatrix w = build_W(p, r);
    const RatMatrix g = w * w.transpose();
    std::vector<std::vector<double>> a(g.rows(), std::vector<double>(g.cols()));
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) a[i][j] = g(i, j).to_double();
    const std::vector<double> ev = symmetric_eigenvalues(std::move(a));
    double lo = ev[0], hi = ev[0];
    for (double e : ev) {
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    GramConditionDiagnostic out{};
    out.kappa_estimate = hi / lo;
    out.reference = (4.0 * p * p) / (4.0 * p - 1.0) * std::pow(static_cast<double>(r), 4.0 * p - 2.0);
    return out;
}

} // namespace chebadj
