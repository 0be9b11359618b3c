#include "chebadj/adjuster.hpp"

#include <cmath>

#include "chebadj/chebyshev.hpp"
#include "chebadj/combinatorics.hpp"
#include "chebadj/vandermonde.hpp"

namespace chebadj {

Constants constants(long p, long s) {
    if (p < 1 || s < 1) throw DomainError("constants: need p, s >= 1");
    Constants c{};
    c.threshold_base = binomial_growth_base();
    const double sp = std::pow(static_cast<double>(s), 4.0 * p - 1.0);
    c.c1 = std::max(16.0 * p * p * sp, 8.0 * std::pow(c.threshold_base, 2.0 * p - 1.0) * p * p * p);
    BigInt c2(1);
    c2 <<= 16;
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(4 * p + 9));
    c2 *= pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(s), static_cast<unsigned long>(4 * p - 1));
    c2 *= pw;
    c.c2 = c2;
    return c;
}

long c1_ceiling(long p, long s) { return static_cast<long>(std::ceil(constants(p, s).c1)); }

RatMatrix build_Y(long p) {
    if (p < 1) throw DomainError("build_Y: p must be positive");
    RatMatrix y(static_cast<std::size_t>(2 * p), static_cast<std::size_t>(2 * p));
    for (long i = 0; i < p; ++i) y(static_cast<std::size_t>(2 * i + 1), static_cast<std::size_t>(2 * i + 1)) = 1;
    for (long k = 0; k < p; ++k) {
        const Rational scale(BigInt(1), BigInt(1) << static_cast<unsigned long>(2 * k));
        for (long u = 0; u < p; ++u)
            y(static_cast<std::size_t>(2 * k), static_cast<std::size_t>(2 * u)) = scale * y_value(k, u);
    }
    return y;
}

RatMatrix build_signs(long count, long offset) {
    if (count < 1) throw DomainError("build_signs: count must be positive");
    RatMatrix m(static_cast<std::size_t>(count), static_cast<std::size_t>(count));
    for (long j = 0; j < count; ++j)
        m(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) = ((offset + j) % 2 == 0) ? 1 : -1;
    return m;
}

RatMatrix build_tilde_N(long p) {
    if (p < 1) throw DomainError("build_tilde_N: p must be positive");
    RatMatrix m(static_cast<std::size_t>(2 * p), static_cast<std::size_t>(2 * p));
    for (long i = 0; i < p; ++i) {
        m(static_cast<std::size_t>(2 * i), static_cast<std::size_t>(2 * i)) = (i % 2 == 0) ? 1 : -1;
        m(static_cast<std::size_t>(2 * i + 1), static_cast<std::size_t>(2 * i + 1)) = 1;
    }
    return m;
}

void AdjustmentProblem::validate() const {
    if (p < 1) throw DomainError("adjustment: p must be positive");
    if (s < 1) throw DomainError("adjustment: s must be >= 1");
    if (r - s + 1 < 2 * p) throw DomainError("adjustment: need r - s + 1 >= 2p");
    if (a.size() != static_cast<std::size_t>(p)) throw DomainError("adjustment: need exactly p target coefficients");
}

namespace {

void scale_columns_by_signs(RatMatrix& m, long s) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        if ((s + static_cast<long>(j)) % 2 != 0) m.scale_column(j, Rational(-1));
}

} // namespace

RatMatrix build_T_full(const AdjustmentProblem& problem) {
    problem.validate();
    const VandermondeSpec spec{problem.p, problem.s, problem.r};
    RatMatrix t = invert(build_Y(problem.p)) * build_tilde_N(problem.p) * build_V(spec);
    scale_columns_by_signs(t, problem.s);
    return t;
}

std::vector<Rational> interleave_targets(const std::vector<Rational>& a) {
    std::vector<Rational> out(2 * a.size());
    for (std::size_t t = 0; t < a.size(); ++t) out[2 * t] = a[t];
    return out;
}

AdjustmentCertificate construct_b(const AdjustmentProblem& problem, const ConstructOptions& opts) {
    problem.validate();
    const long p = problem.p, s = problem.s, r = problem.r;
    const RatMatrix t = build_T_full(problem);
    const std::vector<Rational> targets = interleave_targets(problem.a);

    const RatMatrix gram = t * t.transpose();
    const std::vector<Rational> u = solve_gram(gram, targets);
    const std::vector<Rational> b = t.transpose().apply(u);

    // The solve is exact, so T b = a must hold; anything else is a bug.
    if (t.apply(b) != targets) throw InternalError("construct_b: interpolation check failed");

    AdjustmentCertificate cert;
    cert.p = p;
    cert.s = s;
    cert.r = r;
    cert.a = problem.a;
    cert.b = b;

    if (opts.compute_quotient) {
        TrigPoly f;
        for (long k = s; k <= r; ++k) f.set(2 * k, b[static_cast<std::size_t>(k - s)]);
        const PowerPoly expansion = trig_to_power(f);
        PowerPoly g;
        for (const auto& [m, v] : expansion.terms()) {
            if (m % 2 != 0) throw InternalError("construct_b: odd power in an even expansion");
            if (m >= 2 * p) {
                g.set(m - 2 * p, v);
            } else if (v != problem.a[static_cast<std::size_t>(m / 2)]) {
                throw InternalError("construct_b: nonzero remainder dividing by y^(2p)");
            }
        }
        // Zero targets must not appear in the expansion at all.
        for (long tt = 0; tt < p; ++tt)
            if (expansion.coeff(2 * tt) != problem.a[static_cast<std::size_t>(tt)])
                throw InternalError("construct_b: nonzero remainder dividing by y^(2p)");
        cert.g = std::move(g);
        cert.has_quotient = true;
        cert.deg_g = cert.g.degree();
    } else {
        // Remainder-only route: coefficients below y^{2p} via direct row sums.
        for (long m = 0; m < 2 * p; ++m) {
            Rational coeff;
            for (long k = s; k <= r; ++k) {
                const BigInt e = cheb_entry(m, 2 * k);
                if (sgn(e) != 0) coeff += b[static_cast<std::size_t>(k - s)] * Rational(e);
            }
            const Rational expected = (m % 2 == 0) ? problem.a[static_cast<std::size_t>(m / 2)] : Rational(0);
            if (coeff != expected) throw InternalError("construct_b: nonzero remainder dividing by y^(2p)");
        }
        cert.has_quotient = false;
        // deg g = 2r - 2p exactly when the top coefficient b_r survives.
        cert.deg_g = b.back().is_zero() ? -1 : 2 * r - 2 * p;
    }
    cert.identity_ok = true;

    for (const Rational& x : problem.a) cert.l1_a += abs(x);
    for (const Rational& x : b) cert.l1_b += abs(x);
    const Constants cs = constants(p, s);
    cert.bound = Rational(cs.c2, BigInt(r)) * cert.l1_a;
    cert.norm_ok = cert.l1_b < cert.bound;
    cert.c1 = cs.c1;
    return cert;
}

RatMatrix build_pinv_map(const AdjustmentProblem& problem) {
    problem.validate();
    const VandermondeSpec spec{problem.p, problem.s, problem.r};
    const RatMatrix v = build_V(spec);
    RatMatrix m = build_Y(problem.p).transpose() * build_tilde_N(problem.p) * (invert(v * v.transpose()) * v);
    scale_columns_by_signs(m, problem.s);
    return m;
}

Rational norm_matrix_diagnostic(const AdjustmentProblem& problem) {
    problem.validate();
    if (static_cast<double>(problem.r) < constants(problem.p, problem.s).c1)
        throw DomainError("norm_matrix_diagnostic: r is below c1, where the bound is not claimed");
    return build_pinv_map(problem).row_l1_max();
}

} // namespace chebadj
