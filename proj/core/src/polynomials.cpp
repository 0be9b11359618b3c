#include "chebadj/polynomials.hpp"

#include <vector>

#include "chebadj/chebyshev.hpp"

namespace chebadj {

PowerPoly trig_to_power(const TrigPoly& p) {
    PowerPoly out;
    if (p.empty()) return out;
    const long deg = p.degree();
    // Accumulate numerators over one running denominator; coefficients of a
    // single Chebyshev column are generated by an integer ratio walk from the
    // leading entry t_k^k = 2^{k-1}, which avoids per-entry binomials.
    std::vector<BigInt> num(static_cast<std::size_t>(deg) + 1);
    BigInt den(1);
    BigInt tmp, divisor;
    for (const auto& [k, a] : p.terms()) {
        const BigInt an = a.num(), ad = a.den();
        BigInt g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), ad.get_mpz_t());
        BigInt scale = ad / g;
        if (scale != 1) {
            for (auto& x : num) x *= scale;
            den *= scale;
        }
        const BigInt mult = an * (den / ad);
        if (k == 0) {
            num[0] += mult;
            continue;
        }
        BigInt t = BigInt(1) << static_cast<unsigned long>(k - 1);
        for (long m = k;; m -= 2) {
            mpz_addmul(num[static_cast<std::size_t>(m)].get_mpz_t(), mult.get_mpz_t(), t.get_mpz_t());
            if (m < 2) break;
            // t_{m-2}^k = -t_m^k * m(m-1) / ((k+m-2)(k-m+2))
            t *= m * (m - 1);
            divisor = BigInt(k + m - 2) * (k - m + 2);
            mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), divisor.get_mpz_t());
            t = -t;
        }
    }
    for (long m = 0; m <= deg; ++m) {
        BigInt& n = num[static_cast<std::size_t>(m)];
        if (sgn(n) != 0) out.set(m, Rational(n, den));
    }
    return out;
}

TrigPoly power_to_trig(const PowerPoly& p) {
    TrigPoly out;
    for (const auto& [j, c] : p.terms())
        for (long i = j;; i -= 2) {
            out.add(i, c * inv_Tn_entry(i, j));
            if (i < 2) break;
        }
    return out;
}

PowerPoly second_derivative(const PowerPoly& p) {
    PowerPoly out;
    for (const auto& [q, c] : p.terms()) {
        if (q >= 2) out.add(q - 2, c * (q * (q - 1)));
        if (q >= 1) out.add(q, c * (-(q * q)));
    }
    return out;
}

} // namespace chebadj
