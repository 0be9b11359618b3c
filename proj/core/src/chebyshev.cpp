#include "chebadj/chebyshev.hpp"

#include "chebadj/combinatorics.hpp"

namespace chebadj {

BigInt cheb_entry(long m, long k) {
    if (m < 0 || k < 0) throw DomainError("cheb_entry: negative index");
    if (m > k || (k - m) % 2 != 0) return 0;
    if (k == 0) return 1; // T_0 = 1
    // (-1)^{(k-m)/2} * k/(k+m) * 2^m * binomial((k+m)/2, m); the quotient is exact.
    BigInt v = binomial((k + m) / 2, m) * k;
    v <<= static_cast<unsigned long>(m);
    BigInt d(k + m);
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
    return ((k - m) / 2) % 2 == 0 ? v : BigInt(-v);
}

RatMatrix build_T(long n) {
    if (n < 1) throw DomainError("build_T: n must be positive");
    RatMatrix t(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k)
        for (long m = k % 2; m <= k; m += 2)
            t(static_cast<std::size_t>(m), static_cast<std::size_t>(k)) = Rational(cheb_entry(m, k));
    return t;
}

Rational inv_Tn_entry(long i, long j) {
    if (i < 0 || j < 0) throw DomainError("inv_Tn_entry: negative index");
    if ((i + j) % 2 != 0 || i > j) return Rational(0);
    if (i % 2 == 0) {
        const long a = i / 2, b = j / 2;
        const long d = a == 0 ? 0 : 1;
        return Rational(binomial(2 * b, b - a) << static_cast<unsigned long>(d),
                        BigInt(1) << static_cast<unsigned long>(2 * b));
    }
    const long a = (i - 1) / 2, b = (j - 1) / 2;
    return Rational(binomial(2 * b + 1, b - a), BigInt(1) << static_cast<unsigned long>(2 * b));
}

RatMatrix build_Tkl(long k, long l) {
    if (l < 1) throw DomainError("build_Tkl: l must be positive");
    if (k < 2 || k % 2 != 0) throw DomainError("build_Tkl: k must be even and >= 2");
    RatMatrix t(static_cast<std::size_t>(l), static_cast<std::size_t>(l));
    for (long i = 0; i < l; ++i)
        for (long j = 0; j < l; ++j)
            t(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Rational(cheb_entry(i, k + j));
    return t;
}

Rational inv_Tkl_entry(long k, long l, long i, long j) {
    if (l < 1) throw DomainError("inv_Tkl_entry: l must be positive");
    if (k == 0) return inv_Tn_entry(i, j); // shifted matrix degenerates to build_T(l)
    if (k < 2 || k % 2 != 0) throw DomainError("inv_Tkl_entry: k must be even and >= 2");
    if (i < 0 || j < 0 || i >= l || j >= l) throw DomainError("inv_Tkl_entry: index out of range");
    if ((i + j) % 2 != 0) return Rational(0);

    const long half_k = k / 2;
    if (i % 2 == 0) {
        const long a = i / 2, b2 = j / 2;
        const long alpha = (l + 1) / 2 - 1;
        Rational pref(factorial(2 * b2) * factorial(k + a - 1) * (k + 2 * a),
                      (BigInt(1) << static_cast<unsigned long>(2 * b2)) * factorial(a) *
                          factorial(alpha - a) * factorial(alpha + k + a));
        if ((alpha + b2 + half_k) % 2 != 0) pref = -pref;
        Rational sum;
        for (long b = 0; b <= b2; ++b) {
            BigInt num(1), den(1);
            for (long d = 0; d <= alpha; ++d)
                if (d != a) num *= b * b - (half_k + d) * (half_k + d);
            if (sgn(num) == 0) continue;
            for (long d = 0; d <= b2; ++d)
                if (d != b) den *= b * b - d * d;
            sum += Rational(num, den);
        }
        return pref * sum;
    }
    const long a = (i - 1) / 2, b2 = (j - 1) / 2;
    const long beta = l / 2 - 1;
    Rational pref(factorial(2 * b2 + 1) * factorial(k + a),
                  (BigInt(1) << static_cast<unsigned long>(2 * beta)) * factorial(a) *
                      factorial(beta - a) * factorial(beta + k + a + 1));
    if ((beta + b2 + half_k) % 2 != 0) pref = -pref;
    Rational sum;
    for (long b = 0; b <= b2; ++b) {
        BigInt num(1), den(1);
        const long ob = 2 * b + 1;
        for (long d = 0; d <= beta; ++d)
            if (d != a) num *= ob * ob - (k + 2 * d + 1) * (k + 2 * d + 1);
        if (sgn(num) == 0) continue;
        for (long d = 0; d <= b2; ++d)
            if (d != b) den *= ob * ob - (2 * d + 1) * (2 * d + 1);
        sum += Rational(num, den);
    }
    return pref * sum;
}

Rational y_value(long p, long j) {
    if (p < 0 || j < 0) throw DomainError("y_value: negative argument");
    BigInt sum(0);
    for (long k = 0; k <= 2 * j; ++k) {
        const long base = j - k;
        BigInt term;
        if (2 * p == 0)
            term = 1; // 0^0 = 1 convention
        else {
            mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base),
                          static_cast<unsigned long>(2 * p));
            // even exponent: sign of base is irrelevant
        }
        term *= binomial(2 * j, k);
        if (k % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return Rational(sum) * pow(Rational(-4), p - j);
}

} // namespace chebadj
