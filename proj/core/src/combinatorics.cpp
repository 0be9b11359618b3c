#include "chebadj/combinatorics.hpp"

#include <cmath>
#include <vector>

namespace chebadj {

BigInt binomial(long n, long k) {
    if (k < 0) throw DomainError("binomial: k must be non-negative");
    BigInt out;
    if (n >= 0) {
        mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return out;
    }
    // binomial(n, k) = (-1)^k * binomial(k - n - 1, k) for negative n
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
    return (k % 2 == 0) ? out : BigInt(-out);
}

BigInt factorial(long n) {
    if (n < 0) throw DomainError("factorial: negative argument");
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

BigInt rising_stirling(long a, long b) {
    if (a < 1) throw DomainError("rising_stirling: a must be positive");
    if (b < 0) throw DomainError("rising_stirling: b must be non-negative");
    if (b == 0 || b > a) return 0;
    // expand x(x+1)...(x+a-1) term by term
    std::vector<BigInt> poly{0, 1}; // x
    for (long i = 1; i < a; ++i) {
        std::vector<BigInt> next(poly.size() + 1);
        for (std::size_t d = 0; d < poly.size(); ++d) {
            next[d] += poly[d] * i;
            next[d + 1] += poly[d];
        }
        poly = std::move(next);
    }
    return poly[static_cast<std::size_t>(b)];
}

double binomial_growth_base() {
    const double rt2 = std::sqrt(2.0);
    return std::pow(rt2 + 1.0, 1.0 + 1.0 / rt2) * std::pow(rt2 - 1.0, -1.0 + 1.0 / rt2) *
           std::pow(2.0, -1.0 / (2.0 * rt2));
}

} // namespace chebadj
