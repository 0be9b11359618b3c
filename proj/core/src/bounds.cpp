#include "chebadj/bounds.hpp"

#include <cmath>

#include "chebadj/combinatorics.hpp"

namespace chebadj {

std::string to_string(BoundCase c) {
    switch (c) {
    case BoundCase::lemma3a: return "lemma3a";
    case BoundCase::lemma3b: return "lemma3b";
    case BoundCase::lemma3c: return "lemma3c";
    case BoundCase::lemma4: return "lemma4";
    case BoundCase::s4: return "s4";
    }
    return "?";
}

BigInt A_sum(long t, long k, long r) {
    if (r < 1 || t < 0 || t > r - 1 || k < 0) throw DomainError("A_sum: parameters out of range");
    BigInt total(0);
    const long jmax = std::min(k, t);
    for (long j = 0; j <= jmax; ++j) {
        BigInt term = binomial(k, j) * binomial(j + t, j) * binomial(r - j - 1, r - t - 1);
        if (j % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

Rational A_via_Dm(long t, long k, long r) {
    if (r < 1 || t < 0 || t > r - 1 || k < 0 || k > r - 1)
        throw DomainError("A_via_Dm: parameters out of range");
    const BigInt denom = factorial(r - t - 1) * factorial(t) * factorial(t);
    Rational total;
    for (long m = 0; m <= std::min(t, k); ++m) {
        const BigInt outer = binomial(t, m) * binomial(r - t - 1, k - m);
        if (sgn(outer) == 0) continue; // m below the clamp k+t+1-r
        BigInt num = outer * factorial(r - 1 - k + m) * factorial(t + k - m);
        if (m % 2 != 0) num = -num;
        total += Rational(num, denom);
    }
    return total;
}

Rational dm_term(long r, long t, long k, long m) {
    if (m < 0 || m > t || t < 0 || t > r - 1 || k < 0 || r - 1 - k + m < 0)
        throw DomainError("dm_term: parameters out of range");
    return Rational(factorial(r - 1 - k + m) * factorial(t + k - m),
                    factorial(r - t - 1) * factorial(t) * factorial(m) * factorial(t - m));
}

BoundCheckRecord check_lemma3a(long q, long t, long k, long r) {
    if (!(q >= t && t >= 2)) throw DomainError("lemma3a: need q >= t >= 2");
    if (r < q + 2 * q * q) throw DomainError("lemma3a: need r >= q + 2q^2");
    if (!(k >= q && k <= r - q - 1)) throw DomainError("lemma3a: need q <= k <= r-q-1");
    BoundCheckRecord rec;
    rec.kind = BoundCase::lemma3a;
    rec.q = q;
    rec.t = t;
    rec.k = k;
    rec.r = r;
    rec.lhs = abs(Rational(A_sum(t, k, r)));
    rec.rhs = Rational(4) * pow(Rational(q, r - 1 - q), q - t) * Rational(binomial(r - 1, t));
    rec.ok = rec.lhs <= rec.rhs;
    return rec;
}

BoundCheckRecord check_lemma3b(long t, long k, long r) {
    if (t < 2) throw DomainError("lemma3b: need t >= 2");
    if (r < 2 * t * t * t + t) throw DomainError("lemma3b: need r >= 2t^3 + t");
    if (!(k >= 0 && k < t)) throw DomainError("lemma3b: need 0 <= k < t");
    BoundCheckRecord rec;
    rec.kind = BoundCase::lemma3b;
    rec.t = t;
    rec.k = k;
    rec.r = r;
    rec.lhs = abs(Rational(A_sum(t, k, r)));
    rec.rhs = Rational(binomial(r - 1, t));
    rec.ok = rec.lhs < rec.rhs;
    return rec;
}

long lemma3c_min_radius(long t) {
    if (t < 1) throw DomainError("lemma3c_min_radius: need t >= 1");
    const double threshold =
        2.0 * std::pow(binomial_growth_base(), static_cast<double>(t)) * std::pow(static_cast<double>(t), 1.5);
    return static_cast<long>(std::ceil(threshold));
}

BoundCheckRecord check_lemma3c(long t, long k, long r) {
    if (t < 2) throw DomainError("lemma3c: need t >= 2");
    if (r < lemma3c_min_radius(t)) throw DomainError("lemma3c: r below the admissible radius");
    if (!(k >= t && k <= r - 1)) throw DomainError("lemma3c: need t <= k <= r-1");
    BoundCheckRecord rec;
    rec.kind = BoundCase::lemma3c;
    rec.t = t;
    rec.k = k;
    rec.r = r;
    rec.lhs = abs(Rational(A_sum(t, k, r)));
    rec.rhs = Rational(3) * Rational(binomial(r - 1, t));
    rec.ok = rec.lhs < rec.rhs;
    return rec;
}

Rational c_gamma(long n, const Rational& gamma) {
    if (n < 1) throw DomainError("c_gamma: need n >= 1");
    if (gamma < Rational(0) || gamma > Rational(1)) throw DomainError("c_gamma: gamma must lie in [0, 1]");
    Rational total;
    Rational gpow(1);
    for (long j = 0; j <= n; ++j) {
        total += Rational(binomial(n, n - j) * binomial(-n - 1, j)) * gpow;
        gpow *= gamma;
    }
    return total;
}

std::vector<BoundCheckRecord> check_lemma4(long n, std::span<const Rational> gamma_grid) {
    if (n < 1) throw DomainError("check_lemma4: need n >= 1");
    std::vector<BoundCheckRecord> out;
    out.reserve(gamma_grid.size());
    for (const Rational& g : gamma_grid) {
        const Rational c = c_gamma(n, g);
        Rational mirrored = c_gamma(n, Rational(1) - g);
        if (n % 2 != 0) mirrored = -mirrored;
        BoundCheckRecord rec;
        rec.kind = BoundCase::lemma4;
        rec.n = n;
        rec.gamma = g;
        rec.lhs = abs(c);
        rec.rhs = 2;
        rec.ok = rec.lhs <= rec.rhs && c == mirrored;
        out.push_back(std::move(rec));
    }
    return out;
}

std::pair<Rational, Rational> s3_s4_split(long t, long k, long r) {
    if (t < 1) throw DomainError("s3_s4_split: need t >= 1");
    if (!(k >= 0 && k <= r - 1)) throw DomainError("s3_s4_split: need 0 <= k <= r-1");
    const Rational s3 = c_gamma(t, Rational(k + 1, r));
    const Rational s4 = Rational(A_sum(t, k, r), binomial(r - 1, t)) - s3;
    return {s3, s4};
}

} // namespace chebadj
