#include <doctest.h>

#include <algorithm>
#include <vector>

#include "chebadj/bounds.hpp"
#include "chebadj/combinatorics.hpp"
#include "chebadj/polynomials.hpp"

using namespace chebadj;

TEST_CASE("A_sum examples") {
    CHECK(A_sum(2, 0, 5) == binomial(4, 2)); // only j = 0 survives
    CHECK(A_sum(3, 0, 9) == binomial(8, 3));
    CHECK(A_sum(2, 2, 5) == -6);   // 6 - 18 + 6
    CHECK(A_sum(2, 10, 21) == -110); // 190 - 570 + 270
    CHECK(A_sum(1, 1, 4) == 1);
    CHECK(A_sum(2, 1, 18) == 88);
    CHECK(A_sum(2, 60, 118) == -3474);
    CHECK(A_sum(3, 17, 21) == 392);
    CHECK_THROWS_AS(A_sum(5, 0, 5), DomainError);
    CHECK_THROWS_AS(A_sum(-1, 0, 5), DomainError);
}

// Independent oracle: coefficient of x^t y^k in
// (1+y)^k (1+xy)^{-t-1} (1-x)^{-(r-t)} by truncated exact bivariate series.
namespace {

Rational a_by_series(long t, long k, long r) {
    const long tx = t, ky = k;
    const auto idx = [&](long i, long j) { return static_cast<std::size_t>(i * (ky + 1) + j); };
    std::vector<Rational> acc((tx + 1) * (ky + 1));
    // (1+y)^k
    for (long j = 0; j <= ky; ++j) acc[idx(0, j)] = Rational(binomial(k, j));
    // multiply by (1+xy)^{-t-1}: diagonal terms binom(-t-1, d) x^d y^d
    std::vector<Rational> next((tx + 1) * (ky + 1));
    for (long i = 0; i <= tx; ++i)
        for (long j = 0; j <= ky; ++j) {
            if (acc[idx(i, j)].is_zero()) continue;
            for (long d = 0; i + d <= tx && j + d <= ky; ++d)
                next[idx(i + d, j + d)] += acc[idx(i, j)] * Rational(binomial(-t - 1, d));
        }
    acc.swap(next);
    std::fill(next.begin(), next.end(), Rational(0));
    // multiply by (1-x)^{-(r-t)}: terms binom(r-t+u-1, u) x^u
    for (long i = 0; i <= tx; ++i)
        for (long j = 0; j <= ky; ++j) {
            if (acc[idx(i, j)].is_zero()) continue;
            for (long u = 0; i + u <= tx; ++u)
                next[idx(i + u, j)] += acc[idx(i, j)] * Rational(binomial(r - t + u - 1, u));
        }
    return next[idx(tx, ky)];
}

} // namespace

TEST_CASE("A_sum equals the generating-function series coefficient") {
    for (long t = 0; t <= 6; ++t)
        for (long k = 0; k <= 6; ++k)
            for (long r = t + 1; r <= 20; ++r) CHECK(Rational(A_sum(t, k, r)) == a_by_series(t, k, r));
}

TEST_CASE("A_via_Dm examples and identity grid") {
    CHECK(A_via_Dm(2, 2, 5) == Rational(-6));
    CHECK(A_via_Dm(1, 1, 4) == Rational(1));
    CHECK(A_via_Dm(2, 10, 21) == Rational(-110));
    CHECK_THROWS_AS(A_via_Dm(2, 30, 21), DomainError);

    // the residue identity holds on the whole rectangle, not just k >= t
    for (long r = 2; r <= 24; ++r)
        for (long t = 0; t <= r - 1; ++t)
            for (long k = 0; k <= r - 1; ++k) CHECK(A_via_Dm(t, k, r) == Rational(A_sum(t, k, r)));
}

TEST_CASE("dm_term ratio monotonicity at the two endpoints") {
    for (long q = 2; q <= 4; ++q) {
        const long r = q + 2 * q * q;
        for (long t = 2; t <= q; ++t)
            for (long m = 0; m < t; ++m) {
                CHECK(dm_term(r, t, q, m + 1) > dm_term(r, t, q, m));
                CHECK(dm_term(r, t, r - 1 - q, m + 1) < dm_term(r, t, r - 1 - q, m));
            }
    }
}

TEST_CASE("lemma3a examples") {
    const BoundCheckRecord a1 = check_lemma3a(3, 2, 10, 21);
    CHECK(a1.lhs == Rational(110));
    CHECK(a1.rhs == Rational(4) * Rational(3, 17) * Rational(binomial(20, 2)));
    CHECK(a1.ok);

    const BoundCheckRecord a2 = check_lemma3a(2, 2, 2, 10);
    CHECK(a2.rhs == Rational(144)); // 4 * binom(9, 2)
    CHECK(a2.ok);

    const BoundCheckRecord a3 = check_lemma3a(3, 3, 17, 21); // k = r - q - 1 boundary
    CHECK(a3.lhs == Rational(392));
    CHECK(a3.ok);

    CHECK_THROWS_AS(check_lemma3a(3, 2, 2, 21), DomainError);  // k below q
    CHECK_THROWS_AS(check_lemma3a(3, 2, 10, 20), DomainError); // r below q + 2q^2
    CHECK_THROWS_AS(check_lemma3a(1, 1, 4, 10), DomainError);
}

TEST_CASE("lemma3a published bound genuinely fails at q = 4, t < q") {
    // The stated bound decays like (q/r)^{q-t} while the sum itself stays of
    // the order of binom(r-1, t); at q = 4, r = 36 the comparison flips.
    const BoundCheckRecord rec = check_lemma3a(4, 2, 4, 36);
    CHECK(rec.lhs == Rational(223));
    CHECK_FALSE(rec.ok);
}

TEST_CASE("lemma3b examples") {
    const BoundCheckRecord b1 = check_lemma3b(2, 1, 18);
    CHECK(b1.lhs == Rational(88));
    CHECK(b1.rhs == Rational(136));
    CHECK(b1.ok);

    // k = 0 boundary: exact equality, reported as a strict-inequality failure
    const BoundCheckRecord b0 = check_lemma3b(2, 0, 18);
    CHECK(b0.lhs == Rational(binomial(17, 2)));
    CHECK_FALSE(b0.ok);

    CHECK(check_lemma3b(3, 2, 57).ok);
    CHECK_THROWS_AS(check_lemma3b(2, 2, 18), DomainError);
    CHECK_THROWS_AS(check_lemma3b(2, 1, 17), DomainError);
}

TEST_CASE("lemma3c examples") {
    CHECK(lemma3c_min_radius(2) == 118);
    CHECK(lemma3c_min_radius(3) == 987);

    const BoundCheckRecord c1 = check_lemma3c(2, 60, 118);
    CHECK(c1.lhs == Rational(3474));
    CHECK(c1.rhs == Rational(3 * 6786));
    CHECK(c1.ok);
    CHECK(check_lemma3c(2, 2, 118).ok);
    CHECK(check_lemma3c(2, 117, 118).ok);
    CHECK_THROWS_AS(check_lemma3c(2, 60, 100), DomainError);
    CHECK_THROWS_AS(check_lemma3c(2, 1, 118), DomainError);
}

TEST_CASE("c_gamma examples") {
    CHECK(c_gamma(1, Rational(1, 2)) == Rational(0));
    CHECK(c_gamma(2, Rational(1, 2)) == Rational(-1, 2));
    CHECK(c_gamma(5, Rational(0)) == Rational(1));
    CHECK(c_gamma(5, Rational(1)) == Rational(-1));
    CHECK(c_gamma(4, Rational(1)) == Rational(1));
    CHECK_THROWS_AS(c_gamma(0, Rational(1, 2)), DomainError);
    CHECK_THROWS_AS(c_gamma(2, Rational(3, 2)), DomainError);
}

// Second oracle: c_n^gamma as the n-th coefficient of the exact power series
// (1+x)^n / (1+gamma x)^{n+1} computed by series division.
namespace {

Rational c_by_series(long n, const Rational& gamma) {
    const std::size_t len = static_cast<std::size_t>(n) + 1;
    std::vector<Rational> den(len), inv(len), num(len);
    for (long i = 0; i <= n; ++i) {
        den[static_cast<std::size_t>(i)] = Rational(binomial(n + 1, i)) * pow(gamma, i);
        num[static_cast<std::size_t>(i)] = Rational(binomial(n, i));
    }
    inv[0] = Rational(1) / den[0];
    for (std::size_t i = 1; i < len; ++i) {
        Rational acc;
        for (std::size_t j = 1; j <= i; ++j) acc += den[j] * inv[i - j];
        inv[i] = -acc / den[0];
    }
    Rational out;
    for (std::size_t j = 0; j < len; ++j) out += num[j] * inv[len - 1 - j];
    return out;
}

} // namespace

TEST_CASE("c_gamma equals the series-division coefficient for n <= 12") {
    const std::vector<Rational> gammas{Rational(1, 3), Rational(1, 7), Rational(4, 5), Rational(1, 2)};
    for (long n = 1; n <= 12; ++n)
        for (const auto& g : gammas) CHECK(c_gamma(n, g) == c_by_series(n, g));
}

TEST_CASE("lemma4 grid") {
    std::vector<Rational> grid;
    for (long k = 1; k <= 99; ++k) grid.emplace_back(k, 100);
    for (long n : {1L, 2L, 7L, 40L}) {
        const auto records = check_lemma4(n, grid);
        CHECK(records.size() == grid.size());
        for (const auto& rec : records) CHECK(rec.ok);
    }
    // spot values
    CHECK(c_gamma(1, Rational(1, 4)) == Rational(1, 2));
    CHECK(c_gamma(1, Rational(3, 4)) == Rational(-1, 2));
}

TEST_CASE("s3_s4_split") {
    const auto [s3, s4] = s3_s4_split(1, 0, 10);
    CHECK(s3 == Rational(4, 5));
    CHECK(s3 + s4 == Rational(A_sum(1, 0, 10), binomial(9, 1)));

    const auto [t3, t4] = s3_s4_split(2, 59, 118);
    CHECK(abs(t3) <= Rational(2));
    CHECK(abs(t4) < Rational(1));
    CHECK(t3 + t4 == Rational(A_sum(2, 59, 118), binomial(117, 2)));

    CHECK_THROWS_AS(s3_s4_split(0, 0, 10), DomainError);
    CHECK_THROWS_AS(s3_s4_split(2, 10, 10), DomainError);
}

TEST_CASE("bound case labels") {
    CHECK(to_string(BoundCase::lemma3a) == "lemma3a");
    CHECK(to_string(BoundCase::s4) == "s4");
}
