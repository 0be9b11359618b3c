#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chebadj/rational.hpp"

namespace chebadj {

enum class BoundCase { lemma3a, lemma3b, lemma3c, lemma4, s4 };

std::string to_string(BoundCase c);

// One exact comparison: ok <=> lhs <= rhs (lemma3a) or lhs < rhs (strict cases).
// Parameter slots not applicable to a case are left at -1 (gamma at 0).
struct BoundCheckRecord {
    BoundCase kind{};
    long q = -1, t = -1, k = -1, r = -1, n = -1;
    Rational gamma;
    Rational lhs, rhs;
    bool ok = false;
};

// The alternating binomial sum
//   A(t, k, r) = sum_{j=0}^{min(k,t)} (-1)^j binom(k,j) binom(j+t,j) binom(r-j-1, r-t-1)
// by direct exact summation. Requires 0 <= t <= r-1, k >= 0.
BigInt A_sum(long t, long k, long r);

// The same value through the residue route: the r-t-1st derivative of
// (1+xy)^{-t-1} x^{-t-1} at x = 1 contributes, per Leibniz term m,
//   D_m = binom(t,m) binom(r-t-1, k-m) (r-1-k+m)! (t+k-m)! / ((r-t-1)! (t!)^2),
// and A(t, k, r) = sum_m (-1)^m D_m. Exercised against A_sum on full grids.
Rational A_via_Dm(long t, long k, long r);

// Summand of the published residue expansion, used only for its ratio
// monotonicity properties:
//   dm_term(r,t,k,m) = (r-1-k+m)! (t+k-m)! / ((r-t-1)! t! m! (t-m)!).
Rational dm_term(long r, long t, long k, long m);

// |A(t,k,r)| <= 4 (q/(r-1-q))^{q-t} binom(r-1, t) on q >= t >= 2,
// r >= q + 2q^2, q <= k <= r-q-1.
BoundCheckRecord check_lemma3a(long q, long t, long k, long r);

// |A(t,k,r)| < binom(r-1, t) on t >= 2, r >= 2t^3 + t, 0 <= k < t.
// k = 0 yields equality, reported as-is.
BoundCheckRecord check_lemma3b(long t, long k, long r);

// |A(t,k,r)| < 3 binom(r-1, t) on t >= 2, r >= 2 L^t t^{1.5}, t <= k <= r-1.
BoundCheckRecord check_lemma3c(long t, long k, long r);

// Smallest integer radius accepted by check_lemma3c for this t.
long lemma3c_min_radius(long t);

// n-th Taylor coefficient of (1+x)^n (1 + gamma x)^{-n-1}:
//   c_n^gamma = sum_j binom(n, n-j) binom(-n-1, j) gamma^j.
Rational c_gamma(long n, const Rational& gamma);

// For each gamma: |c_n^gamma| <= 2 and c_n^gamma = (-1)^n c_n^{1-gamma},
// both exact; ok is the conjunction.
std::vector<BoundCheckRecord> check_lemma4(long n, std::span<const Rational> gamma_grid);

// Decomposition A/binom(r-1,t) = S3 + S4 with S3 = c_t^{(k+1)/r}; S4 is the
// exact difference. For r past lemma3c_min_radius, |S3| <= 2 and |S4| < 1.
std::pair<Rational, Rational> s3_s4_split(long t, long k, long r);

} // namespace chebadj
