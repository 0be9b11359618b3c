#pragma once

#include "chebadj/matrix.hpp"

namespace chebadj {

// Coefficient of x^m in the Chebyshev polynomial T_k(x). Zero when m > k or
// k - m is odd; cheb_entry(0, 0) == 1 by the T_0 == 1 convention.
BigInt cheb_entry(long m, long k);

// n x n upper-triangular matrix with entry (m, k) = cheb_entry(m, k): column k
// holds the power-basis coefficients of T_k.
RatMatrix build_T(long n);

// Entry (i, j) of the inverse of build_T(n); independent of n. Column j gives
// the expansion of cos^j x over {cos ix}. Zero when i + j is odd or i > j;
// otherwise, with i = 2a (or 2a+1) and j = 2b (or 2b+1):
//   even:  2^{d_a - 2b} * binomial(2b, b - a),  d_0 = 0, d_a = 1 for a > 0
//   odd:   2^{-2b}      * binomial(2b + 1, b - a)
// The odd branch carries no 2^{d_a} factor: the frequency-zero doubling that
// produces it in the even case has no odd counterpart (verified against exact
// inversion, which is what the test suite pins).
Rational inv_Tn_entry(long i, long j);

// l x l matrix with entry (i, j) = cheb_entry(i, k + j); k must be even, >= 2.
RatMatrix build_Tkl(long k, long l);

// Closed-form entry (i, j) of the inverse of build_Tkl(k, l), evaluated in
// exact rationals. k == 0 reduces to inv_Tn_entry (the shifted matrix is then
// the plain coefficient matrix); odd k is a domain error.
Rational inv_Tkl_entry(long k, long l, long i, long j);

// The 2p-th derivative of cos^{2j} x at x = pi/2, equivalently the constant
// term of the p-fold second-derivative of y^{2j} as a polynomial in y = cos x:
//   (-4)^{p-j} * sum_{k=0}^{2j} (-1)^k binomial(2j, k) (j-k)^{2p},  0^0 = 1.
Rational y_value(long p, long j);

} // namespace chebadj
