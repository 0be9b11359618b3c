#pragma once

#include "chebadj/rational.hpp"

namespace chebadj {

// Generalized binomial coefficient: n may be negative, k must be >= 0.
// binomial(n, k) = n(n-1)...(n-k+1) / k!; zero when 0 <= n < k.
BigInt binomial(long n, long k);

BigInt factorial(long n);

// Coefficient of x^b in x(x+1)...(x+a-1), a >= 1 (unsigned Stirling numbers of
// the first kind in the rising-factorial convention). Zero for b == 0 or b > a.
BigInt rising_stirling(long a, long b);

// Base of the exponential growth of max_j binom(t,j)*binom(t+j,j), about 4.5616;
// enters the admissibility thresholds of the tail bounds and of c1.
double binomial_growth_base();

} // namespace chebadj
