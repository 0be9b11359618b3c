#pragma once

#include "chebadj/matrix.hpp"

namespace chebadj {

// Vandermonde family over consecutive integer nodes s..r with rows of powers
// 0..2p-1. The Gram matrix V V* is invertible when there are at least 2p nodes.
struct VandermondeSpec {
    long p = 0;
    long s = 0;
    long r = 0;

    long node_count() const { return r - s + 1; }
    void validate() const;
};

// 2p x (r-s+1), entry (i, j) = (s+j)^i.
RatMatrix build_V(const VandermondeSpec& spec);

// 2p x r over nodes 1..r; requires r >= 2p.
RatMatrix build_W(long p, long r);

// 2p x (s-1) over nodes 1..s-1; s == 1 yields a matrix with zero columns, so
// V V* = W W* - Z Z* holds uniformly.
RatMatrix build_Z(long p, long s);

// Exact right pseudoinverse M*(M M*)^{-1} of a full-row-rank wide matrix;
// M * pinv_exact(M) is the identity. Rank deficiency surfaces as
// SingularMatrixError from the Gram inversion.
RatMatrix pinv_exact(const RatMatrix& m);

// Closed-form entry (q, k) of (W W*)^{-1} W built from rising-factorial
// Stirling numbers and the alternating binomial sum A(t, k, r). The sign and
// Stirling conventions are pinned by sweeping all four combinations against
// the exact Gram pseudoinverse (see detail::w_dagger_closed_conv); the unique
// match is unsigned Stirling numbers with the inner factor (-1)^j.
Rational w_dagger_closed(long q, long k, long p, long r);

// Correction X with (V V*)^{-1} = (I + X)(W W*)^{-1}, computed in closed form
// as X = (V V*)^{-1} (W W*) - I.
RatMatrix neumann_X(const VandermondeSpec& spec);

struct GramConditionDiagnostic {
    double kappa_estimate; // float 2-norm condition number of W W*
    double reference;      // (2p)^2/(4p-1) * r^{4p-2}
};

// Reporting only; whether the reference is exact or asymptotic is not gated.
GramConditionDiagnostic gram_condition_diagnostic(long p, long r);

namespace detail {

enum class StirlingConvention { unsigned_rising, signed_first_kind };
enum class InnerSign { alternating_j, alternating_j_plus_one };

// Convention-parameterized variant used by the sweep test that fixes the
// published transcription.
Rational w_dagger_closed_conv(long q, long k, long p, long r, StirlingConvention sc, InnerSign is);

} // namespace detail

} // namespace chebadj
