#pragma once

#include <vector>

#include "chebadj/matrix.hpp"
#include "chebadj/polynomials.hpp"

namespace chebadj {

// Threshold constants of the construction. c2 enters the certified coefficient
// bound sum|b_k| < c2/r * sum|a_t| and is exact; c1 is the admissible-radius
// threshold and lives in floats (it involves an irrational base).
struct Constants {
    double threshold_base; // about 4.5616 (see binomial_growth_base)
    double c1;             // max(16 p^2 s^{4p-1}, 8 base^{2p-1} p^3)
    BigInt c2;             // 2^16 p^{4p+9} s^{4p-1}
};

Constants constants(long p, long s);

// Smallest integer r with r >= c1(p, s).
long c1_ceiling(long p, long s);

// 2p x 2p block matrix: identity on the odd/odd block, entry (2k, 2u) equal to
// 2^{-2k} y_value(k, u) on the even/even block, zeros elsewhere. The even
// block is lower triangular with nonzero diagonal (2u)!/4^u, hence invertible.
RatMatrix build_Y(long p);

// diag((-1)^{offset + j}), j = 0..count-1.
RatMatrix build_signs(long count, long offset);

// 2p x 2p diagonal with (2i, 2i) = (-1)^i and 1 on odd positions.
RatMatrix build_tilde_N(long p);

// Inputs of the construction: p target coefficients a_0..a_{p-1} for the
// powers cos^0, cos^2, ..., cos^{2p-2}, matched by frequencies 2s..2r.
struct AdjustmentProblem {
    long p = 0;
    long s = 0;
    long r = 0;
    std::vector<Rational> a;

    void validate() const;
};

// The 2p x (r-s+1) constraint matrix Y^{-1} tilde_N V diag((-1)^k, k=s..r).
// Its even rows reproduce (cheb_entry(2i, 2k))_{k=s..r} exactly; the sign
// offset s (rather than the column index) is what makes that hold for odd s.
RatMatrix build_T_full(const AdjustmentProblem& problem);

// Interleaves targets with zeros: (a_0, 0, a_1, 0, ..., a_{p-1}, 0).
std::vector<Rational> interleave_targets(const std::vector<Rational>& a);

struct AdjustmentCertificate {
    long p = 0, s = 0, r = 0;
    std::vector<Rational> a;
    std::vector<Rational> b; // coefficients of cos 2kx, k = s..r
    PowerPoly g;             // quotient of the expansion minus targets by y^{2p}
    bool has_quotient = false;
    long deg_g = -1;         // -1 when the quotient was skipped and b_r == 0
    Rational l1_a, l1_b;
    Rational bound;          // c2/r * l1_a, exact
    bool identity_ok = false;
    bool norm_ok = false;
    double c1 = 0.0;
};

struct ConstructOptions {
    // The quotient has ~2(r-p) coefficients with O(r)-bit entries; very large
    // runs can skip materializing it, in which case the identity is verified
    // through the 2p low-order power coefficients (the division remainder).
    bool compute_quotient = true;
};

// The minimum-l2 solution b of T b = a with interleaved targets, together with
// the exact quotient g, coefficient norms, and the certified-bound verdict.
// A nonzero division remainder or failed interpolation throws InternalError;
// both indicate a construction bug, not bad input.
AdjustmentCertificate construct_b(const AdjustmentProblem& problem, const ConstructOptions& opts = {});

// The matrix M = Y* tilde_N (V V*)^{-1} V diag((-1)^k) of the factorized
// route: b = M^T (interleaved a). Cross-checks construct_b's Gram route.
RatMatrix build_pinv_map(const AdjustmentProblem& problem);

// row_l1_max of build_pinv_map, for comparison against c2/r. Requires
// r >= c1(p, s), where the bound is claimed.
Rational norm_matrix_diagnostic(const AdjustmentProblem& problem);

} // namespace chebadj
