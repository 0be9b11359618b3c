#include <doctest.h>

#include <random>

#include "chebadj/vandermonde.hpp"

using namespace chebadj;

TEST_CASE("build_V examples") {
    RatMatrix v = build_V({1, 1, 3});
    CHECK(v.rows() == 2);
    CHECK(v.cols() == 3);
    CHECK(v(0, 0) == Rational(1));
    CHECK(v(1, 2) == Rational(3));

    v = build_V({1, 2, 3});
    CHECK(v.cols() == 2);
    CHECK(v(1, 0) == Rational(2));
    CHECK(v(1, 1) == Rational(3));

    v = build_V({2, 1, 4});
    for (long i = 0; i < 4; ++i)
        for (long j = 0; j < 4; ++j)
            CHECK(v(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) == pow(Rational(j + 1), i));

    CHECK_THROWS_AS(build_V({1, 3, 3}), DomainError); // one node, need two
    CHECK_THROWS_AS(build_V({1, 0, 4}), DomainError);
}

TEST_CASE("build_W and build_Z") {
    const RatMatrix w = build_W(1, 3);
    CHECK(w.rows() == 2);
    CHECK(w.cols() == 3);
    CHECK(w(1, 1) == Rational(2));

    const RatMatrix z_empty = build_Z(1, 1);
    CHECK(z_empty.rows() == 2);
    CHECK(z_empty.cols() == 0);

    const RatMatrix z = build_Z(2, 3);
    CHECK(z.cols() == 2);
    CHECK(z(3, 1) == Rational(8));

    CHECK_THROWS_AS(build_W(1, 1), DomainError);
}

TEST_CASE("Gram split V V* = W W* - Z Z* on the full small grid") {
    for (long p = 1; p <= 3; ++p)
        for (long s = 1; s <= 5; ++s)
            for (long r = s + 2 * p - 1; r <= 60; r += 7) {
                const VandermondeSpec spec{p, s, r};
                const RatMatrix v = build_V(spec);
                const RatMatrix w = build_W(p, r);
                const RatMatrix z = build_Z(p, s);
                RatMatrix rhs = w * w.transpose();
                const RatMatrix zz = z * z.transpose();
                for (std::size_t i = 0; i < rhs.rows(); ++i)
                    for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(i, j) -= zz(i, j);
                CHECK(v * v.transpose() == rhs);
            }
}

TEST_CASE("pinv_exact examples and properties") {
    CHECK(pinv_exact(RatMatrix::identity(2)) == RatMatrix::identity(2));

    RatMatrix row(1, 2);
    row(0, 0) = 1;
    row(0, 1) = 1;
    const RatMatrix rp = pinv_exact(row);
    CHECK(rp(0, 0) == Rational(1, 2));
    CHECK(rp(1, 0) == Rational(1, 2));

    const RatMatrix w = build_W(1, 3);
    const RatMatrix wp = pinv_exact(w);
    CHECK(wp(0, 0) == Rational(4, 3));
    CHECK(wp(0, 1) == Rational(-1, 2));
    CHECK(wp(1, 0) == Rational(1, 3));
    CHECK(wp(1, 1) == Rational(0));
    CHECK(wp(2, 0) == Rational(-2, 3));
    CHECK(wp(2, 1) == Rational(1, 2));
    CHECK(w * wp == RatMatrix::identity(2));

    RatMatrix tall(3, 2);
    CHECK_THROWS_AS(pinv_exact(tall), DomainError);

    RatMatrix deficient(2, 3); // second row = 2 * first
    for (long j = 0; j < 3; ++j) {
        deficient(0, static_cast<std::size_t>(j)) = j + 1;
        deficient(1, static_cast<std::size_t>(j)) = 2 * (j + 1);
    }
    CHECK_THROWS_AS(pinv_exact(deficient), SingularMatrixError);
}

TEST_CASE("pinv_exact on random full-rank wide integer matrices") {
    std::mt19937_64 rng(8);
    int done = 0;
    while (done < 30) {
        const std::size_t rows = rng() % 3 + 1;
        const std::size_t cols = rows + rng() % 4;
        RatMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rng() % 15) - 7;
        try {
            const RatMatrix pinv = pinv_exact(m);
            CHECK(m * pinv == RatMatrix::identity(rows));
            // minimum-norm solution symmetry: pinv * m is symmetric
            const RatMatrix proj = pinv * m;
            CHECK(proj == proj.transpose());
            ++done;
        } catch (const SingularMatrixError&) {
        }
    }
}

TEST_CASE("w_dagger_closed examples from the exact Gram route") {
    CHECK(w_dagger_closed(0, 0, 1, 3) == Rational(4, 3));
    CHECK(w_dagger_closed(1, 1, 1, 3) == Rational(0));
    CHECK(w_dagger_closed(1, 0, 1, 3) == Rational(-1, 2));
    CHECK_THROWS_AS(w_dagger_closed(2, 0, 1, 3), DomainError);
    CHECK_THROWS_AS(w_dagger_closed(0, 3, 1, 3), DomainError);
}

TEST_CASE("exactly one sign/Stirling convention matches the Gram pseudoinverse") {
    using detail::InnerSign;
    using detail::StirlingConvention;
    const std::vector<std::pair<StirlingConvention, InnerSign>> combos{
        {StirlingConvention::unsigned_rising, InnerSign::alternating_j},
        {StirlingConvention::unsigned_rising, InnerSign::alternating_j_plus_one},
        {StirlingConvention::signed_first_kind, InnerSign::alternating_j},
        {StirlingConvention::signed_first_kind, InnerSign::alternating_j_plus_one},
    };
    std::vector<bool> matches(combos.size(), true);
    for (long p = 1; p <= 2; ++p)
        for (long r = 2 * p; r <= 20; ++r) {
            const RatMatrix w = build_W(p, r);
            const RatMatrix wd = invert(w * w.transpose()) * w;
            for (long q = 0; q < 2 * p; ++q)
                for (long k = 0; k < r; ++k)
                    for (std::size_t c = 0; c < combos.size(); ++c) {
                        if (!matches[c]) continue;
                        if (detail::w_dagger_closed_conv(q, k, p, r, combos[c].first, combos[c].second) !=
                            wd(static_cast<std::size_t>(q), static_cast<std::size_t>(k)))
                            matches[c] = false;
                    }
        }
    CHECK(matches[0]); // unsigned Stirling, inner (-1)^j: the shipped convention
    CHECK_FALSE(matches[1]);
    CHECK_FALSE(matches[2]);
    CHECK_FALSE(matches[3]);
}

TEST_CASE("neumann_X") {
    // s = 1: V coincides with W, X vanishes
    CHECK(neumann_X({1, 1, 5}) == RatMatrix(2, 2));
    CHECK(neumann_X({2, 1, 9}) == RatMatrix(4, 4));

    const RatMatrix x = neumann_X({1, 2, 5});
    CHECK(x(0, 0) == Rational(2));
    CHECK(x(0, 1) == Rational(2));
    CHECK(x(1, 0) == Rational(-1, 2));
    CHECK(x(1, 1) == Rational(-1, 2));

    // reconstruction identity (I + X)(W W*)^{-1} = (V V*)^{-1}
    for (long s = 1; s <= 4; ++s)
        for (long r = s + 3; r <= 20; r += 3) {
            const VandermondeSpec spec{2, s, r};
            const RatMatrix v = build_V(spec);
            const RatMatrix w = build_W(2, r);
            RatMatrix ix = neumann_X(spec);
            for (std::size_t i = 0; i < ix.rows(); ++i) ix(i, i) += 1;
            CHECK(ix * invert(w * w.transpose()) == invert(v * v.transpose()));
        }
}

TEST_CASE("gram condition diagnostic") {
    const auto d3 = gram_condition_diagnostic(1, 3);
    CHECK(d3.kappa_estimate == doctest::Approx(46.139).epsilon(1e-3));
    CHECK(d3.reference == doctest::Approx(12.0).epsilon(1e-12));

    const auto d23 = gram_condition_diagnostic(1, 2);
    CHECK(d23.kappa_estimate == doctest::Approx(46.98).epsilon(1e-3));
    CHECK(d23.reference == doctest::Approx(16.0 / 3.0).epsilon(1e-12));

    const auto d100 = gram_condition_diagnostic(1, 100);
    CHECK(d100.reference == doctest::Approx(4.0 / 3.0 * 1e4).epsilon(1e-9));
    // same order of magnitude in the asymptotic regime
    CHECK(d100.kappa_estimate / d100.reference > 0.1);
    CHECK(d100.kappa_estimate / d100.reference < 10.0);
}
