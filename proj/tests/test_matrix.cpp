#include <doctest.h>

#include <random>

#include "chebadj/matrix.hpp"

using namespace chebadj;

namespace {

RatMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    RatMatrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

} // namespace

TEST_CASE("invert examples") {
    CHECK(invert(RatMatrix::identity(3)) == RatMatrix::identity(3));

    const RatMatrix diag = from_rows({{2, 0}, {0, 4}});
    RatMatrix diag_inv(2, 2);
    diag_inv(0, 0) = Rational(1, 2);
    diag_inv(1, 1) = Rational(1, 4);
    CHECK(invert(diag) == diag_inv);

    const RatMatrix gram = from_rows({{3, 6}, {6, 14}});
    RatMatrix expected(2, 2);
    expected(0, 0) = Rational(7, 3);
    expected(0, 1) = Rational(-1);
    expected(1, 0) = Rational(-1);
    expected(1, 1) = Rational(1, 2);
    CHECK(invert(gram) == expected);
}

TEST_CASE("singular matrix reports the pivot column") {
    const RatMatrix m = from_rows({{1, 2}, {2, 4}});
    try {
        invert(m);
        FAIL("expected SingularMatrixError");
    } catch (const SingularMatrixError& e) {
        CHECK(e.pivot_column() == 1);
    }
}

TEST_CASE("invert times original is the identity on random matrices up to 8x8") {
    std::mt19937_64 rng(42);
    int inverted = 0;
    while (inverted < 60) {
        const std::size_t n = rng() % 8 + 1;
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng() % 19) - 9;
        try {
            const RatMatrix inv = invert(m);
            CHECK(inv * m == RatMatrix::identity(n));
            CHECK(m * inv == RatMatrix::identity(n));
            ++inverted;
        } catch (const SingularMatrixError&) {
            // singular draw; try another
        }
    }
}

TEST_CASE("solve_gram examples") {
    CHECK(solve_gram(RatMatrix::identity(2), {Rational(5), Rational(7)}) ==
          std::vector<Rational>{Rational(5), Rational(7)});

    const RatMatrix gram = from_rows({{3, 6}, {6, 14}});
    CHECK(solve_gram(gram, {Rational(1), Rational(0)}) == std::vector<Rational>{Rational(7, 3), Rational(-1)});

    const RatMatrix scaled = from_rows({{2, 0}, {0, 2}});
    CHECK(solve_gram(scaled, {Rational(1), Rational(1)}) ==
          std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

    CHECK_THROWS_AS(solve_gram(from_rows({{1, 2}, {3, 4}}), {Rational(1), Rational(1)}), DomainError);
    CHECK_THROWS_AS(solve_gram(from_rows({{0, 0}, {0, 0}}), {Rational(1), Rational(1)}),
                    SingularMatrixError);
}

TEST_CASE("row and column l1 norms") {
    CHECK(RatMatrix::identity(3).row_l1_max() == Rational(1));
    CHECK(from_rows({{1, -2}, {3, 0}}).row_l1_max() == Rational(3));
    RatMatrix m(2, 2);
    m(0, 0) = Rational(1, 2);
    m(0, 1) = Rational(1, 3);
    CHECK(m.row_l1_max() == Rational(5, 6));
    CHECK(m.col_l1_max() == Rational(1, 2));
}

TEST_CASE("spectral norm estimate on known matrices") {
    CHECK(spectral_norm_estimate(RatMatrix::identity(2), 1e-12) == doctest::Approx(1.0).epsilon(1e-9));
    const RatMatrix diag = from_rows({{3, 0}, {0, -5}});
    CHECK(spectral_norm_estimate(diag, 1e-12) == doctest::Approx(5.0).epsilon(1e-9));
    const RatMatrix nilpotent = from_rows({{0, 1}, {0, 0}});
    CHECK(spectral_norm_estimate(nilpotent, 1e-12) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(spectral_norm_estimate(from_rows({{0, 0}, {0, 0}}), 1e-12) == 0.0);
    CHECK_THROWS_AS(spectral_norm_estimate(RatMatrix(), 1e-12), DomainError);
    CHECK_THROWS_AS(spectral_norm_estimate(RatMatrix::identity(2), 0.0), DomainError);
}

TEST_CASE("spectral norm is below sqrt(row l1 max * col l1 max)") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = rng() % 6 + 1, cols = rng() % 6 + 1;
        RatMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rng() % 21) - 10;
        const double est = spectral_norm_estimate(m, 1e-12);
        const double cap = std::sqrt(m.row_l1_max().to_double() * m.col_l1_max().to_double());
        CHECK(est <= cap + 1e-6);
    }
}

TEST_CASE("zero-column matrices multiply to zero Gram blocks") {
    const RatMatrix empty(2, 0);
    const RatMatrix gram = empty * empty.transpose();
    CHECK(gram.rows() == 2);
    CHECK(gram.cols() == 2);
    CHECK(gram == RatMatrix(2, 2));
}
