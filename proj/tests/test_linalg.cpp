#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace bezout;
using testsupport::Rng;
using R = Rational;

namespace {

// the two worked 4x4 Bezout matrices used as cross-module fixtures
Matrix<R> bernstein_fixture() {
    return {{R(1), R(17, 6), R(10, 3), R(3)},
            {R(17, 6), R(157, 36), R(83, 18), R(4)},
            {R(10, 3), R(83, 18), R(187, 36), R(19, 4)},
            {R(3), R(4), R(19, 4), R(9, 2)}};
}

Matrix<R> hermite_fixture() {
    return {{R(36), R(-102), R(-84), R(-150)},
            {R(-102), R(181), R(94), R(173)},
            {R(-84), R(94), R(4), R(14)},
            {R(-150), R(173), R(14), R(37)}};
}

} // namespace

TEST_CASE("rref of the identity is the identity", "[linalg]") {
    const auto r = rref(Matrix<R>::identity(3));
    CHECK(r.matrix == Matrix<R>::identity(3));
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("rref of a rank-1 matrix", "[linalg]") {
    const Matrix<R> m{{R(1), R(2)}, {R(2), R(4)}};
    const auto r = rref(m);
    CHECK(r.matrix == Matrix<R>{{R(1), R(2)}, {R(0), R(0)}});
    CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref of the Bernstein fixture has three pivots", "[linalg]") {
    CHECK(rref(bernstein_fixture()).pivots.size() == 3);
}

TEST_CASE("rank", "[linalg]") {
    CHECK(rank(Matrix<R>(2, 3)) == 0);
    CHECK(rank(bernstein_fixture()) == 3);
    CHECK(rank(hermite_fixture()) == 2);
}

TEST_CASE("null space of a full-rank matrix is empty", "[linalg]") {
    CHECK(null_space_basis(Matrix<R>::identity(2)).cols() == 0);
}

TEST_CASE("null space of the Bernstein fixture", "[linalg]") {
    const Matrix<R> ns = null_space_basis(bernstein_fixture());
    REQUIRE(ns.cols() == 1);
    const Matrix<R> expected = testsupport::col_matrix({R(-1), R(6), R(-12), R(8)});
    CHECK(testsupport::same_span(ns, expected));
    CHECK((bernstein_fixture() * ns).is_zero());
}

TEST_CASE("null space of the Hermite fixture", "[linalg]") {
    const Matrix<R> ns = null_space_basis(hermite_fixture());
    REQUIRE(ns.cols() == 2);
    const Matrix<R> expected{{R(-22), R(-13)}, {R(-21), R(-12)}, {R(0), R(9)}, {R(9), R(0)}};
    CHECK(testsupport::same_span(ns, expected));
    CHECK((hermite_fixture() * ns).is_zero());
}

TEST_CASE("solve_left pins the last entry to one", "[linalg]") {
    CHECK(solve_left(Matrix<R>{{R(-1)}, {R(1)}}) == std::vector<R>{R(1), R(1)});

    const Matrix<R> z{{R(-22), R(-4)}, {R(10), R(28)}, {R(74), R(92)}};
    CHECK(solve_left(z) == std::vector<R>{R(2), R(-3), R(1)});

    // k = 0: no constraints, the solution is just (1)
    CHECK(solve_left(Matrix<R>(1, 0)) == std::vector<R>{R(1)});
}

TEST_CASE("solve_left reports inconsistency and underdetermination", "[linalg]") {
    CHECK_THROWS_MATCHES(solve_left(Matrix<R>{{R(0)}, {R(1)}}), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::StartsWith("NoSolution")));
    CHECK_THROWS_MATCHES(solve_left(Matrix<R>{{R(0)}, {R(0)}}), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::StartsWith("NonUniqueSolution")));
}

TEST_CASE("inverse is exact and detects singularity", "[linalg]") {
    const Matrix<R> m{{R(2), R(1)}, {R(7), R(4)}};
    CHECK(inverse(m) * m == Matrix<R>::identity(2));
    CHECK_THROWS_AS(inverse(Matrix<R>{{R(1), R(2)}, {R(2), R(4)}}), Error);
}

TEST_CASE("null-space and rank properties on random matrices", "[linalg]") {
    Rng rng(101);
    for (int round = 0; round < 40; ++round) {
        const auto rows = static_cast<std::size_t>(rng.integer(1, 6));
        const auto cols = static_cast<std::size_t>(rng.integer(1, 8));
        Matrix<R> m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.rational(9);

        const Matrix<R> ns = null_space_basis(m);
        CHECK((m * ns).is_zero());
        CHECK(rank(m) + ns.cols() == cols);

        const auto r = rref(m);
        CHECK(rref(r.matrix).matrix == r.matrix);

        // rank is invariant under unimodular row/column mixing
        const Matrix<R> left = testsupport::random_unimodular(rng, rows);
        const Matrix<R> right = testsupport::random_unimodular(rng, cols);
        CHECK(rank(left * m * right) == rank(m));
    }
}

TEST_CASE("float mode: rank decisions respect the scaled tolerance", "[linalg]") {
    Matrix<double> m{{1.0, 2.0}, {0.5, 1.0 + 1e-13}};
    CHECK(rank(m) == 1); // 1e-13 perturbation is below 1e-9 * max entry
    Matrix<double> m2{{1.0, 2.0}, {0.5, 1.0 + 1e-5}};
    CHECK(rank(m2) == 2);
    CHECK(rank(m2, 1e-3) == 1); // looser tolerance collapses it again

    const Matrix<double> ns = null_space_basis(m);
    REQUIRE(ns.cols() == 1);
    const auto residual = m * ns;
    for (std::size_t i = 0; i < residual.rows(); ++i)
        CHECK(std::abs(residual(i, 0)) < 1e-8);
}
