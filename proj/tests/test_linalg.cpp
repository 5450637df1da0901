#include "lagdef/linalg.hpp"
#include "support/random.hpp"

#include <doctest.h>

using namespace lagdef;

namespace {

RationalMatrix random_matrix(std::mt19937 &rng, std::size_t rows, std::size_t cols) {
    RationalMatrix m(rows, cols);
    std::uniform_int_distribution<int> sparse(0, 2);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (sparse(rng) == 0)
                m.at(r, c) = lagdef::testing::random_rational(rng, 4);
    // Force some dependent rows.
    if (rows >= 3)
        for (std::size_t c = 0; c < cols; ++c)
            m.at(rows - 1, c) = m.at(0, c) * Rational(2, 3) - m.at(1, c);
    return m;
}

} // namespace

TEST_CASE("rref examples") {
    auto id = RationalMatrix::identity(3);
    auto r = rref(id);
    CHECK(r.reduced == id);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

    RationalMatrix zero(2, 3);
    auto z = rref(zero);
    CHECK(z.reduced == zero);
    CHECK(z.rank() == 0);

    RationalMatrix m{{1, 2}, {2, 4}};
    auto rm = rref(m);
    CHECK(rm.reduced == RationalMatrix{{1, 2}, {0, 0}});
    CHECK(rm.rank() == 1);
}

TEST_CASE("rref normalizes pivots to one with exact fractions") {
    RationalMatrix m{{2, 1, 0}, {4, 3, 1}};
    auto r = rref(m);
    CHECK(r.reduced == RationalMatrix{{1, 0, Rational(-1, 2)}, {0, 1, 1}});
}

TEST_CASE("kernel_basis examples") {
    CHECK(kernel_basis(RationalMatrix::identity(3)).empty());
    auto k = kernel_basis(RationalMatrix(2, 3));
    REQUIRE(k.size() == 3);
    CHECK(k[0] == Vector{1, 0, 0});
    CHECK(k[2] == Vector{0, 0, 1});
    auto k1 = kernel_basis(RationalMatrix{{1, 1}});
    REQUIRE(k1.size() == 1);
    CHECK(k1[0] == Vector{-1, 1});
}

TEST_CASE("solve examples") {
    Vector v{Rational(1, 3), -2, 5};
    auto x = solve(RationalMatrix::identity(3), v);
    REQUIRE(x);
    CHECK(*x == v);

    RationalMatrix row{{1, 1}};
    auto h = solve(row, Vector{0});
    REQUIRE(h);
    CHECK(row * *h == Vector{0});

    CHECK_FALSE(solve(RationalMatrix{{0}}, Vector{1}));
}

TEST_CASE("rank-nullity, idempotence and solve residuals on random matrices") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 2 + trial % 5, cols = 1 + trial % 7;
        auto m = random_matrix(rng, rows, cols);
        auto r = rref(m);
        CHECK(r.rank() + kernel_basis(m).size() == cols);
        CHECK(rref(r.reduced).reduced == r.reduced);
        for (const auto &k : kernel_basis(m))
            CHECK(m * k == Vector(rows));

        Vector x0(cols);
        for (auto &e : x0)
            e = lagdef::testing::random_rational(rng);
        Vector rhs = m * x0;
        auto x = solve(m, rhs);
        REQUIRE(x);
        CHECK(m * *x == rhs);
    }
}

TEST_CASE("echelon basis reduction is exact and canonical") {
    EchelonBasis basis(4);
    CHECK(basis.insert({{0, 2}, {1, 4}}));
    CHECK(basis.insert({{1, 3}, {3, 1}}));
    CHECK_FALSE(basis.insert({{0, 1}, {1, 5}, {3, 1}}));
    CHECK(basis.rank() == 2);
    // (0,1,0,0) reduces to -(1/3) e3 modulo the span.
    auto r = basis.reduce({{1, 1}});
    CHECK(r == SparseVector{{3, Rational(-1, 3)}});
    CHECK(basis.contains({{0, Rational(1, 2)}, {1, 1}}));
}

TEST_CASE("kernel of columns") {
    // Columns (1,0), (0,1), (1,1): kernel spanned by (1,1,-1), leading entry 1.
    std::vector<SparseVector> cols{{{0, 1}}, {{1, 1}}, {{0, 1}, {1, 1}}};
    auto k = kernel_of_columns(cols, 2);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == SparseVector{{0, 1}, {1, 1}, {2, -1}});
}
