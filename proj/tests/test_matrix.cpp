#include <doctest.h>

#include "semicanon/matrix.hpp"
#include "semicanon/rng.hpp"

using namespace semicanon;

namespace {

// Independent determinant oracle: cofactor expansion along the first row.
Fe det_cofactor(const Matrix& m) {
    std::size_t n = m.rows();
    if (n == 0) return m.field().one();
    if (n == 1) return m.at(0, 0);
    Fe acc = m.field().zero();
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        Matrix minor(n - 1, n - 1, m.field());
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Fe term = m.at(0, j) * det_cofactor(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

Matrix random_matrix(Rng& rng, const Field& f, std::size_t r, std::size_t c, int lo, int hi) {
    Matrix m(r, c, f);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.from_int(rng.int_in(lo, hi));
    return m;
}

}  // namespace

TEST_CASE("product and transpose basics") {
    Field q = Field::rationals();
    Matrix a = Matrix::of(q, {{1, 2}, {3, 4}});
    Matrix b = Matrix::of(q, {{0, 1}, {1, 0}});
    CHECK(a * b == Matrix::of(q, {{2, 1}, {4, 3}}));
    CHECK(a * Matrix::identity(2, q) == a);
    CHECK(a.transpose() == Matrix::of(q, {{1, 3}, {2, 4}}));
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS(a * Matrix(3, 2, q), Error);
}

TEST_CASE("det matches cofactor oracle on random matrices") {
    Field q = Field::rationals();
    Field f = Field::prime(10007);
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 1 + trial % 5;
        Matrix mq = random_matrix(rng, q, n, n, -5, 5);
        CHECK(mq.det() == det_cofactor(mq));
        Matrix mf = random_matrix(rng, f, n, n, -5, 5);
        CHECK(mf.det() == det_cofactor(mf));
    }
}

TEST_CASE("det of singular and permuted matrices") {
    Field q = Field::rationals();
    CHECK(Matrix::of(q, {{1, 2}, {2, 4}}).det() == q.zero());
    // Row swap flips sign.
    CHECK(Matrix::of(q, {{0, 1}, {1, 0}}).det() == q.from_int(-1));
    CHECK(Matrix::of(q, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}).det() == q.from_int(-1));
    CHECK_THROWS_AS(Matrix(2, 3, q).det(), Error);
}

TEST_CASE("rank and kernel are consistent") {
    Field f = Field::prime(101);
    Rng rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
        Matrix m = random_matrix(rng, f, r, c, -4, 4);
        Matrix k = m.kernel();
        CHECK(m.rank() + k.rows() == c);
        // Every kernel row is annihilated.
        CHECK((m * k.transpose()).is_zero());
        // Kernel rows are independent.
        CHECK(k.rank() == k.rows());
    }
}

TEST_CASE("rref has identity on pivot columns") {
    Field q = Field::rationals();
    Matrix m = Matrix::of(q, {{2, 4, 1}, {1, 2, 0}, {0, 0, 3}});
    std::vector<std::size_t> pivots;
    Matrix r = m.rref(&pivots);
    REQUIRE(pivots == std::vector<std::size_t>{0, 2});
    CHECK(r == Matrix::of(q, {{1, 2, 0}, {0, 0, 1}, {0, 0, 0}}));
}

TEST_CASE("solve returns a genuine solution and detects inconsistency") {
    Field f = Field::prime(10007);
    Rng rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
        Matrix a = random_matrix(rng, f, r, c, -4, 4);
        Matrix x_true = random_matrix(rng, f, c, 2, -4, 4);
        Matrix b = a * x_true;
        auto x = a.solve(b);
        REQUIRE(x.has_value());
        CHECK(a * *x == b);
    }
    Field q = Field::rationals();
    Matrix a = Matrix::of(q, {{1, 1}, {1, 1}});
    CHECK_FALSE(a.solve(Matrix::of(q, {{0}, {1}})).has_value());
    auto xv = a.solve_vec({q.one(), q.one()});
    REQUIRE(xv.has_value());
    CHECK((*xv)[0] + (*xv)[1] == q.one());
}

TEST_CASE("solve_left solves X A = B") {
    Field f = Field::prime(101);
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix a = random_matrix(rng, f, 3, 4, -4, 4);
        Matrix x_true = random_matrix(rng, f, 2, 3, -4, 4);
        Matrix b = x_true * a;
        auto x = a.solve_left(b);
        REQUIRE(x.has_value());
        CHECK(*x * a == b);
    }
}

TEST_CASE("block assembly") {
    Field q = Field::rationals();
    Matrix a = Matrix::of(q, {{1}});
    Matrix b = Matrix::of(q, {{2, 3}});
    Matrix grid = Matrix::assemble({{a, b}, {a.scaled(q.from_int(4)), b.scaled(q.from_int(0))}});
    CHECK(grid == Matrix::of(q, {{1, 2, 3}, {4, 0, 0}}));
    CHECK(Matrix::hconcat(a, b) == Matrix::of(q, {{1, 2, 3}}));
    CHECK(Matrix::vconcat(b, b).rows() == 2);
    CHECK(grid.submatrix(0, 1, 2, 2) == Matrix::of(q, {{2, 3}, {0, 0}}));
}

TEST_CASE("prime and rational eliminations agree on integer input") {
    Field q = Field::rationals();
    Field f = Field::prime();
    Rng rng(19);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
        Matrix mq(r, c, q), mf(r, c, f);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                long long v = rng.int_in(-6, 6);
                mq.at(i, j) = q.from_int(v);
                mf.at(i, j) = f.from_int(v);
            }
        CHECK(mq.rank() == mf.rank());
        if (r == c) CHECK(f.from_rational(mq.det().rational_value()) == mf.det());
    }
}
