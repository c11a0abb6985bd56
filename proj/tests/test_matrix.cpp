#include <doctest.h>

#include <random>

#include "matrix.hpp"

using namespace pc;

namespace {

Matrix random_matrix(const Field& f, int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, f.order() - 1);
    Matrix m(f, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = fe(dist(rng));
    return m;
}

// Laplace expansion along an arbitrary row (independent route)
fe per_along_row(const Matrix& a, int row) {
    const Field& f = a.field();
    if (a.dim() == 1) return a.at(0, 0);
    fe acc = f.zero();
    for (int j = 0; j < a.dim(); ++j)
        acc = f.add(acc, f.mul(a.at(row, j), per_along_row(a.minor_rc(row, j), 0)));
    return acc;
}

} // namespace

TEST_CASE("permanent of all-ones is n!") {
    Field f(7, 1);
    Matrix j3(f, 3);
    for (int i = 0; i < 3; ++i)
        for (int c = 0; c < 3; ++c) j3.at(i, c) = f.one();
    CHECK(per_laplace(j3) == 6);
    CHECK(per_ryser(j3) == 6);
}

TEST_CASE("permanent of the identity is 1") {
    for (auto spec : {"3", "5", "3^2"}) {
        Field f = Field::parse(spec);
        Matrix i3 = Matrix::identity(f, 3);
        CHECK(per_laplace(i3) == f.one());
        CHECK(per_ryser(i3) == f.one());
    }
}

TEST_CASE("[[1,1],[1,-1]] has zero permanent") {
    Field f(5, 1);
    Matrix a(f, 2);
    a.at(0, 0) = a.at(0, 1) = a.at(1, 0) = f.one();
    a.at(1, 1) = f.neg(f.one());
    CHECK(per_laplace(a) == 0);
    CHECK(per_ryser(a) == 0);
}

TEST_CASE("zero row kills the permanent") {
    Field f(3, 1);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
        Matrix a = random_matrix(f, 4, rng);
        for (int j = 0; j < 4; ++j) a.at(2, j) = f.zero();
        CHECK(per_ryser(a) == 0);
    }
}

TEST_CASE("Ryser equals Laplace exhaustively for n <= 3 over GF(3)") {
    Field f(3, 1);
    for (int n = 1; n <= 3; ++n) {
        Matrix a(f, n);
        std::uint64_t total = 1;
        for (int i = 0; i < n * n; ++i) total *= 3;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            CHECK(per_ryser(a) == per_laplace(a));
            fe* e = a.data();
            for (int i = 0; i < n * n; ++i) {
                if (++e[i] < 3) break;
                e[i] = 0;
            }
        }
    }
}

TEST_CASE("Ryser equals Laplace on random instances, n = 4..6") {
    std::mt19937_64 rng(42);
    for (auto spec : {"3", "5", "3^2"}) {
        Field f = Field::parse(spec);
        for (int n = 4; n <= 6; ++n)
            for (int t = 0; t < 200; ++t) {
                Matrix a = random_matrix(f, n, rng);
                CHECK(per_ryser(a) == per_laplace(a));
            }
    }
}

TEST_CASE("per equals det over GF(2), exhaustive n <= 3") {
    Field f(2, 1);
    for (int n = 1; n <= 3; ++n) {
        Matrix a(f, n);
        std::uint64_t total = 1ull << (n * n);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            CHECK(per_ryser(a) == det(a));
            fe* e = a.data();
            for (int i = 0; i < n * n; ++i) {
                if (++e[i] < 2) break;
                e[i] = 0;
            }
        }
    }
}

TEST_CASE("Laplace identity holds along every row") {
    std::mt19937_64 rng(7);
    Field f(5, 1);
    for (int t = 0; t < 100; ++t) {
        Matrix a = random_matrix(f, 4, rng);
        fe expect = per_laplace(a);
        for (int row = 0; row < 4; ++row) CHECK(per_along_row(a, row) == expect);
    }
}

TEST_CASE("permanent is multilinear in rows") {
    std::mt19937_64 rng(9);
    Field f(7, 1);
    for (int t = 0; t < 100; ++t) {
        Matrix a = random_matrix(f, 3, rng);
        fe lam = fe(1 + t % 6);
        fe base = per_laplace(a);
        Matrix b = a;
        for (int j = 0; j < 3; ++j) b.at(1, j) = f.mul(lam, a.at(1, j));
        CHECK(per_laplace(b) == f.mul(lam, base));
    }
}

TEST_CASE("determinant basics") {
    Field f(3, 1);
    CHECK(det(Matrix::identity(f, 4)) == 1);
    Matrix two_rows(f, 3);
    std::mt19937_64 rng(3);
    two_rows = random_matrix(f, 3, rng);
    for (int j = 0; j < 3; ++j) two_rows.at(2, j) = two_rows.at(0, j);
    CHECK(det(two_rows) == 0);
}

TEST_CASE("2x2 determinant equals cofactor formula over all of GF(3)") {
    Field f(3, 1);
    for (std::uint32_t a = 0; a < 3; ++a)
        for (std::uint32_t b = 0; b < 3; ++b)
            for (std::uint32_t c = 0; c < 3; ++c)
                for (std::uint32_t d = 0; d < 3; ++d) {
                    Matrix m(f, 2);
                    m.at(0, 0) = fe(a);
                    m.at(0, 1) = fe(b);
                    m.at(1, 0) = fe(c);
                    m.at(1, 1) = fe(d);
                    fe expect = f.sub(f.mul(fe(a), fe(d)), f.mul(fe(b), fe(c)));
                    CHECK(det(m) == expect);
                }
}

TEST_CASE("det is zero exactly when rank deficient, exhaustive n <= 3 over GF(3)") {
    Field f(3, 1);
    for (int n = 1; n <= 3; ++n) {
        Matrix a(f, n);
        std::uint64_t total = 1;
        for (int i = 0; i < n * n; ++i) total *= 3;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            CHECK((det(a) == 0) == (rank(a) < n));
            fe* e = a.data();
            for (int i = 0; i < n * n; ++i) {
                if (++e[i] < 3) break;
                e[i] = 0;
            }
        }
    }
}

TEST_CASE("rank") {
    Field f(5, 1);
    CHECK(rank(Matrix(f, 4)) == 0);
    CHECK(rank(Matrix::identity(f, 4)) == 4);
    Matrix partial(f, 4);
    for (int i = 0; i < 2; ++i) partial.at(i, i) = f.one();
    CHECK(rank(partial) == 2);
}

TEST_CASE("per_compound of a 2x2 swaps entries") {
    Field f(7, 1);
    Matrix a(f, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 2;
    a.at(1, 0) = 3;
    a.at(1, 1) = 4;
    Matrix c = per_compound(a);
    CHECK(c.at(0, 0) == 4);
    CHECK(c.at(0, 1) == 3);
    CHECK(c.at(1, 0) == 2);
    CHECK(c.at(1, 1) == 1);
}

TEST_CASE("per_compound of I_3") {
    Field f(5, 1);
    Matrix c = per_compound(Matrix::identity(f, 3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(c.at(i, j) == (i == j ? 1 : 0));
}

TEST_CASE("per_compound of the zero matrix has rank 0") {
    Field f(3, 1);
    CHECK(rank(per_compound(Matrix(f, 3))) == 0);
}

TEST_CASE("bilinear_zero") {
    Field f(3, 1);
    Matrix id2 = Matrix::identity(f, 2);
    std::vector<fe> x{1, 1}, y{1, 2}, z{0, 0};
    CHECK(bilinear_zero(x, id2, y)); // 1 + 2 = 0 in GF(3)
    CHECK(bilinear_zero(z, id2, y));
    Matrix id1 = Matrix::identity(f, 1);
    std::vector<fe> one{1};
    CHECK(!bilinear_zero(one, id1, one));
    CHECK_THROWS_AS(bilinear_zero(one, id2, y), Error);
}

TEST_CASE("matrix literal round trip") {
    Field f(3, 1);
    Matrix a = Matrix::parse(f, "1,2,0;0,1,1;2,2,1");
    CHECK(a.dim() == 3);
    CHECK(a.at(2, 0) == 2);
    CHECK(Matrix::parse(f, a.to_string()) == a);
    CHECK_THROWS_AS(Matrix::parse(f, "1,2;0"), Error);

    Field f9(3, 2);
    Matrix b = Matrix::parse(f9, "(1,2),(0,1);(2,0),(1,1)");
    CHECK(Matrix::parse(f9, b.to_string()) == b);
}
