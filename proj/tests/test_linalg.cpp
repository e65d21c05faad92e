#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "clusterforge/matrix.hpp"

using namespace cf;

namespace {

Matrix from_rows(const std::vector<std::vector<int>>& rows, Field f = Field()) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), f);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, Field f) {
    Matrix m(r, c, f);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            Scalar x(num(rng), f.is_rational() ? den(rng) : 1);
            m.at(i, j) = f.reduce(x);
        }
    return m;
}

}  // namespace

TEST_CASE("kernel_basis examples") {
    Matrix id2 = Matrix::identity(2);
    CHECK(kernel_basis(id2).dim() == 0);

    Matrix z(2, 2);
    CHECK(kernel_basis(z).dim() == 2);
    CHECK(kernel_basis(z).basis() == Matrix::identity(2));

    Matrix ones = from_rows({{1, 1}, {1, 1}});
    Subspace k = kernel_basis(ones);
    REQUIRE(k.dim() == 1);
    CHECK(k.basis().at(0, 0) == 1);
    CHECK(k.basis().at(0, 1) == -1);
}

TEST_CASE("image_basis examples") {
    CHECK(image_basis(Matrix::identity(3)).dim() == 3);
    CHECK(image_basis(Matrix(2, 2)).dim() == 0);
    Subspace im = image_basis(from_rows({{1, 1}, {2, 2}}));
    REQUIRE(im.dim() == 1);
    CHECK(im.basis().at(0, 0) == 1);
    CHECK(im.basis().at(0, 1) == 1);
}

TEST_CASE("quotient_map examples") {
    Subspace zero(2, Matrix(0, 2));
    CHECK(quotient_map(2, zero) == Matrix::identity(2));

    Subspace full = image_basis(Matrix::identity(2));
    CHECK(quotient_map(2, full).cols() == 0);

    Subspace line = image_basis(from_rows({{1, 0}}));
    Matrix q = quotient_map(2, line);
    REQUIRE(q.rows() == 2);
    REQUIRE(q.cols() == 1);
    CHECK(q.at(0, 0) == 0);
    CHECK(q.at(1, 0) == 1);

    CHECK_THROWS_AS(quotient_map(3, line), BadInput);
}

TEST_CASE("quotient_map composed with inclusion is zero") {
    std::mt19937 rng(7);
    for (int t = 0; t < 20; ++t) {
        Matrix m = random_matrix(rng, 3, 5, Field());
        Subspace s = image_basis(m);
        Matrix q = quotient_map(5, s);
        if (s.dim() > 0) CHECK((s.basis() * q).is_zero());
        CHECK(image_basis(q).dim() == 5 - s.dim());
    }
}

TEST_CASE("rank-nullity over Q, F2, F5") {
    std::mt19937 rng(42);
    for (unsigned long p : {0ul, 2ul, 5ul}) {
        Field f(p);
        for (int t = 0; t < 40; ++t) {
            std::uniform_int_distribution<std::size_t> d(0, 6);
            std::size_t r = d(rng), c = d(rng);
            Matrix m = random_matrix(rng, r, c, f);
            CHECK(kernel_basis(m).dim() + m.rank() == r);
            CHECK(image_basis(m).dim() == m.rank());
        }
    }
}

TEST_CASE("kernel canonical under row-space-preserving changes") {
    std::mt19937 rng(5);
    for (int t = 0; t < 15; ++t) {
        Matrix m = random_matrix(rng, 4, 4, Field());
        Matrix permuted(4, 4);
        std::vector<int> perm{2, 0, 3, 1};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) permuted.at(i, j) = m.at(perm[i], j);
        CHECK(kernel_basis(m) == kernel_basis(permuted));
    }
}

TEST_CASE("exact rational round trip") {
    Field f;
    for (const char* lit : {"-22/7", "0", "355/113", "12345678901234567890/7"}) {
        Scalar x = f.parse(lit);
        CHECK(f.parse(Field::to_string(x)) == x);
    }
    CHECK_THROWS_AS(f.parse("not-a-number"), BadInput);
    CHECK_THROWS_AS(Field(4), BadInput);
}

TEST_CASE("solve_row_system and inverse") {
    Matrix a = from_rows({{1, 2}, {3, 4}});
    Matrix b = from_rows({{5, 6}});
    Matrix x;
    REQUIRE(solve_row_system(a, b, x));
    CHECK(x * a == b);
    CHECK((a * a.inverse()).is_identity());

    Matrix inconsistent = from_rows({{1, 0}, {2, 0}});
    Matrix rhs = from_rows({{0, 1}});
    CHECK_FALSE(solve_row_system(inconsistent, rhs, x));
}
