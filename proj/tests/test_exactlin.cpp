#include <doctest.h>

#include "support.hpp"

using namespace zt;

TEST_CASE("parse and format rationals") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(format_rational(parse_rational("-2/4")) == "-1/2");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("rank decomposition examples") {
    auto r = rank_decomp(mat({{1, 1}, {0, 1}}));
    CHECK(r.rank == 2);
    CHECK(r.image == Subspace::whole(2));
    CHECK(r.kernel.dim() == 0);

    r = rank_decomp(mat({{0, 1}, {0, 0}}));
    CHECK(r.rank == 1);
    CHECK(r.image == Subspace::span(2, {{1, 0}}));
    CHECK(r.kernel == Subspace::span(2, {{1, 0}}));

    r = rank_decomp(Matrix(2, 2));
    CHECK(r.rank == 0);
    CHECK(r.image.dim() == 0);
    CHECK(r.kernel == Subspace::whole(2));

    CHECK_THROWS_AS(rank_decomp(Matrix(2, 3)), Error);
}

TEST_CASE("stability examples") {
    CHECK_FALSE(is_stable(mat({{0, 1}, {0, 0}})));
    CHECK(is_stable(mat({{2, 0}, {0, 4}})));
    Matrix m = mat({{2, 0}, {1, 0}});
    CHECK(rank(m) == rank(m * m));
    CHECK(is_stable(m));
    CHECK_THROWS_AS(is_stable(Matrix(1, 2)), Error);
}

TEST_CASE("stable identity examples") {
    CHECK(stable_identity(mat({{1, 1}, {0, 1}})) == Matrix::identity(2));
    CHECK(stable_identity(mat({{1, 0}, {0, 0}})) == mat({{1, 0}, {0, 0}}));
    Matrix m = mat({{2, 0}, {1, 0}});
    Matrix p = stable_identity(m);
    CHECK(p == Matrix::from_rows({{1, 0}, {Rational(1, 2), 0}}));
    CHECK(p * m == m);
    CHECK(m * p == m);
    CHECK(p * p == p);
    CHECK_THROWS_AS(stable_identity(mat({{0, 1}, {0, 0}})), Error);
}

TEST_CASE("stable identity on random stable matrices") {
    std::mt19937 rng(11);
    int seen = 0;
    for (int t = 0; t < 300 && seen < 60; ++t) {
        Matrix m = random_matrix(rng, 3);
        if (!is_stable(m)) continue;
        ++seen;
        Matrix p = stable_identity(m);
        CHECK(p * p == p);
        CHECK(p * m == m);
        CHECK(m * p == m);
        CHECK(column_space(p) == column_space(m));
        CHECK(kernel(p) == kernel(m));
    }
    CHECK(seen >= 20);
}

TEST_CASE("rank agrees between Bareiss and RREF") {
    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
        Matrix m = random_rank_matrix(rng, 3, t % 4);
        std::vector<std::size_t> piv;
        rref(m, &piv);
        CHECK(rank(m) == piv.size());
        CHECK(rank(m) == std::size_t(t % 4));
    }
}

TEST_CASE("subspace operations") {
    auto a = Subspace::span(3, {{1, 0, 0}, {0, 1, 0}});
    auto b = Subspace::span(3, {{0, 1, 0}, {0, 0, 1}});
    CHECK(sum(a, b) == Subspace::whole(3));
    CHECK(intersect(a, b) == Subspace::span(3, {{0, 1, 0}}));
    CHECK(orthogonal_complement(a) == Subspace::span(3, {{0, 0, 1}}));
    CHECK(a.contains(Vec{2, 3, 0}));
    CHECK_FALSE(a.contains(Vec{0, 0, 1}));

    EchelonBuilder e(2);
    CHECK(e.insert({1, 1}));
    CHECK_FALSE(e.insert({2, 2}));
    CHECK(e.insert({0, 5}));
    CHECK(e.full());
}

TEST_CASE("inverse") {
    Matrix m = mat({{2, 1}, {1, 1}});
    CHECK(m * inverse(m) == Matrix::identity(2));
    CHECK_THROWS_AS(inverse(mat({{1, 2}, {2, 4}})), Error);
}
