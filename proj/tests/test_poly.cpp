#include <doctest.h>

#include "support.hpp"

using namespace zt;

TEST_CASE("monomial basis order and size") {
    MonomialBasis b(4, 2);
    CHECK(b.size() == 15);
    CHECK(MonomialBasis::count(4, 2) == 15);
    CHECK(MonomialBasis::count(36, 2) == 703);
    CHECK(b.total_degree(0) == 2);
    CHECK(b.total_degree(b.size() - 1) == 0);
    for (std::size_t i = 0; i + 1 < b.size(); ++i) CHECK(MonomialBasis::greater(b[i], b[i + 1]));
    for (std::size_t i = 0; i < b.size(); ++i) {
        CHECK(b.index(b[i]) == i);
        if (b.total_degree(i) > 0) {
            Exponents e = b[b.parent(i)];
            ++e[b.var(i)];
            CHECK(e == b[i]);
        }
    }
    CHECK(b.times(0, 0) == MonomialBasis::npos);
}

TEST_CASE("Veronese multiplication maps") {
    std::mt19937 rng(100);
    for (std::size_t d : {1, 2, 3}) {
        MonomialBasis b(d * d, d == 3 ? 2 : 3);
        VeroneseProduct vp(b);
        for (int t = 0; t < 100; ++t) {
            Matrix m = random_matrix(rng, d), a = random_matrix(rng, d);
            Vec nm = veronese(m, b);
            CHECK(right_multiplication_map(a, b).apply(nm) == veronese(m * a, b));
            CHECK(left_multiplication_map(a, b).apply(nm) == veronese(a * m, b));
            CHECK(vp(nm, veronese(a, b)) == veronese(m * a, b));
        }
    }
}

TEST_CASE("render examples") {
    Polynomial p = parse_polynomial("x11 - x12*x21 - 1", 2);
    CHECK(render(p, 2) == "-x12*x21 + x11 - 1");
    CHECK(render(normalized(p), 2) == "x12*x21 - x11 + 1");
    CHECK(render(normalized(parse_polynomial("2*x11 - 2", 1)), 1) == "x11 - 1");
    CHECK(render(normalized(parse_polynomial("-x12 + 1/2", 2)), 2) == "2*x12 - 1");
    CHECK(render(parse_polynomial("x_{1}_{2}^2", 2), 2) == "x12^2");
    CHECK(render(Polynomial{4, {}}, 2) == "0");
    CHECK(variable_name(0, 2) == "x11");
    CHECK(variable_name(3, 2) == "x22");
    CHECK(variable_name(11, 10) == "x_{2}_{2}");
    CHECK_THROWS_AS(parse_polynomial("x31", 2), Error);
    CHECK_THROWS_AS(parse_polynomial("x11 +", 2), Error);
}

TEST_CASE("render and parse round trip") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> c(-5, 5);
    for (std::size_t d : {1, 2, 3}) {
        MonomialBasis b(d * d, 3);
        for (int t = 0; t < 100; ++t) {
            Vec v(b.size());
            for (auto& x : v)
                if (rng() % 4 == 0) x = Rational(c(rng), 1 + rng() % 3);
            for (auto& x : v) x.canonicalize();
            Polynomial p = from_coefficients(v, b);
            CHECK(parse_polynomial(render(p, d), d) == p);
            CHECK(to_coefficients(p, b) == v);
        }
    }
}

TEST_CASE("polynomial products") {
    auto p = parse_polynomial("x11 - 1", 1), q = parse_polynomial("x11 + 1", 1);
    CHECK((p * q) == parse_polynomial("x11^2 - 1", 1));
    CHECK((p * q).degree() == 2);
}

TEST_CASE("evaluation span is the orthogonal complement") {
    MonomialBasis b(1, 2);
    Subspace ev = Subspace::span(b.size(), {veronese(scalar(1), b), veronese(scalar(2), b)});
    PolySpace s = space_from_evaluations(1, 2, ev);
    CHECK(s.vanishing.dim() == 1);
    CHECK(evaluation_span(s) == ev);
}
