#include <doctest.h>

#include "support.hpp"

using namespace zt;

namespace {

Nfa epsilon_only(std::size_t letters) {
    Nfa a(1, letters);
    a.set_initial(0);
    a.set_accepting(0);
    return a;
}

}  // namespace

TEST_CASE("finite vanishing space examples") {
    auto s = finite_vanishing_space(2, {Matrix::identity(2)}, 1);
    CHECK(s == slice_of({"x11 - 1", "x12", "x21", "x22 - 1"}, 2, 1));
    CHECK(s.vanishing.dim() == 4);

    s = finite_vanishing_space(1, {scalar(1), scalar(2)}, 2);
    CHECK(s == slice_of({"x11^2 - 3*x11 + 2"}, 1, 2));

    s = finite_vanishing_space(2, {}, 2);
    CHECK(s.vanishing == Subspace::whole(15));

    Caps tiny;
    tiny.max_veronese = 10;
    CHECK_THROWS_AS(finite_vanishing_space(2, {}, 2, tiny), Error);
}

TEST_CASE("regular closure examples") {
    auto mp = dyck_pair();
    CHECK(regular_closure(epsilon_only(2), mp, 1) == finite_vanishing_space(2, {Matrix::identity(2)}, 1));

    auto a = morphism({"a"}, {scalar(2)}, {0});
    auto s = regular_closure(universal_automaton(a), a, 3);
    CHECK(s.vanishing.dim() == 0);
}

TEST_CASE("regular closure matches the oracle on random instances") {
    std::mt19937 rng(51);
    for (int t = 0; t < 10; ++t) {
        std::size_t d = 1 + t % 2;
        auto mp = morphism({"a", "b"}, {random_matrix(rng, d, 0, 1), random_matrix(rng, d, 0, 1)}, {0, 0});
        Nfa nfa = random_nfa(rng, 3, 2);
        auto o = oracle_closure(mp, Language::all, 2, 12, &nfa);
        if (!o.stabilized) continue;
        CHECK(regular_closure(nfa, mp, 2) == o.space);
    }
}

TEST_CASE("cover closure examples") {
    auto mp = simple_pair();
    CHECK(cover_closure(mp, 2).vanishing.dim() == 0);

    auto z = morphism({"a", "b"}, {mat({{1, 1}, {0, 1}}), mat({{2, 0}, {0, 1}})}, {0, 0});
    CHECK(cover_closure(z, 2) == regular_closure(universal_automaton(z), z, 2));
}

TEST_CASE("zero closure examples") {
    auto mp = simple_pair();
    CHECK(zero_closure(mp, 1) == slice_of({"x11 - 1"}, 1, 1));

    auto z = morphism({"a", "b"}, {scalar(3), scalar(-1)}, {0, 0});
    CHECK(zero_closure(z, 1) == regular_closure(universal_automaton(z), z, 1));

    auto s = morphism({"s"}, {scalar(3)}, {0});
    CHECK(zero_closure(s, 2).vanishing.dim() == 0);
}

TEST_CASE("reach closure examples") {
    auto mp = simple_pair();
    CHECK(reach_closure(mp, 1) == slice_of({"x11 - 1"}, 1, 1));

    auto dy = dyck_pair();
    dy.eta_override = 3;
    CHECK(reach_closure(dy, 2) == slice_of({"x11*x22 - x12*x21 - 1"}, 2, 2));
}

TEST_CASE("zero-weight engine matches the oracle on random instances") {
    std::mt19937 rng(53);
    int checked = 0;
    for (int t = 0; t < 12; ++t) {
        std::size_t d = 1 + t % 2;
        auto mp = morphism({"a", "b", "c"}, {random_matrix(rng, d, 0, 1), random_matrix(rng, d, 0, 1),
                                             random_matrix(rng, d, 0, 1)},
                           {1, -1, 0});
        Nfa nfa = random_nfa(rng, 2, 3);
        auto o = oracle_closure(mp, Language::zero, 2, 10, &nfa);
        if (!o.stabilized) continue;
        ++checked;
        CHECK(zero_weight_closure(nfa, mp, 2) == o.space);
    }
    CHECK(checked >= 4);
}

TEST_CASE("vass closures agree across routes") {
    auto mp = dyck_pair();
    mp.eta_override = 3;
    auto r = vass_to_monoid(anbn_vass(), mp);
    auto c = vass_cover_closure(r, 2);
    CHECK(c.space == c.cross_check);
    CHECK(c.space == slice_of({"x11 - x12*x21 - 1", "x22 - 1"}, 2, 2));
    auto re = vass_reach_closure(r, 2);
    CHECK(re.space == re.cross_check);
    CHECK(re.space == slice_of({"x11 - x12*x21 - 1", "x12 - x21", "x22 - 1"}, 2, 2));
}

TEST_CASE("oracle examples") {
    auto mp = simple_pair();
    auto o = oracle_closure(mp, Language::reach, 1, 0);
    CHECK(o.space == finite_vanishing_space(1, {scalar(1)}, 1));

    auto up = morphism({"a"}, {scalar(2)}, {1});
    o = oracle_closure(up, Language::reach, 2, 8);
    CHECK(o.space == finite_vanishing_space(1, {scalar(1)}, 2));
    auto none = morphism({"a"}, {scalar(2)}, {1});
    Nfa empty(1, 1);
    empty.set_initial(0);
    o = oracle_closure(none, Language::all, 2, 6, &empty);
    CHECK(o.space.vanishing == Subspace::whole(3));

    auto dy = dyck_pair();
    o = oracle_closure(dy, Language::reach, 2, 14);
    CHECK(o.stabilized);
    CHECK(o.space == slice_of({"x11*x22 - x12*x21 - 1"}, 2, 2));
}

TEST_CASE("ideal slice examples") {
    auto s = slice_of({"x11 - 1"}, 1, 2);
    CHECK(s == finite_vanishing_space(1, {scalar(1)}, 2));
    CHECK(s.vanishing.dim() == 2);
    CHECK(slice_of({}, 2, 2).vanishing.dim() == 0);
    CHECK(slice_of({"x11*x22 - x12*x21 - 1"}, 2, 2).vanishing.dim() == 1);
    CHECK_THROWS_AS(slice_of({"x11^3"}, 1, 2), Error);
}

TEST_CASE("generator selection") {
    auto s = slice_of({"x11 - 1", "x22 - 1"}, 2, 1);
    CHECK(render_all(space_to_generators(s), 2) == std::vector<std::string>{"x11 - 1", "x22 - 1"});
    CHECK(space_to_generators(PolySpace{2, 1, Subspace(5)}).empty());
    CHECK(render_all(space_to_generators(slice_of({"2*x11 - 2"}, 1, 1)), 1) == std::vector<std::string>{"x11 - 1"});

    auto big = slice_of({"x11 - x12*x21 - 1", "x12 - x21", "x22 - 1"}, 2, 2);
    CHECK(ideal_slice(space_to_generators(big), 2, 2) == big);
    CHECK(truncate(big, 1) == slice_of({"x12 - x21", "x22 - 1"}, 2, 1));
}

TEST_CASE("chain sets") {
    Matrix n = mat({{0, 1}, {0, 0}});
    auto sets = chain_sets({Matrix(2, 2), n}, mat({{2, 0}, {0, 1}}), Matrix::from_rows({{Rational(1, 2), 0}, {0, 1}}), 3);
    REQUIRE(sets.size() == 4);
    CHECK(sets[0].size() == 3);
    for (std::size_t i = 1; i < sets.size(); ++i) CHECK(sets[i].size() == sets[i - 1].size() + 1);
    CHECK_THROWS_AS(monoid_closure({mat({{2}})}, 1, 50), Error);
}

TEST_CASE("results are deterministic") {
    auto dy = dyck_pair();
    dy.eta_override = 3;
    auto a = reach_closure(dy, 2), b = reach_closure(dy, 2);
    CHECK(a == b);
    CHECK(render_all(space_to_generators(a), 2) == render_all(space_to_generators(b), 2));
}
