#include <doctest.h>

#include "support.hpp"

using namespace zt;

namespace {

Nfa phi1_dfa() {
    Nfa a(2, 2);
    a.set_initial(0);
    a.set_accepting(1);
    a.add_transition(0, 0, 0);
    a.add_transition(0, 1, 1);
    a.add_transition(1, 1, 0);
    return a;
}

MorphismPair phi1() { return morphism({"a", "b"}, {mat({{2, 0}, {0, 4}}), mat({{1, 0}, {1, 1}})}, {1, -1}); }

Matrix block_diag_one(const Matrix& m) {
    Matrix r(m.rows() + 1, m.rows() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) r(i, j) = m(i, j);
    r(m.rows(), m.rows()) = 1;
    return r;
}

Matrix place(std::size_t k, std::size_t b, const std::vector<std::tuple<std::size_t, std::size_t, Matrix>>& blocks) {
    Matrix r(k * b, k * b);
    for (const auto& [bi, bj, m] : blocks)
        for (std::size_t i = 0; i < b; ++i)
            for (std::size_t j = 0; j < b; ++j) r(bi * b + i, bj * b + j) = m(i, j);
    return r;
}

}  // namespace

TEST_CASE("blockify reproduces the six-dimensional lift") {
    auto mp = phi1();
    CHECK_THROWS_AS(blockify_regular(mp, phi1_dfa()), Error);
    auto bm = blockify_regular(mp, phi1_dfa(), true);
    CHECK(bm.k == 2);
    CHECK(bm.lifted.dim == 6);
    Matrix a3 = block_diag_one(mp.phi[0]), b3 = block_diag_one(mp.phi[1]);
    CHECK(bm.lifted.phi[0] == place(2, 3, {{0, 0, a3}}));
    CHECK(bm.lifted.phi[1] == place(2, 3, {{0, 1, b3}, {1, 0, b3}}));
}

TEST_CASE("blockify with a single state") {
    auto mp = dyck_pair();
    auto bm = blockify_regular(mp, universal_automaton(mp));
    CHECK(bm.k == 1);
    CHECK(bm.lifted.dim == 3);
    CHECK(bm.lifted.phi[0] == block_diag_one(mp.phi[0]));
}

TEST_CASE("blockify rejects nondeterministic automata") {
    Nfa a(2, 2);
    a.set_initial(0);
    a.set_accepting(1);
    a.add_transition(0, 0, 0);
    a.add_transition(0, 0, 1);
    a.add_transition(0, 1, 1);
    a.add_transition(1, 0, 1);
    a.add_transition(1, 1, 1);
    CHECK_THROWS_AS(blockify_regular(dyck_pair(), a), Error);
}

TEST_CASE("first block row has one nonzero block at the reached state") {
    std::mt19937 rng(41);
    for (int t = 0; t < 10; ++t) {
        auto mp = morphism({"a", "b"}, {random_matrix(rng, 2), random_matrix(rng, 2)}, {1, -1});
        Nfa dfa = complete(determinize(random_nfa(rng, 4, 2)));
        auto bm = blockify_regular(mp, dfa);
        std::size_t b = 3;
        for (int i = 0; i < 30; ++i) {
            Word w = random_word(rng, 2, i % 9);
            Matrix m = bm.lifted.phi_of(w);
            std::vector<State> cur{bm.order[0]};
            for (auto l : w) cur = dfa.step(cur, l);
            REQUIRE(cur.size() == 1);
            for (std::size_t j = 0; j < bm.k; ++j) {
                bool zero = true;
                for (std::size_t r = 0; r < b; ++r)
                    for (std::size_t c = 0; c < b; ++c) zero = zero && m(r, j * b + c) == 0;
                CHECK(zero == (bm.order[j] != cur[0]));
                if (bm.order[j] == cur[0]) {
                    Matrix blk(b, b);
                    for (std::size_t r = 0; r < b; ++r)
                        for (std::size_t c = 0; c < b; ++c) blk(r, c) = m(r, j * b + c);
                    CHECK(blk == block_diag_one(mp.phi_of(w)));
                }
            }
        }
    }
}

TEST_CASE("extraction examples") {
    auto mp = dyck_pair();
    auto bm = blockify_regular(mp, universal_automaton(mp));
    CHECK(regular_closure(universal_automaton(bm.lifted), bm, 2) == regular_closure(universal_automaton(mp), mp, 2));

    PolySpace full{3, 2, Subspace::whole(MonomialBasis::count(9, 2))};
    auto ex = extract_block_closure(full, bm, 2);
    CHECK(ex.vanishing == Subspace::whole(MonomialBasis::count(4, 2)));

    CHECK_THROWS_AS(extract_block_closure(PolySpace{3, 1, Subspace::whole(10)}, bm, 2), Error);

    auto p1 = phi1();
    auto b1 = blockify_regular(p1, phi1_dfa(), true);
    CHECK(regular_closure(universal_automaton(b1.lifted), b1, 2) == slice_of({"x12", "x11^2 - x22"}, 2, 2));
}

TEST_CASE("extraction agrees with the direct regular closure") {
    std::mt19937 rng(43);
    int checked = 0;
    for (int t = 0; t < 40 && checked < 12; ++t) {
        std::size_t d = 1 + t % 2;
        std::vector<Matrix> phi{random_matrix(rng, d, -1, 2), random_matrix(rng, d, -1, 2)};
        auto mp = morphism({"a", "b"}, phi, {1, -1});
        Nfa nfa = random_nfa(rng, 3, 2);
        Nfa dfa = complete(determinize(nfa));
        auto bm = blockify_regular(mp, dfa);
        std::size_t D = 2;
        if (MonomialBasis::count(bm.lifted.dim * bm.lifted.dim, D) > 3000) continue;
        ++checked;
        CHECK(regular_closure(universal_automaton(bm.lifted), bm, D) == regular_closure(nfa, mp, D));
    }
    CHECK(checked >= 6);
}

TEST_CASE("vass reduction") {
    auto mp = dyck_pair();
    auto r = vass_to_monoid(anbn_vass(), mp);
    CHECK(r.mp.size() == 3);
    CHECK(r.mp.alphabet[0] == "t0:a");
    CHECK(r.mp.omega == std::vector<int>{1, -1, -1});
    CHECK(r.mp.phi[2] == mp.phi[1]);
    CHECK(r.path.accepts({0, 0, 1, 2}));
    CHECK_FALSE(r.path.accepts({0, 2}));
    CHECK_FALSE(r.path.accepts({}));

    Vass bad = anbn_vass();
    bad.transitions[0].weight = 2;
    CHECK_THROWS_AS(vass_to_monoid(bad, mp), Error);
}

TEST_CASE("weight normalization") {
    auto nw = normalize_weights({"a", "b"}, {scalar(2), scalar(3)}, {3, -1});
    CHECK(nw.mp.size() == 4);
    CHECK(nw.expansion[0].size() == 3);
    CHECK(nw.expansion[1].size() == 1);
    CHECK(nw.mp.phi_of(nw.expansion[0]) == scalar(2));
    CHECK(nw.mp.omega_of(nw.expansion[0]) == 3);
    CHECK(nw.mp.omega_of(nw.expansion[1]) == -1);
}
