#include <doctest.h>

#include "support.hpp"

using namespace zt;

namespace {

Word w_of(const MorphismPair& mp, const std::string& s) {
    std::vector<std::string> names;
    for (char c : s) names.emplace_back(1, c);
    return mp.word(names);
}

bool nfa_accepts_by_brute(const Nfa& a, const Word& w) {
    std::vector<State> cur = a.initial_states();
    for (auto l : w) cur = a.step(cur, l);
    for (auto q : cur)
        if (a.is_accepting(q)) return true;
    return false;
}

}  // namespace

TEST_CASE("determinization and completion preserve the language") {
    std::mt19937 rng(17);
    for (int t = 0; t < 20; ++t) {
        Nfa a = random_nfa(rng, 2 + t % 7, 2);
        Nfa d = determinize(a);
        Nfa c = complete(d);
        CHECK(d.is_deterministic());
        CHECK(c.is_deterministic());
        CHECK(c.is_complete());
        for (int i = 0; i < 1000; ++i) {
            Word w = random_word(rng, 2, i % 13);
            bool x = nfa_accepts_by_brute(a, w);
            CHECK(d.accepts(w) == x);
            CHECK(c.accepts(w) == x);
        }
    }
}

TEST_CASE("product is intersection") {
    std::mt19937 rng(18);
    for (int t = 0; t < 10; ++t) {
        Nfa a = random_nfa(rng, 4, 2), b = random_nfa(rng, 3, 2);
        Nfa p = product(a, b);
        for (int i = 0; i < 300; ++i) {
            Word w = random_word(rng, 2, i % 10);
            CHECK(p.accepts(w) == (a.accepts(w) && b.accepts(w)));
        }
    }
    CHECK_THROWS_AS(product(Nfa(1, 2), Nfa(1, 3)), Error);
}

TEST_CASE("json round trip") {
    std::mt19937 rng(19);
    Nfa a = random_nfa(rng, 4, 2);
    a.letter_names = {"a", "b"};
    Nfa b = nfa_from_json(nfa_to_json(a), {"a", "b"});
    CHECK(nfa_to_json(b) == nfa_to_json(a));
    CHECK_THROWS_AS(nfa_from_json(nlohmann::json::object(), {"a"}), Error);
}

TEST_CASE("cover automaton") {
    auto mp = simple_pair();
    Nfa a = build_cover_automaton(mp);
    CHECK(a.num_states() == 18);
    CHECK_FALSE(a.accepts(w_of(mp, "ba")));
    CHECK(a.accepts(w_of(mp, "aab")));

    mp.eta_override = 2;
    a = build_cover_automaton(mp);
    CHECK_FALSE(a.accepts(w_of(mp, "abb")));
    CHECK(a.accepts(w_of(mp, "aabbb")));
    CHECK_FALSE(classify_word(w_of(mp, "aabbb"), mp).in_LC);

    // Every word of the cover language is accepted.
    for (const auto& w : enumerate_words(mp, Language::cover, 10)) CHECK(a.accepts(w));
}

TEST_CASE("reach automaton") {
    auto mp = simple_pair();
    Nfa a = build_reach_automaton(mp);
    CHECK(a.num_states() == 35);
    CHECK(a.accepts({}));
    CHECK(a.accepts(w_of(mp, "ab")));
    CHECK_FALSE(a.accepts(w_of(mp, "ba")));
    for (const auto& w : enumerate_words(mp, Language::reach, 10)) CHECK(a.accepts(w));

    // Subset construction stays linear in eta.
    mp.eta_override = 6;
    Nfa d = determinize(build_reach_automaton(mp));
    CHECK(d.num_states() <= 4 * 13);
}

TEST_CASE("bounded zero automaton") {
    auto mp = simple_pair();
    mp.eta_override = 3;
    Nfa a = build_bz_automaton(mp);
    CHECK(a.accepts(w_of(mp, "ab")));
    CHECK(a.accepts(w_of(mp, "ba")));
    CHECK_FALSE(a.accepts(w_of(mp, "aaaabbbb")));
    for (std::size_t len = 0; len <= 10; ++len)
        for (std::size_t code = 0; code < (1u << len); ++code) {
            Word w(len);
            for (std::size_t i = 0; i < len; ++i) w[i] = (code >> i) & 1;
            CHECK(a.accepts(w) == classify_word(w, mp).in_LBZ);
        }
}

TEST_CASE("zero automaton shape") {
    auto mp = simple_pair();
    auto za = build_zero_automaton(mp);
    CHECK(za.nfa.num_states() == 69);
    CHECK(za.letters.size() == 80);
    CHECK(gamma_alphabet(2).size() == 80);

    GammaLetter g;
    g.c = {mp.letter("a"), mp.letter("b"), std::nullopt, std::nullopt};
    CHECK(za.nfa.targets(za.state_of(0), gamma_index(g, 2)) == std::vector<State>{za.state_of(0)});
    CHECK(zero_automaton_accepts(za, {g}));
    CHECK(zero_automaton_accepts(za, {g, g}));
}

TEST_CASE("flatten examples") {
    GammaLetter ab;
    ab.c = {0, 1, std::nullopt, std::nullopt};
    auto f = flatten({ab});
    CHECK(f.prod[0] == Word{0});
    CHECK(f.prod[1] == Word{1});
    CHECK(f.prod[2].empty());
    CHECK(f.flat == Word{0, 1});

    f = flatten({});
    CHECK(f.flat.empty());

    f = flatten({gamma_single(0, 0), gamma_single(1, 1)});
    CHECK(f.flat == Word{0, 1});
    f = flatten({gamma_single(1, 1), gamma_single(0, 0)});
    CHECK(f.flat == Word{0, 1});
}

TEST_CASE("flat images of accepted Gamma words have weight zero") {
    auto mp = simple_pair();
    mp.eta_override = 2;
    auto za = build_zero_automaton(mp);
    std::mt19937 rng(23);
    std::uniform_int_distribution<std::size_t> pick(0, za.letters.size() - 1);
    int accepted = 0;
    for (int t = 0; t < 20000; ++t) {
        GammaWord ws;
        for (int i = 0; i < 1 + t % 4; ++i) ws.push_back(za.letters[pick(rng)]);
        if (!zero_automaton_accepts(za, ws)) continue;
        ++accepted;
        CHECK(classify_word(flatten(ws).flat, mp).in_LZ);
    }
    CHECK(accepted > 50);
}

namespace {

void check_witness(const Word& w, const MorphismPair& mp) {
    auto za = build_zero_automaton(mp);
    auto z = construct_zero_witness(w, mp);
    for (std::size_t k = 0; k <= 3; ++k) {
        GammaWord ws = z.W;
        for (std::size_t i = 0; i < k; ++i) ws.insert(ws.end(), z.U.begin(), z.U.end());
        CHECK(zero_automaton_accepts(za, ws));
        Word expect = z.x1;
        for (std::size_t i = 0; i < 1 + (k + 1) * z.m; ++i) expect.insert(expect.end(), z.u.begin(), z.u.end());
        for (const Word* p : {&z.x2, &z.w1, &z.y2}) expect.insert(expect.end(), p->begin(), p->end());
        for (std::size_t i = 0; i < 1 + (k + 1) * z.n; ++i) expect.insert(expect.end(), z.v.begin(), z.v.end());
        for (const Word* p : {&z.y1, &z.w2}) expect.insert(expect.end(), p->begin(), p->end());
        Word flat = flatten(ws).flat;
        CHECK(flat == expect);
        CHECK(mp.omega_of(flat) == 0);
    }
}

}  // namespace

TEST_CASE("zero witness construction") {
    auto mp = simple_pair();
    mp.eta_override = 1;
    check_witness(w_of(mp, "aabb"), mp);
    check_witness(w_of(mp, "bbaa"), mp);
    check_witness(w_of(mp, "abaabbab"), mp);
    CHECK_THROWS_AS(construct_zero_witness(w_of(mp, "ab"), mp), Error);
    CHECK_THROWS_AS(construct_zero_witness(w_of(mp, "aab"), mp), Error);

    auto dy = dyck_pair();
    dy.eta_override = 2;
    std::mt19937 rng(31);
    int built = 0;
    for (int t = 0; t < 2000 && built < 40; ++t) {
        Word w = random_word(rng, 2, 2 * (2 + t % 6));
        auto c = classify_word(w, dy);
        if (!c.in_LZ || c.in_LBZ) continue;
        ++built;
        check_witness(w, dy);
    }
    CHECK(built == 40);
}
