#include <doctest.h>

#include "support.hpp"

using namespace zt;

namespace {

Word w_of(const MorphismPair& mp, const std::string& s) {
    std::vector<std::string> names;
    for (char c : s) names.emplace_back(1, c);
    return mp.word(names);
}

std::vector<std::string> as_strings(const MorphismPair& mp, const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) {
        std::string s;
        for (const auto& n : mp.names(w)) s += n;
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("default thresholds") {
    CHECK(default_eta(1) == 17);
    CHECK(default_eta(2) == 1025);
    CHECK(default_eta(3) == 262145);
}

TEST_CASE("word classification examples") {
    auto mp = simple_pair();
    auto c = classify_word(w_of(mp, "ab"), mp);
    CHECK(c.weight == 0);
    CHECK((c.in_LC && c.in_LR && c.in_LZ && c.in_LBZ));

    c = classify_word(w_of(mp, "ba"), mp);
    CHECK(c.weight == 0);
    CHECK(c.in_LZ);
    CHECK_FALSE(c.in_LC);
    CHECK_FALSE(c.in_LR);

    c = classify_word(w_of(mp, "a"), mp);
    CHECK(c.weight == 1);
    CHECK(c.in_LC);
    CHECK_FALSE((c.in_LR || c.in_LZ || c.in_LBZ));

    CHECK_THROWS_AS(mp.letter("c"), Error);
}

TEST_CASE("weight and prefix profiles compose over random splits") {
    auto mp = simple_pair();
    std::mt19937 rng(21);
    for (int t = 0; t < 200; ++t) {
        Word w = random_word(rng, 2, 1 + t % 20);
        std::size_t cut = std::uniform_int_distribution<std::size_t>(0, w.size())(rng);
        Word u(w.begin(), w.begin() + cut), v(w.begin() + cut, w.end());
        auto cw = classify_word(w, mp), cu = classify_word(u, mp), cv = classify_word(v, mp);
        CHECK(cw.weight == cu.weight + cv.weight);
        CHECK(cw.min_prefix_weight == std::min(cu.min_prefix_weight, cu.weight + cv.min_prefix_weight));
        CHECK(cw.max_prefix_weight == std::max(cu.max_prefix_weight, cu.weight + cv.max_prefix_weight));
    }
}

TEST_CASE("enumeration examples") {
    auto mp = simple_pair();
    CHECK(as_strings(mp, enumerate_words(mp, Language::reach, 2)) == std::vector<std::string>{"", "ab"});
    CHECK(as_strings(mp, enumerate_words(mp, Language::zero, 2)) == std::vector<std::string>{"", "ab", "ba"});
    CHECK(as_strings(mp, enumerate_words(mp, Language::cover, 1)) == std::vector<std::string>{"", "a"});
    CHECK_THROWS_AS(enumerate_words(mp, Language::all, 12, 100), Error);
}

TEST_CASE("enumeration agrees with classification") {
    auto mp = dyck_pair();
    for (auto lang : {Language::cover, Language::reach, Language::zero, Language::bounded_zero}) {
        std::size_t n = 0;
        for (std::size_t len = 0; len <= 8; ++len) {
            for (std::size_t code = 0; code < (1u << len); ++code) {
                Word w(len);
                for (std::size_t i = 0; i < len; ++i) w[i] = (code >> i) & 1;
                if (member(lang, classify_word(w, mp))) ++n;
            }
        }
        CHECK(enumerate_words(mp, lang, 8).size() == n);
    }
}

TEST_CASE("morphism validation") {
    MorphismPair mp = simple_pair();
    mp.omega[0] = 2;
    CHECK_THROWS_AS(mp.validate(), Error);
    mp = simple_pair();
    mp.phi[1] = Matrix(2, 2);
    CHECK_THROWS_AS(mp.validate(), Error);
}
