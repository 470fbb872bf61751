#pragma once

#include <random>
#include <string>
#include <vector>

#include "zcl/closure.hpp"

namespace zt {

using namespace zcl;

inline Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) {
        r.emplace_back();
        for (long x : row) r.back().emplace_back(x);
    }
    return Matrix::from_rows(r);
}

inline Matrix scalar(const Rational& x) { return Matrix::from_rows({{x}}); }

inline MorphismPair morphism(std::vector<std::string> alphabet, std::vector<Matrix> phi, std::vector<int> omega) {
    MorphismPair mp;
    mp.alphabet = std::move(alphabet);
    mp.dim = phi.empty() ? 0 : phi[0].rows();
    mp.phi = std::move(phi);
    mp.omega = std::move(omega);
    mp.validate();
    return mp;
}

/// d = 1, a -> 2 (+1), b -> 1/2 (-1).
inline MorphismPair simple_pair() { return morphism({"a", "b"}, {scalar(2), scalar(Rational(1, 2))}, {1, -1}); }

/// a -> [[1,1],[0,1]] (+1), b -> [[1,0],[1,1]] (-1).
inline MorphismPair dyck_pair() { return morphism({"a", "b"}, {mat({{1, 1}, {0, 1}}), mat({{1, 0}, {1, 1}})}, {1, -1}); }

/// s -a,+1-> s, s -b,-1-> t, t -b,-1-> t: the a^n b^m runs.
inline Vass anbn_vass() {
    Vass v;
    v.states = {"s", "t"};
    v.initial = 0;
    v.accepting = {1};
    v.transitions = {{0, "a", 1, 0}, {0, "b", -1, 1}, {1, "b", -1, 1}};
    return v;
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t d, int lo = -2, int hi = 2) {
    std::uniform_int_distribution<int> u(lo, hi);
    Matrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = u(rng);
    return m;
}

/// Random matrix of rank exactly r (product of random full-rank factors with a rank-r core).
inline Matrix random_rank_matrix(std::mt19937& rng, std::size_t d, std::size_t r) {
    for (;;) {
        Matrix a = random_matrix(rng, d), b = random_matrix(rng, d);
        if (rank(a) != d || rank(b) != d) continue;
        Matrix core(d, d);
        for (std::size_t i = 0; i < r; ++i) core(i, i) = 1;
        return a * core * b;
    }
}

inline Word random_word(std::mt19937& rng, std::size_t letters, std::size_t len) {
    std::uniform_int_distribution<std::size_t> u(0, letters - 1);
    Word w(len);
    for (auto& l : w) l = u(rng);
    return w;
}

inline Nfa random_nfa(std::mt19937& rng, std::size_t states, std::size_t letters, double density = 0.35) {
    Nfa a(states, letters);
    std::bernoulli_distribution edge(density), acc(0.4);
    for (State p = 0; p < states; ++p)
        for (Letter l = 0; l < letters; ++l)
            for (State q = 0; q < states; ++q)
                if (edge(rng)) a.add_transition(p, l, q);
    a.set_initial(0);
    bool any = false;
    for (State q = 0; q < states; ++q)
        if (acc(rng)) a.set_accepting(q), any = true;
    if (!any) a.set_accepting(states - 1);
    return a;
}

inline PolySpace slice_of(const std::vector<std::string>& gens, std::size_t dim, std::size_t degree) {
    IdealGens g;
    for (const auto& s : gens) g.push_back(parse_polynomial(s, dim));
    return ideal_slice(g, dim, degree);
}

}  // namespace zt
