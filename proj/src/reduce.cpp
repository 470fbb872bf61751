#include "zcl/reduce.hpp"

namespace zcl {

BlockMorphism blockify_regular(const MorphismPair& mp, const Nfa& dfa, bool allow_partial) {
    mp.validate();
    if (dfa.num_letters() != mp.size()) fail(ErrorKind::argument, "automaton alphabet does not match the morphism");
    if (!dfa.is_deterministic()) fail(ErrorKind::argument, "blockify needs a deterministic automaton; determinize first");
    if (!allow_partial && !dfa.is_complete())
        fail(ErrorKind::argument, "blockify needs a complete automaton; complete it first");

    BlockMorphism bm;
    bm.base = mp;
    bm.dfa = dfa;
    bm.k = dfa.num_states();
    State q0 = dfa.initial_states().front();
    bm.order.push_back(q0);
    for (State q = 0; q < bm.k; ++q)
        if (q != q0) bm.order.push_back(q);
    std::vector<std::size_t> pos(bm.k);
    for (std::size_t i = 0; i < bm.k; ++i) pos[bm.order[i]] = i;

    std::size_t d = mp.dim, b = d + 1, n = bm.k * b;
    bm.lifted.alphabet = mp.alphabet;
    bm.lifted.dim = n;
    bm.lifted.omega = mp.omega;
    bm.lifted.eta_override = mp.eta_override;
    for (Letter a = 0; a < mp.size(); ++a) {
        Matrix m(n, n);
        for (State p = 0; p < bm.k; ++p)
            for (State q : dfa.targets(p, a)) {
                std::size_t r0 = pos[p] * b, c0 = pos[q] * b;
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j) m(r0 + i, c0 + j) = mp.phi[a](i, j);
                m(r0 + d, c0 + d) = 1;
            }
        bm.lifted.phi.push_back(std::move(m));
    }
    return bm;
}

PolySpace extract_block_closure(const PolySpace& space, const BlockMorphism& bm, std::size_t degree) {
    std::size_t d = bm.base.dim, b = d + 1, n = bm.lifted.dim, nv = n * n;
    if (space.degree != degree)
        fail(ErrorKind::argument, "space has degree " + std::to_string(space.degree) + ", expected " +
                                      std::to_string(degree));
    if (space.dim != n) fail(ErrorKind::dimension, "space dimension does not match the lifted morphism");
    if (degree == 0) fail(ErrorKind::argument, "extraction needs degree >= 1");

    MonomialBasis lifted(nv, degree), target(d * d, degree);
    Subspace evals = evaluation_span(space);
    if (evals.dim() == 0) return {d, degree, Subspace::whole(target.size())};

    std::vector<std::size_t> acc;
    for (std::size_t i = 0; i < bm.k; ++i)
        if (bm.dfa.is_accepting(bm.order[i])) acc.push_back(i);
    auto var = [&](std::size_t r, std::size_t c) { return r * n + c; };
    auto linear = [&](std::size_t i, std::size_t j) {
        Polynomial p;
        p.nvars = nv;
        for (auto f : acc) {
            Exponents e(nv, 0);
            e[var(i, f * b + j)] = 1;
            p.add(e, 1);
        }
        return p;
    };
    Polynomial one;
    one.nvars = nv;
    one.add(Exponents(nv, 0), 1);
    Polynomial iota = linear(d, d);
    std::vector<Polynomial> t(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) t[i * d + j] = linear(i, j);
    std::vector<Polynomial> ipow{one};
    for (std::size_t k = 1; k <= degree; ++k) ipow.push_back(ipow.back() * iota);

    std::vector<Polynomial> tpow(target.size());
    Matrix m(evals.dim(), target.size());
    for (auto a : target.ascending()) {
        tpow[a] = target.total_degree(a) == 0 ? one : tpow[target.parent(a)] * t[target.var(a)];
        Polynomial lift = tpow[a] * ipow[degree - target.total_degree(a)];
        for (const auto& [e, c] : lift.terms) {
            std::size_t col = lifted.index(e);
            for (std::size_t r = 0; r < evals.dim(); ++r) {
                const Rational& x = evals.basis()[r][col];
                if (sgn(x) != 0) m(r, a) += x * c;
            }
        }
    }
    return {d, degree, kernel(m)};
}

VassReduction vass_to_monoid(const Vass& v, const MorphismPair& letters) {
    std::size_t k = v.states.size();
    if (k == 0) fail(ErrorKind::schema, "vass has no states");
    if (v.initial >= k) fail(ErrorKind::schema, "vass initial state out of range");
    VassReduction r;
    r.mp.dim = letters.dim;
    r.mp.eta_override = letters.eta_override;
    for (std::size_t i = 0; i < v.transitions.size(); ++i) {
        const auto& t = v.transitions[i];
        if (t.from >= k || t.to >= k) fail(ErrorKind::schema, "vass transition " + std::to_string(i) + " references an unknown state");
        if (t.weight < -1 || t.weight > 1)
            fail(ErrorKind::schema, "vass transition " + std::to_string(i) + " has weight " + std::to_string(t.weight) +
                                        "; weights must be in {-1, 0, 1} (use --normalize-weights)");
        r.mp.alphabet.push_back("t" + std::to_string(i) + ":" + t.letter);
        r.mp.phi.push_back(letters.phi[letters.letter(t.letter)]);
        r.mp.omega.push_back(t.weight);
    }
    r.path = Nfa(k, v.transitions.size());
    r.path.state_names = v.states;
    r.path.letter_names = r.mp.alphabet;
    r.path.set_initial(v.initial);
    for (auto q : v.accepting) {
        if (q >= k) fail(ErrorKind::schema, "vass accepting state out of range");
        r.path.set_accepting(q);
    }
    for (std::size_t i = 0; i < v.transitions.size(); ++i) r.path.add_transition(v.transitions[i].from, i, v.transitions[i].to);
    return r;
}

NormalizedWeights normalize_weights(const std::vector<std::string>& alphabet, const std::vector<Matrix>& phi,
                                    const std::vector<long>& omega) {
    if (alphabet.size() != phi.size() || alphabet.size() != omega.size())
        fail(ErrorKind::argument, "alphabet, phi and omega sizes differ");
    if (alphabet.empty()) fail(ErrorKind::argument, "empty alphabet");
    NormalizedWeights out;
    out.mp.dim = phi[0].rows();
    Matrix id = Matrix::identity(out.mp.dim);
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
        long w = omega[a];
        long parts = w > 1 || w < -1 ? (w < 0 ? -w : w) : 1;
        int unit = w > 0 ? 1 : (w < 0 ? -1 : 0);
        Word exp;
        for (long p = 0; p < parts; ++p) {
            exp.push_back(out.mp.alphabet.size());
            out.mp.alphabet.push_back(parts == 1 ? alphabet[a] : alphabet[a] + "#" + std::to_string(p + 1));
            out.mp.phi.push_back(p == 0 ? phi[a] : id);
            out.mp.omega.push_back(unit);
        }
        out.expansion.push_back(std::move(exp));
    }
    return out;
}

}  // namespace zcl
