#include "zcl/closure.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <tuple>

namespace zcl {

std::size_t checked_veronese_size(std::size_t dim, std::size_t degree, const Caps& caps) {
    std::size_t n = MonomialBasis::count(dim * dim, degree);
    if (n > caps.max_veronese)
        fail(ErrorKind::resource, "Veronese dimension " + (n == static_cast<std::size_t>(-1) ? std::string("(overflow)") : std::to_string(n)) +
                                      " for d = " + std::to_string(dim) + ", D = " + std::to_string(degree) +
                                      " exceeds the cap " + std::to_string(caps.max_veronese) +
                                      " (raise ZCL_MAX_VERONESE or caps.max_veronese)");
    return n;
}

namespace {

void check_states(const Nfa& a, const Caps& caps) {
    if (a.num_states() > caps.max_states)
        fail(ErrorKind::resource, "automaton has " + std::to_string(a.num_states()) + " states, above the cap " +
                                      std::to_string(caps.max_states) + " (raise ZCL_MAX_STATES or caps.max_states)");
}

Subspace accepting_sum(const std::vector<Subspace>& spans, const Nfa& a, std::size_t ambient) {
    EchelonBuilder acc(ambient);
    for (auto q : a.accepting_states())
        for (const auto& v : spans[q].basis()) acc.insert(v);
    return acc.subspace();
}

}  // namespace

PolySpace finite_vanishing_space(std::size_t dim, const std::vector<Matrix>& points, std::size_t degree,
                                 const Caps& caps) {
    checked_veronese_size(dim, degree, caps);
    MonomialBasis b(dim * dim, degree);
    EchelonBuilder e(b.size());
    for (const auto& p : points) {
        if (p.rows() != dim || p.cols() != dim) fail(ErrorKind::dimension, "point has the wrong dimension");
        e.insert(veronese(p, b));
    }
    return space_from_evaluations(dim, degree, e.subspace());
}

std::vector<Subspace> regular_spans(const Nfa& nfa, const MorphismPair& mp, const MonomialBasis& b) {
    if (nfa.num_letters() != mp.size()) fail(ErrorKind::argument, "automaton alphabet does not match the morphism");
    std::vector<SparseMap> t;
    for (const auto& m : mp.phi) t.push_back(right_multiplication_map(m, b));
    std::vector<EchelonBuilder> s(nfa.num_states(), EchelonBuilder(b.size()));
    std::deque<std::pair<State, Vec>> work;
    Vec id = veronese(Matrix::identity(mp.dim), b);
    for (auto q : nfa.initial_states()) {
        Vec added;
        if (s[q].insert(id, &added)) work.emplace_back(q, std::move(added));
    }
    while (!work.empty()) {
        auto [p, v] = std::move(work.front());
        work.pop_front();
        for (Letter a = 0; a < nfa.num_letters(); ++a) {
            const auto& targets = nfa.targets(p, a);
            if (targets.empty()) continue;
            Vec w = t[a].apply(v);
            for (auto q : targets) {
                if (s[q].full()) continue;
                Vec added;
                if (s[q].insert(w, &added)) work.emplace_back(q, std::move(added));
            }
        }
    }
    std::vector<Subspace> out;
    for (const auto& e : s) out.push_back(e.subspace());
    return out;
}

PolySpace regular_closure(const Nfa& nfa, const MorphismPair& mp, std::size_t degree, const Caps& caps) {
    mp.validate();
    checked_veronese_size(mp.dim, degree, caps);
    check_states(nfa, caps);
    MonomialBasis b(mp.dim * mp.dim, degree);
    auto spans = regular_spans(nfa, mp, b);
    return space_from_evaluations(mp.dim, degree, accepting_sum(spans, nfa, b.size()));
}

PolySpace regular_closure(const Nfa& nfa, const BlockMorphism& bm, std::size_t degree, const Caps& caps) {
    return extract_block_closure(regular_closure(nfa, bm.lifted, degree, caps), bm, degree);
}

// ---- zero-weight engine ----------------------------------------------------------
//
// Z(p, q) spans the Veronese vectors of phi(w) over weight-0 paths p -> q. Every
// weight-0 word is a product of weight-0 letters and blocks a w' b with
// omega(a) = -omega(b) = +-1 and omega(w') = 0, so the spans close under
// concatenation (the bilinear Veronese product) and these sandwiches.

PolySpace zero_weight_closure(const Nfa& nfa, const MorphismPair& mp, std::size_t degree, const Caps& caps) {
    mp.validate();
    checked_veronese_size(mp.dim, degree, caps);
    check_states(nfa, caps);
    if (nfa.num_letters() != mp.size()) fail(ErrorKind::argument, "automaton alphabet does not match the morphism");
    MonomialBasis b(mp.dim * mp.dim, degree);
    VeroneseProduct prod(b);
    std::size_t n = nfa.num_states(), N = b.size();

    std::vector<SparseMap> left(mp.size()), right(mp.size());
    for (Letter a = 0; a < mp.size(); ++a)
        if (mp.omega[a] != 0) {
            left[a] = left_multiplication_map(mp.phi[a], b);
            right[a] = right_multiplication_map(mp.phi[a], b);
        }
    // in_[p]: (p0, a) with p0 -a-> p, omega(a) != 0; out_[q]: (a, q0) with q -a-> q0.
    std::vector<std::vector<std::pair<State, Letter>>> in_(n);
    std::vector<std::vector<std::pair<Letter, State>>> out_(n);
    for (State p = 0; p < n; ++p)
        for (Letter a = 0; a < mp.size(); ++a)
            if (mp.omega[a] != 0)
                for (auto q : nfa.targets(p, a)) {
                    in_[q].emplace_back(p, a);
                    out_[p].emplace_back(a, q);
                }

    std::vector<EchelonBuilder> z(n * n, EchelonBuilder(N));
    std::vector<std::vector<Vec>> gens(n * n);
    struct Item {
        State p, q;
        Vec v;
    };
    std::deque<Item> work;
    auto offer = [&](State p, State q, Vec v) {
        auto& e = z[p * n + q];
        if (e.full()) return;
        Vec added;
        if (e.insert(std::move(v), &added)) work.push_back({p, q, std::move(added)});
    };

    Vec id = veronese(Matrix::identity(mp.dim), b);
    for (State p = 0; p < n; ++p) offer(p, p, id);
    for (State p = 0; p < n; ++p)
        for (Letter a = 0; a < mp.size(); ++a)
            if (mp.omega[a] == 0)
                for (auto q : nfa.targets(p, a)) offer(p, q, veronese(mp.phi[a], b));

    while (!work.empty()) {
        Item it = std::move(work.front());
        work.pop_front();
        State p = it.p, q = it.q;
        gens[p * n + q].push_back(it.v);
        const Vec& v = gens[p * n + q].back();
        for (State r = 0; r < n; ++r)
            for (std::size_t g = 0; g < gens[r * n + p].size(); ++g) offer(r, q, prod(gens[r * n + p][g], v));
        for (State s = 0; s < n; ++s)
            for (std::size_t g = 0; g < gens[q * n + s].size(); ++g) {
                if (s == q && p == q && &gens[q * n + s][g] == &v) continue;
                offer(p, s, prod(v, gens[q * n + s][g]));
            }
        std::vector<std::optional<Vec>> rv(mp.size());
        for (const auto& [a, q0] : out_[q])
            for (const auto& [p0, c] : in_[p]) {
                if (mp.omega[a] != -mp.omega[c]) continue;
                if (!rv[a]) rv[a] = right[a].apply(v);
                offer(p0, q0, left[c].apply(*rv[a]));
            }
    }

    EchelonBuilder acc(N);
    for (auto p : nfa.initial_states())
        for (auto q : nfa.accepting_states())
            for (const auto& v : gens[p * n + q]) acc.insert(v);
    return space_from_evaluations(mp.dim, degree, acc.subspace());
}

// ---- pipelines -------------------------------------------------------------------

PolySpace cover_closure(const MorphismPair& mp, std::size_t degree, const Caps& caps) {
    mp.validate();
    checked_veronese_size(mp.dim, degree, caps);
    return regular_closure(build_cover_automaton(mp, caps.max_states), mp, degree, caps);
}

PolySpace reach_closure(const MorphismPair& mp, std::size_t degree, const Caps& caps) {
    mp.validate();
    checked_veronese_size(mp.dim, degree, caps);
    return zero_weight_closure(build_reach_automaton(mp, caps.max_states), mp, degree, caps);
}

namespace {

// Homogeneous degree-k part of the Veronese coordinates.
struct Graded {
    std::vector<std::size_t> index;  // local -> basis index
    std::vector<std::size_t> local;  // basis index -> local (npos outside)
};

// Applies `m` along tensor axis `axis` of an n^4 block starting at `off`.
void mode_apply(Vec& v, std::size_t off, std::size_t n, int axis, const SparseMap& m) {
    std::size_t stride = 1;
    for (int i = 3; i > axis; --i) stride *= n;
    std::size_t outer = 1;
    for (int i = 0; i < axis; ++i) outer *= n;
    Vec col(n);
    for (std::size_t o = 0; o < outer; ++o)
        for (std::size_t s = 0; s < stride; ++s) {
            std::size_t base = off + o * n * stride + s;
            bool any = false;
            for (std::size_t i = 0; i < n; ++i) {
                col[i] = v[base + i * stride];
                if (sgn(col[i]) != 0) any = true;
            }
            if (!any) continue;
            Vec r = m.apply(col);
            for (std::size_t i = 0; i < n; ++i) v[base + i * stride] = r[i];
        }
}

}  // namespace

PolySpace zero_flat_closure(const MorphismPair& mp, std::size_t degree, const Caps& caps) {
    mp.validate();
    checked_veronese_size(mp.dim, degree, caps);
    MonomialBasis b(mp.dim * mp.dim, degree);
    ZeroAutomaton za = build_zero_automaton(mp, caps.max_states);
    check_states(za.nfa, caps);

    std::vector<Graded> gr(degree + 1);
    std::vector<std::size_t> off(degree + 2, 0);
    for (std::size_t k = 0; k <= degree; ++k) {
        gr[k].index = b.of_degree(k);
        gr[k].local.assign(b.size(), MonomialBasis::npos);
        for (std::size_t i = 0; i < gr[k].index.size(); ++i) gr[k].local[gr[k].index[i]] = i;
        std::size_t nk = gr[k].index.size();
        off[k + 1] = off[k] + nk * nk * nk * nk;
    }
    std::size_t G = off[degree + 1];
    if (G > caps.max_veronese)
        fail(ErrorKind::resource, "flat-image tensor dimension " + std::to_string(G) + " exceeds the cap " +
                                      std::to_string(caps.max_veronese) + " (raise ZCL_MAX_VERONESE or caps.max_veronese)");

    // Degree-k blocks of the right multiplication maps.
    std::vector<std::vector<SparseMap>> rk(degree + 1, std::vector<SparseMap>(mp.size()));
    for (Letter a = 0; a < mp.size(); ++a) {
        SparseMap t = right_multiplication_map(mp.phi[a], b);
        for (std::size_t k = 0; k <= degree; ++k) {
            auto& m = rk[k][a];
            std::size_t nk = gr[k].index.size();
            m.rows = m.cols = nk;
            m.row.resize(nk);
            for (std::size_t i = 0; i < nk; ++i)
                for (const auto& [c, x] : t.row[gr[k].index[i]])
                    m.row[i].emplace_back(static_cast<std::uint32_t>(gr[k].local[c]), x);
        }
    }

    Vec seed(G);
    Vec id = veronese(Matrix::identity(mp.dim), b);
    for (std::size_t k = 0; k <= degree; ++k) {
        std::size_t nk = gr[k].index.size();
        for (std::size_t a = 0; a < nk; ++a)
            for (std::size_t c = 0; c < nk; ++c)
                for (std::size_t e = 0; e < nk; ++e)
                    for (std::size_t f = 0; f < nk; ++f) {
                        Rational x = id[gr[k].index[a]] * id[gr[k].index[c]] * id[gr[k].index[e]] * id[gr[k].index[f]];
                        if (sgn(x) != 0) seed[off[k] + ((a * nk + c) * nk + e) * nk + f] = x;
                    }
    }

    auto apply_gamma = [&](const GammaLetter& g, Vec v) {
        for (std::size_t k = 0; k <= degree; ++k) {
            std::size_t nk = gr[k].index.size();
            for (int slot = 0; slot < 4; ++slot)
                if (g.c[slot]) mode_apply(v, off[k], nk, slot, rk[k][*g.c[slot]]);
        }
        return v;
    };

    const Nfa& a = za.nfa;
    std::vector<EchelonBuilder> s(a.num_states(), EchelonBuilder(G));
    std::deque<std::pair<State, Vec>> work;
    for (auto q : a.initial_states()) {
        Vec added;
        if (s[q].insert(seed, &added)) work.emplace_back(q, std::move(added));
    }
    while (!work.empty()) {
        auto [p, v] = std::move(work.front());
        work.pop_front();
        for (Letter l = 0; l < a.num_letters(); ++l) {
            const auto& targets = a.targets(p, l);
            if (targets.empty()) continue;
            Vec w = apply_gamma(za.letters[l], v);
            for (auto q : targets) {
                if (s[q].full()) continue;
                Vec added;
                if (s[q].insert(w, &added)) work.emplace_back(q, std::move(added));
            }
        }
    }
    EchelonBuilder accb(G);
    for (auto q : a.accepting_states()) {
        Subspace sq = s[q].subspace();
        for (const auto& v : sq.basis()) accb.insert(v);
    }
    Subspace acc = accb.subspace();

    // Coefficients of m(M1 M2 M3 M4) in the graded tensor coordinates.
    VeroneseProduct prod(b);
    Matrix e(acc.dim(), b.size());
    for (std::size_t m = 0; m < b.size(); ++m) {
        std::size_t k = b.total_degree(m), nk = gr[k].index.size();
        const auto& L = gr[k].local;
        std::map<std::size_t, Rational> h;
        for (const auto& t1 : prod.terms(m))
            for (const auto& t2 : prod.terms(t1.alpha))
                for (const auto& t3 : prod.terms(t2.alpha)) {
                    std::size_t idx = off[k] + ((L[t3.alpha] * nk + L[t3.beta]) * nk + L[t2.beta]) * nk + L[t1.beta];
                    h[idx] += t1.c * t2.c * t3.c;
                }
        for (std::size_t r = 0; r < acc.dim(); ++r)
            for (const auto& [idx, c] : h)
                if (sgn(acc.basis()[r][idx]) != 0) e(r, m) += acc.basis()[r][idx] * c;
    }
    return {mp.dim, degree, kernel(e)};
}

PolySpace zero_closure(const MorphismPair& mp, std::size_t degree, const Caps& caps) {
    mp.validate();
    checked_veronese_size(mp.dim, degree, caps);
    PolySpace bz = regular_closure(build_bz_automaton(mp, caps.max_states), mp, degree, caps);
    PolySpace flat = zero_flat_closure(mp, degree, caps);
    return {mp.dim, degree, intersect(bz.vanishing, flat.vanishing)};
}

namespace {

MorphismPair with_eta(const MorphismPair& mp, const mpz_class& eta) {
    MorphismPair r = mp;
    r.eta_override = eta;
    return r;
}

}  // namespace

VassClosure vass_cover_closure(const VassReduction& r, std::size_t degree, const Caps& caps) {
    BlockMorphism bm = blockify_regular(r.mp, r.path, true);
    checked_veronese_size(bm.lifted.dim, degree, caps);
    Nfa lifted_cover = build_cover_automaton(bm.lifted, caps.max_states);
    VassClosure out;
    out.space = regular_closure(lifted_cover, bm, degree, caps);
    MorphismPair base = with_eta(r.mp, bm.lifted.eta());
    Nfa prod = product(build_cover_automaton(base, caps.max_states), r.path, caps.max_states);
    out.cross_check = regular_closure(prod, base, degree, caps);
    return out;
}

VassClosure vass_reach_closure(const VassReduction& r, std::size_t degree, const Caps& caps) {
    BlockMorphism bm = blockify_regular(r.mp, r.path, true);
    MorphismPair base = with_eta(r.mp, bm.lifted.eta());
    VassClosure out;
    Nfa prod = product(build_reach_automaton(base, caps.max_states), r.path, caps.max_states);
    out.space = zero_weight_closure(prod, base, degree, caps);
    checked_veronese_size(bm.lifted.dim, degree, caps);
    PolySpace lifted = zero_weight_closure(build_reach_automaton(bm.lifted, caps.max_states), bm.lifted, degree, caps);
    out.cross_check = extract_block_closure(lifted, bm, degree);
    return out;
}

// ---- oracle ----------------------------------------------------------------------

OracleResult oracle_closure(const MorphismPair& mp, Language lang, std::size_t degree, std::size_t max_len,
                            const Nfa* constraint, const Caps& caps, std::size_t cap) {
    mp.validate();
    checked_veronese_size(mp.dim, degree, caps);
    MonomialBasis b(mp.dim * mp.dim, degree);
    long eta = lang == Language::bounded_zero ? static_cast<long>(mp.eta_bounded(1u << 30)) : 0;

    // Fewest letters from each constraint state to acceptance.
    std::vector<std::size_t> dist;
    std::vector<State> start{0};
    if (constraint) {
        if (constraint->num_letters() != mp.size()) fail(ErrorKind::argument, "constraint alphabet does not match the morphism");
        std::size_t n = constraint->num_states();
        std::vector<std::vector<State>> rev(n);
        for (State p = 0; p < n; ++p)
            for (Letter a = 0; a < mp.size(); ++a)
                for (auto q : constraint->targets(p, a)) rev[q].push_back(p);
        dist.assign(n, static_cast<std::size_t>(-1));
        std::deque<State> bfs;
        for (auto q : constraint->accepting_states()) {
            dist[q] = 0;
            bfs.push_back(q);
        }
        while (!bfs.empty()) {
            State q = bfs.front();
            bfs.pop_front();
            for (auto p : rev[q])
                if (dist[p] == static_cast<std::size_t>(-1)) {
                    dist[p] = dist[q] + 1;
                    bfs.push_back(p);
                }
        }
        start = constraint->initial_states();
    }

    using Key = std::tuple<std::vector<State>, long, Matrix>;
    std::set<Key> seen;
    std::vector<Key> level;
    auto viable = [&](const std::vector<State>& set, long w, std::size_t remaining) {
        if (constraint) {
            if (set.empty()) return false;
            std::size_t best = static_cast<std::size_t>(-1);
            for (auto q : set) best = std::min(best, dist[q]);
            if (best > remaining) return false;
        }
        long rem = static_cast<long>(remaining);
        switch (lang) {
        case Language::all: return true;
        case Language::cover: return w >= 0;
        case Language::reach: return w >= 0 && w <= rem;
        case Language::zero: return std::abs(w) <= rem;
        case Language::bounded_zero: return std::abs(w) <= eta && std::abs(w) <= rem;
        }
        return true;
    };
    auto accepted = [&](const std::vector<State>& set, long w) {
        if (constraint && std::none_of(set.begin(), set.end(), [&](State q) { return constraint->is_accepting(q); }))
            return false;
        if (lang == Language::all || lang == Language::cover) return true;
        return w == 0;
    };

    OracleResult res;
    EchelonBuilder evals(b.size());
    Key root{start, 0, Matrix::identity(mp.dim)};
    if (viable(std::get<0>(root), 0, max_len)) {
        seen.insert(root);
        level.push_back(root);
    }
    for (std::size_t len = 0;; ++len) {
        for (const auto& [set, w, m] : level)
            if (accepted(set, w)) {
                ++res.configurations;
                if (!evals.full()) evals.insert(veronese(m, b));
            }
        res.eval_dims.push_back(evals.dim());
        if (len == max_len) break;
        std::vector<Key> next;
        for (const auto& [set, w, m] : level)
            for (Letter a = 0; a < mp.size(); ++a) {
                std::vector<State> ns = constraint ? constraint->step(set, a) : set;
                long nw = lang == Language::all ? 0 : w + mp.omega[a];
                if (!viable(ns, nw, max_len - len - 1)) continue;
                Key k{std::move(ns), nw, m * mp.phi[a]};
                if (seen.size() >= cap)
                    fail(ErrorKind::resource, "oracle enumeration exceeded " + std::to_string(cap) + " configurations");
                if (seen.insert(k).second) next.push_back(std::move(k));
            }
        level = std::move(next);
    }
    std::size_t L = res.eval_dims.size();
    res.stabilized = L >= 4 && res.eval_dims[L - 1] == res.eval_dims[L - 4];
    res.space = space_from_evaluations(mp.dim, degree, evals.subspace());
    return res;
}

std::set<Matrix> monoid_closure(const std::vector<Matrix>& gens, std::size_t dim, std::size_t cap) {
    std::set<Matrix> out{Matrix::identity(dim)};
    std::deque<Matrix> work{Matrix::identity(dim)};
    while (!work.empty()) {
        Matrix m = std::move(work.front());
        work.pop_front();
        for (const auto& g : gens) {
            Matrix p = m * g;
            if (out.insert(p).second) {
                if (out.size() > cap) fail(ErrorKind::resource, "monoid has more than " + std::to_string(cap) + " elements");
                work.push_back(std::move(p));
            }
        }
    }
    return out;
}

std::vector<std::set<Matrix>> chain_sets(const std::vector<Matrix>& sigma, const Matrix& alpha, const Matrix& beta,
                                         std::size_t depth, std::size_t cap) {
    if (sigma.empty()) fail(ErrorKind::argument, "chain needs at least one seed matrix");
    std::size_t dim = sigma[0].rows();
    std::vector<std::set<Matrix>> out{monoid_closure(sigma, dim, cap)};
    for (std::size_t i = 0; i < depth; ++i) {
        std::vector<Matrix> gens(out.back().begin(), out.back().end());
        for (const auto& s : out.back()) gens.push_back(alpha * s * beta);
        out.push_back(monoid_closure(gens, dim, cap));
    }
    return out;
}

// ---- ideal utilities -------------------------------------------------------------

namespace {

void add_multiples(const Polynomial& g, const MonomialBasis& b, EchelonBuilder& e) {
    std::size_t dg = g.degree();
    for (std::size_t m = 0; m < b.size(); ++m) {
        if (b.total_degree(m) + dg > b.degree()) continue;
        Vec v(b.size());
        for (const auto& [ex, c] : g.terms) {
            Exponents f = ex;
            for (std::size_t i = 0; i < f.size(); ++i) f[i] = static_cast<std::uint8_t>(f[i] + b[m][i]);
            v[b.index(f)] = c;
        }
        e.insert(std::move(v));
    }
}

}  // namespace

PolySpace ideal_slice(const IdealGens& gens, std::size_t dim, std::size_t degree) {
    MonomialBasis b(dim * dim, degree);
    EchelonBuilder e(b.size());
    for (const auto& g : gens) {
        if (g.nvars != dim * dim) fail(ErrorKind::dimension, "generator ring does not match the dimension");
        if (g.degree() > degree)
            fail(ErrorKind::argument, "generator of degree " + std::to_string(g.degree()) + " exceeds the slice degree " +
                                          std::to_string(degree));
        add_multiples(g, b, e);
    }
    return {dim, degree, e.subspace()};
}

IdealGens space_basis(const PolySpace& s) {
    MonomialBasis b(s.dim * s.dim, s.degree);
    IdealGens out;
    for (const auto& v : s.vanishing.basis()) out.push_back(normalized(from_coefficients(v, b)));
    return out;
}

IdealGens space_to_generators(const PolySpace& s) {
    MonomialBasis b(s.dim * s.dim, s.degree);
    EchelonBuilder e(b.size());
    IdealGens out;
    const auto& rows = s.vanishing.basis();
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        if (e.contains(*it)) continue;
        Polynomial g = normalized(from_coefficients(*it, b));
        add_multiples(g, b, e);
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<std::string> render_all(const IdealGens& g, std::size_t dim) {
    std::vector<std::string> out;
    for (const auto& p : g) out.push_back(render(p, dim));
    return out;
}

PolySpace truncate(const PolySpace& s, std::size_t degree) {
    if (degree > s.degree) fail(ErrorKind::argument, "cannot truncate to a higher degree");
    MonomialBasis from(s.dim * s.dim, s.degree), to(s.dim * s.dim, degree);
    std::vector<Vec> keep;
    const auto& rows = s.vanishing.basis();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (from.total_degree(s.vanishing.pivots()[r]) > degree) continue;
        Vec v(to.size());
        for (std::size_t i = 0; i < from.size(); ++i)
            if (sgn(rows[r][i]) != 0) v[to.index(from[i])] = rows[r][i];
        keep.push_back(std::move(v));
    }
    return {s.dim, degree, Subspace::span(to.size(), keep)};
}

}  // namespace zcl
