#include "zcl/automata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "zcl/facttree.hpp"

namespace zcl {

Nfa::Nfa(std::size_t states, std::size_t letters)
    : letters_(letters),
      delta_(states, std::vector<std::vector<State>>(letters)),
      initial_(states, false),
      accepting_(states, false) {
    state_names.resize(states);
    for (std::size_t i = 0; i < states; ++i) state_names[i] = std::to_string(i);
    letter_names.resize(letters);
    for (std::size_t i = 0; i < letters; ++i) letter_names[i] = std::to_string(i);
}

std::size_t Nfa::num_transitions() const {
    std::size_t n = 0;
    for (const auto& row : delta_)
        for (const auto& t : row) n += t.size();
    return n;
}

State Nfa::add_state(std::string name) {
    delta_.emplace_back(letters_);
    initial_.push_back(false);
    accepting_.push_back(false);
    State q = delta_.size() - 1;
    state_names.push_back(name.empty() ? std::to_string(q) : std::move(name));
    return q;
}

void Nfa::add_transition(State p, Letter a, State q) {
    if (p >= num_states() || q >= num_states()) fail(ErrorKind::argument, "transition references an unknown state");
    if (a >= letters_) fail(ErrorKind::argument, "transition references an unknown letter");
    auto& t = delta_[p][a];
    auto it = std::lower_bound(t.begin(), t.end(), q);
    if (it == t.end() || *it != q) t.insert(it, q);
}

void Nfa::set_initial(State q, bool on) { initial_.at(q) = on; }
void Nfa::set_accepting(State q, bool on) { accepting_.at(q) = on; }

std::vector<State> Nfa::initial_states() const {
    std::vector<State> s;
    for (State q = 0; q < num_states(); ++q)
        if (initial_[q]) s.push_back(q);
    return s;
}

std::vector<State> Nfa::accepting_states() const {
    std::vector<State> s;
    for (State q = 0; q < num_states(); ++q)
        if (accepting_[q]) s.push_back(q);
    return s;
}

std::vector<State> Nfa::step(const std::vector<State>& set, Letter a) const {
    std::vector<State> out;
    for (auto p : set) out.insert(out.end(), delta_[p][a].begin(), delta_[p][a].end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Nfa::accepts(const Word& w) const {
    auto cur = initial_states();
    for (auto a : w) {
        if (a >= letters_) fail(ErrorKind::argument, "word uses a letter outside the alphabet");
        cur = step(cur, a);
        if (cur.empty()) return false;
    }
    return std::any_of(cur.begin(), cur.end(), [&](State q) { return accepting_[q]; });
}

bool Nfa::is_deterministic() const {
    if (initial_states().size() != 1) return false;
    for (const auto& row : delta_)
        for (const auto& t : row)
            if (t.size() > 1) return false;
    return true;
}

bool Nfa::is_complete() const {
    for (const auto& row : delta_)
        for (const auto& t : row)
            if (t.empty()) return false;
    return true;
}

Nfa determinize(const Nfa& a, std::size_t state_cap) {
    Nfa d(0, a.num_letters());
    d.letter_names = a.letter_names;
    std::map<std::vector<State>, State> index;
    std::queue<std::vector<State>> work;
    auto name_of = [&](const std::vector<State>& s) {
        std::string n = "{";
        for (std::size_t i = 0; i < s.size(); ++i) n += (i ? "," : "") + a.state_names[s[i]];
        return n + "}";
    };
    auto intern = [&](const std::vector<State>& s) {
        auto it = index.find(s);
        if (it != index.end()) return it->second;
        if (index.size() >= state_cap)
            fail(ErrorKind::resource, "determinization exceeded the state cap of " + std::to_string(state_cap));
        State q = d.add_state(name_of(s));
        index.emplace(s, q);
        if (std::any_of(s.begin(), s.end(), [&](State x) { return a.is_accepting(x); })) d.set_accepting(q);
        work.push(s);
        return q;
    };
    auto init = a.initial_states();
    d.set_initial(intern(init));
    while (!work.empty()) {
        auto s = work.front();
        work.pop();
        State p = index.at(s);
        for (Letter l = 0; l < a.num_letters(); ++l) {
            auto t = a.step(s, l);
            if (t.empty()) continue;
            d.add_transition(p, l, intern(t));
        }
    }
    return d;
}

Nfa complete(const Nfa& a) {
    if (a.is_complete()) return a;
    Nfa c = a;
    State sink = c.add_state("sink");
    for (State q = 0; q < c.num_states(); ++q)
        for (Letter l = 0; l < c.num_letters(); ++l)
            if (c.targets(q, l).empty()) c.add_transition(q, l, sink);
    return c;
}

Nfa product(const Nfa& a, const Nfa& b, std::size_t state_cap) {
    if (a.num_letters() != b.num_letters()) fail(ErrorKind::argument, "product of automata over different alphabets");
    Nfa p(0, a.num_letters());
    p.letter_names = a.letter_names;
    std::map<std::pair<State, State>, State> index;
    std::queue<std::pair<State, State>> work;
    auto intern = [&](State x, State y) {
        auto it = index.find({x, y});
        if (it != index.end()) return it->second;
        if (index.size() >= state_cap)
            fail(ErrorKind::resource, "product automaton exceeded the state cap of " + std::to_string(state_cap));
        State q = p.add_state("(" + a.state_names[x] + "," + b.state_names[y] + ")");
        index.emplace(std::make_pair(x, y), q);
        if (a.is_accepting(x) && b.is_accepting(y)) p.set_accepting(q);
        work.push({x, y});
        return q;
    };
    for (auto x : a.initial_states())
        for (auto y : b.initial_states()) p.set_initial(intern(x, y));
    while (!work.empty()) {
        auto [x, y] = work.front();
        work.pop();
        State q = index.at({x, y});
        for (Letter l = 0; l < a.num_letters(); ++l)
            for (auto x2 : a.targets(x, l))
                for (auto y2 : b.targets(y, l)) p.add_transition(q, l, intern(x2, y2));
    }
    return p;
}

Nfa universal_automaton(const MorphismPair& mp) {
    Nfa a(1, mp.size());
    a.letter_names = mp.alphabet;
    a.state_names[0] = "q";
    a.set_initial(0);
    a.set_accepting(0);
    for (Letter l = 0; l < mp.size(); ++l) a.add_transition(0, l, 0);
    return a;
}

nlohmann::json nfa_to_json(const Nfa& a) {
    nlohmann::json j;
    j["states"] = a.state_names;
    j["alphabet"] = a.letter_names;
    nlohmann::json init = nlohmann::json::array(), acc = nlohmann::json::array(), tr = nlohmann::json::array();
    for (auto q : a.initial_states()) init.push_back(a.state_names[q]);
    for (auto q : a.accepting_states()) acc.push_back(a.state_names[q]);
    for (State p = 0; p < a.num_states(); ++p)
        for (Letter l = 0; l < a.num_letters(); ++l)
            for (auto q : a.targets(p, l)) tr.push_back({a.state_names[p], a.letter_names[l], a.state_names[q]});
    j["initial"] = init;
    j["accepting"] = acc;
    j["transitions"] = tr;
    return j;
}

Nfa nfa_from_json(const nlohmann::json& j, const std::vector<std::string>& letters) {
    if (!j.is_object() || !j.contains("states") || !j.contains("initial") || !j.contains("accepting") ||
        !j.contains("transitions"))
        fail(ErrorKind::schema, "nfa needs states, initial, accepting and transitions");
    std::map<std::string, State> sidx;
    Nfa a(0, letters.size());
    a.letter_names = letters;
    for (const auto& s : j.at("states")) {
        auto name = s.get<std::string>();
        if (sidx.count(name)) fail(ErrorKind::schema, "duplicate nfa state \"" + name + "\"");
        sidx[name] = a.add_state(name);
    }
    auto state = [&](const nlohmann::json& s) {
        auto it = sidx.find(s.get<std::string>());
        if (it == sidx.end()) fail(ErrorKind::schema, "unknown nfa state \"" + s.get<std::string>() + "\"");
        return it->second;
    };
    for (const auto& s : j.at("initial")) a.set_initial(state(s));
    for (const auto& s : j.at("accepting")) a.set_accepting(state(s));
    for (const auto& t : j.at("transitions")) {
        if (!t.is_array() || t.size() != 3) fail(ErrorKind::schema, "nfa transitions are [from, letter, to]");
        auto ln = t[1].get<std::string>();
        auto it = std::find(letters.begin(), letters.end(), ln);
        if (it == letters.end()) fail(ErrorKind::schema, "nfa transition uses unknown letter \"" + ln + "\"");
        a.add_transition(state(t[0]), static_cast<Letter>(it - letters.begin()), state(t[2]));
    }
    return a;
}

Nfa build_cover_automaton(const MorphismPair& mp, std::size_t state_cap) {
    std::size_t eta = mp.eta_bounded(state_cap > 0 ? state_cap - 1 : 0);
    Nfa a(eta + 1, mp.size());
    a.letter_names = mp.alphabet;
    State inf = eta;
    a.state_names[inf] = "inf";
    for (State c = 0; c <= eta; ++c) a.set_accepting(c);
    a.set_initial(0);
    for (Letter l = 0; l < mp.size(); ++l) {
        int w = mp.omega[l];
        for (long c = 0; c < static_cast<long>(eta); ++c) {
            long t = c + w;
            if (t >= 0 && t < static_cast<long>(eta)) a.add_transition(c, l, t);
        }
        if (w == 1) a.add_transition(eta - 1, l, inf);
        a.add_transition(inf, l, inf);
    }
    return a;
}

Nfa build_reach_automaton(const MorphismPair& mp, std::size_t state_cap) {
    std::size_t eta = mp.eta_bounded(state_cap / 2);
    if (2 * eta + 1 > state_cap) fail(ErrorKind::resource, "reach automaton exceeds the state cap");
    Nfa a(2 * eta + 1, mp.size());
    a.letter_names = mp.alphabet;
    auto st = [&](long c, int b) { return static_cast<State>(2 * c + b); };
    for (long c = 0; c < static_cast<long>(eta); ++c)
        for (int b = 0; b < 2; ++b) a.state_names[st(c, b)] = "(" + std::to_string(c) + "," + std::to_string(b) + ")";
    State inf = 2 * eta;
    a.state_names[inf] = "inf";
    a.set_initial(st(0, 0));
    a.set_accepting(st(0, 0));
    a.set_accepting(st(0, 1));
    for (Letter l = 0; l < mp.size(); ++l) {
        int w = mp.omega[l];
        for (long c = 0; c < static_cast<long>(eta); ++c) {
            long t = c + w;
            if (t < 0 || t >= static_cast<long>(eta)) continue;
            for (int b = 0; b < 2; ++b) a.add_transition(st(c, b), l, st(t, b));
        }
        a.add_transition(inf, l, inf);
        if (w == 1) a.add_transition(st(static_cast<long>(eta) - 1, 0), l, inf);
        if (w == -1) a.add_transition(inf, l, st(static_cast<long>(eta) - 1, 1));
    }
    return a;
}

Nfa build_bz_automaton(const MorphismPair& mp, std::size_t state_cap) {
    std::size_t eta = mp.eta_bounded((state_cap - 1) / 2);
    long e = static_cast<long>(eta);
    Nfa a(2 * eta + 1, mp.size());
    a.letter_names = mp.alphabet;
    for (long c = -e; c <= e; ++c) a.state_names[c + e] = std::to_string(c);
    a.set_initial(e);
    a.set_accepting(e);
    for (Letter l = 0; l < mp.size(); ++l)
        for (long c = -e; c <= e; ++c) {
            long t = c + mp.omega[l];
            if (t >= -e && t <= e) a.add_transition(c + e, l, t + e);
        }
    return a;
}

// ---- Gamma alphabet -----------------------------------------------------------

std::vector<GammaLetter> gamma_alphabet(std::size_t sigma) {
    std::size_t base = sigma + 1, total = base * base * base * base;
    std::vector<GammaLetter> out;
    for (std::size_t code = 1; code < total; ++code) {
        GammaLetter g;
        std::size_t x = code;
        for (int slot = 3; slot >= 0; --slot) {
            std::size_t digit = x % base;
            x /= base;
            if (digit) g.c[slot] = digit - 1;
        }
        out.push_back(g);
    }
    return out;
}

std::size_t gamma_index(const GammaLetter& g, std::size_t sigma) {
    std::size_t base = sigma + 1, code = 0;
    for (int slot = 0; slot < 4; ++slot) code = code * base + (g.c[slot] ? *g.c[slot] + 1 : 0);
    if (code == 0) fail(ErrorKind::argument, "the all-empty tuple is not a letter");
    return code - 1;
}

std::string gamma_name(const GammaLetter& g, const MorphismPair& mp) {
    std::string s = "(";
    for (int i = 0; i < 4; ++i) s += (i ? "," : "") + (g.c[i] ? mp.alphabet[*g.c[i]] : std::string("_"));
    return s + ")";
}

long gamma_weight(const GammaLetter& g, const MorphismPair& mp) {
    long w = 0;
    for (const auto& c : g.c)
        if (c) w += mp.omega[*c];
    return w;
}

GammaLetter gamma_single(std::size_t slot, Letter l) {
    GammaLetter g;
    g.c[slot] = l;
    return g;
}

ZeroAutomaton build_zero_automaton(const MorphismPair& mp, std::size_t state_cap) {
    std::size_t eta = mp.eta_bounded((state_cap - 1) / 4);
    long bound = 2 * static_cast<long>(eta);
    ZeroAutomaton za;
    za.bound = bound;
    za.letters = gamma_alphabet(mp.size());
    za.nfa = Nfa(2 * bound + 1, za.letters.size());
    for (std::size_t i = 0; i < za.letters.size(); ++i) za.nfa.letter_names[i] = gamma_name(za.letters[i], mp);
    for (long c = -bound; c <= bound; ++c) za.nfa.state_names[za.state_of(c)] = std::to_string(c);
    za.nfa.set_initial(za.state_of(0));
    za.nfa.set_accepting(za.state_of(0));
    for (std::size_t i = 0; i < za.letters.size(); ++i) {
        long w = gamma_weight(za.letters[i], mp);
        for (long c = -bound; c <= bound; ++c) {
            long t = c + w;
            if (t >= -bound && t <= bound) za.nfa.add_transition(za.state_of(c), i, za.state_of(t));
        }
    }
    return za;
}

Flattened flatten(const GammaWord& ws) {
    Flattened f;
    for (const auto& g : ws)
        for (int i = 0; i < 4; ++i)
            if (g.c[i]) f.prod[i].push_back(*g.c[i]);
    for (const auto& p : f.prod) f.flat.insert(f.flat.end(), p.begin(), p.end());
    return f;
}

bool zero_automaton_accepts(const ZeroAutomaton& za, const GammaWord& ws) {
    Word w;
    std::size_t sigma = 0;
    // The alphabet size is recoverable from |Gamma| = (sigma+1)^4 - 1.
    while ((sigma + 1) * (sigma + 1) * (sigma + 1) * (sigma + 1) - 1 < za.letters.size()) ++sigma;
    for (const auto& g : ws) w.push_back(gamma_index(g, sigma));
    return za.nfa.accepts(w);
}

// ---- zero witness ---------------------------------------------------------------

namespace {

std::pair<std::size_t, std::size_t> brute_force_factor(const Word& w, const MorphismPair& mp, int sign) {
    for (std::size_t len = 1; len <= w.size(); ++len)
        for (std::size_t i = 0; i + len <= w.size(); ++i) {
            Word u(w.begin() + i, w.begin() + i + len);
            if (sign * mp.omega_of(u) > 0 && is_stable(mp.phi_of(u))) return {i, i + len};
        }
    fail(ErrorKind::internal, "no stable factor of the required sign exists");
}

std::pair<std::size_t, std::size_t> stable_factor(const Word& w, const MorphismPair& mp, int sign, bool& brute) {
    try {
        return extract_stable_factor(w, mp, sign);
    } catch (const Error& e) {
        bool below_default = mp.eta_override && *mp.eta_override < default_eta(mp.dim);
        if (e.kind() != ErrorKind::internal || !below_default) throw;
        brute = true;
        return brute_force_factor(w, mp, sign);
    }
}

Word slice(const Word& w, std::size_t a, std::size_t b) { return Word(w.begin() + a, w.begin() + b); }

void append_slot(GammaWord& out, std::size_t slot, const Word& w) {
    for (auto l : w) out.push_back(gamma_single(slot, l));
}

}  // namespace

ZeroWitness construct_zero_witness(const Word& w, const MorphismPair& mp) {
    auto cls = classify_word(w, mp);
    if (!cls.in_LZ || cls.in_LBZ)
        fail(ErrorKind::argument, "construct_zero_witness needs a zero-weight word outside the bounded-zero language");
    long eta = static_cast<long>(mp.eta_bounded(default_state_cap));

    std::vector<long> pre{0};
    for (auto l : w) pre.push_back(pre.back() + mp.omega[l]);
    std::size_t xe = 0;
    while (pre[xe] != eta && pre[xe] != -eta) ++xe;
    int s = pre[xe] > 0 ? 1 : -1;
    std::size_t t = xe;
    while (pre[t] != 0) ++t;
    std::size_t ys = t;
    while (pre[ys] != s * eta) --ys;

    ZeroWitness z;
    Word x = slice(w, 0, xe), y = slice(w, ys, t);
    z.w1 = slice(w, xe, ys);
    z.w2 = slice(w, t, w.size());

    auto [ub, ue] = stable_factor(x, mp, s, z.brute_force_factor);
    auto [vb, ve] = stable_factor(y, mp, -s, z.brute_force_factor);
    z.x1 = slice(x, 0, ub);
    z.u = slice(x, ub, ue);
    z.x2 = slice(x, ue, x.size());
    z.y2 = slice(y, 0, vb);
    z.v = slice(y, vb, ve);
    z.y1 = slice(y, ve, y.size());
    long wu = mp.omega_of(z.u), wv = mp.omega_of(z.v);

    // Phase 1
    Word x1u = z.x1;
    x1u.insert(x1u.end(), z.u.begin(), z.u.end());
    Word y2v = z.y2;
    y2v.insert(y2v.end(), z.v.begin(), z.v.end());
    GammaWord W;
    append_slot(W, 0, x1u);
    append_slot(W, 1, z.x2);
    append_slot(W, 2, y2v);
    append_slot(W, 3, z.y1);

    // Phase 2
    long state = 0;
    std::size_t m0 = 0, n0 = 0;
    auto read_interleaved = [&](std::size_t slot, const Word& part) {
        for (auto l : part) {
            W.push_back(gamma_single(slot, l));
            state += mp.omega[l];
            if (state == -wu) {
                append_slot(W, 0, z.u);
                state += wu;
                ++m0;
            } else if (state == -wv) {
                append_slot(W, 2, z.v);
                state += wv;
                ++n0;
            }
        }
    };
    read_interleaved(1, z.w1);
    read_interleaved(3, z.w2);

    // Phase 3: m |wu| = n |wv| with m >= max(m0, 1), n >= max(n0, 1).
    long a = std::labs(wu), b = std::labs(wv), g = std::gcd(a, b);
    std::size_t bm = static_cast<std::size_t>(b / g), bn = static_cast<std::size_t>(a / g);
    std::size_t k = std::max<std::size_t>({1, (m0 + bm - 1) / bm, (n0 + bn - 1) / bn});
    z.m = k * bm;
    z.n = k * bn;

    auto greedy = [&](GammaWord& out, long st, std::size_t mu, std::size_t nv) {
        std::size_t i = 0, j = 0;
        while (i < mu || j < nv) {
            bool take_u;
            if (i < mu && j < nv) {
                // Move toward 0: on a negative state read the positive-weight factor.
                bool u_positive = wu > 0;
                take_u = st <= 0 ? u_positive : !u_positive;
            } else {
                take_u = i < mu;
            }
            if (take_u) {
                append_slot(out, 0, z.u);
                st += wu;
                ++i;
            } else {
                append_slot(out, 2, z.v);
                st += wv;
                ++j;
            }
        }
    };
    greedy(W, state, z.m - m0, z.n - n0);
    greedy(z.U, 0, z.m, z.n);
    z.W = std::move(W);
    return z;
}

}  // namespace zcl
