#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zcl/lang.hpp"

namespace zcl {

using State = std::size_t;

constexpr std::size_t default_state_cap = 1'000'000;

// Finite automaton without epsilon moves. Letters are indices; names are kept
// for printing only.
class Nfa {
public:
    Nfa() = default;
    Nfa(std::size_t states, std::size_t letters);

    std::size_t num_states() const noexcept { return delta_.size(); }
    std::size_t num_letters() const noexcept { return letters_; }
    std::size_t num_transitions() const;

    State add_state(std::string name = {});
    void add_transition(State p, Letter a, State q);
    void set_initial(State q, bool on = true);
    void set_accepting(State q, bool on = true);

    const std::vector<State>& targets(State p, Letter a) const { return delta_[p][a]; }
    bool is_initial(State q) const { return initial_[q]; }
    bool is_accepting(State q) const { return accepting_[q]; }
    std::vector<State> initial_states() const;
    std::vector<State> accepting_states() const;

    std::vector<std::string> state_names;
    std::vector<std::string> letter_names;

    std::vector<State> step(const std::vector<State>& set, Letter a) const;
    bool accepts(const Word& w) const;
    bool is_deterministic() const;  // one initial state, at most one target per (state, letter)
    bool is_complete() const;       // every (state, letter) has a target

private:
    std::size_t letters_ = 0;
    std::vector<std::vector<std::vector<State>>> delta_;
    std::vector<bool> initial_, accepting_;
};

/// Subset construction over reachable subsets only. The empty subset is not
/// materialized, so the result may be partial.
Nfa determinize(const Nfa& a, std::size_t state_cap = default_state_cap);
/// Adds a rejecting sink so every (state, letter) has a target.
Nfa complete(const Nfa& a);
/// Intersection of two automata over the same alphabet (reachable pairs).
Nfa product(const Nfa& a, const Nfa& b, std::size_t state_cap = default_state_cap);
/// Single accepting initial state looping on every letter.
Nfa universal_automaton(const MorphismPair& mp);

nlohmann::json nfa_to_json(const Nfa& a);
/// Letters are resolved by name against `letters`.
Nfa nfa_from_json(const nlohmann::json& j, const std::vector<std::string>& letters);

Nfa build_cover_automaton(const MorphismPair& mp, std::size_t state_cap = default_state_cap);
Nfa build_reach_automaton(const MorphismPair& mp, std::size_t state_cap = default_state_cap);
Nfa build_bz_automaton(const MorphismPair& mp, std::size_t state_cap = default_state_cap);

// (Sigma u {eps})^4 minus the all-empty tuple.
struct GammaLetter {
    std::array<std::optional<Letter>, 4> c;
    bool operator==(const GammaLetter& o) const { return c == o.c; }
};

std::vector<GammaLetter> gamma_alphabet(std::size_t sigma);
std::size_t gamma_index(const GammaLetter& g, std::size_t sigma);
std::string gamma_name(const GammaLetter& g, const MorphismPair& mp);
long gamma_weight(const GammaLetter& g, const MorphismPair& mp);
/// One-component letter carrying `l` in slot `slot`.
GammaLetter gamma_single(std::size_t slot, Letter l);

struct ZeroAutomaton {
    Nfa nfa;                          // letters index `letters`
    std::vector<GammaLetter> letters;
    long bound = 0;                   // states are -bound .. bound, bound = 2 eta
    State state_of(long counter) const { return static_cast<State>(counter + bound); }
};

ZeroAutomaton build_zero_automaton(const MorphismPair& mp, std::size_t state_cap = default_state_cap);

using GammaWord = std::vector<GammaLetter>;

struct Flattened {
    std::array<Word, 4> prod;
    Word flat;
};

Flattened flatten(const GammaWord& ws);

/// Reads `ws` in the zero automaton; true when it ends in the accepting state.
bool zero_automaton_accepts(const ZeroAutomaton& za, const GammaWord& ws);

struct ZeroWitness {
    GammaWord W, U;
    // Decomposition w = x1 u x2 w1 y2 v y1 w2 (with sign handling for the mirror case).
    Word x1, u, x2, w1, y2, v, y1, w2;
    std::size_t m = 0, n = 0;
    bool brute_force_factor = false;  // stable factor found by exhaustive search
};

/// Builds W, U with W U^k accepted by the zero automaton for all k and
/// flat(W U^k) = x1 u^{1+(k+1)m} x2 w1 y2 v^{1+(k+1)n} y1 w2.
ZeroWitness construct_zero_witness(const Word& w, const MorphismPair& mp);

}  // namespace zcl
