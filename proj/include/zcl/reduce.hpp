#pragma once

#include <string>
#include <vector>

#include "zcl/automata.hpp"
#include "zcl/poly.hpp"

namespace zcl {

// Regular constraint folded into the morphism: lifted(a) has block (i, j) equal
// to [[phi(a), 0], [0, 1]] when (q_i, a, q_j) is a dfa transition. Block 0 is
// the initial state.
struct BlockMorphism {
    MorphismPair base;
    Nfa dfa;
    std::size_t k = 0;
    MorphismPair lifted;
    std::vector<State> order;  // block index -> dfa state
};

/// Requires a deterministic automaton; completeness is required unless
/// `allow_partial` is set (missing transitions give zero block rows).
BlockMorphism blockify_regular(const MorphismPair& mp, const Nfa& dfa, bool allow_partial = false);

/// Degree-D vanishing space of phi(L(dfa) & L_*) from the degree-D vanishing
/// space of lifted(L_*).
PolySpace extract_block_closure(const PolySpace& space, const BlockMorphism& bm, std::size_t degree);

struct VassTransition {
    std::size_t from = 0;
    std::string letter;
    int weight = 0;
    std::size_t to = 0;
};

struct Vass {
    std::vector<std::string> states;
    std::size_t initial = 0;
    std::vector<std::size_t> accepting;
    std::vector<VassTransition> transitions;
};

// Transitions become letters. `mp` labels transition t with phi(letter(t)) and
// weight(t); `path` accepts exactly the state-consistent transition sequences
// from the initial to an accepting state.
struct VassReduction {
    MorphismPair mp;
    Nfa path;
};

/// `letters` supplies phi for the letter names; its omega is ignored.
VassReduction vass_to_monoid(const Vass& v, const MorphismPair& letters);

/// Replaces each letter of weight w (|w| > 1) by |w| fresh letters of weight
/// sign(w); the first carries phi, the others the identity.
struct NormalizedWeights {
    MorphismPair mp;
    std::vector<Word> expansion;  // original letter -> word over mp
};

NormalizedWeights normalize_weights(const std::vector<std::string>& alphabet, const std::vector<Matrix>& phi,
                                    const std::vector<long>& omega);

}  // namespace zcl
