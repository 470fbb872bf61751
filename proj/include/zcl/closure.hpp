#pragma once

#include <set>
#include <vector>

#include "zcl/automata.hpp"
#include "zcl/poly.hpp"
#include "zcl/reduce.hpp"

namespace zcl {

/// Resource error unless the Veronese dimension C(d^2 + D, D) is within the cap.
std::size_t checked_veronese_size(std::size_t dim, std::size_t degree, const Caps& caps);

/// Degree-D vanishing space of a finite set of dim x dim matrices.
PolySpace finite_vanishing_space(std::size_t dim, const std::vector<Matrix>& points, std::size_t degree,
                                 const Caps& caps = {});

/// Span of the Veronese vectors of phi(L(nfa)), per state, by fixpoint.
std::vector<Subspace> regular_spans(const Nfa& nfa, const MorphismPair& mp, const MonomialBasis& b);

/// {p : deg p <= D, p(phi(w)) = 0 for all w in L(nfa)}.
PolySpace regular_closure(const Nfa& nfa, const MorphismPair& mp, std::size_t degree, const Caps& caps = {});
/// Same over the lifted morphism, followed by block extraction.
PolySpace regular_closure(const Nfa& nfa, const BlockMorphism& bm, std::size_t degree, const Caps& caps = {});

/// {p : deg p <= D, p(phi(w)) = 0 for all w in L(nfa) with omega(w) = 0}.
PolySpace zero_weight_closure(const Nfa& nfa, const MorphismPair& mp, std::size_t degree, const Caps& caps = {});

PolySpace cover_closure(const MorphismPair& mp, std::size_t degree, const Caps& caps = {});
/// Bounded-zero closure intersected with the flat image of the Gamma automaton.
PolySpace zero_closure(const MorphismPair& mp, std::size_t degree, const Caps& caps = {});
/// Reach automaton intersected with L_Z, via zero_weight_closure.
PolySpace reach_closure(const MorphismPair& mp, std::size_t degree, const Caps& caps = {});

/// Flat-image part of zero_closure on its own.
PolySpace zero_flat_closure(const MorphismPair& mp, std::size_t degree, const Caps& caps = {});

struct VassClosure {
    PolySpace space;
    PolySpace cross_check;  // computed by the other route
};

/// Cover acceptance: blockified cover closure, cross-checked by the product
/// of the cover automaton with the path automaton.
VassClosure vass_cover_closure(const VassReduction& r, std::size_t degree, const Caps& caps = {});
/// Reach acceptance: product of the reach automaton with the path automaton
/// under the zero-weight engine, cross-checked by blockify + extraction.
VassClosure vass_reach_closure(const VassReduction& r, std::size_t degree, const Caps& caps = {});

struct OracleResult {
    PolySpace space;
    bool stabilized = false;           // same space at the last three length increments
    std::size_t configurations = 0;    // distinct accepted (matrix, profile) classes
    std::vector<std::size_t> eval_dims;  // evaluation-span dimension per length 0..max_len
};

/// Exhaustive enumeration of phi over words of length <= max_len in `lang`
/// (and in L(constraint) when given). Words with identical matrix, automaton
/// state set and relevant prefix profile are merged.
OracleResult oracle_closure(const MorphismPair& mp, Language lang, std::size_t degree, std::size_t max_len,
                            const Nfa* constraint = nullptr, const Caps& caps = {},
                            std::size_t cap = default_enumeration_cap);

/// Finite monoid generated by `gens` (resource error beyond `cap` elements).
std::set<Matrix> monoid_closure(const std::vector<Matrix>& gens, std::size_t dim, std::size_t cap = 100'000);
/// S_0 = <sigma>, S_{i+1} = <alpha s beta, s : s in S_i>, for i = 0..depth.
std::vector<std::set<Matrix>> chain_sets(const std::vector<Matrix>& sigma, const Matrix& alpha, const Matrix& beta,
                                         std::size_t depth, std::size_t cap = 100'000);

/// Span of g * m over generators g and monomials m with deg(g * m) <= D.
PolySpace ideal_slice(const IdealGens& gens, std::size_t dim, std::size_t degree);
/// RREF basis of the space as normalized polynomials.
IdealGens space_basis(const PolySpace& s);
/// Lowest-first greedy subset of the basis generating the slice as an ideal.
IdealGens space_to_generators(const PolySpace& s);
std::vector<std::string> render_all(const IdealGens& g, std::size_t dim);
/// Restricts a degree-(D+k) space to its polynomials of degree <= D.
PolySpace truncate(const PolySpace& s, std::size_t degree);

}  // namespace zcl
