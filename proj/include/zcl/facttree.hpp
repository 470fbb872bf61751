#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zcl/exactlin.hpp"
#include "zcl/lang.hpp"

namespace zcl {

// Node of a factorization tree. span is the half-open range [begin, end) of
// the input sequence covered by the node.
struct FactTree {
    Matrix label;
    std::size_t begin = 0, end = 0;
    std::vector<FactTree> children;

    bool is_leaf() const noexcept { return children.empty(); }
};

std::size_t height(const FactTree& t);
std::size_t node_count(const FactTree& t);

/// Tree over a rank-r sequence with height <= d + 2. Precondition error
/// naming the first prefix whose product drops rank.
FactTree build_rank_tree(const std::vector<Matrix>& ms);
/// Tree over any nonempty sequence with height <= d(d + 3).
FactTree build_tree(const std::vector<Matrix>& ms);

enum class StabilityRule {
    label,     // a node with >= 3 children has a stable label
    children,  // every child of a node with >= 3 children is stable
};

struct TreeCheck {
    bool ok = true;
    std::string message;
    explicit operator bool() const noexcept { return ok; }
};

TreeCheck validate_tree(const FactTree& t, const std::vector<Matrix>& ms,
                        StabilityRule rule = StabilityRule::label);

/// Half-open span [i, j) of a factor u of w with phi(u) stable and
/// sign * omega(u) > 0. Internal error when the tree scan finds none.
std::pair<std::size_t, std::size_t> extract_stable_factor(const Word& w, const MorphismPair& mp, int sign);

std::string tree_to_text(const FactTree& t);

}  // namespace zcl
