#include "zcl/facttree.hpp"

#include <algorithm>
#include <sstream>

#include "zcl/exterior.hpp"

namespace zcl {

std::size_t height(const FactTree& t) {
    std::size_t h = 0;
    for (const auto& c : t.children) h = std::max(h, 1 + height(c));
    return h;
}

std::size_t node_count(const FactTree& t) {
    std::size_t n = 1;
    for (const auto& c : t.children) n += node_count(c);
    return n;
}

namespace {

FactTree combine(std::vector<FactTree> kids) {
    FactTree t;
    t.label = kids.front().label;
    for (std::size_t i = 1; i < kids.size(); ++i) t.label = t.label * kids[i].label;
    t.begin = kids.front().begin;
    t.end = kids.back().end;
    t.children = std::move(kids);
    return t;
}

FactTree balanced(std::vector<FactTree>& pieces, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return std::move(pieces[lo]);
    std::size_t mid = lo + (hi - lo + 1) / 2;
    std::vector<FactTree> two;
    two.push_back(balanced(pieces, lo, mid));
    two.push_back(balanced(pieces, mid, hi));
    return combine(std::move(two));
}

// Items are subtrees whose labels form a rank-r sequence; they become the
// leaves of the rank-level tree.
FactTree rank_tree_over(std::vector<FactTree> items) {
    std::size_t m = items.size();
    if (m == 1) return std::move(items[0]);
    if (m == 2) return combine(std::move(items));
    std::size_t d = items[0].label.rows();
    std::size_t r = rank(items[0].label);
    if (r == 0 || r == d) return combine(std::move(items));

    std::vector<ExtVector> img(m);
    std::vector<Subspace> ker(m);
    for (std::size_t i = 0; i < m; ++i) {
        auto rd = rank_decomp(items[i].label);
        img[i] = iota(rd.image);
        ker[i] = rd.kernel;
    }
    auto greedy = greedy_basis(img);  // 1-based
    std::vector<bool> is_greedy(m + 1, false);
    for (auto g : greedy) is_greedy[g] = true;

    std::vector<FactTree> pieces;
    std::size_t e = m;  // 1-based end of the piece being built
    while (e >= 1) {
        if (is_greedy[e]) {
            pieces.push_back(std::move(items[e - 1]));
            --e;
            continue;
        }
        std::vector<std::size_t> below;
        std::vector<ExtVector> basis;
        for (auto g : greedy)
            if (g < e) {
                below.push_back(g);
                basis.push_back(img[g - 1]);
            }
        auto c = coordinates_in(basis, img[e - 1]);
        ExtVector kv = iota(ker[e - 2]);
        std::size_t start = 0;
        for (std::size_t p = 0; p < below.size(); ++p) {
            if (sgn(c[p]) != 0 && !wedge(img[below[p] - 1], kv).is_zero()) {
                start = below[p];
                break;
            }
        }
        if (start == 0) fail(ErrorKind::internal, "no stable segment ends before position " + std::to_string(e));
        std::vector<FactTree> seg;
        for (std::size_t i = start; i <= e - 1; ++i) seg.push_back(std::move(items[i - 1]));
        FactTree p = seg.size() == 1 ? std::move(seg[0]) : combine(std::move(seg));
        if (p.children.size() >= 3 && !is_stable(p.label))
            fail(ErrorKind::internal, "wide segment is not stable");
        std::vector<FactTree> two;
        two.push_back(std::move(p));
        two.push_back(std::move(items[e - 1]));
        pieces.push_back(combine(std::move(two)));
        e = start - 1;
    }
    std::reverse(pieces.begin(), pieces.end());
    return balanced(pieces, 0, pieces.size());
}

std::vector<FactTree> leaves_of(const std::vector<Matrix>& ms) {
    std::vector<FactTree> out;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        FactTree t;
        t.label = ms[i];
        t.begin = i;
        t.end = i + 1;
        out.push_back(std::move(t));
    }
    return out;
}

void check_square_sequence(const std::vector<Matrix>& ms) {
    if (ms.empty()) fail(ErrorKind::argument, "empty matrix sequence");
    for (const auto& m : ms)
        if (!m.square() || m.rows() != ms[0].rows())
            fail(ErrorKind::dimension, "sequence matrices must all be square of the same size");
}

}  // namespace

FactTree build_rank_tree(const std::vector<Matrix>& ms) {
    check_square_sequence(ms);
    std::size_t r = rank(ms[0]);
    Matrix prod = ms[0];
    for (std::size_t i = 1; i < ms.size(); ++i) {
        if (rank(ms[i]) != r)
            fail(ErrorKind::precondition, "not a rank-" + std::to_string(r) + " sequence: matrix " +
                                              std::to_string(i) + " has rank " + std::to_string(rank(ms[i])));
        prod = prod * ms[i];
        if (rank(prod) != r)
            fail(ErrorKind::precondition, "not a rank-" + std::to_string(r) + " sequence: the product of the prefix [0, " +
                                              std::to_string(i + 1) + ") has rank " + std::to_string(rank(prod)));
    }
    return rank_tree_over(leaves_of(ms));
}

FactTree build_tree(const std::vector<Matrix>& ms) {
    check_square_sequence(ms);
    std::vector<FactTree> level = leaves_of(ms);
    while (level.size() > 1) {
        std::vector<FactTree> groups;
        std::size_t i = 0, n = level.size();
        while (i < n) {
            std::size_t r = rank(level[i].label);
            Matrix prod = level[i].label;
            std::size_t j = i + 1;
            while (j < n && rank(level[j].label) == r) {
                Matrix next = prod * level[j].label;
                if (rank(next) != r) break;
                prod = std::move(next);
                ++j;
            }
            std::vector<FactTree> items;
            for (std::size_t k = i; k < j; ++k) items.push_back(std::move(level[k]));
            groups.push_back(rank_tree_over(std::move(items)));
            i = j;
        }
        if (groups.size() == 1) return std::move(groups[0]);
        std::vector<FactTree> next;
        for (std::size_t k = 0; k + 1 < groups.size(); k += 2) {
            std::vector<FactTree> two;
            two.push_back(std::move(groups[k]));
            two.push_back(std::move(groups[k + 1]));
            next.push_back(combine(std::move(two)));
        }
        if (groups.size() % 2) next.push_back(std::move(groups.back()));
        level = std::move(next);
    }
    return std::move(level[0]);
}

namespace {

TreeCheck check_node(const FactTree& t, const std::vector<Matrix>& ms, StabilityRule rule) {
    std::ostringstream os;
    if (t.end <= t.begin || t.end > ms.size()) {
        os << "node span [" << t.begin << ", " << t.end << ") is out of range";
        return {false, os.str()};
    }
    if (t.is_leaf()) {
        if (t.end != t.begin + 1) {
            os << "leaf span [" << t.begin << ", " << t.end << ") is not a singleton";
            return {false, os.str()};
        }
        if (t.label != ms[t.begin]) {
            os << "leaf " << t.begin << " label differs from the input matrix";
            return {false, os.str()};
        }
        return {};
    }
    if (t.children.front().begin != t.begin || t.children.back().end != t.end) {
        os << "children of [" << t.begin << ", " << t.end << ") do not cover its span";
        return {false, os.str()};
    }
    for (std::size_t i = 1; i < t.children.size(); ++i)
        if (t.children[i - 1].end != t.children[i].begin) {
            os << "children of [" << t.begin << ", " << t.end << ") are not contiguous";
            return {false, os.str()};
        }
    Matrix prod = t.children[0].label;
    for (std::size_t i = 1; i < t.children.size(); ++i) prod = prod * t.children[i].label;
    if (prod != t.label) {
        os << "product condition fails at [" << t.begin << ", " << t.end << ")";
        return {false, os.str()};
    }
    if (t.children.size() >= 3) {
        bool ok = true;
        if (rule == StabilityRule::label) {
            ok = is_stable(t.label);
        } else {
            for (const auto& c : t.children) ok = ok && is_stable(c.label);
        }
        if (!ok) {
            os << "stability condition fails at [" << t.begin << ", " << t.end << ")";
            return {false, os.str()};
        }
    }
    for (const auto& c : t.children) {
        auto r = check_node(c, ms, rule);
        if (!r) return r;
    }
    return {};
}

}  // namespace

TreeCheck validate_tree(const FactTree& t, const std::vector<Matrix>& ms, StabilityRule rule) {
    if (ms.empty()) return {false, "empty input sequence"};
    if (t.begin != 0 || t.end != ms.size()) return {false, "root span does not cover the sequence"};
    return check_node(t, ms, rule);
}

std::pair<std::size_t, std::size_t> extract_stable_factor(const Word& w, const MorphismPair& mp, int sign) {
    if (sign != 1 && sign != -1) fail(ErrorKind::argument, "sign must be +1 or -1");
    if (w.empty()) fail(ErrorKind::precondition, "empty word has no stable factor");
    std::vector<Matrix> ms;
    std::vector<long> prefix{0};
    for (auto l : w) {
        if (l >= mp.size()) fail(ErrorKind::argument, "unknown letter index");
        ms.push_back(mp.phi[l]);
        prefix.push_back(prefix.back() + mp.omega[l]);
    }
    FactTree t = build_tree(ms);
    auto weight = [&](const FactTree& n) { return sign * (prefix[n.end] - prefix[n.begin]); };

    const FactTree* hit = nullptr;
    auto scan = [&](auto&& self, const FactTree& n, bool wide_only) -> void {
        if (hit) return;
        bool wide = n.children.size() >= 3;
        if ((!wide_only || wide) && weight(n) > 0 && is_stable(n.label)) {
            hit = &n;
            return;
        }
        for (const auto& c : n.children) self(self, c, wide_only);
    };
    scan(scan, t, true);
    if (!hit) scan(scan, t, false);
    if (!hit)
        fail(ErrorKind::internal, "no stable factor of the required weight sign in a tree of height " +
                                      std::to_string(height(t)));
    return {hit->begin, hit->end};
}

namespace {

void text_rec(const FactTree& t, int depth, std::ostringstream& os) {
    os << std::string(2 * depth, ' ') << '[' << t.begin << ", " << t.end << ") " << to_string(t.label);
    if (t.children.size() >= 3) os << " *";
    os << '\n';
    for (const auto& c : t.children) text_rec(c, depth + 1, os);
}

}  // namespace

std::string tree_to_text(const FactTree& t) {
    std::ostringstream os;
    text_rec(t, 0, os);
    return os.str();
}

}  // namespace zcl
