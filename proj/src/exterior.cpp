#include "zcl/exterior.hpp"

#include <algorithm>

namespace zcl {

ExtVector ExtVector::unit(std::size_t dim) {
    ExtVector e(dim, 0);
    e.c_[{}] = 1;
    return e;
}

ExtVector ExtVector::from_vector(const Vec& v) {
    ExtVector e(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) e.c_[{static_cast<int>(i + 1)}] = v[i];
    return e;
}

void ExtVector::add(const IndexSet& key, const Rational& v) {
    if (sgn(v) == 0) return;
    auto it = c_.find(key);
    if (it == c_.end()) {
        c_.emplace(key, v);
        return;
    }
    it->second += v;
    if (sgn(it->second) == 0) c_.erase(it);
}

Rational ExtVector::at(const IndexSet& key) const {
    auto it = c_.find(key);
    return it == c_.end() ? Rational(0) : it->second;
}

ExtVector ExtVector::scaled(const Rational& f) const {
    ExtVector r(dim_, grade_);
    if (sgn(f) == 0) return r;
    for (const auto& [k, v] : c_) r.c_.emplace(k, v * f);
    return r;
}

ExtVector wedge(const ExtVector& a, const ExtVector& b) {
    if (a.dim() != b.dim()) fail(ErrorKind::dimension, "wedge of vectors over different spaces");
    ExtVector r(a.dim(), a.grade() + b.grade());
    if (static_cast<std::size_t>(a.grade() + b.grade()) > a.dim()) return r;
    for (const auto& [s, x] : a.coords()) {
        for (const auto& [t, y] : b.coords()) {
            IndexSet u;
            u.reserve(s.size() + t.size());
            std::size_t inversions = 0, i = 0, j = 0;
            bool clash = false;
            while (i < s.size() || j < t.size()) {
                if (j == t.size() || (i < s.size() && s[i] < t[j])) {
                    u.push_back(s[i++]);
                } else if (i == s.size() || t[j] < s[i]) {
                    inversions += s.size() - i;
                    u.push_back(t[j++]);
                } else {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            Rational v = x * y;
            if (inversions % 2) v = -v;
            r.add(u, v);
        }
    }
    return r;
}

ExtVector operator+(const ExtVector& a, const ExtVector& b) {
    if (a.dim() != b.dim()) fail(ErrorKind::dimension, "sum of vectors over different spaces");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.grade() != b.grade()) fail(ErrorKind::argument, "sum of exterior vectors of different grades");
    ExtVector r = a;
    for (const auto& [k, v] : b.coords()) r.add(k, v);
    return r;
}

ExtVector iota(const Subspace& w) {
    ExtVector r = ExtVector::unit(w.ambient());
    for (const auto& v : w.basis()) r = wedge(r, ExtVector::from_vector(v));
    if (r.is_zero()) fail(ErrorKind::internal, "wedge of a basis vanished");
    return r.scaled(1 / r.coords().begin()->second);
}

bool trivially_intersects(const Subspace& w1, const Subspace& w2) {
    if (w1.ambient() != w2.ambient()) fail(ErrorKind::dimension, "subspaces of different spaces");
    return !wedge(iota(w1), iota(w2)).is_zero();
}

namespace {

// Dense coordinates of exterior vectors over the union of their supports;
// grades are kept apart by prefixing the grade to the key.
std::vector<Vec> densify(const std::vector<ExtVector>& vs) {
    std::map<std::pair<int, IndexSet>, std::size_t> index;
    for (const auto& v : vs)
        for (const auto& kv : v.coords()) index.emplace(std::make_pair(v.grade(), kv.first), 0);
    std::size_t n = 0;
    for (auto& kv : index) kv.second = n++;
    std::vector<Vec> out;
    for (const auto& v : vs) {
        Vec d(n);
        for (const auto& [k, x] : v.coords()) d[index.at({v.grade(), k})] = x;
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace

std::vector<std::size_t> greedy_basis(const std::vector<ExtVector>& vs) {
    if (vs.empty()) fail(ErrorKind::argument, "greedy_basis of an empty list");
    for (const auto& v : vs)
        if (v.dim() != vs[0].dim()) fail(ErrorKind::dimension, "greedy_basis over mixed ambient spaces");
    auto dense = densify(vs);
    EchelonBuilder b(dense[0].size());
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (b.insert(dense[i])) out.push_back(i + 1);
    return out;
}

std::vector<Rational> coordinates_in(const std::vector<ExtVector>& basis, const ExtVector& target) {
    std::vector<ExtVector> all = basis;
    all.push_back(target);
    auto dense = densify(all);
    std::size_t n = dense[0].size(), k = basis.size();
    // Solve sum_i c_i basis_i = target: columns are basis vectors.
    Matrix a(n, k + 1);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t r = 0; r < n; ++r) a(r, i) = dense[i][r];
    for (std::size_t r = 0; r < n; ++r) a(r, k) = dense[k][r];
    std::vector<std::size_t> piv;
    Matrix red = rref(a, &piv);
    if (!piv.empty() && piv.back() == k) fail(ErrorKind::precondition, "target is outside the span");
    if (piv.size() != k) fail(ErrorKind::precondition, "basis vectors are dependent");
    std::vector<Rational> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = red(i, k);
    return c;
}

}  // namespace zcl
