#pragma once

#include <map>
#include <vector>

#include "zcl/exactlin.hpp"

namespace zcl {

using IndexSet = std::vector<int>;  // sorted, 1-based

// Element of Lambda(Q^d) with all coordinates in one grade. Zero coefficients
// are never stored.
class ExtVector {
public:
    ExtVector() = default;
    ExtVector(std::size_t dim, int grade) : dim_(dim), grade_(grade) {}

    static ExtVector unit(std::size_t dim);  // grade 0, value 1
    static ExtVector from_vector(const Vec& v);

    std::size_t dim() const noexcept { return dim_; }
    int grade() const noexcept { return grade_; }
    const std::map<IndexSet, Rational>& coords() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }

    void add(const IndexSet& key, const Rational& v);
    Rational at(const IndexSet& key) const;
    ExtVector scaled(const Rational& f) const;

    bool operator==(const ExtVector& o) const {
        return dim_ == o.dim_ && (c_.empty() ? o.c_.empty() : grade_ == o.grade_ && c_ == o.c_);
    }

private:
    std::size_t dim_ = 0;
    int grade_ = 0;
    std::map<IndexSet, Rational> c_;
};

ExtVector wedge(const ExtVector& a, const ExtVector& b);
ExtVector operator+(const ExtVector& a, const ExtVector& b);

/// Wedge of the RREF basis, scaled so the first nonzero coordinate (subset
/// order) is 1. The zero subspace maps to the grade-0 unit.
ExtVector iota(const Subspace& w);
bool trivially_intersects(const Subspace& w1, const Subspace& w2);

/// 1-based indices of the left-to-right maximal independent subsequence.
std::vector<std::size_t> greedy_basis(const std::vector<ExtVector>& vs);

/// Coefficients expressing `target` in terms of `basis` (which must be
/// independent); throws precondition error when target is outside the span.
std::vector<Rational> coordinates_in(const std::vector<ExtVector>& basis, const ExtVector& target);

}  // namespace zcl
