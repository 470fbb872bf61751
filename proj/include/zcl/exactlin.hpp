#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "zcl/errors.hpp"

namespace zcl {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

/// Parses "p/q" or "p" (optional sign). Throws argument error on malformed input
/// or zero denominator.
Rational parse_rational(std::string_view s);
std::string format_rational(const Rational& q);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static Matrix diagonal(const std::vector<Rational>& diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<Rational>& entries() const noexcept { return a_; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Vec apply(const Vec& v) const;
    Matrix transpose() const;
    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    bool is_zero() const;

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool operator<(const Matrix& o) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

std::string to_string(const Matrix& m);

// Linear span kept in reduced row-echelon form. Because RREF is unique, two
// Subspaces compare equal iff their basis lists are identical.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<Vec>& vs);
    static Subspace whole(std::size_t ambient);

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<Vec>& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    friend class EchelonBuilder;
    std::size_t ambient_;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

// Incremental RREF. insert() reduces against the current rows and keeps the
// rows fully reduced, so membership tests are one pass.
class EchelonBuilder {
public:
    explicit EchelonBuilder(std::size_t ambient = 0) : ambient_(ambient) {}

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    bool full() const noexcept { return rows_.size() == ambient_; }

    /// Reduces v in place against the current rows.
    void reduce(Vec& v) const;
    /// Returns true when v was independent (the span grew). When `added` is
    /// non-null it receives the reduced vector that was inserted.
    bool insert(Vec v, Vec* added = nullptr);
    bool contains(const Vec& v) const;
    Subspace subspace() const;

private:
    std::size_t ambient_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> piv_;  // parallel to rows_
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// {y : <y, x> = 0 for all x in a}.
Subspace orthogonal_complement(const Subspace& a);

/// Row-reduces a copy of m; `pivots` receives pivot columns.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);
/// Fraction-free (Bareiss) elimination on the integer-cleared rows.
std::size_t rank(const Matrix& m);
Subspace row_space(const Matrix& m);
Subspace column_space(const Matrix& m);
Subspace kernel(const Matrix& m);
Matrix inverse(const Matrix& m);
Rational dot(const Vec& a, const Vec& b);

struct RankDecomp {
    std::size_t rank;
    Subspace image;
    Subspace kernel;
};

RankDecomp rank_decomp(const Matrix& m);
bool is_stable(const Matrix& m);
/// The idempotent P with P*m = m*P = m, im P = im m, ker P = ker m.
Matrix stable_identity(const Matrix& m);

}  // namespace zcl
