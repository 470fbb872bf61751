#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zcl/exactlin.hpp"

namespace zcl {

struct Caps {
    std::size_t max_veronese = 10'000;
    std::size_t max_states = 1'000'000;

    /// Defaults overridden by ZCL_MAX_VERONESE / ZCL_MAX_STATES when set.
    static Caps from_env();
};

using Exponents = std::vector<std::uint8_t>;

// Monomials of total degree <= D in n variables, listed in descending grevlex
// order. Variable k of a d x d matrix is entry (k / d, k % d); x11 is the
// smallest variable and xdd the largest, so the first coordinate of a vector
// is its highest monomial and RREF pivots are leading terms.
class MonomialBasis {
public:
    MonomialBasis(std::size_t nvars, std::size_t degree);

    static std::size_t count(std::size_t nvars, std::size_t degree);

    std::size_t size() const noexcept { return mons_.size(); }
    std::size_t nvars() const noexcept { return nvars_; }
    std::size_t degree() const noexcept { return degree_; }
    const Exponents& operator[](std::size_t i) const { return mons_[i]; }
    std::size_t total_degree(std::size_t i) const { return deg_[i]; }
    /// Index of `e`, or npos when it is not in the basis.
    std::size_t index(const Exponents& e) const;
    /// Index of mons[i] * x_v, or npos when the degree would exceed D.
    std::size_t times(std::size_t i, std::size_t v) const { return mul_[i * nvars_ + v]; }
    /// For degree >= 1: mons[i] = mons[parent(i)] * x_{var(i)}.
    std::size_t parent(std::size_t i) const { return parent_[i]; }
    std::size_t var(std::size_t i) const { return var_[i]; }
    /// Indices sorted by ascending degree (parents before children).
    const std::vector<std::size_t>& ascending() const noexcept { return asc_; }
    /// Indices of the monomials of exactly degree k, in basis order.
    std::vector<std::size_t> of_degree(std::size_t k) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    /// Descending grevlex comparison: true when a is the larger monomial.
    static bool greater(const Exponents& a, const Exponents& b);

private:
    std::size_t nvars_, degree_;
    std::vector<Exponents> mons_;
    std::vector<std::size_t> deg_, mul_, parent_, var_, asc_;
    std::map<Exponents, std::size_t> index_;
};

/// Monomial evaluations of the entries of m (row-major variables).
Vec veronese(const Matrix& m, const MonomialBasis& b);

struct SparseMap {
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<std::pair<std::uint32_t, Rational>>> row;

    Vec apply(const Vec& v) const;
};

/// T with veronese(M * a) = T veronese(M) for all M.
SparseMap right_multiplication_map(const Matrix& a, const MonomialBasis& b);
/// T with veronese(a * M) = T veronese(M) for all M.
SparseMap left_multiplication_map(const Matrix& a, const MonomialBasis& b);

// veronese(X * Y)_m = sum over terms (alpha, beta, c) of c * veronese(X)_alpha * veronese(Y)_beta.
class VeroneseProduct {
public:
    explicit VeroneseProduct(const MonomialBasis& b);
    Vec operator()(const Vec& x, const Vec& y) const;
    struct Term {
        std::uint32_t alpha, beta;
        Rational c;
    };
    const std::vector<Term>& terms(std::size_t m) const { return terms_[m]; }

private:
    std::vector<std::vector<Term>> terms_;
};

struct Polynomial {
    std::size_t nvars = 0;
    std::map<Exponents, Rational> terms;  // zero coefficients never stored

    void add(const Exponents& e, const Rational& c);
    std::size_t degree() const;
    bool is_zero() const { return terms.empty(); }
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const { return nvars == o.nvars && terms == o.terms; }
};

Vec to_coefficients(const Polynomial& p, const MonomialBasis& b);
Polynomial from_coefficients(const Vec& v, const MonomialBasis& b);

/// Variable names "x11" .. "xdd" for d <= 9, "x_{i}_{j}" otherwise.
std::string variable_name(std::size_t var, std::size_t d);
/// Terms in descending grevlex order, e.g. "x12*x21 - x11 + 1".
std::string render(const Polynomial& p, std::size_t d);
/// Parses the rendered form (also accepts rational coefficients and any term
/// order). Schema error on malformed input.
Polynomial parse_polynomial(const std::string& s, std::size_t d);
/// Scales to integer coefficients with gcd 1 and positive leading coefficient.
Polynomial normalized(const Polynomial& p);

// Degree-<=D slice of a vanishing ideal, as a subspace of coefficient vectors
// over MonomialBasis(dim*dim, degree).
struct PolySpace {
    std::size_t dim = 0;
    std::size_t degree = 0;
    Subspace vanishing;

    bool operator==(const PolySpace& o) const {
        return dim == o.dim && degree == o.degree && vanishing == o.vanishing;
    }
    bool operator!=(const PolySpace& o) const { return !(*this == o); }
};

using IdealGens = std::vector<Polynomial>;

PolySpace space_from_evaluations(std::size_t dim, std::size_t degree, const Subspace& evaluations);
Subspace evaluation_span(const PolySpace& s);

}  // namespace zcl
