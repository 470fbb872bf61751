#include "zcl/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>

namespace zcl {

Caps Caps::from_env() {
    Caps c;
    auto read = [](const char* name, std::size_t& out) {
        if (const char* v = std::getenv(name)) {
            char* end = nullptr;
            unsigned long long x = std::strtoull(v, &end, 10);
            if (end && *end == '\0' && x > 0) out = static_cast<std::size_t>(x);
        }
    };
    read("ZCL_MAX_VERONESE", c.max_veronese);
    read("ZCL_MAX_STATES", c.max_states);
    return c;
}

// ---- MonomialBasis --------------------------------------------------------------

bool MonomialBasis::greater(const Exponents& a, const Exponents& b) {
    unsigned da = 0, db = 0;
    for (auto x : a) da += x;
    for (auto x : b) db += x;
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

std::size_t MonomialBasis::count(std::size_t nvars, std::size_t degree) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(nvars + degree), static_cast<unsigned long>(degree));
    if (!c.fits_ulong_p()) return static_cast<std::size_t>(-1);
    return c.get_ui();
}

MonomialBasis::MonomialBasis(std::size_t nvars, std::size_t degree) : nvars_(nvars), degree_(degree) {
    Exponents e(nvars, 0);
    auto rec = [&](auto&& self, std::size_t v, std::size_t left) -> void {
        if (v == nvars) {
            mons_.push_back(e);
            return;
        }
        for (std::size_t k = 0; k <= left; ++k) {
            e[v] = static_cast<std::uint8_t>(k);
            self(self, v + 1, left - k);
        }
        e[v] = 0;
    };
    rec(rec, 0, degree);
    std::sort(mons_.begin(), mons_.end(), greater);
    std::size_t n = mons_.size();
    deg_.resize(n);
    parent_.assign(n, npos);
    var_.assign(n, npos);
    for (std::size_t i = 0; i < n; ++i) {
        index_.emplace(mons_[i], i);
        std::size_t d = 0;
        for (auto x : mons_[i]) d += x;
        deg_[i] = d;
    }
    mul_.assign(n * nvars, npos);
    for (std::size_t i = 0; i < n; ++i) {
        if (deg_[i] < degree)
            for (std::size_t v = 0; v < nvars; ++v) {
                Exponents f = mons_[i];
                ++f[v];
                mul_[i * nvars + v] = index_.at(f);
            }
        if (deg_[i] > 0) {
            std::size_t v = nvars;
            while (mons_[i][v - 1] == 0) --v;
            Exponents f = mons_[i];
            --f[v - 1];
            parent_[i] = index_.at(f);
            var_[i] = v - 1;
        }
    }
    asc_.resize(n);
    for (std::size_t i = 0; i < n; ++i) asc_[i] = n - 1 - i;
}

std::size_t MonomialBasis::index(const Exponents& e) const {
    auto it = index_.find(e);
    return it == index_.end() ? npos : it->second;
}

std::vector<std::size_t> MonomialBasis::of_degree(std::size_t k) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (deg_[i] == k) out.push_back(i);
    return out;
}

Vec veronese(const Matrix& m, const MonomialBasis& b) {
    if (m.rows() * m.cols() != b.nvars()) fail(ErrorKind::dimension, "matrix size does not match the monomial basis");
    Vec v(b.size());
    const auto& e = m.entries();
    for (auto i : b.ascending()) {
        if (b.total_degree(i) == 0) {
            v[i] = 1;
        } else {
            const Rational& x = e[b.var(i)];
            if (sgn(x) != 0) v[i] = v[b.parent(i)] * x;
        }
    }
    return v;
}

Vec SparseMap::apply(const Vec& v) const {
    Vec out(rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (const auto& [c, x] : row[r])
            if (sgn(v[c]) != 0) out[r] += x * v[c];
    return out;
}

namespace {

std::size_t side(const MonomialBasis& b) {
    auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(b.nvars()))));
    if (d * d != b.nvars()) fail(ErrorKind::dimension, "basis variables do not form a square matrix");
    return d;
}

// Rows of T where veronese(entry-linear substitution) = T veronese; `forms[v]`
// is the linear form (over the original variables) substituted for variable v.
SparseMap substitution_map(const std::vector<std::vector<std::pair<std::size_t, Rational>>>& forms,
                           const MonomialBasis& b) {
    std::size_t n = b.size();
    std::vector<std::map<std::uint32_t, Rational>> poly(n);
    for (auto i : b.ascending()) {
        if (b.total_degree(i) == 0) {
            poly[i][static_cast<std::uint32_t>(i)] = 1;
            continue;
        }
        auto& out = poly[i];
        for (const auto& [mu, c] : poly[b.parent(i)])
            for (const auto& [v, a] : forms[b.var(i)]) {
                auto idx = static_cast<std::uint32_t>(b.times(mu, v));
                Rational& slot = out[idx];
                slot += c * a;
            }
        for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    }
    SparseMap t;
    t.rows = t.cols = n;
    t.row.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (auto& [c, x] : poly[i]) t.row[i].emplace_back(c, x);
    return t;
}

}  // namespace

SparseMap right_multiplication_map(const Matrix& a, const MonomialBasis& b) {
    std::size_t d = side(b);
    if (a.rows() != d || a.cols() != d) fail(ErrorKind::dimension, "matrix size does not match the monomial basis");
    std::vector<std::vector<std::pair<std::size_t, Rational>>> forms(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (sgn(a(k, j)) != 0) forms[i * d + j].emplace_back(i * d + k, a(k, j));
    return substitution_map(forms, b);
}

SparseMap left_multiplication_map(const Matrix& a, const MonomialBasis& b) {
    std::size_t d = side(b);
    if (a.rows() != d || a.cols() != d) fail(ErrorKind::dimension, "matrix size does not match the monomial basis");
    std::vector<std::vector<std::pair<std::size_t, Rational>>> forms(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (sgn(a(i, k)) != 0) forms[i * d + j].emplace_back(k * d + j, a(i, k));
    return substitution_map(forms, b);
}

VeroneseProduct::VeroneseProduct(const MonomialBasis& b) {
    std::size_t d = side(b), n = b.size();
    std::vector<std::map<std::pair<std::uint32_t, std::uint32_t>, Rational>> poly(n);
    for (auto m : b.ascending()) {
        if (b.total_degree(m) == 0) {
            poly[m][{static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(m)}] = 1;
            continue;
        }
        std::size_t v = b.var(m), i = v / d, j = v % d;
        auto& out = poly[m];
        for (const auto& [ab, c] : poly[b.parent(m)])
            for (std::size_t k = 0; k < d; ++k) {
                auto al = static_cast<std::uint32_t>(b.times(ab.first, i * d + k));
                auto be = static_cast<std::uint32_t>(b.times(ab.second, k * d + j));
                out[{al, be}] += c;
            }
    }
    terms_.resize(n);
    for (std::size_t m = 0; m < n; ++m)
        for (auto& [ab, c] : poly[m])
            if (sgn(c) != 0) terms_[m].push_back({ab.first, ab.second, c});
}

Vec VeroneseProduct::operator()(const Vec& x, const Vec& y) const {
    Vec out(terms_.size());
    for (std::size_t m = 0; m < terms_.size(); ++m)
        for (const auto& t : terms_[m])
            if (sgn(x[t.alpha]) != 0 && sgn(y[t.beta]) != 0) out[m] += t.c * x[t.alpha] * y[t.beta];
    return out;
}

// ---- polynomials -------------------------------------------------------------------

void Polynomial::add(const Exponents& e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
        return;
    }
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
}

std::size_t Polynomial::degree() const {
    std::size_t d = 0;
    for (const auto& [e, c] : terms) {
        std::size_t k = 0;
        for (auto x : e) k += x;
        d = std::max(d, k);
    }
    return d;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars != o.nvars) fail(ErrorKind::dimension, "product of polynomials in different rings");
    Polynomial r;
    r.nvars = nvars;
    for (const auto& [e, c] : terms)
        for (const auto& [f, k] : o.terms) {
            Exponents g(nvars);
            for (std::size_t i = 0; i < nvars; ++i) g[i] = static_cast<std::uint8_t>(e[i] + f[i]);
            r.add(g, c * k);
        }
    return r;
}

Vec to_coefficients(const Polynomial& p, const MonomialBasis& b) {
    if (p.nvars != b.nvars()) fail(ErrorKind::dimension, "polynomial ring does not match the monomial basis");
    Vec v(b.size());
    for (const auto& [e, c] : p.terms) {
        auto i = b.index(e);
        if (i == MonomialBasis::npos) fail(ErrorKind::argument, "polynomial degree exceeds the basis degree");
        v[i] = c;
    }
    return v;
}

Polynomial from_coefficients(const Vec& v, const MonomialBasis& b) {
    Polynomial p;
    p.nvars = b.nvars();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) p.terms.emplace(b[i], v[i]);
    return p;
}

std::string variable_name(std::size_t var, std::size_t d) {
    std::size_t i = var / d + 1, j = var % d + 1;
    if (d <= 9) return "x" + std::to_string(i) + std::to_string(j);
    return "x_{" + std::to_string(i) + "}_{" + std::to_string(j) + "}";
}

namespace {

std::vector<std::pair<Exponents, Rational>> sorted_terms(const Polynomial& p) {
    std::vector<std::pair<Exponents, Rational>> t(p.terms.begin(), p.terms.end());
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return MonomialBasis::greater(a.first, b.first); });
    return t;
}

}  // namespace

std::string render(const Polynomial& p, std::size_t d) {
    if (p.terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : sorted_terms(p)) {
        bool neg = sgn(c) < 0;
        Rational a = abs(c);
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (!e[v]) continue;
            if (!mono.empty()) mono += "*";
            mono += variable_name(v, d);
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        if (mono.empty()) {
            out += a.get_str();
        } else if (a == 1) {
            out += mono;
        } else {
            out += a.get_str() + "*" + mono;
        }
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(const std::string& s, std::size_t d) : d_(d) {
        for (char ch : s)
            if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
    }

    Polynomial parse() {
        Polynomial p;
        p.nvars = d_ * d_;
        if (s_.empty()) bad("empty polynomial");
        if (s_ == "0") return p;
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                bad("expected + or -");
            }
            first = false;
            term(p, sign);
        }
        return p;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    [[noreturn]] void bad(const std::string& why) const {
        fail(ErrorKind::schema, "cannot parse polynomial \"" + s_ + "\" at offset " + std::to_string(pos_) + ": " + why);
    }

    mpz_class integer() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) bad("expected a number");
        return mpz_class(s_.substr(start, pos_ - start));
    }

    std::size_t index_digits() {
        if (peek() == '{') {
            ++pos_;
            auto v = integer();
            if (peek() != '}') bad("expected }");
            ++pos_;
            return v.get_ui();
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) bad("expected an index");
        return static_cast<std::size_t>(s_[pos_++] - '0');
    }

    void term(Polynomial& p, int sign) {
        Rational c = sign;
        Exponents e(d_ * d_, 0);
        while (true) {
            if (peek() == 'x') {
                ++pos_;
                std::size_t i, j;
                if (peek() == '_') {
                    ++pos_;
                    i = index_digits();
                    if (peek() != '_') bad("expected _");
                    ++pos_;
                    j = index_digits();
                } else {
                    i = index_digits();
                    j = index_digits();
                }
                if (i < 1 || j < 1 || i > d_ || j > d_) bad("variable index out of range");
                unsigned k = 1;
                if (peek() == '^') {
                    ++pos_;
                    k = integer().get_ui();
                }
                e[(i - 1) * d_ + (j - 1)] = static_cast<std::uint8_t>(e[(i - 1) * d_ + (j - 1)] + k);
            } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
                mpz_class num = integer(), den = 1;
                if (peek() == '/') {
                    ++pos_;
                    den = integer();
                    if (den == 0) bad("zero denominator");
                }
                c *= Rational(num, den);
            } else {
                bad("expected a variable or a number");
            }
            if (peek() != '*') break;
            ++pos_;
        }
        c.canonicalize();
        p.add(e, c);
    }

    std::string s_;
    std::size_t pos_ = 0, d_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& s, std::size_t d) { return PolyParser(s, d).parse(); }

Polynomial normalized(const Polynomial& p) {
    if (p.terms.empty()) return p;
    mpz_class l = 1, g = 0;
    for (const auto& [e, c] : p.terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& [e, c] : p.terms) {
        mpz_class k = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
    }
    Rational f(l, g);
    f.canonicalize();
    if (sgn(sorted_terms(p).front().second) < 0) f = -f;
    Polynomial r;
    r.nvars = p.nvars;
    for (const auto& [e, c] : p.terms) r.terms.emplace(e, c * f);
    return r;
}

PolySpace space_from_evaluations(std::size_t dim, std::size_t degree, const Subspace& evaluations) {
    return {dim, degree, orthogonal_complement(evaluations)};
}

Subspace evaluation_span(const PolySpace& s) { return orthogonal_complement(s.vanishing); }

}  // namespace zcl
