#include "zcl/exactlin.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace zcl {

const char* kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::argument: return "argument";
    case ErrorKind::resource: return "resource";
    case ErrorKind::schema: return "schema";
    case ErrorKind::oracle_disagreement: return "oracle_disagreement";
    case ErrorKind::internal: return "internal";
    }
    return "unknown";
}

void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

namespace {

bool parse_integer(std::string_view s, mpz_class& out) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) return false;
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    out.set_str(std::string(s.substr(i)), 10);
    if (neg) out = -out;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    auto slash = s.find('/');
    mpz_class num, den = 1;
    bool ok = parse_integer(s.substr(0, slash), num);
    if (ok && slash != std::string_view::npos) {
        auto d = s.substr(slash + 1);
        ok = !d.empty() && d[0] != '-' && d[0] != '+' && parse_integer(d, den);
    }
    if (!ok) fail(ErrorKind::argument, "malformed rational \"" + std::string(s) + "\"");
    if (den == 0) fail(ErrorKind::argument, "zero denominator in \"" + std::string(s) + "\"");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) fail(ErrorKind::dimension, "ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) fail(ErrorKind::dimension, "matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (sgn(o(k, j)) != 0) r(i, j) += a * o(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::dimension, "matrix sum shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::dimension, "matrix difference shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) fail(ErrorKind::dimension, "matrix-vector shape mismatch");
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn(v[j]) != 0 && sgn((*this)(i, j)) != 0) r[i] += (*this)(i, j) * v[j];
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Vec Matrix::row(std::size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

Vec Matrix::col(std::size_t j) const {
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) r[i] = (*this)(i, j);
    return r;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool Matrix::operator<(const Matrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        int c = cmp(a_[i], o.a_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string to_string(const Matrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

// ---- EchelonBuilder -------------------------------------------------------

void EchelonBuilder::reduce(Vec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& c = v[piv_[r]];
        if (sgn(c) == 0) continue;
        Rational f = c;
        const Vec& row = rows_[r];
        for (std::size_t j = piv_[r]; j < ambient_; ++j)
            if (sgn(row[j]) != 0) v[j] -= f * row[j];
    }
}

bool EchelonBuilder::insert(Vec v, Vec* added) {
    if (v.size() != ambient_) fail(ErrorKind::dimension, "vector length does not match ambient dimension");
    if (full()) return false;
    reduce(v);
    std::size_t p = 0;
    while (p < ambient_ && sgn(v[p]) == 0) ++p;
    if (p == ambient_) return false;
    if (added) *added = v;
    Rational inv = 1 / v[p];
    for (std::size_t j = p; j < ambient_; ++j)
        if (sgn(v[j]) != 0) v[j] *= inv;
    for (auto& row : rows_) {
        if (sgn(row[p]) == 0) continue;
        Rational f = row[p];
        for (std::size_t j = p; j < ambient_; ++j)
            if (sgn(v[j]) != 0) row[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    piv_.push_back(p);
    return true;
}

bool EchelonBuilder::contains(const Vec& v) const {
    Vec w = v;
    reduce(w);
    return std::all_of(w.begin(), w.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Subspace EchelonBuilder::subspace() const {
    Subspace s(ambient_);
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return piv_[a] < piv_[b]; });
    for (auto i : order) {
        s.basis_.push_back(rows_[i]);
        s.pivots_.push_back(piv_[i]);
    }
    return s;
}

// ---- Subspace ---------------------------------------------------------------

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vs) {
    EchelonBuilder b(ambient);
    for (const auto& v : vs) b.insert(v);
    return b.subspace();
}

Subspace Subspace::whole(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        Vec e(ambient);
        e[i] = 1;
        s.basis_.push_back(std::move(e));
        s.pivots_.push_back(i);
    }
    return s;
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) fail(ErrorKind::dimension, "vector length does not match ambient dimension");
    Vec w = v;
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        Rational c = w[pivots_[r]];
        if (sgn(c) == 0) continue;
        for (std::size_t j = pivots_[r]; j < ambient_; ++j)
            if (sgn(basis_[r][j]) != 0) w[j] -= c * basis_[r][j];
    }
    return std::all_of(w.begin(), w.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool Subspace::contains(const Subspace& o) const {
    for (const auto& v : o.basis())
        if (!contains(v)) return false;
    return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) fail(ErrorKind::dimension, "subspace ambient mismatch");
    EchelonBuilder e(a.ambient());
    for (const auto& v : a.basis()) e.insert(v);
    for (const auto& v : b.basis()) e.insert(v);
    return e.subspace();
}

Subspace orthogonal_complement(const Subspace& a) {
    std::size_t n = a.ambient();
    std::vector<bool> is_pivot(n, false);
    for (auto p : a.pivots()) is_pivot[p] = true;
    std::vector<Vec> out;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n);
        v[f] = 1;
        for (std::size_t r = 0; r < a.dim(); ++r) v[a.pivots()[r]] = -a.basis()[r][f];
        out.push_back(std::move(v));
    }
    return Subspace::span(n, out);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) fail(ErrorKind::dimension, "subspace ambient mismatch");
    return orthogonal_complement(sum(orthogonal_complement(a), orthogonal_complement(b)));
}

// ---- matrices -----------------------------------------------------------------

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots) {
    Matrix a = m;
    std::size_t r = 0;
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        Rational inv = 1 / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || sgn(a(i, c)) == 0) continue;
            Rational f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    if (pivots) *pivots = std::move(piv);
    return a;
}

std::size_t rank(const Matrix& m) {
    std::size_t R = m.rows(), C = m.cols();
    std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
    for (std::size_t i = 0; i < R; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < C; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && a[p][c] == 0) ++p;
        if (p == R) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

Subspace row_space(const Matrix& m) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return Subspace::span(m.cols(), rows);
}

Subspace column_space(const Matrix& m) { return row_space(m.transpose()); }

Subspace kernel(const Matrix& m) { return orthogonal_complement(row_space(m)); }

Matrix inverse(const Matrix& m) {
    if (!m.square()) fail(ErrorKind::dimension, "inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<std::size_t> piv;
    Matrix r = rref(aug, &piv);
    if (piv.size() < n || piv[n - 1] != n - 1) fail(ErrorKind::precondition, "matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
}

Rational dot(const Vec& a, const Vec& b) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    return s;
}

RankDecomp rank_decomp(const Matrix& m) {
    if (!m.square()) fail(ErrorKind::dimension, "rank_decomp needs a square matrix");
    Subspace img = column_space(m);
    Subspace ker = kernel(m);
    return {img.dim(), img, ker};
}

bool is_stable(const Matrix& m) {
    if (!m.square()) fail(ErrorKind::dimension, "is_stable needs a square matrix");
    bool stable = rank(m) == rank(m * m);
#ifndef NDEBUG
    auto rd = rank_decomp(m);
    bool trivial = intersect(rd.image, rd.kernel).dim() == 0;
    if (trivial != stable) fail(ErrorKind::internal, "stability tests disagree");
#endif
    return stable;
}

Matrix stable_identity(const Matrix& m) {
    if (!is_stable(m)) fail(ErrorKind::precondition, "stable_identity needs a stable matrix");
    std::size_t n = m.rows();
    auto rd = rank_decomp(m);
    Matrix y(n, n);
    std::size_t c = 0;
    for (const auto& v : rd.image.basis()) {
        for (std::size_t i = 0; i < n; ++i) y(i, c) = v[i];
        ++c;
    }
    for (const auto& v : rd.kernel.basis()) {
        for (std::size_t i = 0; i < n; ++i) y(i, c) = v[i];
        ++c;
    }
    std::vector<Rational> diag(n);
    for (std::size_t i = 0; i < rd.rank; ++i) diag[i] = 1;
    return y * Matrix::diagonal(diag) * inverse(y);
}

}  // namespace zcl
