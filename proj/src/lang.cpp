#include "zcl/lang.hpp"

#include <algorithm>
#include <climits>

namespace zcl {

mpz_class default_eta(std::size_t d) {
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), 2, static_cast<unsigned long>(d * (d + 3)));
    return e + 1;
}

std::size_t MorphismPair::eta_bounded(std::size_t cap) const {
    mpz_class e = eta();
    if (e > cap)
        fail(ErrorKind::resource, "eta = " + e.get_str() + " exceeds the state budget " + std::to_string(cap) +
                                      "; set eta_override to run at a smaller threshold");
    return e.get_ui();
}

Letter MorphismPair::letter(const std::string& name) const {
    auto it = std::find(alphabet.begin(), alphabet.end(), name);
    if (it == alphabet.end()) fail(ErrorKind::argument, "unknown letter \"" + name + "\"");
    return static_cast<Letter>(it - alphabet.begin());
}

Word MorphismPair::word(const std::vector<std::string>& names) const {
    Word w;
    for (const auto& n : names) w.push_back(letter(n));
    return w;
}

std::vector<std::string> MorphismPair::names(const Word& w) const {
    std::vector<std::string> out;
    for (auto l : w) out.push_back(alphabet.at(l));
    return out;
}

Matrix MorphismPair::phi_of(const Word& w) const {
    Matrix m = Matrix::identity(dim);
    for (auto l : w) {
        if (l >= size()) fail(ErrorKind::argument, "letter index out of range");
        m = m * phi[l];
    }
    return m;
}

long MorphismPair::omega_of(const Word& w) const {
    long s = 0;
    for (auto l : w) {
        if (l >= size()) fail(ErrorKind::argument, "letter index out of range");
        s += omega[l];
    }
    return s;
}

void MorphismPair::validate() const {
    if (dim == 0) fail(ErrorKind::schema, "dimension must be positive");
    if (phi.size() != alphabet.size() || omega.size() != alphabet.size())
        fail(ErrorKind::schema, "every letter needs a matrix and a weight");
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        if (alphabet[i].empty()) fail(ErrorKind::schema, "letters must be nonempty strings");
        for (std::size_t j = 0; j < i; ++j)
            if (alphabet[j] == alphabet[i]) fail(ErrorKind::schema, "duplicate letter \"" + alphabet[i] + "\"");
        if (phi[i].rows() != dim || phi[i].cols() != dim)
            fail(ErrorKind::schema, "phi: matrix of \"" + alphabet[i] + "\" is not " + std::to_string(dim) + "x" +
                                        std::to_string(dim));
        if (omega[i] < -1 || omega[i] > 1)
            fail(ErrorKind::schema, "omega: weight of \"" + alphabet[i] + "\" is " + std::to_string(omega[i]) +
                                        "; weights must be normalized to -1, 0 or 1 (split a weight-k step "
                                        "into k unit steps, see --normalize-weights)");
    }
    if (eta_override && *eta_override < 1) fail(ErrorKind::schema, "eta_override must be at least 1");
}

WordClass classify_word(const Word& w, const MorphismPair& mp) {
    WordClass c;
    for (auto l : w) {
        if (l >= mp.size()) fail(ErrorKind::argument, "unknown letter index " + std::to_string(l));
        c.weight += mp.omega[l];
        c.min_prefix_weight = std::min(c.min_prefix_weight, c.weight);
        c.max_prefix_weight = std::max(c.max_prefix_weight, c.weight);
    }
    mpz_class eta = mp.eta();
    c.in_LC = c.min_prefix_weight >= 0;
    c.in_LZ = c.weight == 0;
    c.in_LR = c.in_LC && c.in_LZ;
    c.in_LBZ = c.in_LZ && mpz_class(-c.min_prefix_weight) <= eta && mpz_class(c.max_prefix_weight) <= eta;
    return c;
}

const char* language_name(Language l) {
    switch (l) {
    case Language::all: return "all";
    case Language::cover: return "cover";
    case Language::reach: return "reach";
    case Language::zero: return "zero";
    case Language::bounded_zero: return "bounded_zero";
    }
    return "?";
}

Language parse_language(const std::string& s) {
    if (s == "all" || s == "regular") return Language::all;
    if (s == "cover" || s == "LC") return Language::cover;
    if (s == "reach" || s == "LR") return Language::reach;
    if (s == "zero" || s == "LZ") return Language::zero;
    if (s == "bz" || s == "bounded_zero" || s == "LBZ") return Language::bounded_zero;
    fail(ErrorKind::argument, "unknown language selector \"" + s + "\"");
}

bool viable_prefix(Language lang, long weight, long min_prefix, long max_prefix, long eta, std::size_t remaining) {
    long rem = static_cast<long>(remaining);
    switch (lang) {
    case Language::all: return true;
    case Language::cover: return min_prefix >= 0;
    case Language::reach: return min_prefix >= 0 && weight <= rem;
    case Language::zero: return weight <= rem && -weight <= rem;
    case Language::bounded_zero:
        return -min_prefix <= eta && max_prefix <= eta && weight <= rem && -weight <= rem;
    }
    return false;
}

bool member(Language lang, const WordClass& c) {
    switch (lang) {
    case Language::all: return true;
    case Language::cover: return c.in_LC;
    case Language::reach: return c.in_LR;
    case Language::zero: return c.in_LZ;
    case Language::bounded_zero: return c.in_LBZ;
    }
    return false;
}

namespace {

struct Prefix {
    Word w;
    long weight = 0, lo = 0, hi = 0;
};

}  // namespace

void enumerate_words(const MorphismPair& mp, Language lang, std::size_t max_len,
                     const std::function<void(const Word&)>& visit, std::size_t cap) {
    mpz_class e = mp.eta();
    long eta = e > LONG_MAX / 4 ? LONG_MAX / 4 : e.get_si();
    std::size_t emitted = 0;
    auto emit = [&](const Prefix& p) {
        bool ok = false;
        switch (lang) {
        case Language::all: ok = true; break;
        case Language::cover: ok = p.lo >= 0; break;
        case Language::reach: ok = p.lo >= 0 && p.weight == 0; break;
        case Language::zero: ok = p.weight == 0; break;
        case Language::bounded_zero: ok = p.weight == 0 && -p.lo <= eta && p.hi <= eta; break;
        }
        if (!ok) return;
        if (++emitted > cap)
            fail(ErrorKind::resource, "word enumeration exceeded the cap of " + std::to_string(cap) + " words");
        visit(p.w);
    };
    std::vector<Prefix> level{Prefix{}};
    emit(level[0]);
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Prefix> next;
        for (const auto& p : level) {
            for (Letter l = 0; l < mp.size(); ++l) {
                Prefix q{p.w, p.weight + mp.omega[l], 0, 0};
                q.lo = std::min(p.lo, q.weight);
                q.hi = std::max(p.hi, q.weight);
                if (!viable_prefix(lang, q.weight, q.lo, q.hi, eta, max_len - len)) continue;
                q.w.push_back(l);
                next.push_back(std::move(q));
                if (next.size() > cap)
                    fail(ErrorKind::resource, "word enumeration exceeded the cap of " + std::to_string(cap) + " prefixes");
            }
        }
        for (const auto& p : next) emit(p);
        level = std::move(next);
    }
}

std::vector<Word> enumerate_words(const MorphismPair& mp, Language lang, std::size_t max_len, std::size_t cap) {
    std::vector<Word> out;
    enumerate_words(mp, lang, max_len, [&](const Word& w) { out.push_back(w); }, cap);
    return out;
}

}  // namespace zcl
