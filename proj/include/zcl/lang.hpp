#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zcl/exactlin.hpp"

namespace zcl {

using Letter = std::size_t;            // index into MorphismPair::alphabet
using Word = std::vector<Letter>;

// 2^{d(d+3)} + 1
mpz_class default_eta(std::size_t d);

struct MorphismPair {
    std::vector<std::string> alphabet;
    std::size_t dim = 0;
    std::vector<Matrix> phi;    // per letter, dim x dim
    std::vector<int> omega;     // per letter, in {-1, 0, 1}
    std::optional<mpz_class> eta_override;

    std::size_t size() const noexcept { return alphabet.size(); }
    mpz_class eta() const { return eta_override ? *eta_override : default_eta(dim); }
    /// eta as a machine integer; resource error when it exceeds `cap`.
    std::size_t eta_bounded(std::size_t cap) const;

    Letter letter(const std::string& name) const;
    Word word(const std::vector<std::string>& names) const;
    std::vector<std::string> names(const Word& w) const;

    Matrix phi_of(const Word& w) const;
    long omega_of(const Word& w) const;
    /// Throws schema error when shapes or weights are malformed.
    void validate() const;
};

struct WordClass {
    long weight = 0;
    long min_prefix_weight = 0;
    long max_prefix_weight = 0;
    bool in_LC = true, in_LR = true, in_LZ = true, in_LBZ = true;
};

WordClass classify_word(const Word& w, const MorphismPair& mp);

enum class Language { all, cover, reach, zero, bounded_zero };

const char* language_name(Language l);
Language parse_language(const std::string& s);

/// True when a word with this prefix profile can still be extended (within
/// `remaining` letters) into a member of `lang`.
bool viable_prefix(Language lang, long weight, long min_prefix, long max_prefix, long eta, std::size_t remaining);
bool member(Language lang, const WordClass& c);

constexpr std::size_t default_enumeration_cap = 5'000'000;

/// Calls `visit` on every word of length <= max_len in `lang`, in
/// length-then-lexicographic order. Resource error after `cap` words.
void enumerate_words(const MorphismPair& mp, Language lang, std::size_t max_len,
                     const std::function<void(const Word&)>& visit,
                     std::size_t cap = default_enumeration_cap);
std::vector<Word> enumerate_words(const MorphismPair& mp, Language lang, std::size_t max_len,
                                  std::size_t cap = default_enumeration_cap);

}  // namespace zcl
