#pragma once

#include "sclkit/rational.h"

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sclkit {

// A generator or its inverse. Letters order by generator first, then the
// positive letter before its inverse: a < A < b < B < ...
struct Letter {
    int generator = 1;  // 1-based
    int sign = 1;       // +1 or -1

    Letter inverse() const { return {generator, -sign}; }
    bool is_inverse_of(Letter other) const {
        return generator == other.generator && sign == -other.sign;
    }
    // Dense index in [0, 2*rank): a=0, A=1, b=2, B=3, ...
    int index() const { return 2 * (generator - 1) + (sign < 0 ? 1 : 0); }
    char to_char() const;

    friend bool operator==(Letter, Letter) = default;
    friend std::strong_ordering operator<=>(Letter x, Letter y) {
        return x.index() <=> y.index();
    }
};

Letter letter_from_char(char c);

class Word {
public:
    Word() = default;
    Word(int rank, std::vector<Letter> letters);
    // Lowercase a..z are generators, uppercase their inverses. The word is
    // not reduced by this constructor.
    Word(int rank, std::string_view text);
    // Rank inferred as the largest generator used (at least 1).
    static Word from_string(std::string_view text);

    int rank() const { return rank_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    bool is_reduced() const;
    bool is_cyclically_reduced() const;
    // Same letters in a larger ambient rank.
    Word with_rank(int rank) const;

    std::string to_string() const;

    friend bool operator==(const Word&, const Word&) = default;
    // Lexicographic on letters, then rank.
    friend std::strong_ordering operator<=>(const Word& x, const Word& y);

private:
    int rank_ = 1;
    std::vector<Letter> letters_;
};

// Freely reduced product x*y (ranks must agree).
Word operator*(const Word& x, const Word& y);
Word power(const Word& w, int n);
bool shortlex_less(const Word& x, const Word& y);

Word reduce(const Word& word);
Word invert(const Word& word);

struct CyclicReduction {
    Word core;
    Word conjugator;  // word == conjugator * core * conjugator^-1
};
CyclicReduction cyclic_reduce(const Word& word);

struct PrimitiveRoot {
    Word root;
    int exponent = 1;
};
PrimitiveRoot primitive_root(const Word& word);

// Lexicographically least cyclic rotation of a cyclically reduced word.
Word least_rotation(const Word& word);
// Canonical representative of the conjugacy class of any word: reduce,
// cyclically reduce, take the least rotation.
Word conjugacy_representative(const Word& word);

struct ChainTerm {
    Rational coefficient;
    Word word;

    friend bool operator==(const ChainTerm&, const ChainTerm&) = default;
};

// A finite rational combination of conjugacy classes. Arbitrary terms can be
// stored; canonicalize() produces the normal form modulo g^n - n g,
// conjugation and g + g^-1.
class Chain {
public:
    Chain() = default;
    explicit Chain(int rank) : rank_(rank) {}
    Chain(int rank, std::vector<ChainTerm> terms);
    static Chain of(const Word& w, Rational coefficient = 1);

    int rank() const { return rank_; }
    const std::vector<ChainTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add(Rational coefficient, Word word);
    Chain with_rank(int rank) const;
    // Every term's word replaced by its inverse (the reversed-orientation
    // chain; equals -C in the normal form).
    Chain inverted() const;
    std::size_t total_letters() const;

    // "2*abAB - ab + a + b". parse_chain reads this back.
    std::string to_string() const;

    friend bool operator==(const Chain&, const Chain&) = default;

private:
    int rank_ = 1;
    std::vector<ChainTerm> terms_;
};

Chain operator+(const Chain& x, const Chain& y);
Chain operator-(const Chain& x, const Chain& y);
Chain operator*(const Rational& k, const Chain& c);

Chain canonicalize(const Chain& chain);
bool equal_in_b1h(const Chain& x, const Chain& y);

struct AbelianImage {
    std::vector<Rational> exponent_sums;  // length = rank
    bool is_zero() const;
    friend bool operator==(const AbelianImage&, const AbelianImage&) = default;
};
AbelianImage abelianize(const Chain& chain);
AbelianImage abelianize(const Word& word);

// g1 x1 g2 x1^-1 ... x_{m-1} g_m x_{m-1}^-1 in rank + m - 1, x_i the new
// generators. scl of the result is scl(g1 + ... + gm) + (m-1)/2.
Word addition_lemma_word(std::span<const Word> words);

}  // namespace sclkit
