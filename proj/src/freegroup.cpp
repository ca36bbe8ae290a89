#include "sclkit/freegroup.h"

#include "sclkit/errors.h"

#include <algorithm>
#include <cctype>
#include <map>

namespace sclkit {

char Letter::to_char() const {
    char c = static_cast<char>('a' + generator - 1);
    return sign > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

Letter letter_from_char(char c) {
    if (c >= 'a' && c <= 'z') return {c - 'a' + 1, 1};
    if (c >= 'A' && c <= 'Z') return {c - 'A' + 1, -1};
    throw InvalidArgument(std::string("not a generator letter: '") + c + "'");
}

namespace {

void check_rank(int rank, const std::vector<Letter>& letters) {
    if (rank < 1) throw InvalidArgument("rank must be positive");
    for (Letter l : letters) {
        if (l.generator < 1 || l.generator > rank || (l.sign != 1 && l.sign != -1)) {
            throw InvalidArgument("letter " + std::string(1, l.to_char()) +
                                  " outside rank " + std::to_string(rank));
        }
    }
}

std::vector<Letter> letters_from_text(std::string_view text) {
    std::vector<Letter> out;
    out.reserve(text.size());
    for (char c : text) out.push_back(letter_from_char(c));
    return out;
}

}  // namespace

Word::Word(int rank, std::vector<Letter> letters) : rank_(rank), letters_(std::move(letters)) {
    check_rank(rank_, letters_);
}

Word::Word(int rank, std::string_view text) : Word(rank, letters_from_text(text)) {}

Word Word::from_string(std::string_view text) {
    auto letters = letters_from_text(text);
    int rank = 1;
    for (Letter l : letters) rank = std::max(rank, l.generator);
    return Word(rank, std::move(letters));
}

bool Word::is_reduced() const {
    for (std::size_t i = 1; i < letters_.size(); ++i) {
        if (letters_[i].is_inverse_of(letters_[i - 1])) return false;
    }
    return true;
}

bool Word::is_cyclically_reduced() const {
    if (!is_reduced()) return false;
    return letters_.size() < 2 || !letters_.front().is_inverse_of(letters_.back());
}

Word Word::with_rank(int rank) const {
    if (rank < rank_) {
        Word w(rank, letters_);  // validates
        return w;
    }
    Word w = *this;
    w.rank_ = rank;
    return w;
}

std::string Word::to_string() const {
    std::string s;
    s.reserve(letters_.size());
    for (Letter l : letters_) s.push_back(l.to_char());
    return s;
}

std::strong_ordering operator<=>(const Word& x, const Word& y) {
    auto c = std::lexicographical_compare_three_way(x.letters_.begin(), x.letters_.end(),
                                                    y.letters_.begin(), y.letters_.end());
    if (c != 0) return c;
    return x.rank_ <=> y.rank_;
}

bool shortlex_less(const Word& x, const Word& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
}

Word reduce(const Word& word) {
    std::vector<Letter> out;
    out.reserve(word.size());
    for (Letter l : word.letters()) {
        if (!out.empty() && out.back().is_inverse_of(l)) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return Word(word.rank(), std::move(out));
}

Word operator*(const Word& x, const Word& y) {
    if (x.rank() != y.rank()) {
        throw RankMismatch("multiplying words of rank " + std::to_string(x.rank()) + " and " +
                           std::to_string(y.rank()));
    }
    std::vector<Letter> letters = x.letters();
    letters.insert(letters.end(), y.letters().begin(), y.letters().end());
    return reduce(Word(x.rank(), std::move(letters)));
}

Word invert(const Word& word) {
    std::vector<Letter> out;
    out.reserve(word.size());
    for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it) {
        out.push_back(it->inverse());
    }
    return reduce(Word(word.rank(), std::move(out)));
}

Word power(const Word& w, int n) {
    Word base = n < 0 ? invert(w) : reduce(w);
    Word out(w.rank(), std::vector<Letter>{});
    for (int i = 0; i < std::abs(n); ++i) out = out * base;
    return out;
}

CyclicReduction cyclic_reduce(const Word& word) {
    Word w = reduce(word);
    const auto& l = w.letters();
    std::size_t lo = 0;
    std::size_t hi = l.size();
    while (hi - lo >= 2 && l[lo].is_inverse_of(l[hi - 1])) {
        ++lo;
        --hi;
    }
    std::vector<Letter> core(l.begin() + static_cast<std::ptrdiff_t>(lo),
                             l.begin() + static_cast<std::ptrdiff_t>(hi));
    std::vector<Letter> conj(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(lo));
    return {Word(w.rank(), std::move(core)), Word(w.rank(), std::move(conj))};
}

PrimitiveRoot primitive_root(const Word& word) {
    const auto& l = word.letters();
    const std::size_t n = l.size();
    if (n == 0) throw InvalidArgument("primitive_root of the identity");
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (std::size_t i = d; i < n && periodic; ++i) periodic = l[i] == l[i - d];
        if (periodic) {
            std::vector<Letter> root(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(d));
            return {Word(word.rank(), std::move(root)), static_cast<int>(n / d)};
        }
    }
    return {word, 1};  // unreachable
}

Word least_rotation(const Word& word) {
    const auto& l = word.letters();
    const std::size_t n = l.size();
    if (n == 0) return word;
    std::size_t best = 0;
    for (std::size_t s = 1; s < n; ++s) {
        for (std::size_t k = 0; k < n; ++k) {
            Letter x = l[(s + k) % n];
            Letter y = l[(best + k) % n];
            if (x == y) continue;
            if (x < y) best = s;
            break;
        }
    }
    std::vector<Letter> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.push_back(l[(best + k) % n]);
    return Word(word.rank(), std::move(out));
}

Word conjugacy_representative(const Word& word) {
    return least_rotation(cyclic_reduce(word).core);
}

Chain::Chain(int rank, std::vector<ChainTerm> terms) : rank_(rank), terms_(std::move(terms)) {
    if (rank_ < 1) throw InvalidArgument("rank must be positive");
    for (const auto& t : terms_) {
        if (t.word.rank() != rank_) throw RankMismatch("chain term rank differs from chain rank");
    }
}

Chain Chain::of(const Word& w, Rational coefficient) {
    Chain c(w.rank());
    c.add(std::move(coefficient), w);
    return c;
}

void Chain::add(Rational coefficient, Word word) {
    if (word.rank() != rank_) {
        throw RankMismatch("adding a rank-" + std::to_string(word.rank()) + " word to a rank-" +
                           std::to_string(rank_) + " chain");
    }
    terms_.push_back({std::move(coefficient), std::move(word)});
}

Chain Chain::with_rank(int rank) const {
    Chain out(rank);
    for (const auto& t : terms_) out.add(t.coefficient, t.word.with_rank(rank));
    return out;
}

Chain Chain::inverted() const {
    Chain out(rank_);
    for (const auto& t : terms_) out.add(t.coefficient, invert(t.word));
    return out;
}

std::size_t Chain::total_letters() const {
    std::size_t n = 0;
    for (const auto& t : terms_) n += t.word.size();
    return n;
}

std::string Chain::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coefficient;
        if (first) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        first = false;
        Rational m = abs(c);
        if (m != 1) {
            s += m.get_den() == 1 ? m.get_num().get_str()
                                  : m.get_num().get_str() + "/" + m.get_den().get_str();
            s += "*";
        }
        s += t.word.empty() ? std::string("1") : t.word.to_string();
    }
    return s;
}

Chain operator+(const Chain& x, const Chain& y) {
    if (x.rank() != y.rank()) {
        throw RankMismatch("adding chains of rank " + std::to_string(x.rank()) + " and " +
                           std::to_string(y.rank()));
    }
    Chain out = x;
    for (const auto& t : y.terms()) out.add(t.coefficient, t.word);
    return out;
}

Chain operator*(const Rational& k, const Chain& c) {
    Chain out(c.rank());
    for (const auto& t : c.terms()) out.add(k * t.coefficient, t.word);
    return out;
}

Chain operator-(const Chain& x, const Chain& y) { return x + Rational(-1) * y; }

Chain canonicalize(const Chain& chain) {
    std::map<Word, Rational> mass;
    for (const auto& t : chain.terms()) {
        if (t.coefficient == 0) continue;
        Word core = cyclic_reduce(t.word).core;
        if (core.empty()) continue;
        auto [root, exponent] = primitive_root(core);
        mass[least_rotation(root)] += t.coefficient * exponent;
    }
    // Fold each class into the smaller of {g, g^-1}.
    std::map<Word, Rational> folded;
    for (const auto& [w, c] : mass) {
        Word inv = least_rotation(invert(w));
        if (inv < w) {
            folded[inv] -= c;
        } else {
            folded[w] += c;
        }
    }
    std::vector<ChainTerm> terms;
    for (auto& [w, c] : folded) {
        if (c != 0) terms.push_back({c, w});
    }
    std::sort(terms.begin(), terms.end(),
              [](const ChainTerm& x, const ChainTerm& y) { return shortlex_less(x.word, y.word); });
    return Chain(chain.rank(), std::move(terms));
}

bool equal_in_b1h(const Chain& x, const Chain& y) {
    int r = std::max(x.rank(), y.rank());
    return canonicalize(x.with_rank(r)) == canonicalize(y.with_rank(r));
}

bool AbelianImage::is_zero() const {
    return std::all_of(exponent_sums.begin(), exponent_sums.end(),
                       [](const Rational& r) { return r == 0; });
}

AbelianImage abelianize(const Word& word) {
    AbelianImage img{std::vector<Rational>(static_cast<std::size_t>(word.rank()))};
    for (Letter l : word.letters()) img.exponent_sums[static_cast<std::size_t>(l.generator - 1)] += l.sign;
    return img;
}

AbelianImage abelianize(const Chain& chain) {
    AbelianImage img{std::vector<Rational>(static_cast<std::size_t>(chain.rank()))};
    for (const auto& t : chain.terms()) {
        for (Letter l : t.word.letters()) {
            img.exponent_sums[static_cast<std::size_t>(l.generator - 1)] += t.coefficient * l.sign;
        }
    }
    return img;
}

Word addition_lemma_word(std::span<const Word> words) {
    if (words.empty()) throw InvalidArgument("addition_lemma_word needs at least one word");
    const int base_rank = words.front().rank();
    for (const auto& w : words) {
        if (w.rank() != base_rank) throw RankMismatch("addition_lemma_word: words of mixed rank");
        if (w.empty()) throw InvalidArgument("addition_lemma_word: identity word");
    }
    const int rank = base_rank + static_cast<int>(words.size()) - 1;
    std::vector<Letter> out(words.front().letters());
    for (std::size_t i = 1; i < words.size(); ++i) {
        Letter x{base_rank + static_cast<int>(i), 1};
        out.push_back(x);
        out.insert(out.end(), words[i].letters().begin(), words[i].letters().end());
        out.push_back(x.inverse());
    }
    return Word(rank, std::move(out));
}

}  // namespace sclkit
