#include "sclkit/chain_parser.h"

#include "sclkit/errors.h"

#include <cctype>
#include <limits>

namespace sclkit {

namespace {

struct RawTerm {
    Rational coefficient;
    std::vector<Letter> letters;
};

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::vector<RawTerm> chain() {
        std::vector<RawTerm> terms;
        skip();
        int sign = 1;
        if (accept_minus()) {
            sign = -1;
        } else {
            accept('+');
        }
        terms.push_back(term(sign));
        while (true) {
            skip();
            if (at_end()) break;
            if (accept_minus()) {
                sign = -1;
            } else if (accept('+')) {
                sign = 1;
            } else {
                fail("expected '+' or '-'");
            }
            terms.push_back(term(sign));
        }
        return terms;
    }

    std::vector<Letter> word_only() {
        skip();
        auto letters = factors();
        skip();
        if (!at_end()) fail("unexpected character");
        return letters;
    }

    int max_generator() const { return max_generator_; }
    std::size_t max_generator_offset() const { return max_generator_offset_; }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    bool accept_minus() {
        skip();
        if (accept('-')) return true;
        // U+2212 MINUS SIGN in UTF-8.
        if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
            pos_ += 3;
            return true;
        }
        return false;
    }

    Integer integer() {
        skip();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    RawTerm term(int sign) {
        skip();
        RawTerm t;
        t.coefficient = sign;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Rational c(integer());
            if (accept('/')) {
                const std::size_t at = pos_;
                Integer den = integer();
                if (den == 0) throw ParseError("zero denominator", at);
                c /= Rational(den);
            }
            t.coefficient *= c;
            accept('*');
        }
        skip();
        t.letters = factors();
        return t;
    }

    bool factor_start() {
        skip();
        const char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '[';
    }

    std::vector<Letter> factors() {
        if (!factor_start()) fail("expected a word or commutator");
        std::vector<Letter> out;
        while (factor_start()) {
            auto f = factor();
            out.insert(out.end(), f.begin(), f.end());
        }
        return out;
    }

    std::vector<Letter> factor() {
        std::vector<Letter> base;
        skip();
        if (accept('[')) {
            auto u = factors();
            if (!accept(',')) fail("expected ','");
            auto v = factors();
            if (!accept(']')) fail("expected ']'");
            base = u;
            base.insert(base.end(), v.begin(), v.end());
            for (auto it = u.rbegin(); it != u.rend(); ++it) base.push_back(it->inverse());
            for (auto it = v.rbegin(); it != v.rend(); ++it) base.push_back(it->inverse());
        } else {
            while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
                const Letter l = letter_from_char(peek());
                if (l.generator > max_generator_) {
                    max_generator_ = l.generator;
                    max_generator_offset_ = pos_;
                }
                base.push_back(l);
                ++pos_;
            }
        }
        while (true) {
            skip();
            if (peek() != '^') break;
            const std::size_t caret = pos_++;
            bool negative = accept_minus();
            skip();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                throw ParseError("'^' needs an integer exponent", caret);
            }
            const std::size_t at = pos_;
            const Integer e = integer();
            if (e > 4096) throw ParseError("exponent too large", at);
            std::vector<Letter> unit = base;
            if (negative) {
                unit.clear();
                for (auto it = base.rbegin(); it != base.rend(); ++it) unit.push_back(it->inverse());
            }
            base.clear();
            for (long i = 0; i < e.get_si(); ++i) base.insert(base.end(), unit.begin(), unit.end());
        }
        return base;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int max_generator_ = 0;
    std::size_t max_generator_offset_ = 0;
};

int resolve_rank(const Parser& p, std::optional<int> rank) {
    if (rank) {
        if (*rank < 1 || *rank > 26) throw InvalidArgument("rank must lie in 1..26");
        if (p.max_generator() > *rank) {
            throw ParseError("generator outside rank " + std::to_string(*rank),
                             p.max_generator_offset());
        }
        return *rank;
    }
    return std::max(1, p.max_generator());
}

}  // namespace

Chain parse_chain_raw(std::string_view text, std::optional<int> rank) {
    Parser p(text);
    auto terms = p.chain();
    Chain out(resolve_rank(p, rank));
    for (auto& t : terms) out.add(t.coefficient, Word(out.rank(), std::move(t.letters)));
    return out;
}

Chain parse_chain(std::string_view text, std::optional<int> rank) {
    return canonicalize(parse_chain_raw(text, rank));
}

Word parse_word(std::string_view text, std::optional<int> rank) {
    Parser p(text);
    auto letters = p.word_only();
    return reduce(Word(resolve_rank(p, rank), std::move(letters)));
}

std::string format_chain(const Chain& chain) { return chain.to_string(); }

}  // namespace sclkit
