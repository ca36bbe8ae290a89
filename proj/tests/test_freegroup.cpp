#include "oracles.h"

#include "sclkit/errors.h"
#include "sclkit/freegroup.h"

#include <doctest.h>

#include <random>

using namespace sclkit;

namespace {

Word w2(const char* s) { return Word(2, s); }
Word w3(const char* s) { return Word(3, s); }

}  // namespace

TEST_CASE("letters order generator first, positive before inverse") {
    CHECK(letter_from_char('a') < letter_from_char('A'));
    CHECK(letter_from_char('A') < letter_from_char('b'));
    CHECK(letter_from_char('b') < letter_from_char('B'));
    CHECK(letter_from_char('C').index() == 5);
    CHECK(letter_from_char('a').is_inverse_of(letter_from_char('A')));
    CHECK_THROWS_AS(letter_from_char('1'), InvalidArgument);
}

TEST_CASE("words check their rank") {
    CHECK_THROWS_AS(Word(2, "abc"), InvalidArgument);
    CHECK(Word::from_string("abC").rank() == 3);
    CHECK(Word::from_string("").rank() == 1);
    CHECK_THROWS_AS(w2("ab") * w3("c"), RankMismatch);
    Chain c(2);
    CHECK_THROWS_AS(c.add(1, w3("c")), RankMismatch);
}

TEST_CASE("reduce") {
    CHECK(reduce(w2("abB")).to_string() == "a");
    CHECK(reduce(w2("aA")).empty());
    CHECK(reduce(w2("abAB")).to_string() == "abAB");
    CHECK(reduce(w2("abBAab")).to_string() == "ab");
}

TEST_CASE("cyclic_reduce") {
    auto r = cyclic_reduce(w3("cabAC"));
    CHECK(r.core.to_string() == "b");
    CHECK(r.conjugator.to_string() == "ca");
    r = cyclic_reduce(w2("abAB"));
    CHECK(r.core.to_string() == "abAB");
    CHECK(r.conjugator.empty());
    r = cyclic_reduce(w2("Aba"));
    CHECK(r.core.to_string() == "b");
    CHECK(r.conjugator.to_string() == "A");
}

TEST_CASE("invert") {
    CHECK(invert(w2("ab")).to_string() == "BA");
    CHECK(invert(w2("")).empty());
    CHECK(invert(w2("abAB")).to_string() == "baBA");
}

TEST_CASE("primitive_root") {
    auto p = primitive_root(w2("abab"));
    CHECK(p.root.to_string() == "ab");
    CHECK(p.exponent == 2);
    p = primitive_root(w2("abAB"));
    CHECK(p.root.to_string() == "abAB");
    CHECK(p.exponent == 1);
    p = primitive_root(w2("aaa"));
    CHECK(p.root.to_string() == "a");
    CHECK(p.exponent == 3);
}

TEST_CASE("abelianize") {
    CHECK(abelianize(Chain::of(w2("abAB"))).is_zero());
    Chain c = Chain::of(w2("ab")) - Chain::of(w2("a")) - Chain::of(w2("b"));
    CHECK(abelianize(c).is_zero());
    Chain d = Chain::of(w2("a")) + Chain::of(w2("b"));
    CHECK(abelianize(d).exponent_sums == std::vector<Rational>{1, 1});
}

TEST_CASE("canonicalize") {
    CHECK(canonicalize(Chain::of(w2("abab"))).to_string() == "2*ab");
    CHECK(canonicalize(Chain::of(w2("ab")) + Chain::of(w2("ba"))).to_string() == "2*ab");
    Chain c = Chain::of(w2("a")) + Chain::of(w2("A")) + Chain::of(w2("abAB"));
    CHECK(canonicalize(c).to_string() == "abAB");
    // Inverse classes fold into the smaller representative, keeping the sign.
    CHECK(canonicalize(Chain::of(w2("BA"))).to_string() == "-ab");
    Chain e = Chain::of(w2("ab"), 3) + Chain::of(w2("BA"), 1);
    CHECK(canonicalize(e).to_string() == "2*ab");
    CHECK(canonicalize(Chain::of(w2("aA"))).empty());
}

TEST_CASE("addition_lemma_word") {
    const Word g = w2("abAB");
    std::vector<Word> two{g, g};
    const Word out = addition_lemma_word(two);
    CHECK(out.rank() == 3);
    CHECK(out.to_string() == "abABcabABC");
    std::vector<Word> one{g};
    CHECK(addition_lemma_word(one) == g);
    std::vector<Word> three{w2("ab"), w2("a"), w2("b")};
    const Word t = addition_lemma_word(three);
    CHECK(t.rank() == 4);
    CHECK(t.to_string() == "abcaCdbD");
    CHECK_THROWS_AS(addition_lemma_word(std::vector<Word>{}), InvalidArgument);
}

TEST_CASE("chain printing") {
    Chain c = Chain::of(w2("abAB"), 2) + Chain::of(w2("ab")) - Chain::of(w2("a")) - Chain::of(w2("b"));
    CHECK(canonicalize(c).to_string() == "-a - b + ab + 2*abAB");
    CHECK(Chain(2).to_string() == "0");
    CHECK(Chain::of(w2("ab"), make_rational(-1, 2)).to_string() == "-1/2*ab");
}

TEST_CASE("property: agreement with string oracles on random words") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> len(0, 14);
    for (int trial = 0; trial < 400; ++trial) {
        const std::string s = oracle::random_reduced(rng, len(rng), 3) + oracle::random_reduced(rng, len(rng), 3);
        const Word w(3, s);
        const Word r = reduce(w);
        CHECK(r.to_string() == oracle::reduce(s));
        CHECK(reduce(r) == r);
        CHECK(r.size() <= w.size());
        CHECK(invert(invert(r)) == r);
        const auto cr = cyclic_reduce(r);
        CHECK(cr.core.to_string() == oracle::cyclic_core(s));
        CHECK(reduce(cr.conjugator * cr.core * invert(cr.conjugator)) == r);
        if (!cr.core.empty()) {
            CHECK(least_rotation(cr.core).to_string() == oracle::min_rotation(cr.core.to_string()));
        }
    }
}

TEST_CASE("property: canonicalize matches the brute-force oracle and is idempotent") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> count(1, 4), coef(-3, 3), len(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        Chain c(2);
        std::vector<std::pair<std::string, Rational>> raw;
        for (int k = count(rng); k > 0; --k) {
            std::string s = oracle::random_reduced(rng, static_cast<std::size_t>(len(rng)));
            if (trial % 3 == 0) s += s;  // proper powers
            const Rational q = make_rational(coef(rng), 2);
            raw.emplace_back(s, q);
            c.add(q, Word(2, s));
        }
        const Chain canon = canonicalize(c);
        CHECK(oracle::terms_of(canon) == oracle::canonical(raw));
        CHECK(canonicalize(canon) == canon);
        CHECK(abelianize(canon) == abelianize(c));
    }
}

TEST_CASE("property: powers and conjugates") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const Word w(2, oracle::random_reduced(rng, 1 + trial % 7));
        const Word core = cyclic_reduce(w).core;
        for (int n = 1; n <= 3; ++n) {
            CHECK(canonicalize(Chain::of(power(w, n))) == canonicalize(Chain::of(w, n)));
        }
        const Word u(2, oracle::random_reduced(rng, 1 + trial % 4));
        const Word conj = reduce(u * w * invert(u));
        CHECK(conjugacy_representative(conj) == conjugacy_representative(w));
        if (!core.empty()) {
            CHECK(least_rotation(cyclic_reduce(conj).core) == least_rotation(core));
        }
    }
}

TEST_CASE("property: addition lemma words stay cyclically reduced") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Word> ws;
        for (int k = 0; k < 1 + trial % 3; ++k) {
            Word c = cyclic_reduce(Word(2, oracle::random_reduced(rng, 2 + trial % 5))).core;
            if (c.empty()) c = Word(2, "a");
            ws.push_back(c);
        }
        CHECK(addition_lemma_word(ws).is_cyclically_reduced());
    }
}
