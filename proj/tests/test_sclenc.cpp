#include "oracles.h"

#include "sclkit/chain_parser.h"
#include "sclkit/errors.h"
#include "sclkit/rotation.h"
#include "sclkit/sclenc.h"
#include "sclkit/surfcert.h"

#include <doctest.h>

#include <random>
#include <set>

using namespace sclkit;

namespace {

Chain C(const char* s) { return parse_chain(s); }
Rational q(long n, long d = 1) { return make_rational(n, d); }

// Inverse-letter slot pairs counted straight from the prepared words.
std::size_t rectangle_oracle(const Chain& prepared) {
    std::string all;
    for (const auto& t : prepared.terms()) all += t.word.to_string();
    std::size_t n = 0;
    for (std::size_t p = 0; p < all.size(); ++p) {
        for (std::size_t r = p + 1; r < all.size(); ++r) n += all[r] == oracle::inv(all[p]) ? 1 : 0;
    }
    return n;
}

bool has_triangle(const Encoding& enc, std::set<std::pair<std::size_t, int>> real,
                  std::pair<std::size_t, std::size_t> dummy) {
    for (const auto& piece : enc.pieces) {
        if (piece.kind != PieceVar::Kind::triangle) continue;
        std::set<std::pair<std::size_t, int>> got;
        bool dummy_ok = false;
        for (const auto& s : piece.sides) {
            if (s.real) {
                got.insert({enc.sides[s.side].rectangle, enc.sides[s.side].side});
            } else {
                dummy_ok = s.from == dummy.first && s.to == dummy.second;
            }
        }
        if (got == real && dummy_ok) return true;
    }
    return false;
}

struct DecodeCheck {
    Rational scl;
    DecodedSurface surface;
};

// Solves, decodes and checks the certificate against the chain.
DecodeCheck solve_and_decode(const Chain& chain) {
    const SclComputation r = compute_scl(chain);
    CHECK(verify(r.encoding.lp, r.lp));
    DecodedSurface d = decode_certificate(r.encoding, r.lp);
    CHECK(d.chi_cells == d.chi_objective);
    CHECK(d.corner_circles == 0);
    CHECK(d.certificate.boundary ==
          canonicalize(Rational(d.certificate.degree) * canonicalize(chain)).with_rank(d.certificate.boundary.rank()));
    CHECK(Rational(-d.certificate.chi) / (2 * Rational(d.certificate.degree)) == r.scl);
    REQUIRE(d.certificate.arcs.has_value());
    CHECK(euler_characteristic(*d.certificate.arcs, *d.certificate.matching) == d.certificate.chi);
    CHECK(euler_characteristic_cells(*d.certificate.arcs, *d.certificate.matching) == d.certificate.chi);
    CHECK(boundary_chain(*d.certificate.arcs) == d.certificate.boundary);
    return {r.scl, std::move(d)};
}

}  // namespace

TEST_CASE("prepare") {
    auto p = prepare(C("ab - a - b"));
    CHECK(p.chain.to_string() == "A + B + ab");
    CHECK(p.scale == 1);
    p = prepare(C("1/2*abAB"));
    CHECK(p.chain.to_string() == "abAB");
    CHECK(p.scale == 2);
    CHECK_THROWS_AS(prepare(C("a + b")), NotBoundaryError);
    p = prepare(C("1/2*abAB + 1/3*abABAbaB"));
    CHECK(p.scale == 6);
    for (const auto& t : p.chain.terms()) CHECK(t.coefficient > 0);
}

TEST_CASE("enumerate_rectangles") {
    const auto check = [](const char* text, std::size_t expected) {
        const PreparedChain p = prepare(C(text));
        const SlotLayout layout(p.chain);
        const auto rects = enumerate_rectangles(layout);
        CHECK(rects.size() == expected);
        CHECK(rects.size() == rectangle_oracle(p.chain));
        for (const auto& r : rects) {
            CHECK(r.p < r.q);
            CHECK(layout.letter(r.p).is_inverse_of(layout.letter(r.q)));
        }
        return rects;
    };
    const auto rects = check("abAB", 2);
    CHECK(rects[0].p == 0);
    CHECK(rects[0].q == 2);
    CHECK(rects[1].p == 1);
    CHECK(rects[1].q == 3);
    check("ab - a - b", 2);
    check("2*abAB + ab - a - b", 8);
    // a + A is zero in B1H, so lay out the raw chain.
    const SlotLayout raw(parse_chain_raw("a + A"));
    CHECK(enumerate_rectangles(raw).size() == 1);
}

TEST_CASE("rectangle sides follow the corner convention") {
    const PreparedChain p = prepare(C("abAB"));
    const SlotLayout layout(p.chain);
    const auto sides = rectangle_sides(layout, enumerate_rectangles(layout));
    REQUIRE(sides.size() == 4);
    CHECK(sides[0].from == 0);  // S1(a,A): corner 0 -> corner 1
    CHECK(sides[0].to == 1);
    CHECK(sides[1].from == 2);  // S2(a,A): corner 2 -> corner 3
    CHECK(sides[1].to == 3);
    CHECK(sides[2].from == 1);
    CHECK(sides[2].to == 2);
    CHECK(sides[3].from == 3);
    CHECK(sides[3].to == 0);
}

TEST_CASE("enumerate_pieces") {
    {
        const SlotLayout raw(parse_chain_raw("a + A"));
        const auto sides = rectangle_sides(raw, enumerate_rectangles(raw));
        bool bigon = false;
        for (const auto& piece : enumerate_pieces(raw, sides)) {
            if (piece.kind == PieceVar::Kind::bigon) {
                std::set<int> which;
                for (const auto& s : piece.sides) which.insert(sides[s.side].side);
                bigon = bigon || which == std::set<int>{1, 2};
            }
        }
        CHECK(bigon);
    }
    {
        const Encoding enc = build_lp(prepare(C("abAB")));
        CHECK(has_triangle(enc, {{0, 1}, {1, 1}}, {2, 0}));
        CHECK(has_triangle(enc, {{0, 2}, {1, 2}}, {0, 2}));
    }
    {
        const SlotLayout empty(Chain(2));
        CHECK(enumerate_pieces(empty, {}).empty());
    }
}

TEST_CASE("property: piece invariants") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const Encoding enc = build_lp(prepare(oracle::random_boundary(rng, 10)));
        std::set<std::vector<std::tuple<bool, std::size_t, std::size_t, std::size_t>>> seen;
        for (const auto& piece : enc.pieces) {
            const std::size_t k = piece.sides.size();
            std::size_t real = 0;
            std::set<std::size_t> corners;
            for (std::size_t i = 0; i < k; ++i) {
                const auto& s = piece.sides[i];
                CHECK(s.to == piece.sides[(i + 1) % k].from);
                corners.insert(s.from);
                if (s.real) {
                    ++real;
                    CHECK(enc.sides[s.side].from == s.from);
                    CHECK(enc.sides[s.side].to == s.to);
                }
            }
            if (piece.kind == PieceVar::Kind::bigon) {
                CHECK(k == 2);
                CHECK(real == 2);
            } else {
                CHECK(k == 3);
                CHECK(real >= 1);
                CHECK(corners.size() == 3);
            }
            // No piece is listed twice under a rotation.
            std::vector<std::tuple<bool, std::size_t, std::size_t, std::size_t>> key;
            for (const auto& s : piece.sides) key.emplace_back(s.real, s.real ? s.side : 0, s.from, s.to);
            std::rotate(key.begin(), std::min_element(key.begin(), key.end()), key.end());
            CHECK(seen.insert(key).second);
        }
    }
}

TEST_CASE("build_lp optimum is -chi at degree one") {
    SolveOptions o;
    CHECK(solve_min(build_lp(prepare(C("abAB"))).lp, o).value == 1);
    CHECK(solve_min(build_lp(prepare(C("a + A"))).lp, o).value == 0);
    CHECK(solve_min(build_lp(prepare(C("a + b + BA"))).lp, o).value == 1);
}

TEST_CASE("scl values") {
    CHECK(scl(C("abAB")) == q(1, 2));
    CHECK(scl(C("2*abAB + ab - a - b")) == 1);
    CHECK(scl(C("2*abAB - ab + a + b")) == 1);
    CHECK(scl(C("abAB + cdCD")) == 1);
    CHECK(scl(C("abABcabABC")) == q(3, 2));
    CHECK(scl(C("a + b + BA")) == q(1, 2));
    CHECK(scl(C("c + CBAba")) == 1);
    CHECK(scl(C("abABAbaB")) == q(1, 2));
    CHECK(scl(C("a + A")) == 0);
    CHECK(scl(C("[a,b]^3")) == q(3, 2));
    CHECK(scl(C("1/2*abAB")) == q(1, 4));
    // Free product additivity: scl(n g + h) = scl(g^n) + scl(h).
    CHECK(scl(C("2*abAB + cdCD")) == scl(C("abABabAB")) + scl(C("cdCD")));
    // Addition lemma, m = 2 and m = 3.
    const Word g(2, "abAB");
    std::vector<Word> two{g, g}, three{g, g, g};
    CHECK(scl(Chain::of(addition_lemma_word(two))) == scl(Chain::of(g, 2)) + q(1, 2));
    CHECK(scl(Chain::of(addition_lemma_word(three))) == scl(Chain::of(g, 3)) + 1);
}

TEST_CASE("scl errors") {
    CHECK_THROWS_AS(scl(C("ab")), NotBoundaryError);
    EncodingOptions o;
    o.max_letters = 3;
    CHECK_THROWS_AS(scl(C("abAB"), o), ResourceLimitError);
    EncodingOptions p;
    p.solve.max_pivots = 1;
    CHECK_THROWS_AS(scl(C("2*abAB + ab - a - b"), p), ResourceLimitError);
    EncodingOptions d;
    d.solve.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    d.solve.float_guided = false;
    CHECK_THROWS_AS(scl(C("abABAbaBabAB"), d), ResourceLimitError);
}

TEST_CASE("decode_certificate") {
    auto r = solve_and_decode(C("abAB"));
    CHECK(r.surface.certificate.chi == -1);
    CHECK(r.surface.certificate.degree == 1);
    CHECK(r.surface.certificate.provenance == Provenance::lp_decoded);

    r = solve_and_decode(C("a + A"));
    CHECK(r.scl == 0);
    CHECK(r.surface.certificate.degree == 1);

    r = solve_and_decode(C("2*abAB + ab - a - b"));
    CHECK(Rational(-r.surface.certificate.chi) / (2 * Rational(r.surface.certificate.degree)) == 1);

    r = solve_and_decode(C("1/2*abAB + 1/3*abABAbaB"));
    CHECK(r.surface.certificate.degree % 6 == 0);
}

TEST_CASE("worked gluing for abAB") {
    const SclComputation r = compute_scl(C("abAB"));
    const Encoding& enc = r.encoding;
    REQUIRE(enc.rectangles.size() == 2);
    CHECK(r.lp.primal[enc.rectangle_column(0)] == 1);
    CHECK(r.lp.primal[enc.rectangle_column(1)] == 1);
    Rational pieces = 0, dummies = 0;
    for (std::size_t k = 0; k < enc.pieces.size(); ++k) {
        const Rational t = r.lp.primal[enc.piece_column(k)];
        if (t == 0) continue;
        CHECK(enc.pieces[k].kind == PieceVar::Kind::triangle);
        pieces += t;
        dummies += t * Rational(static_cast<long>(enc.pieces[k].dummy_count()));
    }
    CHECK(pieces == 2);
    CHECK(dummies == 2);  // one dummy pair
    CHECK(2 + dummies / 2 - pieces == 1);
}

TEST_CASE("property: homogeneity, duality, certificates and both oracles on random chains") {
    std::mt19937_64 rng(99);
    const PTRep rep = pt_holonomy();
    MatchingSearchOptions search;
    search.parallel = false;
    search.node_budget = 2'000'000;
    for (int trial = 0; trial < 50; ++trial) {
        const Chain c = oracle::random_boundary(rng, 12);
        CAPTURE(c.to_string());
        const DecodeCheck d = solve_and_decode(c);
        for (long k : {2, 3}) CHECK(scl(Rational(k) * c) == Rational(k) * d.scl);
        CHECK(d.scl >= rot_chain(rep, c) / 2);
        if (c.total_letters() <= 8) CHECK(oracle::scl_exact_path(c) == d.scl);
        if (oracle::arc_count(c) <= 16) CHECK(search_matching(c, 1, search).bound >= d.scl);
    }
}

TEST_CASE("property: subadditivity") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 50; ++trial) {
        const Chain x = oracle::random_boundary(rng, 6);
        const Chain y = oracle::random_boundary(rng, 6);
        CAPTURE(x.to_string());
        CAPTURE(y.to_string());
        CHECK(scl(x + y) <= scl(x) + scl(y));
    }
}
