#include "oracles.h"

#include "sclkit/chain_parser.h"
#include "sclkit/errors.h"
#include "sclkit/immersion.h"

#include <doctest.h>

#include <random>

using namespace sclkit;

namespace {

Chain C(const char* s) { return parse_chain(s); }
Word W(const char* s) { return Word(2, s); }
Rational q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_CASE("bounds_immersed examples") {
    const CriterionReport t = bounds_immersed(C("abAB"));
    CHECK(t.scl == q(1, 2));
    CHECK(t.rot == 1);
    CHECK(t.bounds_immersed);
    CHECK(t.on_face == t.bounds_immersed);

    const CriterionReport f = bounds_immersed(C("abABAbaB"));
    CHECK(f.scl == q(1, 2));
    CHECK(f.rot == 0);
    CHECK_FALSE(f.bounds_immersed);

    CHECK(bounds_immersed(C("2*abAB + ab - a - b")).bounds_immersed);
    CHECK(bounds_immersed(C("aabbAABB")).bounds_immersed);
    CHECK_FALSE(bounds_immersed(C("baBA")).bounds_immersed);
    CHECK_FALSE(bounds_immersed(C("ab - a - b")).bounds_immersed);

    CHECK_THROWS_AS(bounds_immersed(C("ab")), NotBoundaryError);
    CHECK_THROWS_AS(bounds_immersed(C("abAB + cdCD")), InvalidArgument);
}

TEST_CASE("orientation reversal") {
    for (const char* s : {"abAB", "baBA", "2*abAB + ab - a - b", "abABAbaB", "ab - a - b"}) {
        CAPTURE(s);
        const OrientationPair p = bounds_immersed_both(C(s));
        CHECK(p.reversed.scl == p.forward.scl);
        CHECK(p.reversed.rot == -p.forward.rot);
        CHECK(p.reversed.bounds_immersed == (p.forward.scl == -p.forward.rot / 2));
        CHECK_FALSE((p.forward.bounds_immersed && p.reversed.bounds_immersed && p.forward.scl != 0));
    }
    const OrientationPair p = bounds_immersed_both(C("baBA"));
    CHECK_FALSE(p.forward.bounds_immersed);
    CHECK(p.reversed.bounds_immersed);
}

TEST_CASE("property: Bavard and closure under addition") {
    std::mt19937_64 rng(41);
    std::vector<Chain> immersed;
    for (const char* s : {"abAB", "aabbAABB", "2*abAB + ab - a - b", "3*abAB + abABAbaB", "abABabAB"}) {
        immersed.push_back(C(s));
    }
    for (int trial = 0; trial < 40; ++trial) {
        const Chain c = oracle::random_boundary(rng, 10);
        const CriterionReport r = bounds_immersed(c);
        CHECK(r.scl >= r.half_rot());
        if (r.bounds_immersed && immersed.size() < 10) immersed.push_back(c);
    }
    for (const auto& x : immersed) {
        REQUIRE(bounds_immersed(x).bounds_immersed);
        for (const auto& y : immersed) {
            CAPTURE(x.to_string());
            CAPTURE(y.to_string());
            if (x.total_letters() + y.total_letters() > 20) continue;
            CHECK(bounds_immersed(x + y).bounds_immersed);
        }
    }
}

TEST_CASE("minimal_stabilization") {
    const StabilizationReport r = minimal_stabilization(C("ab - a - b"), 4);
    REQUIRE(r.rows.size() == 5);
    for (std::size_t i = 0; i < r.rows.size(); ++i) CHECK(r.rows[i].R == static_cast<std::int64_t>(i));
    CHECK(r.boundary == C("abAB"));
    for (const auto& row : r.rows) {
        if (row.R >= 2) CHECK(row.report.bounds_immersed);
    }
    CHECK_FALSE(r.rows[0].report.bounds_immersed);
    REQUIRE(r.minimal_R.has_value());
    CHECK(*r.minimal_R <= 2);
    // R = 1 is reported, not asserted.
    MESSAGE("R = 1: scl = " << to_string(r.rows[1].report.scl) << ", rot/2 = " << to_string(r.rows[1].report.half_rot()));

    CHECK(minimal_stabilization(C("abAB"), 2).minimal_R == 0);
    CHECK(minimal_stabilization(C("a + A"), 2).minimal_R == 0);
    CHECK_THROWS_AS(minimal_stabilization(C("abAB"), -1), InvalidArgument);
    CHECK_THROWS_AS(minimal_stabilization(C("ab"), 2), NotBoundaryError);
}

TEST_CASE("scan_conjecture") {
    const ScanReport r = scan_conjecture(W("abAB"), 1, 4);
    REQUIRE(r.rows.size() == 4);
    for (const auto& row : r.rows) {
        CHECK(row.report.bounds_immersed);
        CHECK(row.report.scl == Rational(row.n + 1) / 2);
        CHECK(row.report.rot == row.n + 1);
    }
    CHECK(r.first_equal == 1);
    CHECK(r.persists);

    const ScanReport s = scan_conjecture(W("abABAbaB"), 1, 4);
    CHECK(s.rows.size() == 4);
    MESSAGE("abABAbaB first equal n: " << (s.first_equal ? std::to_string(*s.first_equal) : "none"));

    CHECK_THROWS_AS(scan_conjecture(W(""), 1, 2), InvalidArgument);
    CHECK_THROWS_AS(scan_conjecture(W("aA"), 1, 2), InvalidArgument);
    CHECK_THROWS_AS(scan_conjecture(W("ab"), 1, 2), NotBoundaryError);
    CHECK_THROWS_AS(scan_conjecture(W("abAB"), 3, 2), InvalidArgument);
}

TEST_CASE("corollary_check") {
    const CorollaryResult one = corollary_check(W("abAB"), 1);
    CHECK(one.word.to_string() == "abABcabABC");
    CHECK(one.word.rank() == 3);
    CHECK(one.rot_w == 1);
    CHECK(one.lhs == q(3, 2));
    CHECK(one.rhs == q(3, 2));
    CHECK(one.equal);

    const CorollaryResult two = corollary_check(W("abAB"), 2);
    CHECK(two.word.size() == 14);
    CHECK(two.lhs == 2);
    CHECK(two.rhs == 2);
    CHECK(two.equal);

    const CorollaryResult other = corollary_check(W("abABAbaB"), 1);
    CHECK(other.rot_w == 0);
    CHECK(other.rhs == 1);
    MESSAGE("abABAbaB, n = 1: lhs = " << to_string(other.lhs));
}
