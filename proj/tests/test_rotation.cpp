#include "oracles.h"

#include "sclkit/chain_parser.h"
#include "sclkit/errors.h"
#include "sclkit/rotation.h"

#include <doctest.h>

#include <random>

using namespace sclkit;

namespace {

Word W(const char* s) { return Word(2, s); }
Chain C(const char* s) { return parse_chain(s); }
Rational q(long n, long d = 1) { return make_rational(n, d); }

Rational trace(const ExactMatrix& m) {
    const QuadraticSurd t = m[0] + m[3];
    REQUIRE(t.s == 0);
    return t.r;
}

// All reduced words of length 1..max_len in a, b.
std::vector<std::string> reduced_words(std::size_t max_len) {
    std::vector<std::string> out, frontier{""};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::string> next;
        for (const auto& w : frontier) {
            for (char c : std::string("aAbB")) {
                if (!w.empty() && w.back() == oracle::inv(c)) continue;
                next.push_back(w + c);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("holonomy traces") {
    const PTRep rep = pt_holonomy();
    const Rational x = trace(rep.exact_A), y = trace(rep.exact_B), z = trace(holonomy(rep, W("ab")));
    CHECK(x == 4);
    CHECK(y == 3);
    CHECK(z == 3);
    CHECK(trace(holonomy(rep, W("abAB"))) == -4);
    // Fricke: tr[A,B] = x^2 + y^2 + z^2 - xyz - 2.
    CHECK(trace(holonomy(rep, W("abAB"))) == x * x + y * y + z * z - x * y * z - 2);
    // det 1 exactly
    for (const ExactMatrix& m : {rep.exact_A, rep.exact_B}) {
        const QuadraticSurd det = m[0] * m[3] + QuadraticSurd{-1, 0} * m[1] * m[2];
        CHECK(det == QuadraticSurd{1, 0});
    }
    CHECK(holonomy(rep, W("aA")) == ExactMatrix{QuadraticSurd{1, 0}, {0, 0}, {0, 0}, {1, 0}});
    CHECK(to_mobius(holonomy(rep, W("abAB"))).is_hyperbolic());
    CHECK(std::abs(static_cast<double>(rep.A.trace()) - 4) < 1e-12);
}

TEST_CASE("Mobius") {
    CHECK_THROWS_AS(Mobius(2, 0, 0, 2), InvalidArgument);
    CHECK_THROWS_AS(Mobius(1, 1, 1, 1.000001L), InvalidArgument);
    CHECK_NOTHROW(Mobius(2, 1, 1, 1));
    CHECK(Mobius(2, 1, 1, 1).is_hyperbolic());
    CHECK_FALSE(Mobius(1, 1, 0, 1).is_hyperbolic());
    CHECK_FALSE(Mobius(0, -1, 1, 0).is_hyperbolic());
    const Mobius m(2, 1, 1, 1);
    const Mobius id = m * m.inverse();
    CHECK(std::abs(static_cast<double>(id.a() - 1)) < 1e-15);
    CHECK(std::abs(static_cast<double>(id.b())) < 1e-15);
}

TEST_CASE("LiftedMobius") {
    const PTRep rep = pt_holonomy();
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-3, 3);
    for (const LiftedMobius& f : {rep.lift_a, rep.lift_b, rep.lift_A, rep.lift_B, rep.lift_a.shifted(3)}) {
        const LiftedMobius g = f.inverse();
        double last = -1e9;
        for (int i = 0; i < 50; ++i) {
            const long double x = u(rng);
            CHECK(std::abs(static_cast<double>(f(x + 1) - f(x) - 1)) < 1e-12);
            CHECK(std::abs(static_cast<double>(g(f(x)) - x)) < 1e-12);
            CHECK(std::abs(static_cast<double>(f(g(x)) - x)) < 1e-12);
        }
        // increasing on a grid
        for (int i = -200; i <= 200; ++i) {
            const double v = static_cast<double>(f(i / 100.0L));
            CHECK(v > last);
            last = v;
        }
    }
    CHECK(rep.lift_a.value_at_zero() >= 0);
    CHECK(rep.lift_a.value_at_zero() < 1);
}

TEST_CASE("turning_number") {
    CHECK(turning_number(W("abAB")) == 1);
    CHECK(turning_number(W("abABAbaB")) == 0);
    CHECK(turning_number(W("aabbAABB")) == 1);
    CHECK(turning_number(W("abABabAB")) == 2);
    CHECK(turning_number(W("baBA")) == -1);
    CHECK_THROWS_AS(turning_number(W("ab")), NotBoundaryError);
    CHECK_THROWS_AS(turning_number(Word(3, "abABc")), InvalidArgument);
    CHECK_THROWS_AS(turning_number(W("aA")), InvalidArgument);
}

TEST_CASE("rot_element") {
    const PTRep rep = pt_holonomy();
    CHECK(rot_element(rep, W("abAB")) == 1);
    CHECK(rot_element(rep, W("abABabABabAB")) == 3);
    CHECK(rot_element(rep, W("babABB")) == 1);
    CHECK(rot_element(rep, W("baBA")) == -1);
    CHECK(rot_element(rep, W("abABAbaB")) == 0);
    CHECK_THROWS_AS(rot_element(rep, W("")), InvalidArgument);
    CHECK_THROWS_AS(rot_element(rep, W("aA")), InvalidArgument);
}

TEST_CASE("rot_chain and area") {
    const PTRep rep = pt_holonomy();
    CHECK(rot_chain(rep, C("ab - a - b")) == 0);
    CHECK(rot_chain(rep, C("2*abAB + ab - a - b")) == 2);
    CHECK(rot_chain(rep, parse_chain_raw("a + A")) == 0);
    CHECK(rot_chain(rep, C("1/2*abAB")) == q(1, 2));
    CHECK_THROWS_AS(rot_chain(rep, C("ab")), NotBoundaryError);
    CHECK(area_coefficient(rep, C("abAB")) == 2);
    CHECK(area_coefficient(rep, C("ab - a - b")) == 0);
    CHECK(area_coefficient(rep, C("3*abAB")) == 6);
}

TEST_CASE("rotation front end") {
    const PTRep rep = pt_holonomy();
    const RotationResult r = rotation(rep, W("aabbAABB"), RotationMethod::both);
    CHECK(r.value == 1);
    REQUIRE(r.agreement.has_value());
    CHECK(*r.agreement);
    CHECK(rotation(rep, W("abAB"), RotationMethod::turning).value == 1);
    CHECK_FALSE(rotation(rep, W("abAB"), RotationMethod::turning).dynamical.has_value());
    const RotationResult c = rotation(rep, C("2*abAB + abABAbaB"), RotationMethod::both);
    CHECK(c.value == 2);
    CHECK(*c.agreement);
    CHECK_THROWS(rotation(rep, C("ab - a - b"), RotationMethod::turning));
    CHECK(rotation(rep, C("ab - a - b"), RotationMethod::dynamical).value == 0);
}

TEST_CASE("defect") {
    const PTRep rep = pt_holonomy();
    const Rational d = defect_probe(rep, 600, 11);
    CHECK(d <= 1);
    CHECK(d >= 0);
    CHECK(rot_element(rep, W("a")) + rot_element(rep, W("A")) - 0 == 0);

    // Exhaustive over short pairs: every defect lies in {0, 1} and 1 occurs.
    const auto words = reduced_words(3);
    bool hit = false;
    for (const auto& g : words) {
        for (const auto& h : words) {
            const std::string gh = oracle::reduce(g + h);
            if (gh.empty()) continue;
            const std::int64_t v = rot_element(rep, W(g.c_str())) + rot_element(rep, W(h.c_str())) -
                                   rot_element(rep, W(gh.c_str()));
            CHECK((v == 0 || v == 1 || v == -1));
            hit = hit || v != 0;
        }
    }
    CHECK(hit);
}

TEST_CASE("property: homogeneity and conjugacy invariance") {
    const PTRep rep = pt_holonomy();
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const std::string w = oracle::random_reduced(rng, 1 + trial % 6);
        const std::string core = oracle::cyclic_core(w);
        if (core.empty()) continue;
        CAPTURE(w);
        const std::int64_t r = rot_element(rep, W(w.c_str()));
        std::string p = core;
        for (int n = 2; n <= 4; ++n) {
            p += core;
            CHECK(rot_element(rep, W(p.c_str())) == n * r);
        }
        const std::string u = oracle::random_reduced(rng, 1 + trial % 3);
        const std::string conj = oracle::reduce(u + w + oracle::invert(u));
        CHECK(rot_element(rep, W(conj.c_str())) == r);
        CHECK(rot_element(rep, W(oracle::invert(w).c_str())) == -r);
    }
}

TEST_CASE("property: lift offsets") {
    const PTRep base = pt_holonomy();
    std::mt19937_64 rng(8);
    for (auto [oa, ob] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {-2, 3}, {5, -1}}) {
        const PTRep shifted = pt_holonomy(oa, ob);
        for (int trial = 0; trial < 40; ++trial) {
            const std::string w = oracle::random_reduced(rng, 1 + trial % 7);
            const auto img = abelianize(W(w.c_str()));
            const Rational expected = base.orientation * (oa * img.exponent_sums[0] + ob * img.exponent_sums[1]);
            CAPTURE(w);
            CHECK(Rational(rot_element(shifted, W(w.c_str())) - rot_element(base, W(w.c_str()))) == expected);
        }
        for (int trial = 0; trial < 20; ++trial) {
            const Chain c = oracle::random_boundary(rng, 12);
            CHECK(rot_chain(shifted, c) == rot_chain(base, c));
        }
    }
}

TEST_CASE("property: turning number equals rot on [F2,F2] up to length 12") {
    const PTRep rep = pt_holonomy();
    const auto classes = oracle::commutator_classes(12);
    CHECK(classes.size() > 1000);
    for (const auto& w : classes) {
        CAPTURE(w);
        const Word word = W(w.c_str());
        const std::int64_t t = turning_number(word);
        CHECK(t == oracle::turning(w));
        CHECK(rot_element(rep, word) == t);
    }
}
