#pragma once

#include "sclkit/freegroup.h"
#include "sclkit/rational.h"

#include <array>
#include <cstdint>
#include <optional>

namespace sclkit {

// An element of SL(2,R) acting on the circle of directions in R^2. A
// direction at angle pi*x is parametrized by x in R/Z.
class Mobius {
public:
    static constexpr long double det_tolerance = 1e-12L;

    Mobius(long double a, long double b, long double c, long double d);

    long double a() const { return m_[0]; }
    long double b() const { return m_[1]; }
    long double c() const { return m_[2]; }
    long double d() const { return m_[3]; }
    long double trace() const { return m_[0] + m_[3]; }
    bool is_hyperbolic() const;

    Mobius inverse() const;
    friend Mobius operator*(const Mobius& x, const Mobius& y);

private:
    struct Unchecked {};
    Mobius(Unchecked, long double a, long double b, long double c, long double d) : m_{a, b, c, d} {}
    std::array<long double, 4> m_;
};

// A lift of a Mobius circle action to an increasing map of R commuting with
// x -> x + 1. value_at_zero is the lift at 0; the rest follows by continuity.
class LiftedMobius {
public:
    // The normalized lift: value at 0 in [0, 1).
    explicit LiftedMobius(const Mobius& m);
    LiftedMobius(const Mobius& m, long double value_at_zero);

    const Mobius& mobius() const { return m_; }
    long double value_at_zero() const { return f0_; }
    long double operator()(long double x) const;

    // The lift of the inverse matrix that undoes this one exactly.
    LiftedMobius inverse() const;
    LiftedMobius shifted(std::int64_t k) const { return LiftedMobius(m_, f0_ + k); }

private:
    Mobius m_;
    long double f0_;
};

// r + s*sqrt(2), r and s rational. Holonomy entries live in Q(sqrt 2): the
// trace triple (4, 3, 3) has no realization in SL(2, Q).
struct QuadraticSurd {
    Rational r;
    Rational s;

    long double value() const;
    friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
        return {x.r + y.r, x.s + y.s};
    }
    friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
        return {x.r * y.r + 2 * x.s * y.s, x.r * y.s + x.s * y.r};
    }
    friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
};

// Row-major 2x2 matrix over Q(sqrt 2).
using ExactMatrix = std::array<QuadraticSurd, 4>;

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y);
ExactMatrix inverse(const ExactMatrix& m);  // assumes det 1
Mobius to_mobius(const ExactMatrix& m);

// Holonomy of a hyperbolic once-punctured torus: images of a and b with
// traces (4, 3, 3) and tr[A,B] = -4, plus chosen lifts.
struct PTRep {
    ExactMatrix exact_A;
    ExactMatrix exact_B;
    Mobius A;
    Mobius B;
    LiftedMobius lift_a;
    LiftedMobius lift_b;
    LiftedMobius lift_A;
    LiftedMobius lift_B;
    std::array<std::int64_t, 2> offsets{0, 0};
    int orientation = 1;  // chosen so that rot(abAB) = +1
};

// A = [[1, 2+sqrt2], [2-sqrt2, 3]], B = [[1, -1], [-1, 2]]. offset_a and
// offset_b shift the generator lifts by integers.
PTRep pt_holonomy(std::int64_t offset_a = 0, std::int64_t offset_b = 0);

// Exact image of a word in rank <= 2.
ExactMatrix holonomy(const PTRep& rep, const Word& word);

// Winding number of the lattice path a = right, b = up, A = left, B = down.
// Requires a rank <= 2, cyclically reduced word with zero abelianization.
std::int64_t turning_number(const Word& word);

// Translation number of the lifted holonomy, read off at the attracting
// fixed point. Throws InvalidArgument on the identity and InvariantViolation
// when the result is farther than 1/4 from an integer.
std::int64_t rot_element(const PTRep& rep, const Word& word);

// Sum of t_i rot(g_i); throws NotBoundaryError unless homologically trivial.
Rational rot_chain(const PTRep& rep, const Chain& chain);

// Twice rot_chain: the algebraic area enclosed, in units of pi.
Rational area_coefficient(const PTRep& rep, const Chain& chain);

// Largest |rot(g) + rot(h) - rot(gh)| over random pairs of reduced words of
// length 1..max_length.
Rational defect_probe(const PTRep& rep, std::size_t samples, std::uint64_t seed = 1,
                      std::size_t max_length = 8);

enum class RotationMethod { turning, dynamical, both };

struct RotationResult {
    Rational value;
    RotationMethod method = RotationMethod::dynamical;
    std::optional<Rational> turning;
    std::optional<Rational> dynamical;
    std::optional<bool> agreement;  // set when both methods ran
};

// Element version: turning needs the word to lie in [F2, F2]. With `both`
// the reported value is the dynamical one; a disagreement is recorded.
RotationResult rotation(const PTRep& rep, const Word& word, RotationMethod method);
// Chain version: turning runs termwise and needs each term in [F2, F2].
RotationResult rotation(const PTRep& rep, const Chain& chain, RotationMethod method);

}  // namespace sclkit
