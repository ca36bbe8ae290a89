#include "sclkit/rotation.h"

#include "sclkit/errors.h"

#include <cmath>
#include <random>
#include <sstream>

namespace sclkit {

namespace {

constexpr long double kPi = 3.141592653589793238462643383279502884L;

long double positive_mod1(long double x) {
    long double r = x - std::floor(x);
    return r >= 1.0L ? 0.0L : r;
}

}  // namespace

Mobius::Mobius(long double a, long double b, long double c, long double d) : m_{a, b, c, d} {
    const long double det = a * d - b * c;
    if (std::fabs(det - 1.0L) > det_tolerance) {
        std::ostringstream s;
        s << "Mobius: determinant " << static_cast<double>(det) << " is not 1";
        throw InvalidArgument(s.str());
    }
}

bool Mobius::is_hyperbolic() const { return std::fabs(trace()) > 2.0L; }

Mobius Mobius::inverse() const { return Mobius(m_[3], -m_[1], -m_[2], m_[0]); }

Mobius operator*(const Mobius& x, const Mobius& y) {
    const long double a = x.a() * y.a() + x.b() * y.c();
    const long double b = x.a() * y.b() + x.b() * y.d();
    const long double c = x.c() * y.a() + x.d() * y.c();
    const long double d = x.c() * y.b() + x.d() * y.d();
    return Mobius(Mobius::Unchecked{}, a, b, c, d);
}

LiftedMobius::LiftedMobius(const Mobius& m)
    : m_(m), f0_(positive_mod1(std::atan2(m.c(), m.a()) / kPi)) {}

LiftedMobius::LiftedMobius(const Mobius& m, long double value_at_zero) : m_(m), f0_(value_at_zero) {
    const long double base = positive_mod1(std::atan2(m.c(), m.a()) / kPi);
    const long double k = value_at_zero - base;
    if (std::fabs(k - std::round(k)) > 1e-9L) {
        throw InvalidArgument("lift value at 0 does not cover the matrix action");
    }
}

long double LiftedMobius::operator()(long double x) const {
    // M u(0) to M u(x) sweeps counterclockwise through an angle in [0, pi)
    // as frac(x) runs over [0, 1), and their cross product is sin(pi x).
    const long double whole = std::floor(x);
    const long double t = x - whole;
    const long double ct = std::cos(kPi * t), st = std::sin(kPi * t);
    const long double u0x = m_.a(), u0y = m_.c();
    const long double ux = m_.a() * ct + m_.b() * st;
    const long double uy = m_.c() * ct + m_.d() * st;
    const long double cross = u0x * uy - u0y * ux;
    const long double dot = u0x * ux + u0y * uy;
    return whole + f0_ + std::atan2(cross, dot) / kPi;
}

LiftedMobius LiftedMobius::inverse() const {
    LiftedMobius g(m_.inverse());
    // g(F(0)) must be 0; shift g by the integer it misses by.
    const long double miss = g((*this)(0.0L));
    return g.shifted(-static_cast<std::int64_t>(std::llround(miss)));
}

namespace {

const LiftedMobius& letter_lift(const PTRep& rep, Letter l) {
    if (l.generator == 1) return l.sign > 0 ? rep.lift_a : rep.lift_A;
    if (l.generator == 2) return l.sign > 0 ? rep.lift_b : rep.lift_B;
    throw InvalidArgument("the once-punctured torus holonomy only covers generators a and b");
}

// Translation number of the composed lift, with the configured orientation
// sign not yet applied.
std::int64_t raw_rotation(const PTRep& rep, const Word& w) {
    const ExactMatrix M = holonomy(rep, w);
    const QuadraticSurd trace_surd = M[0] + M[3];
    if (trace_surd.s != 0) throw InvariantViolation("holonomy trace of " + w.to_string() + " is irrational");
    const Rational trace = trace_surd.r;
    if (abs(trace) <= 2) {
        throw InvariantViolation("holonomy of " + w.to_string() + " is not hyperbolic");
    }
    // Attracting fixed direction: eigenvector of the larger |eigenvalue|.
    // (lambda - a) + (lambda - d) = +-sqrt(t^2 - 4), so the longer of the two
    // candidate eigenvectors avoids cancellation.
    const long double t = static_cast<long double>(trace.get_d());
    const long double disc = std::sqrt(static_cast<long double>(Rational(trace * trace - 4).get_d()));
    const long double lambda = t > 0 ? (t + disc) / 2.0L : (t - disc) / 2.0L;
    long double vx = M[1].value(), vy = lambda - M[0].value();
    const long double wx = lambda - M[3].value(), wy = M[2].value();
    if (vx * vx + vy * vy < wx * wx + wy * wy) {
        vx = wx;
        vy = wy;
    }
    const long double x0 = positive_mod1(std::atan2(vy, vx) / kPi);
    long double x = x0;
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) x = letter_lift(rep, *it)(x);
    const long double shift = x - x0;
    const long double m = std::round(shift);
    if (std::fabs(shift - m) > 0.25L) {
        std::ostringstream s;
        s << "rotation of " << w.to_string() << " is " << static_cast<double>(shift)
          << ", outside the 1/4 integrality margin";
        throw InvariantViolation(s.str());
    }
    return static_cast<std::int64_t>(m);
}

}  // namespace

long double QuadraticSurd::value() const {
    static const long double root2 = std::sqrt(2.0L);
    return static_cast<long double>(r.get_d()) + static_cast<long double>(s.get_d()) * root2;
}

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

ExactMatrix inverse(const ExactMatrix& m) {
    const QuadraticSurd minus_one{-1, 0};
    return {m[3], minus_one * m[1], minus_one * m[2], m[0]};
}

Mobius to_mobius(const ExactMatrix& m) {
    return Mobius(m[0].value(), m[1].value(), m[2].value(), m[3].value());
}

ExactMatrix holonomy(const PTRep& rep, const Word& word) {
    ExactMatrix M{QuadraticSurd{1, 0}, QuadraticSurd{0, 0}, QuadraticSurd{0, 0}, QuadraticSurd{1, 0}};
    for (Letter l : word.letters()) {
        if (l.generator > 2) {
            throw InvalidArgument("the once-punctured torus holonomy only covers generators a and b");
        }
        const ExactMatrix& g = l.generator == 1 ? rep.exact_A : rep.exact_B;
        M = M * (l.sign > 0 ? g : inverse(g));
    }
    return M;
}

PTRep pt_holonomy(std::int64_t offset_a, std::int64_t offset_b) {
    const ExactMatrix eA{QuadraticSurd{1, 0}, QuadraticSurd{2, 1}, QuadraticSurd{2, -1}, QuadraticSurd{3, 0}};
    const ExactMatrix eB{QuadraticSurd{1, 0}, QuadraticSurd{-1, 0}, QuadraticSurd{-1, 0}, QuadraticSurd{2, 0}};
    const Mobius A = to_mobius(eA);
    const Mobius B = to_mobius(eB);
    const LiftedMobius la = LiftedMobius(A).shifted(offset_a);
    const LiftedMobius lb = LiftedMobius(B).shifted(offset_b);
    PTRep rep{eA, eB, A, B, la, lb, la.inverse(), lb.inverse(), {offset_a, offset_b}, 1};
    // Orientation is fixed by the normalized lifts, so offsets cannot flip it.
    const PTRep base{eA, eB, A, B, LiftedMobius(A), LiftedMobius(B), LiftedMobius(A).inverse(),
                     LiftedMobius(B).inverse(), {0, 0}, 1};
    rep.orientation = raw_rotation(base, Word(2, "abAB")) > 0 ? 1 : -1;
    return rep;
}

std::int64_t turning_number(const Word& word) {
    if (word.rank() > 2) throw InvalidArgument("turning_number is defined for rank 2 only");
    if (word.empty() || !word.is_cyclically_reduced()) {
        throw InvalidArgument("turning_number needs a nonempty cyclically reduced word");
    }
    if (!abelianize(word).is_zero()) {
        throw NotBoundaryError("lattice path of " + word.to_string() + " is not closed");
    }
    // Quarter-turn headings: a = 0 (right), b = 1 (up), A = 2 (left), B = 3 (down).
    auto heading = [](Letter l) { return (l.generator == 1 ? 0 : 1) + (l.sign < 0 ? 2 : 0); };
    std::int64_t turns = 0;
    const std::size_t n = word.size();
    for (std::size_t i = 0; i < n; ++i) {
        const int d = (heading(word[(i + 1) % n]) - heading(word[i]) + 4) % 4;
        if (d == 1) ++turns;
        if (d == 3) --turns;
    }
    return turns / 4;
}

std::int64_t rot_element(const PTRep& rep, const Word& word) {
    const Word w = reduce(word);
    if (w.empty()) throw InvalidArgument("rot is not evaluated on the identity");
    return rep.orientation * raw_rotation(rep, w);
}

Rational rot_chain(const PTRep& rep, const Chain& chain) {
    if (!abelianize(chain).is_zero()) {
        throw NotBoundaryError("chain " + chain.to_string() + " is not homologically trivial");
    }
    Rational total = 0;
    for (const auto& t : chain.terms()) {
        if (reduce(t.word).empty()) continue;
        total += t.coefficient * Rational(rot_element(rep, t.word));
    }
    return total;
}

Rational area_coefficient(const PTRep& rep, const Chain& chain) { return 2 * rot_chain(rep, chain); }

Rational defect_probe(const PTRep& rep, std::size_t samples, std::uint64_t seed, std::size_t max_length) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> length(1, max_length);
    std::uniform_int_distribution<int> pick(0, 3);
    auto random_word = [&] {
        std::vector<Letter> letters;
        const std::size_t n = length(rng);
        while (letters.size() < n) {
            const int k = pick(rng);
            Letter l{k / 2 + 1, k % 2 ? -1 : 1};
            if (!letters.empty() && letters.back().is_inverse_of(l)) continue;
            letters.push_back(l);
        }
        return Word(2, letters);
    };
    auto rot_or_zero = [&](const Word& w) {
        const Word r = reduce(w);
        return r.empty() ? std::int64_t{0} : rot_element(rep, r);
    };
    std::int64_t worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const Word g = random_word(), h = random_word();
        const std::int64_t d = rot_or_zero(g) + rot_or_zero(h) - rot_or_zero(g * h);
        worst = std::max(worst, d < 0 ? -d : d);
    }
    return Rational(worst);
}

RotationResult rotation(const PTRep& rep, const Word& word, RotationMethod method) {
    RotationResult r;
    r.method = method;
    if (method != RotationMethod::dynamical) r.turning = Rational(turning_number(word));
    if (method != RotationMethod::turning) r.dynamical = Rational(rot_element(rep, word));
    if (method == RotationMethod::both) r.agreement = *r.dynamical == *r.turning;
    r.value = r.dynamical ? *r.dynamical : *r.turning;
    return r;
}

RotationResult rotation(const PTRep& rep, const Chain& chain, RotationMethod method) {
    RotationResult r;
    r.method = method;
    if (method != RotationMethod::dynamical) {
        Rational total = 0;
        for (const auto& t : chain.terms()) {
            const Word core = cyclic_reduce(t.word).core;
            if (!core.empty()) total += t.coefficient * Rational(turning_number(core));
        }
        r.turning = total;
        r.value = total;
    }
    if (method != RotationMethod::turning) {
        r.dynamical = rot_chain(rep, chain);
        r.value = *r.dynamical;
    }
    if (method == RotationMethod::both) r.agreement = *r.turning == *r.dynamical;
    return r;
}

}  // namespace sclkit
