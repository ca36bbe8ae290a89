#include "sclkit/immersion.h"

#include "sclkit/errors.h"

#include <future>

namespace sclkit {

namespace {

const PTRep& holonomy() {
    static const PTRep rep = pt_holonomy();
    return rep;
}

Chain as_rank2(const Chain& chain) {
    if (chain.rank() > 2) {
        throw InvalidArgument("the immersion criterion needs a chain in rank 2, got rank " +
                              std::to_string(chain.rank()));
    }
    return chain.with_rank(2);
}

Word commutator_ab() { return Word(2, "abAB"); }

void check_commutator(const Word& w) {
    if (w.rank() > 2) throw InvalidArgument("w must be a word in a and b");
    if (reduce(w).empty()) throw InvalidArgument("w must be nontrivial in [F2, F2]");
    if (!abelianize(w).is_zero()) throw NotBoundaryError("w = " + w.to_string() + " is not in [F2, F2]");
}

// Runs f(i) for i in [0, count) concurrently; results stay in index order.
template <typename T, typename F>
std::vector<T> evaluate_all(std::size_t count, F f) {
    std::vector<std::future<T>> jobs;
    jobs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) jobs.push_back(std::async(std::launch::async, f, i));
    std::vector<T> out;
    out.reserve(count);
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

}  // namespace

CriterionReport bounds_immersed(const Chain& chain, const EncodingOptions& options) {
    CriterionReport r;
    r.chain = canonicalize(as_rank2(chain));
    r.rot = rot_chain(holonomy(), r.chain);
    r.scl = scl(r.chain, options);
    if (r.scl < r.half_rot()) {
        throw InvariantViolation("scl(" + r.chain.to_string() + ") = " + to_string(r.scl) +
                                 " is below rot/2 = " + to_string(r.half_rot()));
    }
    r.bounds_immersed = r.scl == r.half_rot();
    r.on_face = r.bounds_immersed;
    return r;
}

OrientationPair bounds_immersed_both(const Chain& chain, const EncodingOptions& options) {
    return {bounds_immersed(chain, options), bounds_immersed(as_rank2(chain).inverted(), options)};
}

StabilizationReport minimal_stabilization(const Chain& chain, std::int64_t Rmax,
                                          const EncodingOptions& options) {
    if (Rmax < 0) throw InvalidArgument("Rmax must be nonnegative");
    StabilizationReport out;
    out.base = canonicalize(as_rank2(chain));
    out.boundary = Chain::of(commutator_ab());
    auto reports = evaluate_all<CriterionReport>(static_cast<std::size_t>(Rmax) + 1, [&](std::size_t R) {
        return bounds_immersed(out.base + Rational(static_cast<long>(R)) * out.boundary, options);
    });
    for (std::size_t R = 0; R < reports.size(); ++R) {
        const bool holds = reports[R].bounds_immersed;
        if (holds && !out.minimal_R) out.minimal_R = static_cast<std::int64_t>(R);
        if (!holds && out.minimal_R) {
            throw InvariantViolation("criterion holds at R = " + std::to_string(*out.minimal_R) +
                                     " but fails at R = " + std::to_string(R));
        }
        out.rows.push_back({static_cast<std::int64_t>(R), std::move(reports[R])});
    }
    return out;
}

ScanReport scan_conjecture(const Word& w, std::int64_t n_min, std::int64_t n_max,
                           const EncodingOptions& options) {
    check_commutator(w);
    if (n_max < n_min) throw InvalidArgument("empty n range");
    ScanReport out;
    out.w = w.with_rank(2);
    const std::size_t count = static_cast<std::size_t>(n_max - n_min + 1);
    auto reports = evaluate_all<CriterionReport>(count, [&](std::size_t i) {
        const auto n = static_cast<int>(n_min + static_cast<std::int64_t>(i));
        return bounds_immersed(Chain::of(out.w * power(commutator_ab(), n)), options);
    });
    for (std::size_t i = 0; i < count; ++i) {
        const std::int64_t n = n_min + static_cast<std::int64_t>(i);
        if (reports[i].bounds_immersed && !out.first_equal) out.first_equal = n;
        out.rows.push_back({n, std::move(reports[i])});
    }
    if (out.first_equal) {
        out.persists = true;
        for (const auto& row : out.rows) {
            if (row.n >= *out.first_equal && !row.report.bounds_immersed) out.persists = false;
        }
    }
    return out;
}

CorollaryResult corollary_check(const Word& w, std::int64_t n, const EncodingOptions& options) {
    check_commutator(w);
    CorollaryResult out;
    const Word w3 = w.with_rank(3);
    const Word c(3, "c");
    out.word = power(commutator_ab().with_rank(3), static_cast<int>(n)) * c * w3 * invert(c);
    out.rot_w = rot_element(holonomy(), w);
    out.lhs = scl(Chain::of(out.word), options);
    const std::int64_t s = n + out.rot_w;
    out.rhs = Rational(s < 0 ? -s : s) + 1;
    out.rhs /= 2;
    out.equal = out.lhs == out.rhs;
    return out;
}

}  // namespace sclkit
