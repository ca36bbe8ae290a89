#pragma once

#include "sclkit/freegroup.h"
#include "sclkit/rational.h"
#include "sclkit/rotation.h"
#include "sclkit/sclenc.h"

#include <cstdint>
#include <optional>
#include <vector>

namespace sclkit {

struct CriterionReport {
    Chain chain;  // canonical, rank 2
    Rational scl;
    Rational rot;
    bool bounds_immersed = false;
    bool on_face = false;  // same predicate, read as membership in the face of abAB

    Rational half_rot() const { return rot / 2; }
};

// scl(C) == rot(C)/2, both exact. Throws NotBoundaryError, InvalidArgument
// for rank > 2, and InvariantViolation if scl < rot/2.
CriterionReport bounds_immersed(const Chain& chain, const EncodingOptions& options = {});

// The criterion for C and for the reversed-orientation chain together.
struct OrientationPair {
    CriterionReport forward;
    CriterionReport reversed;
};
OrientationPair bounds_immersed_both(const Chain& chain, const EncodingOptions& options = {});

struct StabilizationRow {
    std::int64_t R = 0;
    CriterionReport report;
};

struct StabilizationReport {
    Chain base;
    Chain boundary;  // abAB
    std::vector<StabilizationRow> rows;  // R = 0..Rmax
    std::optional<std::int64_t> minimal_R;
};

// Evaluates C + R*abAB for R = 0..Rmax concurrently. Once the criterion
// holds it must hold for every larger R tested; a violation throws
// InvariantViolation.
StabilizationReport minimal_stabilization(const Chain& chain, std::int64_t Rmax,
                                          const EncodingOptions& options = {});

struct ScanRow {
    std::int64_t n = 0;
    CriterionReport report;
};

struct ScanReport {
    Word w;
    std::vector<ScanRow> rows;
    std::optional<std::int64_t> first_equal;
    bool persists = false;  // equality at every n from first_equal to the end
};

// Criterion for the single element w (abAB)^n over n in [n_min, n_max].
// w must be a nontrivial element of [F2, F2].
ScanReport scan_conjecture(const Word& w, std::int64_t n_min, std::int64_t n_max,
                           const EncodingOptions& options = {});

struct CorollaryResult {
    Word word;  // (abAB)^n c w C in rank 3
    std::int64_t rot_w = 0;
    Rational lhs;  // scl of word
    Rational rhs;  // (|n + rot(w)| + 1) / 2
    bool equal = false;
};

CorollaryResult corollary_check(const Word& w, std::int64_t n, const EncodingOptions& options = {});

}  // namespace sclkit
