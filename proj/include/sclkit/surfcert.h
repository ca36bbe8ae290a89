#pragma once

#include "sclkit/freegroup.h"
#include "sclkit/rational.h"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sclkit {

// Boundary cycles of a band surface, each read as a cyclic word whose letters
// are the arcs. Arc k of cycle c has global index offset(c) + k.
class ArcSystem {
public:
    ArcSystem() = default;
    ArcSystem(int rank, std::vector<Word> cycles);

    int rank() const { return rank_; }
    const std::vector<Word>& cycles() const { return cycles_; }
    std::size_t arc_count() const { return labels_.size(); }
    Letter label(std::size_t arc) const { return labels_[arc]; }
    std::size_t cycle_of(std::size_t arc) const { return cycle_of_[arc]; }
    std::size_t offset(std::size_t cycle) const { return offsets_[cycle]; }
    std::size_t next(std::size_t arc) const;
    std::size_t prev(std::size_t arc) const;

    friend bool operator==(const ArcSystem&, const ArcSystem&) = default;

private:
    int rank_ = 1;
    std::vector<Word> cycles_;
    std::vector<Letter> labels_;
    std::vector<std::size_t> cycle_of_;
    std::vector<std::size_t> offsets_;
};

// Fixed-point-free involution on arcs pairing inverse labels.
struct Matching {
    std::vector<std::size_t> partner;

    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;  // first < second, sorted
    std::size_t pair_count() const { return partner.size() / 2; }
    friend bool operator==(const Matching&, const Matching&) = default;
};

// Throws InvalidArgument unless m is a perfect pairing of inverse labels.
void validate_matching(const ArcSystem& arcs, const Matching& m);

enum class Provenance { lp_decoded, arc_matching };

struct SurfaceCertificate {
    std::int64_t chi = 0;
    std::int64_t degree = 1;   // relative to the chain it certifies
    Chain boundary;            // canonical
    Provenance provenance = Provenance::arc_matching;
    std::optional<ArcSystem> arcs;
    std::optional<Matching> matching;
};

// Number of cycles of the gap permutation gap(p) -> gap(prev(partner(p))).
std::size_t corner_orbits(const ArcSystem& arcs, const Matching& m);

// chi = corner orbits - pairs.
std::int64_t euler_characteristic(const ArcSystem& arcs, const Matching& m);

// chi counted as V - E + F on an explicit cell structure of the band
// surface: rectangles and corner polygons as faces, vertices identified by
// union-find. Also checks that every boundary vertex has degree two.
std::int64_t euler_characteristic_cells(const ArcSystem& arcs, const Matching& m);

// Canonicalized chain of the boundary cycles.
Chain boundary_chain(const ArcSystem& arcs);

SurfaceCertificate make_certificate(const ArcSystem& arcs, const Matching& m,
                                    std::int64_t degree = 1);

struct ExtremalityReport {
    Rational degree;  // boundary = degree * chain
    Rational ratio;   // -chi / (2 degree)
    Rational scl;
    bool extremal = false;
};

// Infers the degree from boundary = n * chain; throws InvalidArgument on a
// boundary mismatch. scl is computed with the exact LP.
ExtremalityReport extremality_ratio(const SurfaceCertificate& cert, const Chain& chain);

struct MatchingSearchOptions {
    std::size_t max_arcs = 48;
    std::uint64_t node_budget = 50'000'000;
    bool parallel = true;
};

struct MatchingSearchResult {
    ArcSystem arcs;
    Matching matching;
    std::int64_t chi = 0;
    bool exhaustive = true;  // false when the node budget cut the search short
    std::uint64_t nodes = 0;
};

// Branch and bound over matchings maximizing corner orbits. Ties resolve to
// the lexicographically first pairing. Throws ResourceLimitError when the arc
// count exceeds the cap or no matching was found within budget.
MatchingSearchResult search_matching(const ArcSystem& arcs, const MatchingSearchOptions& options = {});

struct MatchingBound {
    MatchingSearchResult best;
    std::int64_t degree = 1;
    Rational bound;  // -chi / (2 degree scale), an upper bound for scl(chain)
};

// Runs on prepare(chain), so the words carry positive integer coefficients
// and the bound is divided by the prepared scale as well. Tries every way of
// splitting coefficient*degree copies of each word into boundary cycles.
// Throws NotBoundaryError like prepare.
MatchingBound search_matching(const Chain& chain, std::int64_t degree,
                              const MatchingSearchOptions& options = {});

// Line-based certificate files:
//   rank <k>
//   cycle <id>: <letter> <letter> ...
//   pair <cycle>.<arc> <cycle>.<arc>
//   chain <expr>        (optional)
//   degree <n>          (optional)
struct CertificateFile {
    ArcSystem arcs;
    std::optional<Matching> matching;  // absent when the file lists no pairs
    std::optional<std::string> chain;
    std::optional<std::int64_t> degree;
};

CertificateFile read_certificate(std::istream& in);
CertificateFile read_certificate_file(const std::string& path);
void write_certificate(std::ostream& out, const CertificateFile& file);
std::string format_certificate(const CertificateFile& file);

}  // namespace sclkit
