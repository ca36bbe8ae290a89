#pragma once

#include "sclkit/freegroup.h"
#include "sclkit/ratlp.h"
#include "sclkit/surfcert.h"

#include <cstddef>
#include <vector>

namespace sclkit {

// A canonical chain with positive integer coefficients. In B1H,
// chain = scale * (the chain it was prepared from).
struct PreparedChain {
    Chain chain;
    Integer scale = 1;
};

// Clears denominators and replaces negative terms by their inverse classes.
// Throws NotBoundaryError when the abelianization is nonzero.
PreparedChain prepare(const Chain& chain);

// Global indexing of the letters of a prepared chain. Slot s is one letter;
// corner s is the gap between slot s and next(s) in the same word.
class SlotLayout {
public:
    explicit SlotLayout(const Chain& prepared);

    std::size_t size() const { return letters_.size(); }
    std::size_t term_of(std::size_t slot) const { return term_[slot]; }
    std::size_t position_of(std::size_t slot) const { return slot - offset_[term_[slot]]; }
    Letter letter(std::size_t slot) const { return letters_[slot]; }
    std::size_t next(std::size_t slot) const;
    std::size_t prev(std::size_t slot) const;
    std::size_t terms() const { return offset_.size(); }

private:
    std::vector<Letter> letters_;
    std::vector<std::size_t> term_;
    std::vector<std::size_t> offset_;
    std::vector<std::size_t> length_;
};

// Pairs slot p with slot q carrying the inverse letter (p < q). Side 1 runs
// from corner p to corner prev(q); side 2 from corner q to corner prev(p).
struct RectangleVar {
    std::size_t p = 0;
    std::size_t q = 0;
};

struct SideId {
    std::size_t rectangle = 0;
    int side = 1;  // 1 or 2
    std::size_t from = 0;
    std::size_t to = 0;
};

struct PieceSide {
    bool real = true;
    std::size_t side = 0;  // index into Encoding::sides when real
    std::size_t from = 0;  // corners
    std::size_t to = 0;
};

struct PieceVar {
    enum class Kind { bigon, triangle };
    Kind kind = Kind::triangle;
    std::vector<PieceSide> sides;  // cyclic, sides[i].to == sides[i+1].from
    std::size_t dummy_count() const;
};

struct EncodingOptions {
    std::size_t max_letters = 24;
    SolveOptions solve;
};

struct Encoding {
    PreparedChain prepared;
    SlotLayout layout{Chain()};
    std::vector<RectangleVar> rectangles;
    std::vector<SideId> sides;  // sides[2k], sides[2k+1] belong to rectangle k
    std::vector<PieceVar> pieces;
    // Unordered corner pairs {x, y}, x < y, each one dummy-matching row.
    std::vector<std::pair<std::size_t, std::size_t>> dummy_pairs;
    LinearProgram lp{0, 0};
    // LP columns: rectangles first, then pieces.
    std::size_t rectangle_column(std::size_t k) const { return k; }
    std::size_t piece_column(std::size_t k) const { return rectangles.size() + k; }
};

std::vector<RectangleVar> enumerate_rectangles(const SlotLayout& layout);
std::vector<SideId> rectangle_sides(const SlotLayout& layout,
                                    const std::vector<RectangleVar>& rectangles);
// Bigons with two real sides and triangles on three distinct corners with at
// least one real side.
std::vector<PieceVar> enumerate_pieces(const SlotLayout& layout, const std::vector<SideId>& sides);

// The LP over rectangle and piece weights whose optimum is -chi at degree 1,
// i.e. 2 scl(prepared chain).
Encoding build_lp(const PreparedChain& prepared, const EncodingOptions& options = {});

struct SclComputation {
    Rational scl;
    Encoding encoding;
    LPResult lp;
};

// Throws NotBoundaryError, ResourceLimitError, or InvariantViolation when
// the LP certificate does not verify.
SclComputation compute_scl(const Chain& chain, const EncodingOptions& options = {});
Rational scl(const Chain& chain, const EncodingOptions& options = {});

struct DecodedSurface {
    SurfaceCertificate certificate;  // degree relative to the canonical input chain
    std::int64_t lp_degree = 1;      // integer scaling of the LP vertex
    std::int64_t chi_cells = 0;      // V - E + F of the glued complex
    std::int64_t chi_objective = 0;  // -(lp_degree * LP value)
    std::size_t corner_circles = 0;  // boundary circles carrying no letters
};

// Scales the vertex to integers, glues the pieces and traces the boundary.
// The certificate carries chi, degree and boundary chain, and the band-form
// arc system with the rectangle pairing.
DecodedSurface decode_certificate(const Encoding& encoding, const LPResult& result);

}  // namespace sclkit
