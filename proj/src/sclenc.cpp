#include "sclkit/sclenc.h"

#include "sclkit/detail/union_find.h"
#include "sclkit/errors.h"

#include <algorithm>
#include <array>
#include <limits>
#include <map>

namespace sclkit {

PreparedChain prepare(const Chain& chain) {
    Chain canonical = canonicalize(chain);
    if (!abelianize(canonical).is_zero()) {
        throw NotBoundaryError("chain " + canonical.to_string() +
                               " is not homologically trivial");
    }
    std::vector<Rational> coefficients;
    for (const auto& t : canonical.terms()) coefficients.push_back(t.coefficient);
    const Integer scale = lcm_of_denominators(coefficients);
    std::vector<ChainTerm> terms;
    for (const auto& t : canonical.terms()) {
        Rational c = t.coefficient * scale;
        if (c < 0) {
            terms.push_back({Rational(-c), conjugacy_representative(invert(t.word))});
        } else {
            terms.push_back({c, t.word});
        }
    }
    std::sort(terms.begin(), terms.end(),
              [](const ChainTerm& x, const ChainTerm& y) { return shortlex_less(x.word, y.word); });
    return {Chain(canonical.rank(), std::move(terms)), scale};
}

SlotLayout::SlotLayout(const Chain& prepared) {
    for (std::size_t t = 0; t < prepared.terms().size(); ++t) {
        const Word& w = prepared.terms()[t].word;
        offset_.push_back(letters_.size());
        length_.push_back(w.size());
        for (Letter l : w.letters()) {
            letters_.push_back(l);
            term_.push_back(t);
        }
    }
}

std::size_t SlotLayout::next(std::size_t slot) const {
    const std::size_t t = term_[slot];
    return offset_[t] + (slot - offset_[t] + 1) % length_[t];
}

std::size_t SlotLayout::prev(std::size_t slot) const {
    const std::size_t t = term_[slot];
    return offset_[t] + (slot - offset_[t] + length_[t] - 1) % length_[t];
}

std::size_t PieceVar::dummy_count() const {
    return static_cast<std::size_t>(
        std::count_if(sides.begin(), sides.end(), [](const PieceSide& s) { return !s.real; }));
}

std::vector<RectangleVar> enumerate_rectangles(const SlotLayout& layout) {
    std::vector<RectangleVar> out;
    for (std::size_t p = 0; p < layout.size(); ++p) {
        for (std::size_t q = p + 1; q < layout.size(); ++q) {
            if (layout.letter(p).is_inverse_of(layout.letter(q))) out.push_back({p, q});
        }
    }
    return out;
}

std::vector<SideId> rectangle_sides(const SlotLayout& layout,
                                    const std::vector<RectangleVar>& rectangles) {
    std::vector<SideId> sides;
    sides.reserve(2 * rectangles.size());
    for (std::size_t k = 0; k < rectangles.size(); ++k) {
        const auto& r = rectangles[k];
        sides.push_back({k, 1, r.p, layout.prev(r.q)});
        sides.push_back({k, 2, r.q, layout.prev(r.p)});
    }
    return sides;
}

std::vector<PieceVar> enumerate_pieces(const SlotLayout& layout, const std::vector<SideId>& sides) {
    const std::size_t n = layout.size();
    // real_sides[x * n + y]: every side identity running from corner x to y.
    std::vector<std::vector<std::size_t>> real_sides(n * n);
    for (std::size_t s = 0; s < sides.size(); ++s) {
        real_sides[sides[s].from * n + sides[s].to].push_back(s);
    }

    std::vector<PieceVar> pieces;
    // Bigons: two real sides x->y and y->x.
    for (std::size_t s = 0; s < sides.size(); ++s) {
        const auto& a = sides[s];
        for (std::size_t t : real_sides[a.to * n + a.from]) {
            if (t <= s) continue;
            pieces.push_back({PieceVar::Kind::bigon,
                              {{true, s, a.from, a.to}, {true, t, a.to, a.from}}});
        }
    }

    // Triangles x->y->z->x on distinct corners. A side is either one of the
    // real sides with those corners or a dummy; at least one is real. Each
    // triangle is emitted once, from its least rotation.
    auto key = [n](const PieceSide& s) -> std::size_t {
        return s.real ? s.side : (1u << 30) + s.from * n + s.to;
    };
    auto options = [&](std::size_t x, std::size_t y) {
        std::vector<PieceSide> out;
        for (std::size_t s : real_sides[x * n + y]) out.push_back({true, s, x, y});
        out.push_back({false, 0, x, y});
        return out;
    };
    for (std::size_t s = 0; s < sides.size(); ++s) {
        const std::size_t x = sides[s].from;
        const std::size_t y = sides[s].to;
        const PieceSide first{true, s, x, y};
        for (std::size_t z = 0; z < n; ++z) {
            if (z == x || z == y) continue;
            for (const auto& second : options(y, z)) {
                for (const auto& third : options(z, x)) {
                    std::array<std::size_t, 3> k{key(first), key(second), key(third)};
                    // Keep only the rotation that starts at the smallest key.
                    if (k[0] > k[1] || k[0] > k[2]) continue;
                    pieces.push_back({PieceVar::Kind::triangle, {first, second, third}});
                }
            }
        }
    }
    return pieces;
}

Encoding build_lp(const PreparedChain& prepared, const EncodingOptions& options) {
    const std::size_t letters = prepared.chain.total_letters();
    if (letters > options.max_letters) {
        throw ResourceLimitError("prepared chain has " + std::to_string(letters) +
                                 " letters, above the cap of " +
                                 std::to_string(options.max_letters));
    }
    Encoding enc;
    enc.prepared = prepared;
    enc.layout = SlotLayout(prepared.chain);
    enc.rectangles = enumerate_rectangles(enc.layout);
    enc.sides = rectangle_sides(enc.layout, enc.rectangles);
    enc.pieces = enumerate_pieces(enc.layout, enc.sides);

    const std::size_t n = enc.layout.size();
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> dummy_row;
    for (const auto& piece : enc.pieces) {
        for (const auto& side : piece.sides) {
            if (side.real) continue;
            auto key = std::minmax(side.from, side.to);
            dummy_row.emplace(std::make_pair(key.first, key.second), 0);
        }
    }
    const std::size_t coverage_rows = n;
    const std::size_t side_rows = enc.sides.size();
    std::size_t row = coverage_rows + side_rows;
    for (auto& [pair, r] : dummy_row) {
        r = row++;
        enc.dummy_pairs.push_back(pair);
    }

    const std::size_t columns = enc.rectangles.size() + enc.pieces.size();
    enc.lp = LinearProgram(row, columns);

    for (std::size_t slot = 0; slot < n; ++slot) {
        enc.lp.set_rhs(slot, prepared.chain.terms()[enc.layout.term_of(slot)].coefficient);
    }
    for (std::size_t k = 0; k < enc.rectangles.size(); ++k) {
        const std::size_t col = enc.rectangle_column(k);
        enc.lp.add_entry(enc.rectangles[k].p, col, 1);
        enc.lp.add_entry(enc.rectangles[k].q, col, 1);
        enc.lp.add_entry(coverage_rows + 2 * k, col, 1);
        enc.lp.add_entry(coverage_rows + 2 * k + 1, col, 1);
        enc.lp.set_objective(col, 1);
    }
    for (std::size_t k = 0; k < enc.pieces.size(); ++k) {
        const std::size_t col = enc.piece_column(k);
        const auto& piece = enc.pieces[k];
        for (const auto& side : piece.sides) {
            if (side.real) {
                enc.lp.add_entry(coverage_rows + side.side, col, -1);
            } else {
                auto key = std::minmax(side.from, side.to);
                const int sign = side.from < side.to ? 1 : -1;
                enc.lp.add_entry(dummy_row.at({key.first, key.second}), col, sign);
            }
        }
        enc.lp.set_objective(col, make_rational(static_cast<long>(piece.dummy_count()), 2) - 1);
    }
    return enc;
}

SclComputation compute_scl(const Chain& chain, const EncodingOptions& options) {
    PreparedChain prepared = prepare(chain);
    SclComputation out;
    out.encoding = build_lp(prepared, options);
    out.lp = solve_min(out.encoding.lp, options.solve);
    if (out.lp.status != LPStatus::optimal) {
        throw InvariantViolation("scl LP for " + prepared.chain.to_string() + " is " +
                                 (out.lp.status == LPStatus::infeasible ? "infeasible"
                                                                        : "unbounded"));
    }
    if (!verify(out.encoding.lp, out.lp)) {
        throw InvariantViolation("LP optimality certificate failed exact verification");
    }
    out.scl = out.lp.value / 2 / Rational(prepared.scale);
    return out;
}

Rational scl(const Chain& chain, const EncodingOptions& options) {
    return compute_scl(chain, options).scl;
}

namespace {

struct BoundaryEdge {
    std::size_t tail;
    std::size_t head;
    std::ptrdiff_t slot;  // -1 for a corner arc
};

std::int64_t to_int64(const Integer& z, const char* what) {
    if (!z.fits_slong_p()) throw ResourceLimitError(std::string(what) + " does not fit in 64 bits");
    return z.get_si();
}

}  // namespace

DecodedSurface decode_certificate(const Encoding& enc, const LPResult& result) {
    if (result.status != LPStatus::optimal) {
        throw InvalidArgument("decode_certificate needs an optimal LP result");
    }
    DecodedSurface out;
    const Integer lp_degree = lcm_of_denominators(result.primal);
    out.lp_degree = to_int64(lp_degree, "certificate degree");

    std::vector<std::int64_t> counts(result.primal.size());
    std::int64_t total_cells = 0;
    for (std::size_t j = 0; j < counts.size(); ++j) {
        Rational scaled = result.primal[j] * Rational(lp_degree);
        counts[j] = to_int64(scaled.get_num(), "cell count");
        total_cells += counts[j];
    }
    if (total_cells > 2'000'000) throw ResourceLimitError("decoded surface has too many cells");

    detail::UnionFind uf;
    std::vector<BoundaryEdge> boundary;
    std::size_t glued_edges = 0;
    std::size_t faces = 0;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> side_pool(enc.sides.size());
    // (letter edge of p, letter edge of q) for every rectangle copy
    std::vector<std::pair<std::size_t, std::size_t>> rectangle_arcs;

    for (std::size_t k = 0; k < enc.rectangles.size(); ++k) {
        const auto& r = enc.rectangles[k];
        for (std::int64_t copy = 0; copy < counts[enc.rectangle_column(k)]; ++copy) {
            const std::size_t v0 = uf.add(), v1 = uf.add(), v2 = uf.add(), v3 = uf.add();
            boundary.push_back({v0, v1, static_cast<std::ptrdiff_t>(r.p)});
            boundary.push_back({v2, v3, static_cast<std::ptrdiff_t>(r.q)});
            rectangle_arcs.emplace_back(boundary.size() - 2, boundary.size() - 1);
            side_pool[2 * k].emplace_back(v1, v2);
            side_pool[2 * k + 1].emplace_back(v3, v0);
            ++faces;
            glued_edges += 2;
        }
    }

    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>>
        dummy_pool;
    for (std::size_t k = 0; k < enc.pieces.size(); ++k) {
        const auto& piece = enc.pieces[k];
        const std::size_t sides = piece.sides.size();
        for (std::int64_t copy = 0; copy < counts[enc.piece_column(k)]; ++copy) {
            std::vector<std::size_t> tail(sides), head(sides);
            for (std::size_t i = 0; i < sides; ++i) {
                tail[i] = uf.add();
                head[i] = uf.add();
            }
            for (std::size_t i = 0; i < sides; ++i) {
                const auto& side = piece.sides[i];
                if (side.real) {
                    auto& pool = side_pool[side.side];
                    if (pool.empty()) throw InvariantViolation("real side used more often than its rectangle");
                    auto [t, h] = pool.back();
                    pool.pop_back();
                    uf.unite(tail[i], t);
                    uf.unite(head[i], h);
                } else {
                    dummy_pool[{side.from, side.to}].emplace_back(tail[i], head[i]);
                }
                // Corner arc at the end of side i, running from the tail of the
                // next side back to the head of this one.
                boundary.push_back({tail[(i + 1) % sides], head[i], -1});
            }
            ++faces;
        }
    }
    for (const auto& pool : side_pool) {
        if (!pool.empty()) throw InvariantViolation("rectangle side left unglued");
    }
    for (auto& [type, forward] : dummy_pool) {
        if (type.first > type.second) continue;
        auto it = dummy_pool.find({type.second, type.first});
        const std::size_t back = it == dummy_pool.end() ? 0 : it->second.size();
        if (back != forward.size()) throw InvariantViolation("unbalanced dummy sides");
        for (std::size_t j = 0; j < forward.size(); ++j) {
            auto [ta, ha] = forward[j];
            auto [tb, hb] = it->second[j];
            uf.unite(ta, hb);
            uf.unite(ha, tb);
            ++glued_edges;
        }
    }
    for (auto& [type, forward] : dummy_pool) {
        if (type.first > type.second && !dummy_pool.count({type.second, type.first})) {
            throw InvariantViolation("unbalanced dummy sides");
        }
    }

    const std::size_t vertices = uf.classes();
    out.chi_cells = static_cast<std::int64_t>(vertices) -
                    static_cast<std::int64_t>(boundary.size() + glued_edges) +
                    static_cast<std::int64_t>(faces);
    Rational objective = result.value * Rational(lp_degree);
    if (objective.get_den() != 1) throw InvariantViolation("scaled LP objective is not an integer");
    out.chi_objective = -to_int64(objective.get_num(), "objective");

    // Trace the boundary: every vertex class on it has one outgoing and one
    // incoming boundary edge.
    std::map<std::size_t, std::size_t> outgoing;
    std::map<std::size_t, std::size_t> incoming_count;
    for (std::size_t e = 0; e < boundary.size(); ++e) {
        if (!outgoing.emplace(uf.find(boundary[e].tail), e).second) {
            throw InvariantViolation("glued complex is not a surface along its boundary");
        }
        if (++incoming_count[uf.find(boundary[e].head)] > 1) {
            throw InvariantViolation("glued complex is not a surface along its boundary");
        }
    }
    const int rank = enc.prepared.chain.rank();
    std::vector<bool> seen(boundary.size(), false);
    std::vector<Word> cycles;
    std::vector<std::size_t> arc_of_edge(boundary.size(), 0);
    std::size_t arcs_so_far = 0;
    Chain traced(rank);
    for (std::size_t start = 0; start < boundary.size(); ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> letter_edges;
        std::size_t e = start;
        do {
            seen[e] = true;
            if (boundary[e].slot >= 0) letter_edges.push_back(e);
            auto it = outgoing.find(uf.find(boundary[e].head));
            if (it == outgoing.end()) throw InvariantViolation("boundary does not close up");
            e = it->second;
        } while (e != start);
        if (letter_edges.empty()) {
            ++out.corner_circles;
            continue;
        }
        auto slot_of = [&](std::size_t i) {
            return static_cast<std::size_t>(boundary[letter_edges[i % letter_edges.size()]].slot);
        };
        for (std::size_t i = 0; i < letter_edges.size(); ++i) {
            if (enc.layout.next(slot_of(i)) != slot_of(i + 1)) {
                throw InvariantViolation("boundary component does not follow its word");
            }
        }
        // Start the cycle where its word starts.
        auto first = std::find_if(letter_edges.begin(), letter_edges.end(), [&](std::size_t edge) {
            return enc.layout.position_of(static_cast<std::size_t>(boundary[edge].slot)) == 0;
        });
        std::rotate(letter_edges.begin(), first, letter_edges.end());
        std::vector<Letter> letters;
        for (std::size_t i = 0; i < letter_edges.size(); ++i) {
            arc_of_edge[letter_edges[i]] = arcs_so_far + i;
            letters.push_back(enc.layout.letter(slot_of(i)));
        }
        arcs_so_far += letter_edges.size();
        Word w(rank, std::move(letters));
        traced.add(1, w);
        cycles.push_back(std::move(w));
    }

    Matching matching{std::vector<std::size_t>(arcs_so_far)};
    for (auto [ep, eq] : rectangle_arcs) {
        matching.partner[arc_of_edge[ep]] = arc_of_edge[eq];
        matching.partner[arc_of_edge[eq]] = arc_of_edge[ep];
    }
    out.certificate.arcs = ArcSystem(rank, std::move(cycles));
    out.certificate.matching = std::move(matching);

    out.certificate.boundary = canonicalize(traced);
    const Integer degree = lp_degree * enc.prepared.scale;
    out.certificate.degree = to_int64(degree, "certificate degree");
    out.certificate.chi = out.chi_cells;
    out.certificate.provenance = Provenance::lp_decoded;
    return out;
}

}  // namespace sclkit
