#include "sclkit/surfcert.h"

#include "sclkit/detail/union_find.h"
#include "sclkit/errors.h"
#include "sclkit/sclenc.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <sstream>
#include <thread>

namespace sclkit {

ArcSystem::ArcSystem(int rank, std::vector<Word> cycles) : rank_(rank), cycles_(std::move(cycles)) {
    for (std::size_t c = 0; c < cycles_.size(); ++c) {
        if (cycles_[c].rank() != rank_) throw RankMismatch("arc system cycle has the wrong rank");
        if (cycles_[c].empty()) throw InvalidArgument("arc system cycle is empty");
        offsets_.push_back(labels_.size());
        for (Letter l : cycles_[c].letters()) {
            labels_.push_back(l);
            cycle_of_.push_back(c);
        }
    }
}

std::size_t ArcSystem::next(std::size_t arc) const {
    const std::size_t c = cycle_of_[arc];
    const std::size_t len = cycles_[c].size();
    return offsets_[c] + (arc - offsets_[c] + 1) % len;
}

std::size_t ArcSystem::prev(std::size_t arc) const {
    const std::size_t c = cycle_of_[arc];
    const std::size_t len = cycles_[c].size();
    return offsets_[c] + (arc - offsets_[c] + len - 1) % len;
}

std::vector<std::pair<std::size_t, std::size_t>> Matching::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < partner.size(); ++i) {
        if (i < partner[i]) out.emplace_back(i, partner[i]);
    }
    return out;
}

void validate_matching(const ArcSystem& arcs, const Matching& m) {
    if (m.partner.size() != arcs.arc_count()) {
        throw InvalidArgument("matching size differs from the number of arcs");
    }
    for (std::size_t i = 0; i < m.partner.size(); ++i) {
        const std::size_t j = m.partner[i];
        if (j >= m.partner.size() || j == i || m.partner[j] != i) {
            throw InvalidArgument("matching is not a fixed-point-free involution at arc " +
                                  std::to_string(i));
        }
        if (!arcs.label(i).is_inverse_of(arcs.label(j))) {
            throw InvalidArgument("paired arcs " + std::to_string(i) + " and " + std::to_string(j) +
                                  " do not carry inverse labels");
        }
    }
}

std::size_t corner_orbits(const ArcSystem& arcs, const Matching& m) {
    validate_matching(arcs, m);
    const std::size_t n = arcs.arc_count();
    std::vector<bool> seen(n, false);
    std::size_t orbits = 0;
    for (std::size_t g = 0; g < n; ++g) {
        if (seen[g]) continue;
        ++orbits;
        for (std::size_t x = g; !seen[x]; x = arcs.prev(m.partner[x])) seen[x] = true;
    }
    return orbits;
}

std::int64_t euler_characteristic(const ArcSystem& arcs, const Matching& m) {
    return static_cast<std::int64_t>(corner_orbits(arcs, m)) -
           static_cast<std::int64_t>(m.pair_count());
}

std::int64_t euler_characteristic_cells(const ArcSystem& arcs, const Matching& m) {
    validate_matching(arcs, m);
    const std::size_t n = arcs.arc_count();
    detail::UnionFind uf;
    std::size_t edges = 0;
    std::size_t faces = 0;
    // Rectangle sides indexed by the gap they start from; (tail, head) vertices.
    std::vector<std::pair<std::size_t, std::size_t>> side_from_gap(n);
    std::vector<std::pair<std::size_t, std::size_t>> boundary;  // (tail, head)
    for (auto [p, q] : m.pairs()) {
        const std::size_t v0 = uf.add(), v1 = uf.add(), v2 = uf.add(), v3 = uf.add();
        boundary.emplace_back(v0, v1);  // letter p
        boundary.emplace_back(v2, v3);  // letter q
        side_from_gap[p] = {v1, v2};    // gap after p -> gap before q
        side_from_gap[q] = {v3, v0};    // gap after q -> gap before p
        ++faces;
        edges += 4;
    }
    // Corner polygons: a side ending at the gap before q continues with the
    // side starting at that gap.
    std::vector<bool> used(n, false);
    for (std::size_t g = 0; g < n; ++g) {
        if (used[g]) continue;
        std::vector<std::size_t> gaps;
        for (std::size_t x = g; !used[x]; x = arcs.prev(m.partner[x])) {
            used[x] = true;
            gaps.push_back(x);
        }
        const std::size_t k = gaps.size();
        std::vector<std::size_t> tail(k), head(k);
        for (std::size_t i = 0; i < k; ++i) {
            tail[i] = uf.add();
            head[i] = uf.add();
            uf.unite(tail[i], side_from_gap[gaps[i]].first);
            uf.unite(head[i], side_from_gap[gaps[i]].second);
        }
        for (std::size_t i = 0; i < k; ++i) boundary.emplace_back(tail[(i + 1) % k], head[i]);
        edges += k;
        ++faces;
    }
    std::map<std::size_t, int> out_degree, in_degree;
    for (auto [t, h] : boundary) {
        ++out_degree[uf.find(t)];
        ++in_degree[uf.find(h)];
    }
    for (auto [v, d] : out_degree) {
        if (d != 1 || in_degree[v] != 1) {
            throw InvariantViolation("band surface cell structure is not a surface at its boundary");
        }
    }
    const std::size_t vertices = uf.classes();
    return static_cast<std::int64_t>(vertices) - static_cast<std::int64_t>(edges) +
           static_cast<std::int64_t>(faces);
}

Chain boundary_chain(const ArcSystem& arcs) {
    Chain c(arcs.rank());
    for (const auto& w : arcs.cycles()) c.add(1, w);
    return canonicalize(c);
}

SurfaceCertificate make_certificate(const ArcSystem& arcs, const Matching& m, std::int64_t degree) {
    SurfaceCertificate cert;
    cert.chi = euler_characteristic(arcs, m);
    cert.degree = degree;
    cert.boundary = boundary_chain(arcs);
    cert.provenance = Provenance::arc_matching;
    cert.arcs = arcs;
    cert.matching = m;
    return cert;
}

ExtremalityReport extremality_ratio(const SurfaceCertificate& cert, const Chain& chain) {
    const int rank = std::max(cert.boundary.rank(), chain.rank());
    const Chain boundary = canonicalize(cert.boundary.with_rank(rank));
    const Chain target = canonicalize(chain.with_rank(rank));
    if (target.empty()) throw InvalidArgument("extremality_ratio: empty chain");
    if (boundary.terms().size() != target.terms().size()) {
        throw InvalidArgument("certificate boundary " + boundary.to_string() +
                              " is not a multiple of " + target.to_string());
    }
    const Rational degree = boundary.terms().front().coefficient / target.terms().front().coefficient;
    if (degree <= 0 || !(canonicalize(degree * target) == boundary)) {
        throw InvalidArgument("certificate boundary " + boundary.to_string() +
                              " is not a positive multiple of " + target.to_string());
    }
    ExtremalityReport r;
    r.degree = degree;
    r.ratio = Rational(-cert.chi) / (2 * degree);
    r.scl = scl(target);
    r.extremal = r.ratio == r.scl;
    return r;
}

namespace {

class MatchingSearch {
public:
    MatchingSearch(const ArcSystem& arcs, std::uint64_t budget)
        : arcs_(arcs), n_(arcs.arc_count()), budget_(budget), partner_(n_, kNone),
          sigma_(n_, kNone) {
        min_orbit_ = 2;
        for (std::size_t a = 0; a < n_; ++a) {
            if (arcs.label(a).is_inverse_of(arcs.label(arcs.next(a)))) min_orbit_ = 1;
        }
    }

    struct Best {
        std::int64_t orbits = -1;
        std::vector<std::size_t> partner;
    };

    // Explores the subtree where arc `first` is paired with `second`.
    void run_subtree(std::size_t first, std::size_t second, Best& best) {
        best_ = &best;
        std::size_t closed = pair(first, second);
        dfs(closed, gaps_closed_);
        unpair(first, second);
    }

    std::uint64_t nodes() const { return nodes_; }
    bool exhausted() const { return out_of_budget_; }

    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

private:
    // Returns the number of orbits closed by this pair, updating gaps_closed_.
    std::size_t pair(std::size_t p, std::size_t q) {
        partner_[p] = q;
        partner_[q] = p;
        sigma_[p] = arcs_.prev(q);
        sigma_[q] = arcs_.prev(p);
        std::size_t closed = 0;
        std::size_t len = 0;
        if (cycle_length(p, len)) {
            ++closed;
            gaps_closed_ += len;
            history_.push_back(len);
            if (!on_cycle(p, q)) {
                if (cycle_length(q, len)) {
                    ++closed;
                    gaps_closed_ += len;
                    history_.push_back(len);
                }
            }
        } else if (cycle_length(q, len)) {
            ++closed;
            gaps_closed_ += len;
            history_.push_back(len);
        }
        closed_counts_.push_back(closed);
        return closed;
    }

    void unpair(std::size_t p, std::size_t q) {
        const std::size_t closed = closed_counts_.back();
        closed_counts_.pop_back();
        for (std::size_t i = 0; i < closed; ++i) {
            gaps_closed_ -= history_.back();
            history_.pop_back();
        }
        partner_[p] = partner_[q] = kNone;
        sigma_[p] = sigma_[q] = kNone;
    }

    bool cycle_length(std::size_t start, std::size_t& len) const {
        len = 0;
        std::size_t x = start;
        do {
            if (sigma_[x] == kNone) return false;
            x = sigma_[x];
            ++len;
        } while (x != start);
        return true;
    }

    bool on_cycle(std::size_t start, std::size_t target) const {
        std::size_t x = start;
        do {
            if (x == target) return true;
            x = sigma_[x];
        } while (x != start);
        return false;
    }

    void dfs(std::size_t orbits, std::size_t) {
        ++nodes_;
        if (nodes_ > budget_) {
            out_of_budget_ = true;
            return;
        }
        std::size_t p = 0;
        while (p < n_ && partner_[p] != kNone) ++p;
        if (p == n_) {
            if (static_cast<std::int64_t>(orbits) > best_->orbits) {
                best_->orbits = static_cast<std::int64_t>(orbits);
                best_->partner = partner_;
            }
            return;
        }
        const std::size_t open = n_ - gaps_closed_;
        if (static_cast<std::int64_t>(orbits + open / min_orbit_) <= best_->orbits) return;
        for (std::size_t q = p + 1; q < n_ && !out_of_budget_; ++q) {
            if (partner_[q] != kNone || !arcs_.label(p).is_inverse_of(arcs_.label(q))) continue;
            const std::size_t closed = pair(p, q);
            dfs(orbits + closed, gaps_closed_);
            unpair(p, q);
        }
    }

    const ArcSystem& arcs_;
    std::size_t n_;
    std::uint64_t budget_;
    std::vector<std::size_t> partner_;
    std::vector<std::size_t> sigma_;
    std::vector<std::size_t> history_;
    std::vector<std::size_t> closed_counts_;
    std::size_t gaps_closed_ = 0;
    std::size_t min_orbit_ = 2;
    std::uint64_t nodes_ = 0;
    bool out_of_budget_ = false;
    Best* best_ = nullptr;
};

void check_pairable(const ArcSystem& arcs) {
    std::map<int, int> balance;
    for (std::size_t a = 0; a < arcs.arc_count(); ++a) {
        balance[arcs.label(a).generator] += arcs.label(a).sign;
    }
    for (auto [g, b] : balance) {
        if (b != 0) throw InvalidArgument("arc labels admit no perfect inverse pairing");
    }
}

}  // namespace

MatchingSearchResult search_matching(const ArcSystem& arcs, const MatchingSearchOptions& options) {
    if (arcs.arc_count() > options.max_arcs) {
        throw ResourceLimitError("matching search over " + std::to_string(arcs.arc_count()) +
                                 " arcs exceeds the cap of " + std::to_string(options.max_arcs));
    }
    check_pairable(arcs);
    MatchingSearchResult result;
    result.arcs = arcs;
    if (arcs.arc_count() == 0) return result;

    std::vector<std::size_t> firsts;
    for (std::size_t q = 1; q < arcs.arc_count(); ++q) {
        if (arcs.label(0).is_inverse_of(arcs.label(q))) firsts.push_back(q);
    }
    std::vector<MatchingSearch::Best> bests(firsts.size());
    std::uint64_t nodes = 0;
    bool cut = false;
    const bool parallel = options.parallel && std::thread::hardware_concurrency() > 1 && firsts.size() > 1;
    if (parallel) {
        const std::uint64_t share = std::max<std::uint64_t>(1, options.node_budget / firsts.size());
        std::vector<std::future<std::pair<std::uint64_t, bool>>> jobs;
        for (std::size_t i = 0; i < firsts.size(); ++i) {
            jobs.push_back(std::async(std::launch::async, [&, i] {
                MatchingSearch search(arcs, share);
                search.run_subtree(0, firsts[i], bests[i]);
                return std::make_pair(search.nodes(), search.exhausted());
            }));
        }
        for (auto& j : jobs) {
            auto [n, c] = j.get();
            nodes += n;
            cut = cut || c;
        }
    } else {
        // One shared bound; subtrees are visited in lexicographic order.
        MatchingSearch search(arcs, options.node_budget);
        MatchingSearch::Best shared;
        for (std::size_t i = 0; i < firsts.size(); ++i) {
            const std::int64_t before = shared.orbits;
            search.run_subtree(0, firsts[i], shared);
            if (shared.orbits > before) bests[i] = shared;
        }
        nodes = search.nodes();
        cut = search.exhausted();
    }
    const MatchingSearch::Best* winner = nullptr;
    for (const auto& b : bests) {
        if (b.orbits >= 0 && (winner == nullptr || b.orbits > winner->orbits)) winner = &b;
    }
    if (winner == nullptr) throw ResourceLimitError("matching search found no matching within budget");
    result.matching.partner = winner->partner;
    result.chi = euler_characteristic(arcs, result.matching);
    result.exhaustive = !cut;
    result.nodes = nodes;
    return result;
}

namespace {

void partitions(int n, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions(n - part, part, current, out);
        current.pop_back();
    }
}

}  // namespace

MatchingBound search_matching(const Chain& chain, std::int64_t degree,
                              const MatchingSearchOptions& options) {
    if (degree < 1) throw InvalidArgument("degree must be positive");
    const PreparedChain prepared = prepare(chain);
    std::vector<std::vector<std::vector<int>>> choices;
    std::size_t arcs = 0;
    for (const auto& t : prepared.chain.terms()) {
        const Integer copies = t.coefficient.get_num() * degree;
        if (!copies.fits_sint_p() || copies > 64) throw ResourceLimitError("too many boundary copies");
        arcs += static_cast<std::size_t>(copies.get_si()) * t.word.size();
        std::vector<std::vector<int>> parts;
        std::vector<int> current;
        partitions(static_cast<int>(copies.get_si()), static_cast<int>(copies.get_si()), current, parts);
        choices.push_back(std::move(parts));
    }
    if (arcs > options.max_arcs) {
        throw ResourceLimitError("matching search over " + std::to_string(arcs) +
                                 " arcs exceeds the cap of " + std::to_string(options.max_arcs));
    }
    MatchingBound out;
    out.degree = degree;
    if (choices.empty()) {
        out.bound = 0;
        out.best.arcs = ArcSystem(prepared.chain.rank(), {});
        return out;
    }
    bool found = false;
    std::vector<std::size_t> index(choices.size(), 0);
    while (true) {
        std::vector<Word> cycles;
        for (std::size_t i = 0; i < choices.size(); ++i) {
            for (int part : choices[i][index[i]]) {
                cycles.push_back(power(prepared.chain.terms()[i].word, part));
            }
        }
        ArcSystem system(prepared.chain.rank(), std::move(cycles));
        MatchingSearchResult r = search_matching(system, options);
        if (!found || r.chi > out.best.chi) {
            out.best = std::move(r);
            found = true;
        } else {
            out.best.exhaustive = out.best.exhaustive && r.exhaustive;
        }
        std::size_t k = 0;
        while (k < index.size() && ++index[k] == choices[k].size()) index[k++] = 0;
        if (k == index.size()) break;
    }
    out.bound = Rational(-out.best.chi) / (2 * Rational(degree) * Rational(prepared.scale));
    return out;
}

CertificateFile read_certificate(std::istream& in) {
    CertificateFile file;
    std::optional<int> rank;
    std::vector<Word> cycles;
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>>> pairs;
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& why) {
        throw InvalidArgument("certificate line " + std::to_string(lineno) + ": " + why);
    };
    auto parse_arc = [&](const std::string& token) {
        const auto dot = token.find('.');
        if (dot == std::string::npos) fail("arc reference '" + token + "' is not <cycle>.<arc>");
        try {
            return std::make_pair(static_cast<std::size_t>(std::stoul(token.substr(0, dot))),
                                  static_cast<std::size_t>(std::stoul(token.substr(dot + 1))));
        } catch (const std::exception&) {
            fail("bad arc reference '" + token + "'");
        }
        return std::make_pair(std::size_t{0}, std::size_t{0});
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string keyword;
        ls >> keyword;
        if (keyword == "rank") {
            int k = 0;
            if (!(ls >> k) || k < 1 || k > 26) fail("bad rank");
            rank = k;
        } else if (keyword == "cycle") {
            if (!rank) fail("cycle before rank");
            std::string id;
            ls >> id;
            if (id.empty() || id.back() != ':') fail("expected 'cycle <id>:'");
            if (std::stoul(id.substr(0, id.size() - 1)) != cycles.size()) fail("cycle ids must be 0, 1, 2, ...");
            std::string letters, token;
            while (ls >> token) {
                if (token.size() != 1) fail("arc labels are single letters");
                letters += token;
            }
            cycles.emplace_back(*rank, letters);
        } else if (keyword == "pair") {
            std::string a, b;
            if (!(ls >> a >> b)) fail("expected 'pair <c>.<i> <c>.<i>'");
            pairs.emplace_back(parse_arc(a), parse_arc(b));
        } else if (keyword == "chain") {
            std::string rest;
            std::getline(ls, rest);
            const auto start = rest.find_first_not_of(' ');
            file.chain = start == std::string::npos ? std::string() : rest.substr(start);
        } else if (keyword == "degree") {
            std::int64_t d = 0;
            if (!(ls >> d) || d < 1) fail("bad degree");
            file.degree = d;
        } else {
            fail("unknown keyword '" + keyword + "'");
        }
    }
    if (!rank) throw InvalidArgument("certificate has no rank line");
    file.arcs = ArcSystem(*rank, std::move(cycles));
    if (!pairs.empty()) {
        Matching m{std::vector<std::size_t>(file.arcs.arc_count(), MatchingSearch::kNone)};
        auto global = [&](std::pair<std::size_t, std::size_t> ref) {
            if (ref.first >= file.arcs.cycles().size() ||
                ref.second >= file.arcs.cycles()[ref.first].size()) {
                throw InvalidArgument("pair refers to a missing arc");
            }
            return file.arcs.offset(ref.first) + ref.second;
        };
        for (auto [a, b] : pairs) {
            const std::size_t x = global(a), y = global(b);
            if (m.partner[x] != MatchingSearch::kNone || m.partner[y] != MatchingSearch::kNone) {
                throw InvalidArgument("arc paired twice");
            }
            m.partner[x] = y;
            m.partner[y] = x;
        }
        validate_matching(file.arcs, m);
        file.matching = std::move(m);
    }
    return file;
}

CertificateFile read_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open certificate file " + path);
    return read_certificate(in);
}

void write_certificate(std::ostream& out, const CertificateFile& file) {
    const ArcSystem& arcs = file.arcs;
    out << "rank " << arcs.rank() << "\n";
    for (std::size_t c = 0; c < arcs.cycles().size(); ++c) {
        out << "cycle " << c << ":";
        for (Letter l : arcs.cycles()[c].letters()) out << ' ' << l.to_char();
        out << "\n";
    }
    if (file.matching) {
        for (auto [x, y] : file.matching->pairs()) {
            out << "pair " << arcs.cycle_of(x) << '.' << x - arcs.offset(arcs.cycle_of(x)) << ' '
                << arcs.cycle_of(y) << '.' << y - arcs.offset(arcs.cycle_of(y)) << "\n";
        }
    }
    if (file.chain) out << "chain " << *file.chain << "\n";
    if (file.degree) out << "degree " << *file.degree << "\n";
}

std::string format_certificate(const CertificateFile& file) {
    std::ostringstream s;
    write_certificate(s, file);
    return s.str();
}

}  // namespace sclkit
