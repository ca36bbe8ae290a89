#include "sclkit/ratlp.h"

#include "sclkit/errors.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <limits>
#include <string>

namespace sclkit {

LinearProgram::LinearProgram(std::size_t rows, std::size_t cols)
    : columns_(cols), rhs_(rows), objective_(cols) {}

LinearProgram::LinearProgram(const std::vector<std::vector<Rational>>& a, std::vector<Rational> b,
                             std::vector<Rational> c)
    : columns_(c.size()), rhs_(std::move(b)), objective_(std::move(c)) {
    if (a.size() != rhs_.size()) {
        throw InvalidArgument("dimension mismatch: " + std::to_string(a.size()) +
                              " constraint rows but " + std::to_string(rhs_.size()) +
                              " right-hand sides");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != objective_.size()) {
            throw InvalidArgument("dimension mismatch in constraint row " + std::to_string(i));
        }
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            if (a[i][j] != 0) columns_[j].emplace_back(i, a[i][j]);
        }
    }
}

void LinearProgram::add_entry(std::size_t row, std::size_t col, const Rational& value) {
    if (row >= rows() || col >= cols()) {
        throw InvalidArgument("dimension mismatch: entry (" + std::to_string(row) + ", " +
                              std::to_string(col) + ") outside " + std::to_string(rows()) + "x" +
                              std::to_string(cols()));
    }
    if (value == 0) return;
    auto& column = columns_[col];
    auto it = std::lower_bound(column.begin(), column.end(), row,
                               [](const auto& e, std::size_t r) { return e.first < r; });
    if (it != column.end() && it->first == row) {
        it->second += value;
        if (it->second == 0) column.erase(it);
    } else {
        column.insert(it, {row, value});
    }
}

void LinearProgram::set_rhs(std::size_t row, Rational value) {
    if (row >= rows()) throw InvalidArgument("dimension mismatch: rhs row out of range");
    rhs_[row] = std::move(value);
}

void LinearProgram::set_objective(std::size_t col, Rational value) {
    if (col >= cols()) throw InvalidArgument("dimension mismatch: objective column out of range");
    objective_[col] = std::move(value);
}

std::size_t LinearProgram::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

namespace {

using Entry = std::pair<std::size_t, Rational>;

struct Row {
    std::vector<Entry> entries;  // sorted by column, nonzero
    Rational rhs;

    const Rational* find(std::size_t col) const {
        auto it = std::lower_bound(entries.begin(), entries.end(), col,
                                   [](const Entry& e, std::size_t c) { return e.first < c; });
        return it != entries.end() && it->first == col ? &it->second : nullptr;
    }
};

// row -= factor * pivot
void eliminate(Row& row, const Row& pivot, const Rational& factor) {
    std::vector<Entry> merged;
    merged.reserve(row.entries.size() + pivot.entries.size());
    auto a = row.entries.begin();
    auto b = pivot.entries.begin();
    Rational tmp;
    while (a != row.entries.end() || b != pivot.entries.end()) {
        if (b == pivot.entries.end() || (a != row.entries.end() && a->first < b->first)) {
            merged.push_back(std::move(*a));
            ++a;
        } else if (a == row.entries.end() || b->first < a->first) {
            tmp = -factor * b->second;
            merged.emplace_back(b->first, tmp);
            ++b;
        } else {
            tmp = a->second - factor * b->second;
            if (tmp != 0) merged.emplace_back(a->first, tmp);
            ++a;
            ++b;
        }
    }
    row.entries = std::move(merged);
    row.rhs -= factor * pivot.rhs;
}

class Tableau {
public:
    Tableau(const LinearProgram& lp, const SolveOptions& options)
        : lp_(lp), options_(options), m_(lp.rows()), n_(lp.cols()), rows_(m_), basis_(m_),
          sign_(m_, 1), reduced_(n_ + m_) {
        for (std::size_t j = 0; j < n_; ++j) {
            for (const auto& [i, v] : lp.column(j)) rows_[i].entries.emplace_back(j, v);
        }
        for (std::size_t i = 0; i < m_; ++i) {
            rows_[i].rhs = lp.rhs()[i];
            if (rows_[i].rhs < 0) {
                sign_[i] = -1;
                rows_[i].rhs = -rows_[i].rhs;
                for (auto& e : rows_[i].entries) e.second = -e.second;
            }
            rows_[i].entries.emplace_back(n_ + i, Rational(1));
            basis_[i] = n_ + i;
        }
    }

    LPResult run() {
        LPResult result;
        // Phase 1: minimize the sum of artificials.
        for (auto& d : reduced_) d = 0;
        for (std::size_t i = 0; i < m_; ++i) reduced_[n_ + i] = 1;
        price_out_basis();
        if (!iterate(/*allow_artificial=*/true)) {
            throw InvariantViolation("phase 1 reported unbounded");
        }
        if (objective_value() != 0) {
            result.status = LPStatus::infeasible;
            result.pivots = pivots_;
            return result;
        }
        drive_out_artificials();

        // Phase 2.
        for (std::size_t j = 0; j < n_; ++j) reduced_[j] = lp_.objective()[j];
        for (std::size_t i = 0; i < m_; ++i) reduced_[n_ + i] = 0;
        price_out_basis();
        if (!iterate(/*allow_artificial=*/false)) {
            result.status = LPStatus::unbounded;
            result.pivots = pivots_;
            return result;
        }

        result.status = LPStatus::optimal;
        result.pivots = pivots_;
        result.primal.assign(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) result.primal[basis_[i]] = rows_[i].rhs;
        }
        result.dual.assign(m_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] >= n_) continue;
            const Rational& cb = lp_.objective()[basis_[i]];
            if (cb == 0) continue;
            for (const auto& [j, v] : rows_[i].entries) {
                if (j >= n_) result.dual[j - n_] += cb * v;
            }
        }
        for (std::size_t k = 0; k < m_; ++k) {
            if (sign_[k] < 0) result.dual[k] = -result.dual[k];
        }
        result.value = 0;
        for (std::size_t j = 0; j < n_; ++j) result.value += lp_.objective()[j] * result.primal[j];
        return result;
    }

private:
    // Cost of basic variables, read from the reduced-cost vector before it is
    // priced out.
    void price_out_basis() {
        cost_.assign(n_ + m_, Rational(0));
        for (std::size_t j = 0; j < n_ + m_; ++j) cost_[j] = reduced_[j];
        objective_ = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            const Rational cb = cost_[basis_[i]];
            if (cb == 0) continue;
            for (const auto& [j, v] : rows_[i].entries) reduced_[j] -= cb * v;
            objective_ += cb * rows_[i].rhs;
        }
    }

    Rational objective_value() const { return objective_; }

    // Returns false on unboundedness.
    bool iterate(bool allow_artificial) {
        const std::size_t limit = allow_artificial ? n_ + m_ : n_;
        while (true) {
            // Dantzig pricing; a long run of degenerate pivots switches to
            // Bland's rule, which cannot cycle.
            const bool bland = degenerate_run_ >= kDegenerateLimit;
            std::size_t entering = limit;
            for (std::size_t j = 0; j < limit; ++j) {
                if (reduced_[j] >= 0) continue;
                if (entering == limit) {
                    entering = j;
                    if (bland) break;
                } else if (reduced_[j] < reduced_[entering]) {
                    entering = j;
                }
            }
            if (entering == limit) return true;

            std::size_t leaving = m_;
            Rational best_ratio;
            Rational ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                const Rational* a = rows_[i].find(entering);
                if (a == nullptr || *a <= 0) continue;
                ratio = rows_[i].rhs / *a;
                if (leaving == m_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (leaving == m_) return false;
            if (best_ratio == 0) {
                ++degenerate_run_;
            } else {
                degenerate_run_ = 0;
            }
            pivot(leaving, entering);
        }
    }

    void pivot(std::size_t r, std::size_t e) {
        if (++pivots_ > options_.max_pivots) {
            throw ResourceLimitError("simplex pivot cap of " + std::to_string(options_.max_pivots) +
                                     " exceeded");
        }
        if (options_.deadline && (pivots_ & 63) == 0 &&
            std::chrono::steady_clock::now() > *options_.deadline) {
            throw ResourceLimitError("time budget exceeded during simplex");
        }
        Row& prow = rows_[r];
        const Rational inv = 1 / *prow.find(e);
        for (auto& entry : prow.entries) entry.second *= inv;
        prow.rhs *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r) continue;
            const Rational* a = rows_[i].find(e);
            if (a == nullptr) continue;
            const Rational factor = *a;
            eliminate(rows_[i], prow, factor);
        }
        const Rational de = reduced_[e];
        if (de != 0) {
            for (const auto& [j, v] : prow.entries) reduced_[j] -= de * v;
            objective_ += de * prow.rhs;
        }
        basis_[r] = e;
    }

    void drive_out_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            for (const auto& [j, v] : rows_[i].entries) {
                if (j < n_) {
                    pivot(i, j);
                    break;
                }
            }
            // Otherwise the row is redundant; its artificial stays basic at 0.
        }
    }

    const LinearProgram& lp_;
    const SolveOptions& options_;
    std::size_t m_;
    std::size_t n_;
    std::vector<Row> rows_;
    std::vector<std::size_t> basis_;
    std::vector<int> sign_;
    std::vector<Rational> reduced_;
    std::vector<Rational> cost_;
    Rational objective_;
    std::size_t pivots_ = 0;
    std::size_t degenerate_run_ = 0;
    static constexpr std::size_t kDegenerateLimit = 50;
};


// Floating-point revised simplex with a dense basis inverse. Only proposes a
// basis; nothing it computes is trusted.
class FloatSimplex {
public:
    FloatSimplex(const LinearProgram& lp, const SolveOptions& options)
        : options_(options), m_(lp.rows()), n_(lp.cols()), columns_(n_), b_(m_), c_(n_),
          binv_(m_ * m_, 0.0), basis_(m_), xb_(m_) {
        std::vector<double> sign(m_, 1.0);
        for (std::size_t i = 0; i < m_; ++i) {
            b_[i] = lp.rhs()[i].get_d();
            if (b_[i] < 0) {
                sign[i] = -1.0;
                b_[i] = -b_[i];
            }
        }
        for (std::size_t j = 0; j < n_; ++j) {
            c_[j] = lp.objective()[j].get_d();
            for (const auto& [i, v] : lp.column(j)) columns_[j].emplace_back(i, sign[i] * v.get_d());
        }
        for (std::size_t i = 0; i < m_; ++i) {
            basis_[i] = n_ + i;
            binv_[i * m_ + i] = 1.0;
            xb_[i] = b_[i];
        }
    }

    // Basis at a proposed optimum, or nothing on trouble.
    std::optional<std::vector<std::size_t>> run() {
        std::vector<double> phase1(n_ + m_, 0.0);
        for (std::size_t i = 0; i < m_; ++i) phase1[n_ + i] = 1.0;
        if (!iterate(phase1, true)) return std::nullopt;
        double infeasibility = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] >= n_) infeasibility += xb_[i];
        }
        if (infeasibility > 1e-7) return std::nullopt;
        drive_out_artificials();
        std::vector<double> phase2(n_ + m_, 0.0);
        for (std::size_t j = 0; j < n_; ++j) phase2[j] = c_[j];
        if (!iterate(phase2, false)) return std::nullopt;
        return basis_;
    }

    std::size_t pivots() const { return pivots_; }

private:
    static constexpr double kPriceTol = 1e-9;
    static constexpr double kPivotTol = 1e-9;
    static constexpr std::size_t kRefactorEvery = 100;
    static constexpr std::size_t kDegenerateLimit = 50;

    double dot_row(const std::vector<double>& y, std::size_t j) const {
        if (j >= n_) return y[j - n_];
        double s = 0;
        for (const auto& [i, v] : columns_[j]) s += y[i] * v;
        return s;
    }

    std::vector<double> ftran(std::size_t j) const {
        std::vector<double> alpha(m_, 0.0);
        if (j >= n_) {
            for (std::size_t i = 0; i < m_; ++i) alpha[i] = binv_[i * m_ + (j - n_)];
            return alpha;
        }
        for (const auto& [r, v] : columns_[j]) {
            for (std::size_t i = 0; i < m_; ++i) alpha[i] += binv_[i * m_ + r] * v;
        }
        return alpha;
    }

    bool iterate(const std::vector<double>& cost, bool allow_artificial) {
        const std::size_t limit = allow_artificial ? n_ + m_ : n_;
        std::vector<bool> basic(n_ + m_, false);
        for (std::size_t k : basis_) basic[k] = true;
        std::size_t degenerate_run = 0;
        std::vector<double> y(m_);
        while (true) {
            std::fill(y.begin(), y.end(), 0.0);
            for (std::size_t i = 0; i < m_; ++i) {
                const double cb = cost[basis_[i]];
                if (cb == 0) continue;
                const double* row = &binv_[i * m_];
                for (std::size_t k = 0; k < m_; ++k) y[k] += cb * row[k];
            }
            const bool bland = degenerate_run >= kDegenerateLimit;
            std::size_t entering = limit;
            double best = -kPriceTol;
            for (std::size_t j = 0; j < limit; ++j) {
                if (basic[j]) continue;
                const double d = cost[j] - dot_row(y, j);
                if (d < best) {
                    entering = j;
                    best = d;
                    if (bland) break;
                }
            }
            if (entering == limit) return true;
            const std::vector<double> alpha = ftran(entering);
            std::size_t leaving = m_;
            double best_ratio = 0;
            for (std::size_t i = 0; i < m_; ++i) {
                if (alpha[i] <= kPivotTol) continue;
                const double ratio = std::max(xb_[i], 0.0) / alpha[i];
                if (leaving == m_ || ratio < best_ratio - 1e-12 ||
                    (ratio <= best_ratio + 1e-12 && alpha[i] > alpha[leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (leaving == m_) return false;
            degenerate_run = best_ratio <= 1e-12 ? degenerate_run + 1 : 0;
            basic[basis_[leaving]] = false;
            basic[entering] = true;
            pivot(leaving, entering, alpha);
        }
    }

    void pivot(std::size_t r, std::size_t e, const std::vector<double>& alpha) {
        if (++pivots_ > options_.max_pivots) {
            throw ResourceLimitError("simplex pivot cap of " + std::to_string(options_.max_pivots) +
                                     " exceeded");
        }
        if (options_.deadline && (pivots_ & 63) == 0 &&
            std::chrono::steady_clock::now() > *options_.deadline) {
            throw ResourceLimitError("time budget exceeded during simplex");
        }
        const double t = std::max(xb_[r], 0.0) / alpha[r];
        for (std::size_t i = 0; i < m_; ++i) xb_[i] -= t * alpha[i];
        xb_[r] = t;
        double* prow = &binv_[r * m_];
        const double inv = 1.0 / alpha[r];
        for (std::size_t k = 0; k < m_; ++k) prow[k] *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || alpha[i] == 0) continue;
            double* row = &binv_[i * m_];
            const double f = alpha[i];
            for (std::size_t k = 0; k < m_; ++k) row[k] -= f * prow[k];
        }
        basis_[r] = e;
        if (pivots_ % kRefactorEvery == 0) refactor();
    }

    // Recomputes the basis inverse and basic values from scratch.
    void refactor() {
        std::vector<double> a(m_ * m_, 0.0);
        for (std::size_t k = 0; k < m_; ++k) {
            const std::size_t j = basis_[k];
            if (j >= n_) {
                a[(j - n_) * m_ + k] = 1.0;
            } else {
                for (const auto& [i, v] : columns_[j]) a[i * m_ + k] = v;
            }
        }
        std::vector<double> inv(m_ * m_, 0.0);
        for (std::size_t i = 0; i < m_; ++i) inv[i * m_ + i] = 1.0;
        for (std::size_t col = 0; col < m_; ++col) {
            std::size_t p = col;
            for (std::size_t i = col + 1; i < m_; ++i) {
                if (std::fabs(a[i * m_ + col]) > std::fabs(a[p * m_ + col])) p = i;
            }
            if (std::fabs(a[p * m_ + col]) < 1e-12) return;  // keep the updated inverse
            if (p != col) {
                for (std::size_t k = 0; k < m_; ++k) {
                    std::swap(a[p * m_ + k], a[col * m_ + k]);
                    std::swap(inv[p * m_ + k], inv[col * m_ + k]);
                }
            }
            const double d = 1.0 / a[col * m_ + col];
            for (std::size_t k = 0; k < m_; ++k) {
                a[col * m_ + k] *= d;
                inv[col * m_ + k] *= d;
            }
            for (std::size_t i = 0; i < m_; ++i) {
                if (i == col) continue;
                const double f = a[i * m_ + col];
                if (f == 0) continue;
                for (std::size_t k = 0; k < m_; ++k) {
                    a[i * m_ + k] -= f * a[col * m_ + k];
                    inv[i * m_ + k] -= f * inv[col * m_ + k];
                }
            }
        }
        binv_ = std::move(inv);
        for (std::size_t i = 0; i < m_; ++i) {
            double s = 0;
            for (std::size_t k = 0; k < m_; ++k) s += binv_[i * m_ + k] * b_[k];
            xb_[i] = s;
        }
    }

    void drive_out_artificials() {
        std::vector<bool> basic(n_ + m_, false);
        for (std::size_t k : basis_) basic[k] = true;
        for (std::size_t r = 0; r < m_; ++r) {
            if (basis_[r] < n_) continue;
            const std::vector<double> rho(binv_.begin() + static_cast<std::ptrdiff_t>(r * m_),
                                          binv_.begin() + static_cast<std::ptrdiff_t>((r + 1) * m_));
            for (std::size_t j = 0; j < n_; ++j) {
                if (basic[j] || std::fabs(dot_row(rho, j)) < 1e-7) continue;
                basic[basis_[r]] = false;
                basic[j] = true;
                pivot(r, j, ftran(j));
                break;
            }
        }
    }

    const SolveOptions& options_;
    std::size_t m_;
    std::size_t n_;
    std::vector<std::vector<std::pair<std::size_t, double>>> columns_;
    std::vector<double> b_;
    std::vector<double> c_;
    std::vector<double> binv_;  // row-major m x m
    std::vector<std::size_t> basis_;
    std::vector<double> xb_;
    std::size_t pivots_ = 0;
};

// Solves sum_j rows[i][j] z_j = rhs_i exactly for square nonsingular
// systems by sparse elimination, choosing the sparsest column and row at
// each step. Returns nothing when singular.
std::optional<std::vector<Rational>> solve_sparse(std::vector<std::vector<Entry>> rows,
                                                  std::vector<Rational> rhs) {
    const std::size_t m = rows.size();
    std::vector<std::set<std::size_t>> col_rows(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (const auto& [j, v] : rows[i]) col_rows[j].insert(i);
    }
    std::vector<bool> col_done(m, false);
    std::vector<std::pair<std::size_t, std::size_t>> order;  // (row, col)
    for (std::size_t step = 0; step < m; ++step) {
        std::size_t c = m;
        for (std::size_t j = 0; j < m; ++j) {
            if (col_done[j]) continue;
            if (col_rows[j].empty()) return std::nullopt;
            if (c == m || col_rows[j].size() < col_rows[c].size()) c = j;
        }
        std::size_t r = m;
        for (std::size_t i : col_rows[c]) {
            if (r == m || rows[i].size() < rows[r].size()) r = i;
        }
        col_done[c] = true;
        order.emplace_back(r, c);
        for (const auto& [j, v] : rows[r]) col_rows[j].erase(r);
        const Row pivot_row{rows[r], rhs[r]};
        const Rational pivot_value = *pivot_row.find(c);
        const std::vector<std::size_t> targets(col_rows[c].begin(), col_rows[c].end());
        for (std::size_t i : targets) {
            Row row{std::move(rows[i]), rhs[i]};
            const Rational factor = *row.find(c) / pivot_value;
            for (const auto& [j, v] : row.entries) col_rows[j].erase(i);
            eliminate(row, pivot_row, factor);
            for (const auto& [j, v] : row.entries) col_rows[j].insert(i);
            rows[i] = std::move(row.entries);
            rhs[i] = std::move(row.rhs);
        }
    }
    std::vector<Rational> z(m);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto [r, c] = *it;
        Rational acc = rhs[r];
        Rational diag;
        for (const auto& [j, v] : rows[r]) {
            if (j == c) {
                diag = v;
            } else {
                acc -= v * z[j];
            }
        }
        z[c] = acc / diag;
    }
    return z;
}

// Exact primal and dual solutions of a proposed basis (indices >= cols()
// are artificial unit columns). Accepted only when optimal.
std::optional<LPResult> certify_basis(const LinearProgram& lp, const std::vector<std::size_t>& basis) {
    const std::size_t m = lp.rows();
    const std::size_t n = lp.cols();
    std::vector<std::vector<Entry>> by_row(m), by_col(m);
    for (std::size_t k = 0; k < m; ++k) {
        if (basis[k] >= n) {
            by_row[basis[k] - n].emplace_back(k, Rational(1));
            by_col[k].emplace_back(basis[k] - n, Rational(1));
        } else {
            for (const auto& [i, v] : lp.column(basis[k])) {
                by_row[i].emplace_back(k, v);
                by_col[k].emplace_back(i, v);
            }
        }
    }
    for (auto& r : by_row) std::sort(r.begin(), r.end(), [](const Entry& x, const Entry& y) { return x.first < y.first; });
    auto xb = solve_sparse(std::move(by_row), lp.rhs());
    if (!xb) return std::nullopt;
    LPResult result;
    result.primal.assign(n, Rational(0));
    std::vector<Rational> cb(m);
    std::vector<bool> basic(n, false);
    for (std::size_t k = 0; k < m; ++k) {
        if (basis[k] >= n) {
            if ((*xb)[k] != 0) return std::nullopt;
            continue;
        }
        if ((*xb)[k] < 0) return std::nullopt;
        result.primal[basis[k]] = (*xb)[k];
        cb[k] = lp.objective()[basis[k]];
        basic[basis[k]] = true;
    }
    auto y = solve_sparse(std::move(by_col), cb);
    if (!y) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
        if (basic[j]) continue;
        Rational aty = 0;
        for (const auto& [i, v] : lp.column(j)) aty += v * (*y)[i];
        if (aty > lp.objective()[j]) return std::nullopt;
    }
    result.status = LPStatus::optimal;
    result.dual = std::move(*y);
    result.value = 0;
    for (std::size_t j = 0; j < n; ++j) result.value += lp.objective()[j] * result.primal[j];
    result.from_float_basis = true;
    return result;
}

}  // namespace

LPResult solve_min(const LinearProgram& lp, const SolveOptions& options) {
    std::size_t float_pivots = 0;
    if (options.float_guided && lp.rows() > 0) {
        FloatSimplex guide(lp, options);
        auto basis = guide.run();
        float_pivots = guide.pivots();
        if (basis) {
            if (auto certified = certify_basis(lp, *basis)) {
                certified->pivots = float_pivots;
                return *certified;
            }
        }
    }
    Tableau t(lp, options);
    LPResult r = t.run();
    r.pivots += float_pivots;
    return r;
}

bool verify(const LinearProgram& lp, const LPResult& result) {
    if (result.status != LPStatus::optimal) return false;
    if (result.primal.size() != lp.cols() || result.dual.size() != lp.rows()) return false;
    std::vector<Rational> ax(lp.rows());
    Rational primal_value = 0;
    for (std::size_t j = 0; j < lp.cols(); ++j) {
        const Rational& x = result.primal[j];
        if (x < 0) return false;
        primal_value += lp.objective()[j] * x;
        Rational aty = 0;
        for (const auto& [i, v] : lp.column(j)) {
            if (x != 0) ax[i] += v * x;
            aty += v * result.dual[i];
        }
        if (aty > lp.objective()[j]) return false;
    }
    Rational dual_value = 0;
    for (std::size_t i = 0; i < lp.rows(); ++i) {
        if (ax[i] != lp.rhs()[i]) return false;
        dual_value += lp.rhs()[i] * result.dual[i];
    }
    return primal_value == dual_value && primal_value == result.value;
}

}  // namespace sclkit
