#pragma once

#include "sclkit/rational.h"

#include <chrono>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace sclkit {

// minimize c^T x subject to A x = b, x >= 0, all data exact rationals.
// A is stored column-wise; stored entries are always nonzero.
class LinearProgram {
public:
    using Column = std::vector<std::pair<std::size_t, Rational>>;  // (row, value), sorted by row

    LinearProgram(std::size_t rows, std::size_t cols);
    // Dense constructor; throws InvalidArgument on inconsistent dimensions.
    LinearProgram(const std::vector<std::vector<Rational>>& a, std::vector<Rational> b,
                  std::vector<Rational> c);

    std::size_t rows() const { return rhs_.size(); }
    std::size_t cols() const { return objective_.size(); }

    // Accumulates into A(row, col). Throws InvalidArgument when out of range.
    void add_entry(std::size_t row, std::size_t col, const Rational& value);
    void set_rhs(std::size_t row, Rational value);
    void set_objective(std::size_t col, Rational value);

    const Column& column(std::size_t col) const { return columns_[col]; }
    const std::vector<Rational>& rhs() const { return rhs_; }
    const std::vector<Rational>& objective() const { return objective_; }
    std::size_t nonzeros() const;

private:
    std::vector<Column> columns_;
    std::vector<Rational> rhs_;
    std::vector<Rational> objective_;
};

enum class LPStatus { optimal, infeasible, unbounded };

struct LPResult {
    LPStatus status = LPStatus::infeasible;
    Rational value;                 // optimal objective value
    std::vector<Rational> primal;   // vertex, length cols()
    std::vector<Rational> dual;     // y with A^T y <= c, length rows()
    std::size_t pivots = 0;
    bool from_float_basis = false;  // optimal basis found in floating point, certified exactly
};

struct SolveOptions {
    std::size_t max_pivots = 1'000'000;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    // Look for the optimal basis with a floating-point revised simplex first
    // and accept it only if it checks out in exact arithmetic.
    bool float_guided = true;
};

// Exact two-phase simplex. By default a floating-point revised simplex
// proposes a basis; its primal and dual solutions are recomputed by exact
// sparse elimination and accepted only if feasible and optimal. Otherwise
// (or with float_guided off) an exact tableau simplex runs, using Dantzig
// pricing with a fallback to Bland's rule on long degenerate runs. Throws
// ResourceLimitError when the pivot cap or deadline is hit.
LPResult solve_min(const LinearProgram& lp, const SolveOptions& options = {});

// Exact certificate check: primal feasibility, dual feasibility and
// c^T x = b^T y = value. Independent of the solver's internal state.
bool verify(const LinearProgram& lp, const LPResult& result);

}  // namespace sclkit
