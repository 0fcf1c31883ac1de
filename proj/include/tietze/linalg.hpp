// Exact dense linear algebra over a field, used by the rational solver and
// the lemma null-space checks. Pivoting order is fixed (first nonzero row,
// columns left to right) so results are deterministic.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "tietze/errors.hpp"
#include "tietze/fraction.hpp"
#include "tietze/rational.hpp"

namespace tietze {

// Pivot-selection cost: prefer structurally simple pivots (low-degree
// rational functions) to contain fill-in growth during elimination.
inline long elimination_cost(const BigRat&) { return 0; }
template <class F>
long elimination_cost(const Fraction<F>& x) {
    long c = x.num().degree() + x.den().degree();
    for (const auto& a : x.num().coeffs()) c += elimination_cost(a);
    for (const auto& a : x.den().coeffs()) c += elimination_cost(a);
    return c;
}

enum class PivotRule {
    first_nonzero, // natural order; best for near-triangular systems
    simplest       // minimal elimination_cost; contains fill-in growth
};

template <class F>
struct LinearSolveResult {
    bool consistent = true;
    std::vector<F> particular;            // empty unless consistent
    std::vector<std::vector<F>> nullspace; // basis of the homogeneous solutions
    long rank = 0;
    long rows = 0, cols = 0;
    std::optional<long> witness_row; // row index proving inconsistency
    F witness_value = F(0);          // its reduced right-hand side
};

// Solves A x = b by Gauss-Jordan elimination. a is modified in place.
template <class F>
LinearSolveResult<F> solve_linear(std::vector<std::vector<F>> a, std::vector<F> b, size_t cols,
                                  PivotRule rule = PivotRule::first_nonzero) {
    LinearSolveResult<F> res;
    const size_t rows = a.size();
    res.rows = static_cast<long>(rows);
    res.cols = static_cast<long>(cols);

    std::vector<long> pivot_col_of_row;
    std::vector<bool> row_used(rows, false);
    std::vector<long> pivot_row_of_col(cols, -1);

    for (size_t col = 0; col < cols; ++col) {
        size_t pr = rows;
        long best = 0;
        for (size_t r = 0; r < rows; ++r) {
            if (row_used[r] || a[r][col].is_zero()) continue;
            if (rule == PivotRule::first_nonzero) {
                pr = r;
                break;
            }
            long cost = elimination_cost(a[r][col]);
            if (pr == rows || cost < best) {
                pr = r;
                best = cost;
                if (cost == 0) break;
            }
        }
        if (pr == rows) continue;
        row_used[pr] = true;
        pivot_row_of_col[col] = static_cast<long>(pr);
        F inv = F(1) / a[pr][col];
        for (size_t c = col; c < cols; ++c)
            if (!a[pr][c].is_zero()) a[pr][c] = a[pr][c] * inv;
        b[pr] = b[pr] * inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == pr || a[r][col].is_zero()) continue;
            F f = a[r][col];
            for (size_t c = col; c < cols; ++c)
                if (!a[pr][c].is_zero()) a[r][c] = a[r][c] - f * a[pr][c];
            if (!b[pr].is_zero()) b[r] = b[r] - f * b[pr];
        }
        ++res.rank;
    }

    for (size_t r = 0; r < rows; ++r) {
        if (!row_used[r] && !b[r].is_zero()) {
            res.consistent = false;
            res.witness_row = static_cast<long>(r);
            res.witness_value = b[r];
            return res;
        }
    }

    res.particular.assign(cols, F(0));
    for (size_t c = 0; c < cols; ++c)
        if (pivot_row_of_col[c] >= 0) res.particular[c] = b[pivot_row_of_col[c]];

    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (pivot_row_of_col[free_col] >= 0) continue;
        std::vector<F> v(cols, F(0));
        v[free_col] = F(1);
        for (size_t c = 0; c < cols; ++c)
            if (pivot_row_of_col[c] >= 0) v[c] = -a[pivot_row_of_col[c]][free_col];
        res.nullspace.push_back(std::move(v));
    }
    return res;
}

// Splits the system into independent column components (rows sharing no
// columns never interact) and solves each separately. Same result contract
// as solve_linear, but much faster on block-structured systems.
template <class F>
LinearSolveResult<F> solve_linear_split(const std::vector<std::vector<F>>& a, const std::vector<F>& b,
                                        size_t cols, PivotRule rule = PivotRule::first_nonzero) {
    LinearSolveResult<F> res;
    const size_t rows = a.size();
    res.rows = static_cast<long>(rows);
    res.cols = static_cast<long>(cols);
    res.particular.assign(cols, F(0));

    std::vector<size_t> parent(cols);
    for (size_t i = 0; i < cols; ++i) parent[i] = i;
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t r = 0; r < rows; ++r) {
        size_t first = cols;
        for (size_t c = 0; c < cols; ++c) {
            if (a[r][c].is_zero()) continue;
            if (first == cols)
                first = find(c);
            else
                parent[find(c)] = first;
        }
        if (first == cols && !b[r].is_zero()) { // 0 = nonzero
            res.consistent = false;
            res.witness_row = static_cast<long>(r);
            res.witness_value = b[r];
            return res;
        }
    }

    std::map<size_t, std::vector<size_t>> comp_cols;
    for (size_t c = 0; c < cols; ++c) comp_cols[find(c)].push_back(c);
    for (auto& [root, cs] : comp_cols) {
        std::vector<size_t> rs;
        for (size_t r = 0; r < rows; ++r) {
            for (size_t c : cs) {
                if (!a[r][c].is_zero()) {
                    rs.push_back(r);
                    break;
                }
            }
        }
        if (rs.empty()) { // columns untouched by any row: fully free unknowns
            for (size_t c : cs) {
                std::vector<F> full(cols, F(0));
                full[c] = F(1);
                res.nullspace.push_back(std::move(full));
            }
            continue;
        }
        std::vector<std::vector<F>> sub(rs.size(), std::vector<F>(cs.size(), F(0)));
        std::vector<F> subb(rs.size(), F(0));
        for (size_t i = 0; i < rs.size(); ++i) {
            for (size_t j = 0; j < cs.size(); ++j) sub[i][j] = a[rs[i]][cs[j]];
            subb[i] = b[rs[i]];
        }
        auto part = solve_linear(std::move(sub), std::move(subb), cs.size(), rule);
        if (!part.consistent) {
            res.consistent = false;
            res.witness_row = part.witness_row ? std::optional<long>(static_cast<long>(rs[*part.witness_row]))
                                               : std::nullopt;
            res.witness_value = part.witness_value;
            return res;
        }
        res.rank += part.rank;
        for (size_t j = 0; j < cs.size(); ++j) res.particular[cs[j]] = part.particular[j];
        for (const auto& v : part.nullspace) {
            std::vector<F> full(cols, F(0));
            for (size_t j = 0; j < cs.size(); ++j) full[cs[j]] = v[j];
            res.nullspace.push_back(std::move(full));
        }
    }
    return res;
}

// Does target lie in the span of basis?  All vectors must share a length.
template <class F>
bool span_contains(const std::vector<std::vector<F>>& basis, const std::vector<F>& target) {
    if (basis.empty()) {
        for (const F& x : target)
            if (!x.is_zero()) return false;
        return true;
    }
    const size_t dim = target.size();
    std::vector<std::vector<F>> a(dim, std::vector<F>(basis.size(), F(0)));
    for (size_t j = 0; j < basis.size(); ++j)
        for (size_t i = 0; i < dim; ++i) a[i][j] = basis[j][i];
    return solve_linear(a, target, basis.size()).consistent;
}

} // namespace tietze
