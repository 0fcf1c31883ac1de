// Rational-solution decision procedure for inhomogeneous linear q-difference
// equations Sum_i c_i g(q^i t) = b over Q(q)(t), with machine-checkable
// certificates for nonexistence. Exponent analysis at the tau-fixed places
// 0 and infinity bounds the Laurent window; a q-dispersion universal
// denominator bounds the finite nonzero poles; the remaining finite linear
// system is solved exactly.
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "tietze/criterion.hpp"
#include "tietze/diff_ops.hpp"
#include "tietze/errors.hpp"
#include "tietze/field.hpp"
#include "tietze/linalg.hpp"

namespace tietze {

struct IndicialObstruction {
    Place place;         // zero or infinity
    long order = 0;      // the single admissible valuation there
    QRat residual;       // inconsistency of its coefficient equation, nonzero
};

struct SystemObstruction {
    long rows = 0, cols = 0, rank = 0;
    std::optional<long> witness_row;
    std::optional<std::pair<long, long>> window; // ansatz exponent window used
    bool bounded_search_only = false;
    std::string note;
};

using ObstructionCert = std::variant<IndicialObstruction, SystemObstruction>;

struct Solution {
    FieldElem g;
    std::vector<FieldElem> nullspace;
};

struct NoSolution {
    ObstructionCert cert;
};

using SolveOutcome = std::variant<Solution, NoSolution>;

struct SolveOptions {
    // Required for shift/Mahler operators: Laurent exponent window [lo, hi]
    // for a bounded search. Ignored for q-dilation.
    std::optional<std::pair<long, long>> window;
};

namespace detail {

struct IndicialAnalysis {
    long v_min = 0;
    std::vector<std::pair<long, QRat>> level; // (order i, leading coeff) at v_min
    std::set<long> admissible;
    std::optional<long> forced;  // v(rhs) - v_min, when rhs != 0
    std::optional<QRat> rhs_lc;
};

// chi(m) = sum over the minimal-valuation layer of lc(c_i) q^{sgn * i * m}.
inline QRat indicial_chi(const IndicialAnalysis& ia, long sgn, long m) {
    QRat acc(0);
    for (const auto& [i, lc] : ia.level) acc = acc + lc * qrat_q(sgn * i * m);
    return acc;
}

inline IndicialAnalysis analyze_indicial(const LinearDiffOp& l, const Place& place) {
    if (l.op.kind != DiffOp::Kind::q_dilation) throw not_q_dilation();
    const long sgn = (place.kind == Place::Kind::zero) ? 1 : -1;
    IndicialAnalysis ia;
    bool first = true;
    std::vector<std::pair<long, long>> vals; // (i, v_P(c_i))
    for (long i = 0; i < static_cast<long>(l.coeffs.size()); ++i) {
        const FieldElem& c = l.coeffs[i];
        if (c.is_zero()) continue;
        long v = *valuation(c, place);
        vals.push_back({i, v});
        if (first || v < ia.v_min) ia.v_min = v;
        first = false;
    }
    if (first) throw degenerate_operator("zero operator");
    for (const auto& [i, v] : vals)
        if (v == ia.v_min) ia.level.push_back({i, leading_coeff(l.coeffs[i], place)});

    // chi(m) = 0 requires the extremal q-exponent to be attained twice, which
    // pins m to a pairwise matching of q-degrees or q-orders.
    std::set<long> candidates;
    for (size_t a = 0; a < ia.level.size(); ++a) {
        for (size_t b = a + 1; b < ia.level.size(); ++b) {
            const long ia_i = ia.level[a].first, ib_i = ia.level[b].first;
            const long denom = sgn * (ib_i - ia_i);
            for (long diff : {q_degree(ia.level[a].second) - q_degree(ia.level[b].second),
                              q_order(ia.level[a].second) - q_order(ia.level[b].second)}) {
                if (diff % denom == 0) candidates.insert(diff / denom);
            }
        }
    }
    for (long m : candidates)
        if (indicial_chi(ia, sgn, m).is_zero()) ia.admissible.insert(m);

    if (!l.rhs.is_zero()) {
        ia.forced = *valuation(l.rhs, place) - ia.v_min;
        ia.rhs_lc = leading_coeff(l.rhs, place);
    }
    return ia;
}

// A single admissible order whose level equation reads 0 * a = lc(rhs) != 0.
inline std::optional<IndicialObstruction> blocked_single_order(const LinearDiffOp& l, const Place& place) {
    IndicialAnalysis ia = analyze_indicial(l, place);
    if (!ia.forced) return std::nullopt;
    std::set<long> cands = ia.admissible;
    cands.insert(*ia.forced);
    if (cands.size() != 1) return std::nullopt;
    long m = *cands.begin();
    if (!ia.admissible.count(m)) return std::nullopt; // chi(m) != 0: order merely forced, not blocked
    return IndicialObstruction{place, m, -*ia.rhs_lc};
}

// p with all factors of t removed.
inline TPoly strip_t_power(const TPoly& p) {
    if (p.is_zero()) return p;
    long o = p.ord();
    if (o == 0) return p;
    std::vector<QRat> c;
    for (long i = o; i <= p.degree(); ++i) c.push_back(p.coeff(i));
    return TPoly(std::move(c));
}

// Largest q-degree over the coefficients once q-denominators are cleared;
// bounds the q-adic valuation of any root.
inline long q_degree_span(const TPoly& p) {
    QPoly qden(1);
    for (long i = 0; i <= p.degree(); ++i)
        if (!p.coeff(i).is_zero()) qden = lcm(qden, p.coeff(i).den());
    long dmax = 0;
    for (long i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i).is_zero()) continue;
        QRat c = p.coeff(i) * QRat(qden);
        dmax = std::max(dmax, c.num().degree());
    }
    return dmax;
}

struct ClearedOp {
    std::vector<TPoly> coeffs;
    TPoly rhs;
};

inline ClearedOp clear_denominators(const LinearDiffOp& l) {
    TPoly den(QRat(1));
    for (const FieldElem& c : l.coeffs)
        if (!c.is_zero()) den = lcm(den, c.den());
    if (!l.rhs.is_zero()) den = lcm(den, l.rhs.den());
    ClearedOp out;
    for (const FieldElem& c : l.coeffs)
        out.coeffs.push_back(c.is_zero() ? TPoly() : c.num() * (den / c.den()));
    out.rhs = l.rhs.is_zero() ? TPoly() : l.rhs.num() * (den / l.rhs.den());
    return out;
}

// Rows of the linear system for Sum_k x_k images[k] = rhs, matching t-powers
// after clearing denominators.
inline void assemble_field_rows(const std::vector<FieldElem>& images, const FieldElem& rhs,
                                std::vector<std::vector<QRat>>& rows, std::vector<QRat>& rhs_col) {
    TPoly den(QRat(1));
    for (const FieldElem& f : images)
        if (!f.is_zero()) den = lcm(den, f.den());
    if (!rhs.is_zero()) den = lcm(den, rhs.den());
    std::vector<TPoly> nums;
    long max_t = -1;
    for (const FieldElem& f : images) {
        TPoly n = f.is_zero() ? TPoly() : f.num() * (den / f.den());
        max_t = std::max(max_t, n.degree());
        nums.push_back(std::move(n));
    }
    TPoly nr = rhs.is_zero() ? TPoly() : rhs.num() * (den / rhs.den());
    max_t = std::max(max_t, nr.degree());
    for (long p = 0; p <= max_t; ++p) {
        std::vector<QRat> row;
        row.reserve(images.size());
        bool nonzero = false;
        for (const TPoly& n : nums) {
            QRat c = n.coeff(p);
            if (!c.is_zero()) nonzero = true;
            row.push_back(std::move(c));
        }
        QRat rb = nr.coeff(p);
        if (!nonzero && rb.is_zero()) continue;
        rows.push_back(std::move(row));
        rhs_col.push_back(std::move(rb));
    }
}

inline FieldElem laurent_combination(const std::vector<long>& exps, const std::vector<QRat>& coeffs) {
    FieldElem acc = fe(0);
    for (size_t k = 0; k < exps.size(); ++k)
        if (!coeffs[k].is_zero()) acc = acc + fe(coeffs[k]) * fe_t(exps[k]);
    return acc;
}

} // namespace detail

// Admissible valuations of rational solutions at the place (0 or infinity):
// integer orders m whose characteristic sum chi(m) vanishes.
inline std::set<long> indicial_orders(const LinearDiffOp& l, const Place& place) {
    return detail::analyze_indicial(l, place).admissible;
}

// A monic u in Q(q)[t] with u(0) != 0 such that the denominator of every
// rational solution divides u times a power of t. Built from the q-orbit
// dispersion of (c_0, c_n) by gcd scanning over a valuation-bounded range
// of q-shifts; no root finding is required.
inline TPoly universal_denominator(const LinearDiffOp& lin) {
    if (lin.op.kind != DiffOp::Kind::q_dilation) throw not_q_dilation();
    LinearDiffOp l = lin;
    l.trim();
    if (l.coeffs.empty() || l.coeffs.front().is_zero())
        throw degenerate_operator("c_0 and c_n must be nonzero");
    detail::ClearedOp co = detail::clear_denominators(l);
    const long n = l.order();
    TPoly a = detail::strip_t_power(co.coeffs.front()).monic();
    TPoly b = detail::strip_t_power(detail::subst_qpow(co.coeffs.back(), -n)).monic();
    TPoly u(QRat(1));
    if (a.degree() == 0 || b.degree() == 0) return u;
    const long h_max = detail::q_degree_span(a) + detail::q_degree_span(b);
    for (long h = h_max; h >= 0; --h) {
        TPoly g = gcd(a, detail::subst_qpow(b, -h));
        if (g.degree() <= 0) continue;
        a = a / g;
        b = b / detail::subst_qpow(g, h).monic();
        for (long j = 0; j <= h; ++j) u = u * detail::subst_qpow(g, j).monic();
        if (a.degree() == 0 || b.degree() == 0) break;
    }
    return u.monic();
}

// Residual of a candidate solution, computed by plain re-substitution.
inline FieldElem verify_solution(const LinearDiffOp& l, const FieldElem& g) { return l.apply(g) - l.rhs; }

inline SolveOutcome solve_linear_qdifference(const LinearDiffOp& lin, const SolveOptions& opts = {}) {
    LinearDiffOp l = lin;
    l.trim();
    if (l.coeffs.empty() || l.coeffs.front().is_zero() || l.coeffs.back().is_zero())
        throw degenerate_operator("c_0 and c_n must be nonzero after trimming");

    const bool q_case = l.op.kind == DiffOp::Kind::q_dilation;
    if (!q_case && !opts.window)
        throw not_q_dilation();

    long m_lo = 0, m_hi = -1;
    TPoly u(QRat(1));
    LinearDiffOp lt = l; // operator acting on the Laurent part w, g = w/u
    bool bounded_only = !q_case;

    if (q_case) {
        u = universal_denominator(l);
        detail::ClearedOp co = detail::clear_denominators(l);
        lt.coeffs.clear();
        TPoly cap(QRat(1));
        std::vector<TPoly> u_i;
        for (long i = 0; i <= l.order(); ++i) {
            u_i.push_back(detail::subst_qpow(u, i));
            cap = lcm(cap, u_i.back());
        }
        for (long i = 0; i <= l.order(); ++i)
            lt.coeffs.push_back(FieldElem(co.coeffs[i] * (cap / u_i[i])));
        lt.rhs = FieldElem(co.rhs * cap);

        detail::IndicialAnalysis below = detail::analyze_indicial(lt, Place::zero());
        detail::IndicialAnalysis above = detail::analyze_indicial(lt, Place::infinity());
        const bool homogeneous = lt.rhs.is_zero();
        std::set<long> cands_lo = below.admissible;
        std::set<long> cands_hi = above.admissible;
        if (!homogeneous) {
            cands_lo.insert(*below.forced);
            cands_hi.insert(*above.forced);
        }
        if (cands_lo.empty() || cands_hi.empty()) {
            // Homogeneous with no admissible order anywhere: only w = 0.
            return Solution{fe(0), {}};
        }
        m_lo = *cands_lo.begin();
        m_hi = -*cands_hi.begin(); // top t-exponent from the infinity valuation
        if (opts.window) {
            m_lo = std::max(m_lo, opts.window->first);
            m_hi = std::min(m_hi, opts.window->second);
        }
        if (m_lo > m_hi) {
            if (homogeneous) return Solution{fe(0), {}};
            if (auto cert = detail::blocked_single_order(l, Place::infinity())) return NoSolution{*cert};
            if (auto cert = detail::blocked_single_order(l, Place::zero())) return NoSolution{*cert};
            SystemObstruction so;
            so.window = std::make_pair(m_lo, m_hi);
            so.note = "empty exponent window";
            return NoSolution{so};
        }
    } else {
        m_lo = opts.window->first;
        m_hi = opts.window->second;
        if (m_lo > m_hi) throw error("empty search window");
    }
    if (m_hi - m_lo > 500) throw internal_error("exponent window unexpectedly large");

    std::vector<long> exps;
    std::vector<FieldElem> images;
    for (long k = m_lo; k <= m_hi; ++k) {
        exps.push_back(k);
        images.push_back(lt.apply(fe_t(k)));
    }
    std::vector<std::vector<QRat>> rows;
    std::vector<QRat> rhs_col;
    detail::assemble_field_rows(images, lt.rhs, rows, rhs_col);
    auto sol = solve_linear(rows, rhs_col, exps.size());
    if (!sol.consistent) {
        if (q_case) {
            if (auto cert = detail::blocked_single_order(l, Place::infinity())) return NoSolution{*cert};
            if (auto cert = detail::blocked_single_order(l, Place::zero())) return NoSolution{*cert};
        }
        SystemObstruction so;
        so.rows = sol.rows;
        so.cols = sol.cols;
        so.rank = sol.rank;
        so.witness_row = sol.witness_row;
        so.window = std::make_pair(m_lo, m_hi);
        so.bounded_search_only = bounded_only;
        so.note = bounded_only ? "bounded search only" : "linear system inconsistent";
        return NoSolution{so};
    }

    const FieldElem uden(u);
    Solution res;
    res.g = detail::laurent_combination(exps, sol.particular) / uden;
    for (const auto& v : sol.nullspace) res.nullspace.push_back(detail::laurent_combination(exps, v) / uden);
    if (!verify_solution(l, res.g).is_zero()) throw internal_error("solver produced a non-solution");
    for (const FieldElem& h : res.nullspace)
        if (!l.apply(h).is_zero()) throw internal_error("null vector fails re-substitution");
    return res;
}

// Re-derive the obstruction stated by a certificate from the operator alone.
inline bool replay_certificate(const LinearDiffOp& l, const ObstructionCert& cert) {
    if (const auto* ind = std::get_if<IndicialObstruction>(&cert)) {
        auto again = detail::blocked_single_order(l, ind->place);
        return again && again->order == ind->order && again->residual == ind->residual &&
               !ind->residual.is_zero();
    }
    const auto& so = std::get<SystemObstruction>(cert);
    SolveOptions opts;
    if (so.bounded_search_only) opts.window = so.window;
    SolveOutcome again = solve_linear_qdifference(l, opts);
    if (!std::holds_alternative<NoSolution>(again)) return false;
    const auto& cert2 = std::get<NoSolution>(again).cert;
    if (const auto* so2 = std::get_if<SystemObstruction>(&cert2))
        return so2->rank == so.rank && so2->rows == so.rows && so2->cols == so.cols && so2->note == so.note;
    return true; // replay found an even sharper (indicial) obstruction
}

} // namespace tietze
