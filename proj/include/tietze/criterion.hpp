// The third-order linear difference criterion attached to the Tietze form
// y1 = 1 + r/y, the quadratic R(Y) of the converse construction, the
// hypothesis checks on r, and bounded-degree null-space tests for the
// supporting functional-equation lemmas.
#pragma once

#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "tietze/diff_ops.hpp"
#include "tietze/errors.hpp"
#include "tietze/field.hpp"
#include "tietze/gen_ext.hpp"
#include "tietze/linalg.hpp"

namespace tietze {

// Sum_i coeffs[i] tau^i(g) = rhs over Q(q)(t).
struct LinearDiffOp {
    DiffOp op;
    std::vector<FieldElem> coeffs; // index = order of tau
    FieldElem rhs;

    void trim() {
        while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    }
    long order() const { return static_cast<long>(coeffs.size()) - 1; }

    FieldElem apply(const FieldElem& g) const {
        FieldElem acc = fe(0);
        FieldElem gi = g;
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (i > 0) gi = tau(op, gi);
            acc = acc + coeffs[i] * gi;
        }
        return acc;
    }
};

// tau^2(sr) tau(s) s tau^3(g) + (tau(r)+1) tau(s) s tau^2(g)
//   - (tau(r)+1) s tau(g) - r g = -s tau(D(r)/r)
inline LinearDiffOp build_criterion(const DiffOp& op, const FieldElem& r) {
    if (r.is_zero()) throw zero_r();
    const FieldElem s = op.s_factor();
    const FieldElem ts = tau(op, s);
    const FieldElem tr1 = tau(op, r) + fe(1);
    LinearDiffOp l;
    l.op = op;
    l.coeffs = {-r, -(tr1 * s), tr1 * ts * s, tau(op, tau(op, s * r)) * ts * s};
    l.rhs = -(s * tau(op, derive(r) / r));
    return l;
}

// R = g Y^2 - (tau(sr) s tau^2(g) + s tau(g) - r g + D(r)/r) Y - s r tau(g)
inline GenElem build_R(const DiffOp& op, const FieldElem& r, const FieldElem& g) {
    if (r.is_zero()) throw zero_r();
    const FieldElem s = op.s_factor();
    const FieldElem b = -(tau(op, s * r) * s * tau_n(op, g, 2) + s * tau(op, g) - r * g + derive(r) / r);
    YPoly p = YPoly::monomial(g, 2) + YPoly::monomial(b, 1) + YPoly(-(s * r * tau(op, g)));
    return GenElem(p);
}

// The Riccati extension F(Y) with tau Y = 1 + r/Y and, optionally, DY = -R(Y).
inline GenStructure tietze_extension(const DiffOp& op, const FieldElem& r,
                                     std::optional<GenElem> minus_dy = std::nullopt) {
    GenStructure s{op, gen(fe(1)) + gen(r) / gen_Y(), std::nullopt};
    if (minus_dy) s.D_Y = -*minus_dy;
    return s;
}

struct ConstructionCheck {
    FieldElem criterion_residual;
    GenElem commutation_defect;
    GenElem r_poly; // the quadratic R(Y)
};

inline ConstructionCheck verify_construction(const DiffOp& op, const FieldElem& r, const FieldElem& g) {
    if (r.is_zero()) throw zero_r();
    LinearDiffOp l = build_criterion(op, r);
    ConstructionCheck out;
    out.criterion_residual = l.apply(g) - l.rhs;
    out.r_poly = build_R(op, r, g);
    GenStructure s = tietze_extension(op, r, out.r_poly);
    out.commutation_defect = commutation_defect(s);
    return out;
}

struct PlaceWitness {
    Place place;
    long value = 0;
};

struct HypothesisReport {
    enum class AlgHyp { unchecked, asserted };

    bool r_nonzero = false;
    bool dr_nonzero = false;
    std::optional<PlaceWitness> place_witness;
    AlgHyp algebraic_solution_hypothesis = AlgHyp::unchecked;

    bool valuation_condition() const { return place_witness.has_value(); }
    bool theorem_hypotheses_met() const { return r_nonzero && dr_nonzero && valuation_condition(); }
};

// tau-stable places of each operator family. Shift preserves v_inf;
// q-dilation preserves v_0 and v_inf; Mahler multiplies both by p. In all
// cases v_P(tau^i r) > 0 for all i follows from v_P(r) > 0.
inline std::vector<Place> stable_places(const DiffOp& op) {
    if (op.kind == DiffOp::Kind::shift) return {Place::infinity()};
    return {Place::infinity(), Place::zero()};
}

inline HypothesisReport hypothesis_check(const DiffOp& op, const FieldElem& r) {
    HypothesisReport rep;
    rep.r_nonzero = !r.is_zero();
    rep.dr_nonzero = !derive(r).is_zero();
    if (!rep.r_nonzero) return rep;
    for (const Place& p : stable_places(op)) {
        auto v = valuation(r, p);
        if (v && *v > 0) {
            rep.place_witness = PlaceWitness{p, *v};
            break;
        }
    }
    return rep;
}

// Lemma selector for the bounded-degree null-space tests.
struct LemmaSpec {
    enum class Which { l31, l32, l33 };
    Which which = Which::l31;
    FieldElem alpha = fe(1); // l32, l33
    long gamma = 1;          // l32

    static LemmaSpec l31() { return {Which::l31, fe(1), 1}; }
    static LemmaSpec l32(const FieldElem& alpha, long gamma) { return {Which::l32, alpha, gamma}; }
    static LemmaSpec l33(const FieldElem& alpha) { return {Which::l33, alpha, 1}; }
};

struct LemmaCheckResult {
    bool only_trivial = true;
    std::vector<GenElem> basis; // permitted solutions found (or counterexamples)
};

namespace detail {

// Basis element t^j Y^i of the bounded ansatz space.
struct AnsatzIndex {
    long yexp, texp;
};

inline GenElem ansatz_monomial(const AnsatzIndex& ix) {
    return gen(fe_t(ix.texp)) * gen_Y(ix.yexp);
}

// Turn "sum_k c_k image_k = rhs" over F(Y), with all images polynomial in Y,
// into a Q(q)-linear system by matching Y-powers and t-powers.
struct LemmaSystem {
    std::vector<std::vector<QRat>> rows;
    std::vector<QRat> rhs;
};

inline LemmaSystem assemble_lemma_system(const std::vector<YPoly>& images, const YPoly& rhs_poly) {
    LemmaSystem sys;
    long max_deg = rhs_poly.degree();
    for (const YPoly& im : images) max_deg = std::max(max_deg, im.degree());
    for (long d = 0; d <= max_deg; ++d) {
        TPoly den(QRat(1));
        bool any = false;
        auto upd = [&](const FieldElem& f) {
            if (f.is_zero()) return;
            any = true;
            den = lcm(den, f.den());
        };
        for (const YPoly& im : images) upd(im.coeff(d));
        upd(rhs_poly.coeff(d));
        if (!any) continue;

        std::vector<TPoly> nums;
        nums.reserve(images.size());
        long max_t = -1;
        for (const YPoly& im : images) {
            FieldElem f = im.coeff(d);
            TPoly n = f.is_zero() ? TPoly() : f.num() * (den / f.den());
            max_t = std::max(max_t, n.degree());
            nums.push_back(std::move(n));
        }
        FieldElem fr = rhs_poly.coeff(d);
        TPoly nr = fr.is_zero() ? TPoly() : fr.num() * (den / fr.den());
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
            sys.rows.push_back(std::move(row));
            sys.rhs.push_back(std::move(rb));
        }
    }
    return sys;
}

inline GenElem combine_ansatz(const std::vector<AnsatzIndex>& basis, const std::vector<QRat>& coeffs) {
    GenElem acc(0);
    for (size_t k = 0; k < basis.size(); ++k)
        if (!coeffs[k].is_zero()) acc = acc + gen(fe(coeffs[k])) * ansatz_monomial(basis[k]);
    return acc;
}

} // namespace detail

// Bounded null-space test for the functional-equation lemmas over F(Y) with
// tau Y = 1 + r/Y. The ansatz is Laurent in Y and in t with all exponents
// bounded by degree_bound; the lemmas predict: L31 only N in F (no Y), L32
// only R = 0, L33 no S at all.
inline LemmaCheckResult lemma_nullspace_check(const DiffOp& op, const FieldElem& r, const LemmaSpec& lemma,
                                              long degree_bound) {
    if (degree_bound < 1) throw error("degree bound must be >= 1");
    if (!hypothesis_check(op, r).valuation_condition()) throw hypothesis_not_certified();

    const long b = degree_bound;
    LemmaCheckResult out;

    auto make_basis = [&](long ylo, long yhi) {
        std::vector<detail::AnsatzIndex> basis;
        for (long i = ylo; i <= yhi; ++i)
            for (long j = -b; j <= b; ++j) basis.push_back({i, j});
        return basis;
    };

    // Powers (Y+r)^k as plain Y-polynomials; all lemma images are assembled
    // from these in closed form, avoiding F(Y) fraction arithmetic.
    std::vector<YPoly> ypr(static_cast<size_t>(2 * b + 1));
    {
        const YPoly base = YPoly::variable() + YPoly(r);
        ypr[0] = YPoly(fe(1));
        for (size_t k = 1; k < ypr.size(); ++k) ypr[k] = ypr[k - 1] * base;
    }
    auto tau_t = [&](long j) { return tau(op, fe_t(j)); };

    if (lemma.which == LemmaSpec::Which::l32 || lemma.which == LemmaSpec::Which::l33) {
        if (lemma.alpha.is_zero()) throw error("alpha must be nonzero");
        const long gamma = (lemma.which == LemmaSpec::Which::l32) ? lemma.gamma : 1;
        if (gamma < 1) throw error("gamma must be >= 1");
        // The equation is multiplied through by C = Y^{b+2gamma} (Y+r)^b, so
        // the image of t^j Y^i is
        //   l32:  t^j Y^{b+2g+i} (Y+r)^b - alpha (-r)^g tau(t^j) Y^{b-i} (Y+r)^{b+i}
        //   l33:  t^j Y^{b+2+i} (Y+r)^b  +       r     tau(t^j) Y^{b-i} (Y+r)^{b+i}
        const FieldElem factor = (lemma.which == LemmaSpec::Which::l32)
                                     ? lemma.alpha * (-r).pow(gamma)
                                     : r;
        auto basis = make_basis(-b, b);
        std::vector<YPoly> images;
        images.reserve(basis.size());
        for (const auto& ix : basis) {
            YPoly term1 = ypr[b].scaled(fe_t(ix.texp)).shifted(static_cast<size_t>(b + 2 * gamma + ix.yexp));
            YPoly term2 =
                ypr[b + ix.yexp].scaled(factor * tau_t(ix.texp)).shifted(static_cast<size_t>(b - ix.yexp));
            images.push_back(lemma.which == LemmaSpec::Which::l32 ? term1 - term2 : term1 + term2);
        }
        YPoly rhs_poly; // zero for l32
        if (lemma.which == LemmaSpec::Which::l33)
            rhs_poly = ypr[b].scaled(-lemma.alpha).shifted(static_cast<size_t>(b + 1));

        auto sys = detail::assemble_lemma_system(images, rhs_poly);
        auto sol = solve_linear_split(sys.rows, sys.rhs, basis.size(), PivotRule::simplest);
        if (lemma.which == LemmaSpec::Which::l32) {
            out.only_trivial = sol.nullspace.empty();
            for (const auto& v : sol.nullspace) out.basis.push_back(detail::combine_ansatz(basis, v));
        } else {
            out.only_trivial = !sol.consistent;
            if (sol.consistent) out.basis.push_back(detail::combine_ansatz(basis, sol.particular));
        }
        return out;
    }

    // L31: N = alpha Y^lambda Y^nu tau(N) with lambda the trailing and nu the
    // leading Y-degree of N. For each (lambda, nu) window and each sample
    // alpha we solve the linearized identity and look for null vectors whose
    // exact trailing/leading degrees realize (lambda, nu); the lemma permits
    // only nu = lambda = 0, i.e. N in F.
    const std::vector<FieldElem> alphas = {fe(1), fe_q(), fe_t(), r};
    for (long nu = 0; nu <= b; ++nu) {
        auto basis = make_basis(0, nu);
        for (long lambda = 0; lambda <= nu; ++lambda) {
            for (const FieldElem& alpha : alphas) {
                if (alpha.is_zero()) continue;
                // Image of t^j Y^i: t^j Y^i - alpha tau(t^j) Y^{lambda+nu-i} (Y+r)^i.
                std::vector<YPoly> images;
                images.reserve(basis.size());
                for (const auto& ix : basis) {
                    YPoly term1 = YPoly::monomial(fe_t(ix.texp), static_cast<size_t>(ix.yexp));
                    YPoly term2 = ypr[ix.yexp]
                                      .scaled(alpha * tau_t(ix.texp))
                                      .shifted(static_cast<size_t>(lambda + nu - ix.yexp));
                    images.push_back(term1 - term2);
                }
                auto sys = detail::assemble_lemma_system(images, YPoly());
                // Constrain components below Y^lambda to zero.
                for (size_t k = 0; k < basis.size(); ++k) {
                    if (basis[k].yexp < lambda) {
                        std::vector<QRat> row(basis.size(), QRat(0));
                        row[k] = QRat(1);
                        sys.rows.push_back(std::move(row));
                        sys.rhs.push_back(QRat(0));
                    }
                }
                auto sol = solve_linear_split(sys.rows, sys.rhs, basis.size());
                if (nu == 0) {
                    if (alpha == fe(1))
                        for (const auto& v : sol.nullspace) out.basis.push_back(detail::combine_ansatz(basis, v));
                    continue; // N in F is permitted
                }
                bool hits_lambda = false, hits_nu = false;
                for (const auto& v : sol.nullspace) {
                    for (size_t k = 0; k < basis.size(); ++k) {
                        if (v[k].is_zero()) continue;
                        if (basis[k].yexp == lambda) hits_lambda = true;
                        if (basis[k].yexp == nu) hits_nu = true;
                    }
                }
                if (hits_lambda && hits_nu) {
                    out.only_trivial = false;
                    for (const auto& v : sol.nullspace) out.basis.push_back(detail::combine_ansatz(basis, v));
                    return out;
                }
            }
        }
    }
    return out;
}

} // namespace tietze
