// The concrete tower Q(q)(t): aliases, element constructors, valuations at
// the places 0, infinity and finite points, and Laurent expansions.
#pragma once

#include <optional>
#include <vector>

#include "tietze/errors.hpp"
#include "tietze/fraction.hpp"
#include "tietze/polynomial.hpp"
#include "tietze/rational.hpp"

namespace tietze {

using QPoly = UniPoly<BigRat>;      // Q[q]
using QRat = Fraction<BigRat>;      // Q(q)
using TPoly = UniPoly<QRat>;        // Q(q)[t]
using FieldElem = Fraction<QRat>;   // Q(q)(t)
using YPoly = UniPoly<FieldElem>;   // F[Y]
using GenElem = Fraction<FieldElem>; // F(Y)

inline QRat qrat_q(long e = 1) {
    if (e >= 0) return QRat(QPoly::monomial(BigRat(1), static_cast<size_t>(e)));
    return QRat(QPoly(1), QPoly::monomial(BigRat(1), static_cast<size_t>(-e)));
}
inline QRat qrat(const BigRat& x) { return QRat(QPoly(x)); }
inline QRat qrat(long n, long d = 1) { return qrat(rat(n, d)); }

inline FieldElem fe(const QRat& c) { return FieldElem(TPoly(c)); }
inline FieldElem fe(long n, long d = 1) { return fe(qrat(n, d)); }
inline FieldElem fe_q(long e = 1) { return fe(qrat_q(e)); }
inline FieldElem fe_t(long e = 1) {
    if (e >= 0) return FieldElem(TPoly::monomial(QRat(1), static_cast<size_t>(e)));
    return FieldElem(TPoly(QRat(1)), TPoly::monomial(QRat(1), static_cast<size_t>(-e)));
}
// c * q^a * t^b
inline FieldElem fe_mono(const QRat& c, long a, long b) { return fe(c) * fe_q(a) * fe_t(b); }

inline GenElem gen(const FieldElem& x) { return GenElem(YPoly(x)); }
inline GenElem gen(long n) { return GenElem(n); }
inline GenElem gen_Y(long e = 1) {
    if (e >= 0) return GenElem(YPoly::monomial(fe(1), static_cast<size_t>(e)));
    return GenElem(YPoly(fe(1)), YPoly::monomial(fe(1), static_cast<size_t>(-e)));
}

struct Place {
    enum class Kind { zero, infinity, finite_point };
    Kind kind = Kind::zero;
    QRat alpha; // only for finite_point

    static Place zero() { return {Kind::zero, QRat(0)}; }
    static Place infinity() { return {Kind::infinity, QRat(0)}; }
    static Place at(const QRat& a) { return {Kind::finite_point, a}; }

    friend bool operator==(const Place& a, const Place& b) {
        return a.kind == b.kind && (a.kind != Kind::finite_point || a.alpha == b.alpha);
    }
};

namespace detail {

// Multiplicity of (t - alpha) in p; p must be nonzero.
inline long root_multiplicity(TPoly p, const QRat& alpha) {
    const TPoly lin = TPoly::variable() - TPoly(alpha);
    long m = 0;
    while (p.template eval<QRat>(alpha).is_zero()) {
        p = p / lin;
        ++m;
    }
    return m;
}

} // namespace detail

// Order of vanishing of x at the place; std::nullopt encodes +infinity (x = 0).
inline std::optional<long> valuation(const FieldElem& x, const Place& p) {
    if (x.is_zero()) return std::nullopt;
    switch (p.kind) {
        case Place::Kind::zero: return x.num().ord() - x.den().ord();
        case Place::Kind::infinity: return x.den().degree() - x.num().degree();
        case Place::Kind::finite_point:
            return detail::root_multiplicity(x.num(), p.alpha) - detail::root_multiplicity(x.den(), p.alpha);
    }
    throw internal_error("bad place kind");
}

// Truncated Laurent expansion in the prime element of the place: t at 0,
// 1/t at infinity. start is the exponent of the first (nonzero) coefficient.
struct LaurentExpansion {
    long start = 0;
    std::vector<QRat> coeffs;
};

namespace detail {

// First n coefficients of the power series 1/d; requires d(0) != 0.
inline std::vector<QRat> inverse_series(const TPoly& d, size_t n) {
    std::vector<QRat> inv(n, QRat(0));
    QRat d0inv = QRat(1) / d.coeff(0);
    inv[0] = d0inv;
    for (size_t k = 1; k < n; ++k) {
        QRat acc(0);
        for (size_t j = 1; j <= k; ++j) acc = acc + d.coeff(static_cast<long>(j)) * inv[k - j];
        inv[k] = -acc * d0inv;
    }
    return inv;
}

inline TPoly strip_ord(const TPoly& p, long ord) {
    std::vector<QRat> c;
    for (long i = ord; i <= p.degree(); ++i) c.push_back(p.coeff(i));
    return TPoly(std::move(c));
}

inline TPoly reverse_poly(const TPoly& p) {
    std::vector<QRat> c;
    for (long i = p.degree(); i >= 0; --i) c.push_back(p.coeff(i));
    return TPoly(std::move(c));
}

inline LaurentExpansion expand_unit_ratio(const TPoly& n, const TPoly& d, long start, size_t n_terms) {
    // n(0) != 0, d(0) != 0; series of n/d in the local prime.
    LaurentExpansion res;
    res.start = start;
    std::vector<QRat> inv = inverse_series(d, n_terms);
    for (size_t k = 0; k < n_terms; ++k) {
        QRat acc(0);
        for (size_t j = 0; j <= k; ++j) acc = acc + n.coeff(static_cast<long>(j)) * inv[k - j];
        res.coeffs.push_back(acc);
    }
    return res;
}

} // namespace detail

inline LaurentExpansion laurent_expand(const FieldElem& x, const Place& p, size_t n_terms) {
    if (x.is_zero()) throw zero_element("Laurent expansion of zero");
    if (n_terms == 0) throw error("n_terms must be positive");
    if (p.kind == Place::Kind::zero) {
        long a = x.num().ord(), b = x.den().ord();
        return detail::expand_unit_ratio(detail::strip_ord(x.num(), a), detail::strip_ord(x.den(), b), a - b,
                                         n_terms);
    }
    if (p.kind == Place::Kind::infinity) {
        // In u = 1/t: x = rev(num)(u) * u^{deg den - deg num} / rev(den)(u).
        return detail::expand_unit_ratio(detail::reverse_poly(x.num()), detail::reverse_poly(x.den()),
                                         x.den().degree() - x.num().degree(), n_terms);
    }
    throw error("Laurent expansion supported at 0 and infinity only");
}

// Leading Laurent coefficient of x at the place (0 or infinity).
inline QRat leading_coeff(const FieldElem& x, const Place& p) { return laurent_expand(x, p, 1).coeffs[0]; }

// q-degree and q-order of a nonzero element of Q(q), as integers.
inline long q_degree(const QRat& x) {
    if (x.is_zero()) throw zero_element("q_degree of zero");
    return x.num().degree() - x.den().degree();
}
inline long q_order(const QRat& x) {
    if (x.is_zero()) throw zero_element("q_order of zero");
    return x.num().ord() - x.den().ord();
}

// Is x an exact power of q?  Returns its exponent if so.
inline std::optional<long> q_power_exponent(const QRat& x) {
    if (x.is_zero()) return std::nullopt;
    const QPoly &n = x.num(), &d = x.den();
    if (n.degree() != n.ord() || d.degree() != d.ord()) return std::nullopt; // not monomials
    if (!(n.leading() == BigRat(1)) || !(d.leading() == BigRat(1))) return std::nullopt;
    return n.degree() - d.degree();
}

} // namespace tietze
