// 2x2 matrix calculus over Q(q)(t): cocycle products, Eq residuals, gauge
// transforms and the Mobius action.
#pragma once

#include "tietze/diff_ops.hpp"
#include "tietze/errors.hpp"
#include "tietze/field.hpp"

namespace tietze {

struct Mat2 {
    FieldElem a, b, c, d;

    static Mat2 identity() { return {fe(1), fe(0), fe(0), fe(1)}; }

    FieldElem det() const { return a * d - b * c; }

    Mat2 inverse() const {
        FieldElem dt = det();
        if (dt.is_zero()) throw singular_gauge();
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend Mat2 operator*(const FieldElem& s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }

    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }
};

inline Mat2 tau(const DiffOp& op, const Mat2& m) {
    return {tau(op, m.a), tau(op, m.b), tau(op, m.c), tau(op, m.d)};
}

inline Mat2 tau_n(const DiffOp& op, Mat2 m, long n) {
    if (n < 0) throw error("tau_n requires n >= 0");
    for (long i = 0; i < n; ++i) m = tau(op, m);
    return m;
}

// A_i = (tau^{i-1}A) (tau^{i-2}A) ... (tau A) A.
struct CocycleProduct {
    Mat2 base;
    long order = 1;
    Mat2 entries;
};

inline CocycleProduct cocycle(const DiffOp& op, const Mat2& a, long i) {
    if (i < 1) throw error("cocycle order must be >= 1");
    Mat2 acc = a, power = a;
    for (long k = 1; k < i; ++k) {
        power = tau(op, power);
        acc = power * acc;
    }
    return {a, i, acc};
}

// Residual of Eq(f;A;g): f(cg + d) - (ag + b). R is Q(q)(t) or F(Y); Lift
// embeds matrix entries into R.
template <class R, class Lift>
R eq_pair_with(const R& f, const Mat2& m, const R& g, Lift lift) {
    return f * (lift(m.c) * g + lift(m.d)) - (lift(m.a) * g + lift(m.b));
}

inline FieldElem eq_pair(const FieldElem& f, const Mat2& m, const FieldElem& g) {
    return eq_pair_with(f, m, g, [](const FieldElem& x) { return x; });
}
inline GenElem eq_pair(const GenElem& f, const Mat2& m, const GenElem& g) {
    return eq_pair_with(f, m, g, [](const FieldElem& x) { return gen(x); });
}

// Residual of Eq(A,i) at the pair (f_i, f): f_i (c^(i) f + d^(i)) - (a^(i) f + b^(i)).
inline FieldElem eq_residual(const DiffOp& op, const FieldElem& f_i, const Mat2& a, long i, const FieldElem& f) {
    return eq_pair(f_i, cocycle(op, a, i).entries, f);
}
inline GenElem eq_residual(const DiffOp& op, const GenElem& f_i, const Mat2& a, long i, const GenElem& f) {
    return eq_pair(f_i, cocycle(op, a, i).entries, f);
}

// Gauge transform (tau P) A P^{-1}; P must be regular.
inline Mat2 gauge(const DiffOp& op, const Mat2& a, const Mat2& p) {
    if (p.det().is_zero()) throw singular_gauge();
    return tau(op, p) * a * p.inverse();
}

template <class R, class Lift>
R mobius_apply_with(const Mat2& m, const R& y, Lift lift) {
    R den = lift(m.c) * y + lift(m.d);
    if (den.is_zero()) throw pole_of_transform();
    return (lift(m.a) * y + lift(m.b)) / den;
}

inline FieldElem mobius_apply(const Mat2& m, const FieldElem& y) {
    return mobius_apply_with(m, y, [](const FieldElem& x) { return x; });
}
inline GenElem mobius_apply(const Mat2& m, const GenElem& y) {
    return mobius_apply_with(m, y, [](const FieldElem& x) { return gen(x); });
}

} // namespace tietze
