// Difference-differential structure on Q(q)(t): the transforming operators
// tau (shift, q-dilation, Mahler), the derivation d/dt, and the commutation
// factor s with D tau = s tau D.
#pragma once

#include <string>
#include <vector>

#include "tietze/errors.hpp"
#include "tietze/field.hpp"

namespace tietze {

struct DiffOp {
    enum class Kind { shift, q_dilation, mahler };

    Kind kind = Kind::q_dilation;
    QRat shift_c;  // shift: t -> t + c
    long mahler_p = 0; // mahler: t -> t^p, p >= 2

    static DiffOp shift(const QRat& c) { return {Kind::shift, c, 0}; }
    static DiffOp q_dilation() { return {Kind::q_dilation, QRat(0), 0}; }
    static DiffOp mahler(long p) {
        if (p < 2) throw error("Mahler exponent must be >= 2");
        return {Kind::mahler, QRat(0), p};
    }

    // s = d(phi)/dt for the substitution phi(t).
    FieldElem s_factor() const {
        switch (kind) {
            case Kind::shift: return fe(1);
            case Kind::q_dilation: return fe_q();
            case Kind::mahler: return fe(qrat(mahler_p)) * fe_t(mahler_p - 1);
        }
        throw internal_error("bad operator kind");
    }

    std::string spec_string() const {
        switch (kind) {
            case Kind::shift: {
                const QRat& c = shift_c;
                std::string s = "shift:";
                if (c.is_polynomial() && c.num().is_constant())
                    return s + (c.is_zero() ? std::string("0") : to_string(c.num().coeff(0)));
                return s + "<elem>"; // rendered properly by the cli layer
            }
            case Kind::q_dilation: return "qdilation";
            case Kind::mahler: return "mahler:" + std::to_string(mahler_p);
        }
        throw internal_error("bad operator kind");
    }
};

namespace detail {

// p(t) -> p(q^k t): coefficient of t^i picks up q^{k i}.
inline TPoly subst_qpow(const TPoly& p, long k) {
    std::vector<QRat> c;
    c.reserve(p.degree() + 1);
    for (long i = 0; i <= p.degree(); ++i) c.push_back(p.coeff(i) * qrat_q(k * i));
    return TPoly(std::move(c));
}

inline TPoly subst_shift(const TPoly& p, const QRat& c) {
    // p(t + c) by Horner over Q(q)[t].
    const TPoly arg = TPoly::variable() + TPoly(c);
    return p.eval(arg);
}

inline TPoly subst_mahler(const TPoly& p, long pw) {
    if (p.is_zero()) return TPoly();
    std::vector<QRat> c(static_cast<size_t>(p.degree() * pw + 1), QRat(0));
    for (long i = 0; i <= p.degree(); ++i) c[static_cast<size_t>(i * pw)] = p.coeff(i);
    return TPoly(std::move(c));
}

inline TPoly tau_poly(const DiffOp& op, const TPoly& p) {
    switch (op.kind) {
        case DiffOp::Kind::shift: return subst_shift(p, op.shift_c);
        case DiffOp::Kind::q_dilation: return subst_qpow(p, 1);
        case DiffOp::Kind::mahler: return subst_mahler(p, op.mahler_p);
    }
    throw internal_error("bad operator kind");
}

} // namespace detail

inline FieldElem tau(const DiffOp& op, const FieldElem& x) {
    return FieldElem(detail::tau_poly(op, x.num()), detail::tau_poly(op, x.den()));
}

inline FieldElem tau_n(const DiffOp& op, FieldElem x, long n) {
    if (n < 0) throw error("tau_n requires n >= 0");
    for (long i = 0; i < n; ++i) x = tau(op, x);
    return x;
}

inline FieldElem derive(const FieldElem& x) {
    const TPoly &n = x.num(), &d = x.den();
    return FieldElem(n.derivative() * d - n * d.derivative(), d * d);
}

inline bool verify_commutation(const DiffOp& op, const FieldElem& x) {
    return (derive(tau(op, x)) - op.s_factor() * tau(op, derive(x))).is_zero();
}

} // namespace tietze
