// The difference(-differential) field F(Y) obtained by adjoining a generic
// Riccati solution: tau acts coefficientwise and by Y -> tau_Y, D (when set)
// extends d/dt with DY = D_Y.
#pragma once

#include <optional>

#include "tietze/diff_ops.hpp"
#include "tietze/errors.hpp"
#include "tietze/field.hpp"
#include "tietze/mat2.hpp"

namespace tietze {

struct GenStructure {
    DiffOp base;
    GenElem tau_Y;
    std::optional<GenElem> D_Y;
};

// tau_Y = mobius(A)(Y) for the Riccati matrix A.
inline GenStructure riccati_extension(const DiffOp& op, const Mat2& a) {
    return {op, mobius_apply_with(a, gen_Y(), [](const FieldElem& x) { return gen(x); }), std::nullopt};
}

namespace detail {

// Apply tau to each coefficient and substitute arg for Y.
inline GenElem tau_substitute(const DiffOp& op, const YPoly& p, const GenElem& arg) {
    GenElem acc(0);
    for (long i = p.degree(); i >= 0; --i) acc = acc * arg + gen(tau(op, p.coeff(i)));
    return acc;
}

// Coefficientwise d/dt plus the chain-rule term through DY.
inline GenElem derive_poly(const YPoly& p, const GenElem& dy) {
    YPoly coeff_part;
    for (long i = 0; i <= p.degree(); ++i)
        coeff_part = coeff_part + YPoly::monomial(derive(p.coeff(i)), static_cast<size_t>(i));
    return GenElem(coeff_part) + GenElem(p.derivative()) * dy;
}

} // namespace detail

inline GenElem ext_tau(const GenStructure& s, const GenElem& x) {
    GenElem den = detail::tau_substitute(s.base, x.den(), s.tau_Y);
    if (den.is_zero()) throw pole_of_transform();
    return detail::tau_substitute(s.base, x.num(), s.tau_Y) / den;
}

inline GenElem ext_derive(const GenStructure& s, const GenElem& x) {
    if (!s.D_Y) throw missing_dy();
    const GenElem n(x.num()), d(x.den());
    GenElem dn = detail::derive_poly(x.num(), *s.D_Y);
    GenElem dd = detail::derive_poly(x.den(), *s.D_Y);
    return (dn * d - n * dd) / (d * d);
}

// D(tau_Y) - s * tau(D_Y); zero iff the DTC structure extends to F(Y).
inline GenElem commutation_defect(const GenStructure& s) {
    if (!s.D_Y) throw missing_dy();
    return ext_derive(s, s.tau_Y) - gen(s.base.s_factor()) * ext_tau(s, *s.D_Y);
}

} // namespace tietze
