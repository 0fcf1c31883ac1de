// Canonical text rendering. The canonical spelling clears all nested
// denominators, so an element prints as N(q,t)/D(q,t) with integer
// coefficients, D content-free with positive leading coefficient.
// parse_elem(render(x)) == x holds for every element.
#pragma once

#include <string>
#include <vector>

#include "tietze/field.hpp"
#include "tietze/mat2.hpp"

namespace tietze {
namespace detail {

// Bivariate integer-coefficient polynomial, indexed by t-exponent.
using BivarPoly = std::vector<QPoly>;

struct ClearedFraction {
    BivarPoly num, den;
};

inline ClearedFraction cleared_form(const FieldElem& x) {
    ClearedFraction r;
    if (x.is_zero()) {
        r.num = {};
        r.den = {QPoly(1)};
        return r;
    }
    QPoly qden(1);
    auto visit = [&](const TPoly& p) {
        for (long i = 0; i <= p.degree(); ++i)
            if (!p.coeff(i).is_zero()) qden = lcm(qden, p.coeff(i).den());
    };
    visit(x.num());
    visit(x.den());

    BigInt int_den = 1;
    auto scale_q = [&](const TPoly& p) {
        std::vector<QPoly> out;
        for (long i = 0; i <= p.degree(); ++i) {
            QRat c = p.coeff(i) * QRat(qden);
            if (!c.is_polynomial()) throw internal_error("q-denominator clearing failed");
            out.push_back(c.num());
            for (const BigRat& a : c.num().coeffs()) int_den = lcm_int(int_den, a.denominator());
        }
        return out;
    };
    r.num = scale_q(x.num());
    r.den = scale_q(x.den());

    BigInt content(0);
    auto scale_int = [&](BivarPoly& bp) {
        for (QPoly& qp : bp) {
            std::vector<BigRat> cs = qp.coeffs();
            for (BigRat& a : cs) {
                a = a * BigRat(int_den);
                content = gcd_int(content, a.numerator());
            }
            qp = QPoly(std::move(cs));
        }
    };
    scale_int(r.num);
    scale_int(r.den);
    if (content < 0) content = -content;
    if (content > 1) {
        auto divide = [&](BivarPoly& bp) {
            for (QPoly& qp : bp) {
                std::vector<BigRat> cs = qp.coeffs();
                for (BigRat& a : cs) a = a / BigRat(content);
                qp = QPoly(std::move(cs));
            }
        };
        divide(r.num);
        divide(r.den);
    }
    // Denominator sign: highest t-power, highest q-power coefficient > 0.
    const QPoly& dlead = r.den.back();
    if (dlead.leading().sign() < 0) {
        auto negate = [](BivarPoly& bp) {
            for (QPoly& qp : bp) qp = -qp;
        };
        negate(r.num);
        negate(r.den);
    }
    return r;
}

enum class StrKind { atom, product, sum };

struct RenderedTerm {
    bool neg = false;
    std::string s;
    StrKind kind = StrKind::atom;
};

inline std::string power_str(const char* var, long e) {
    if (e == 1) return var;
    return std::string(var) + "^" + std::to_string(e);
}

// |a| * q^e with a an integer-valued rational, a != 0.
inline RenderedTerm qmono_term(const BigRat& a, long e) {
    RenderedTerm t;
    BigInt n = a.numerator();
    t.neg = n < 0;
    if (t.neg) n = -n;
    if (e == 0) {
        t.s = n.get_str();
        return t;
    }
    if (n == 1) {
        t.s = power_str("q", e);
        return t;
    }
    t.s = n.get_str() + "*" + power_str("q", e);
    t.kind = StrKind::product;
    return t;
}

inline std::vector<RenderedTerm> qpoly_terms(const QPoly& p) {
    std::vector<RenderedTerm> out;
    for (long i = p.degree(); i >= 0; --i)
        if (!p.coeff(i).is_zero()) out.push_back(qmono_term(p.coeff(i), i));
    return out;
}

inline std::string join_terms(const std::vector<RenderedTerm>& terms) {
    std::string s;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i == 0) {
            if (terms[i].neg) s += "-";
        } else {
            s += terms[i].neg ? "-" : "+";
        }
        s += terms[i].s;
    }
    return s;
}

// c * t^texp for texp >= 1, sign pulled out of c's leading coefficient.
inline RenderedTerm bivar_term(const QPoly& c, long texp) {
    size_t n_terms = 0;
    for (long i = 0; i <= c.degree(); ++i)
        if (!c.coeff(i).is_zero()) ++n_terms;
    if (n_terms == 1) {
        RenderedTerm qt = qmono_term(c.leading(), c.degree());
        RenderedTerm t;
        t.neg = qt.neg;
        if (qt.s == "1") {
            t.s = power_str("t", texp);
        } else {
            t.s = qt.s + "*" + power_str("t", texp);
            t.kind = StrKind::product;
        }
        return t;
    }
    RenderedTerm t;
    QPoly cabs = c;
    if (c.leading().sign() < 0) {
        t.neg = true;
        cabs = -c;
    }
    t.s = "(" + join_terms(qpoly_terms(cabs)) + ")*" + power_str("t", texp);
    t.kind = StrKind::product;
    return t;
}

struct RenderedExpr {
    std::string s;
    StrKind kind = StrKind::atom;
    bool leading_neg = false;
};

inline RenderedExpr render_bivar(const BivarPoly& p) {
    std::vector<RenderedTerm> terms;
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i) {
        if (p[i].is_zero()) continue;
        if (i > 0)
            terms.push_back(bivar_term(p[i], i));
        else {
            auto qs = qpoly_terms(p[i]);
            terms.insert(terms.end(), qs.begin(), qs.end());
        }
    }
    RenderedExpr r;
    if (terms.empty()) {
        r.s = "0";
        return r;
    }
    r.s = join_terms(terms);
    r.leading_neg = terms[0].neg;
    r.kind = terms.size() > 1 ? StrKind::sum : terms[0].kind;
    return r;
}

inline bool is_trivial_den(const BivarPoly& d) {
    return d.size() == 1 && d[0].is_one();
}

} // namespace detail

inline std::string render(const FieldElem& x) {
    if (x.is_zero()) return "0";
    detail::ClearedFraction cf = detail::cleared_form(x);
    detail::RenderedExpr num = detail::render_bivar(cf.num);
    if (detail::is_trivial_den(cf.den)) return num.s;
    detail::RenderedExpr den = detail::render_bivar(cf.den);
    std::string ns = (num.kind == detail::StrKind::sum) ? "(" + num.s + ")" : num.s;
    std::string ds = (den.kind == detail::StrKind::atom && !den.leading_neg) ? den.s : "(" + den.s + ")";
    return ns + "/" + ds;
}

inline std::string render(const QRat& c) { return render(fe(c)); }

inline std::string render(const Mat2& m) {
    return "[[" + render(m.a) + "," + render(m.b) + "],[" + render(m.c) + "," + render(m.d) + "]]";
}

// Display form for F(Y) elements (polynomials and fractions in Y). Not
// meant to be re-parsed; Y is not part of the element grammar.
inline std::string render_gen(const GenElem& g) {
    auto poly_str = [](const YPoly& p) -> std::string {
        if (p.is_zero()) return "0";
        std::string s;
        bool first = true;
        for (long i = p.degree(); i >= 0; --i) {
            FieldElem c = p.coeff(i);
            if (c.is_zero()) continue;
            std::string cs = render(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            bool atomic = cs.find_first_of("+-*/") == std::string::npos;
            std::string piece;
            if (i == 0)
                piece = atomic ? cs : "(" + cs + ")";
            else {
                std::string ypow = (i == 1) ? "Y" : "Y^" + std::to_string(i);
                if (cs == "1")
                    piece = ypow;
                else
                    piece = (atomic ? cs : "(" + cs + ")") + "*" + ypow;
            }
            if (first) {
                s += (neg ? "-" : "") + piece;
                first = false;
            } else {
                s += (neg ? "-" : "+") + piece;
            }
        }
        return s;
    };
    if (g.is_polynomial()) return poly_str(g.num());
    return "(" + poly_str(g.num()) + ")/(" + poly_str(g.den()) + ")";
}

} // namespace tietze
