// Field of fractions of UniPoly<F>, kept in canonical form: numerator and
// denominator coprime, denominator monic. Stacking Fraction builds the tower
// Q(q), Q(q)(t), F(Y). Arithmetic cross-cancels common factors first so the
// reducing gcds run on the smallest possible operands.
#pragma once

#include <utility>

#include "tietze/errors.hpp"
#include "tietze/polynomial.hpp"

namespace tietze {

template <class F>
class Fraction {
  public:
    Fraction() : num_(), den_(1) {}
    Fraction(int n) : num_(n), den_(1) {} // NOLINT: implicit integer embedding
    explicit Fraction(const F& c) : num_(c), den_(1) {}
    explicit Fraction(UniPoly<F> num) : num_(std::move(num)), den_(1) {}
    Fraction(UniPoly<F> num, UniPoly<F> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static Fraction variable() { return Fraction(UniPoly<F>::variable()); }

    const UniPoly<F>& num() const { return num_; }
    const UniPoly<F>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    Fraction operator-() const { return Fraction(reduced{}, -num_, den_); }

    friend Fraction operator+(const Fraction& a, const Fraction& b) { return add(a, b, false); }
    friend Fraction operator-(const Fraction& a, const Fraction& b) { return add(a, b, true); }

    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        if (a.is_zero() || b.is_zero()) return Fraction();
        // cross-cancel: gcd(a.num, b.den) and gcd(b.num, a.den); the product
        // of the reduced parts is already in lowest terms
        UniPoly<F> an = a.num_, bd = b.den_;
        cancel(an, bd);
        UniPoly<F> bn = b.num_, ad = a.den_;
        cancel(bn, ad);
        Fraction r(reduced{}, an * bn, ad * bd);
        r.make_monic();
        return r;
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) {
        if (b.is_zero()) throw division_by_zero();
        return a * b.inverse();
    }

    Fraction inverse() const {
        if (is_zero()) throw division_by_zero("inverse of zero");
        Fraction r(reduced{}, den_, num_);
        r.make_monic();
        return r;
    }

    Fraction pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Fraction base = *this, acc(1);
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Fraction& a, const Fraction& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }

  private:
    struct reduced {};
    Fraction(reduced, UniPoly<F> num, UniPoly<F> den) : num_(std::move(num)), den_(std::move(den)) {}

    static void cancel(UniPoly<F>& x, UniPoly<F>& y) {
        if (x.is_constant() || y.is_constant()) return;
        UniPoly<F> g = gcd(x, y);
        if (g.degree() > 0) {
            x = x / g;
            y = y / g;
        }
    }

    static Fraction add(const Fraction& a, const Fraction& b, bool subtract) {
        // a/b + c/d = (a (d/g) + c (b/g)) / (b (d/g)) with g = gcd(b, d)
        UniPoly<F> g = (a.den_.is_one() || b.den_.is_one()) ? UniPoly<F>(1) : gcd(a.den_, b.den_);
        UniPoly<F> db = g.degree() > 0 ? a.den_ / g : a.den_; // b/g
        UniPoly<F> dd = g.degree() > 0 ? b.den_ / g : b.den_; // d/g
        UniPoly<F> num = subtract ? a.num_ * dd - b.num_ * db : a.num_ * dd + b.num_ * db;
        if (num.is_zero()) return Fraction();
        UniPoly<F> den = a.den_ * dd;
        // only the fresh factor g can still be shared with num
        if (g.degree() > 0) {
            UniPoly<F> h = gcd(num, g);
            if (h.degree() > 0) {
                num = num / h;
                den = den / h;
            }
        }
        Fraction r(reduced{}, std::move(num), std::move(den));
        r.make_monic();
        return r;
    }

    void make_monic() {
        const F lead = den_.leading();
        if (!(lead == F(1))) {
            F inv = F(1) / lead;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    void normalize() {
        if (den_.is_zero()) throw division_by_zero("zero denominator");
        if (num_.is_zero()) {
            den_ = UniPoly<F>(1);
            return;
        }
        if (!den_.is_one()) {
            UniPoly<F> g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = num_ / g;
                den_ = den_ / g;
            }
        }
        make_monic();
    }

    UniPoly<F> num_, den_;
};

} // namespace tietze
