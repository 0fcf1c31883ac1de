// Dense univariate polynomials over a field. Used at every level of the
// tower: Q[q], Q(q)[t] and F[Y].
#pragma once

#include <utility>
#include <vector>

#include "tietze/errors.hpp"

namespace tietze {

template <class F>
class UniPoly {
  public:
    UniPoly() = default;
    UniPoly(int n) { // NOLINT: implicit by design, mirrors the field embeddings
        if (n != 0) coeffs_.push_back(F(n));
    }
    explicit UniPoly(const F& c) {
        if (!c.is_zero()) coeffs_.push_back(c);
    }
    explicit UniPoly(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly monomial(const F& c, size_t exp) {
        UniPoly p;
        if (c.is_zero()) return p;
        p.coeffs_.assign(exp + 1, F(0));
        p.coeffs_[exp] = c;
        return p;
    }
    static UniPoly variable() { return monomial(F(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == F(1); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    // Trailing exponent (order of vanishing at 0); zero polynomial has none.
    long ord() const {
        if (is_zero()) throw zero_element("ord of zero polynomial");
        for (size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) return static_cast<long>(i);
        throw internal_error("untrimmed polynomial");
    }

    const F& leading() const {
        if (is_zero()) throw zero_element("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    F coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(coeffs_.size())) return F(0);
        return coeffs_[i];
    }

    const std::vector<F>& coeffs() const { return coeffs_; }

    UniPoly operator-() const {
        UniPoly r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        UniPoly r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), F(0));
        for (size_t i = 0; i < r.coeffs_.size(); ++i) {
            if (i < a.coeffs_.size()) r.coeffs_[i] = r.coeffs_[i] + a.coeffs_[i];
            if (i < b.coeffs_.size()) r.coeffs_[i] = r.coeffs_[i] + b.coeffs_[i];
        }
        r.trim();
        return r;
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        UniPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        r.trim();
        return r;
    }

    UniPoly scaled(const F& c) const {
        UniPoly r;
        if (c.is_zero() || is_zero()) return r;
        r.coeffs_ = coeffs_;
        for (auto& x : r.coeffs_) x = x * c;
        r.trim();
        return r;
    }

    // Multiply by x^k.
    UniPoly shifted(size_t k) const {
        if (is_zero() || k == 0) return *this;
        UniPoly r;
        r.coeffs_.assign(coeffs_.size() + k, F(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + k] = coeffs_[i];
        return r;
    }

    // Euclidean division; divisor must be nonzero.
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) throw division_by_zero("polynomial division by zero");
        UniPoly quot, rem = a;
        if (a.degree() >= b.degree()) quot.coeffs_.assign(a.coeffs_.size() - b.coeffs_.size() + 1, F(0));
        const F& lead = b.leading();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            long shift = rem.degree() - b.degree();
            F factor = rem.leading() / lead;
            quot.coeffs_[shift] = quot.coeffs_[shift] + factor;
            for (size_t i = 0; i < b.coeffs_.size(); ++i)
                rem.coeffs_[i + shift] = rem.coeffs_[i + shift] - factor * b.coeffs_[i];
            rem.trim();
        }
        quot.trim();
        return {quot, rem};
    }
    friend UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
    friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return scaled(F(1) / leading());
    }

    friend UniPoly gcd(UniPoly a, UniPoly b) {
        // Remainders are re-normalized to monic each round to contain
        // coefficient growth inside the tower fields.
        while (!b.is_zero()) {
            UniPoly r = (a % b).monic();
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    friend UniPoly lcm(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        return ((a * b) / gcd(a, b)).monic();
    }

    // Horner evaluation in any commutative ring R with F-action via R * F.
    template <class R>
    R eval(const R& x) const {
        R acc(0);
        for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + R(coeffs_[i]);
        return acc;
    }

    UniPoly derivative() const {
        UniPoly r;
        if (coeffs_.size() <= 1) return r;
        r.coeffs_.resize(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i) r.coeffs_[i - 1] = coeffs_[i] * F(static_cast<int>(i));
        r.trim();
        return r;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<F> coeffs_; // coeffs_[i] is the coefficient of x^i; no trailing zeros
};

} // namespace tietze
