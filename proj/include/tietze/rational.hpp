// Arbitrary-precision rational numbers, the ground field of the tower.
// Backed by GMP; mpq_class keeps gcd(num, den) = 1 and den > 0 canonically.
#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "tietze/errors.hpp"

namespace tietze {

using BigInt = mpz_class;

class BigRat {
  public:
    BigRat() : v_(0) {}
    BigRat(int n) : v_(n) {} // NOLINT: implicit integer embedding
    BigRat(long n) : v_(static_cast<long>(n)) {} // NOLINT
    explicit BigRat(const BigInt& n) : v_(n) {}
    BigRat(const BigInt& n, const BigInt& d) : v_(n, d) {
        if (d == 0) throw division_by_zero();
        v_.canonicalize();
    }
    explicit BigRat(mpq_class v) : v_(std::move(v)) {}

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    BigRat operator-() const { return BigRat(mpq_class(-v_)); }
    friend BigRat operator+(const BigRat& a, const BigRat& b) { return BigRat(mpq_class(a.v_ + b.v_)); }
    friend BigRat operator-(const BigRat& a, const BigRat& b) { return BigRat(mpq_class(a.v_ - b.v_)); }
    friend BigRat operator*(const BigRat& a, const BigRat& b) { return BigRat(mpq_class(a.v_ * b.v_)); }
    friend BigRat operator/(const BigRat& a, const BigRat& b) {
        if (b.is_zero()) throw division_by_zero();
        return BigRat(mpq_class(a.v_ / b.v_));
    }
    friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }

    std::string str() const { return v_.get_str(); }

  private:
    mpq_class v_;
};

inline BigRat rat(long n) { return BigRat(n); }
inline BigRat rat(long n, long d) {
    if (d == 0) throw division_by_zero();
    return BigRat(BigInt(n), BigInt(d));
}

inline BigInt gcd_int(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt lcm_int(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline std::string to_string(const BigRat& x) { return x.str(); }

} // namespace tietze
