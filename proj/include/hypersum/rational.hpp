#ifndef HYPERSUM_RATIONAL_HPP
#define HYPERSUM_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "hypersum/errors.hpp"

namespace hypersum::exact {

// Arbitrary-precision rational scalar.  Always canonical: gcd(|num|, den) = 1,
// den > 0, zero stored as 0/1.  Arithmetic is exact and closed; division by
// zero throws instead of producing a non-canonical value.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(int n) : v_(n) {}

    Rational(long num, long den) {
        if (den == 0) throw ZeroDenominatorError();
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw ZeroDenominatorError();
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    // Parses "p", "-p", or "p/q" in base 10.
    static Rational from_string(const std::string& s);

    Rational operator-() const { return Rational(wrap{}, -v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ZeroDenominatorError("division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational inverse() const {
        if (is_zero()) throw ZeroDenominatorError("inverse of zero");
        return Rational(wrap{}, 1 / v_);
    }

    Rational abs() const { return Rational(wrap{}, ::abs(v_)); }

    // Integer power; negative exponents invert (zero base then throws).
    Rational pow(long e) const;

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }

    double to_double() const { return v_.get_d(); }

    // "p/q", or just "p" when the denominator is 1.
    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    struct wrap {};
    Rational(wrap, mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;
};

// Exact gcd-free helpers used across the verification modules.
Rational rational_pow2(long e);            // 2^e
Rational binomial(unsigned long n, unsigned long k);
Rational factorial(unsigned long n);

} // namespace hypersum::exact

#endif
