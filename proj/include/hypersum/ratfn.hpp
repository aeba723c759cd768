#ifndef HYPERSUM_RATFN_HPP
#define HYPERSUM_RATFN_HPP

#include <iosfwd>
#include <span>
#include <string>

#include "hypersum/multipoly.hpp"

namespace hypersum::exact {

// Quotient of two multivariate polynomials.  Equality is decided by
// cross-multiplication, so values are NOT reduced to a canonical gcd form;
// normalization only strips integer content, shared monomial factors, and a
// denominator sign, which keeps coefficient growth in check without ever
// affecting correctness.
class RatFn {
public:
    explicit RatFn(Symbols syms)
        : num_(MultiPoly::zero(syms)), den_(MultiPoly::constant(std::move(syms), Rational(1))) {}

    RatFn(MultiPoly num, MultiPoly den);

    static RatFn from_rational(Symbols syms, const Rational& r) {
        return RatFn(MultiPoly::constant(syms, r), MultiPoly::constant(syms, Rational(1)));
    }
    static RatFn from_integer(Symbols syms, long n) { return from_rational(std::move(syms), Rational(n)); }
    static RatFn variable(Symbols syms, const std::string& name, unsigned exponent = 1) {
        return RatFn(MultiPoly::variable(syms, name, exponent),
                     MultiPoly::constant(syms, Rational(1)));
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const Symbols& symbols() const { return num_.symbols(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    // Requires constant num and den; exact round-trip to the scalar field.
    Rational to_rational() const;

    RatFn operator-() const;
    friend RatFn operator+(const RatFn& a, const RatFn& b);
    friend RatFn operator-(const RatFn& a, const RatFn& b);
    friend RatFn operator*(const RatFn& a, const RatFn& b);
    friend RatFn operator/(const RatFn& a, const RatFn& b);

    RatFn& operator+=(const RatFn& o) { *this = *this + o; return *this; }
    RatFn& operator-=(const RatFn& o) { *this = *this - o; return *this; }
    RatFn& operator*=(const RatFn& o) { *this = *this * o; return *this; }
    RatFn& operator/=(const RatFn& o) { *this = *this / o; return *this; }

    RatFn inverse() const;

    // Cross-multiplication equality: a.num*b.den == b.num*a.den.
    friend bool operator==(const RatFn& a, const RatFn& b);
    friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

    // Exact evaluation at a rational point (indexed by symbol order); throws
    // DenominatorVanishes when the denominator is zero there.
    Rational substitute(std::span<const Rational> point) const;

    // "num" when den == 1, otherwise "(num)/(den)".
    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const RatFn& r);

private:
    void normalize();
    MultiPoly num_, den_;
};

inline bool ratfn_eq(const RatFn& a, const RatFn& b) { return a == b; }

} // namespace hypersum::exact

#endif
