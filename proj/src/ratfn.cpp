#include "hypersum/ratfn.hpp"

#include <ostream>

namespace hypersum::exact {

RatFn::RatFn(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    MultiPoly::require_same_symbols(num_, den_);
    if (den_.is_zero()) throw ZeroDenominatorError("rational function with zero denominator");
    normalize();
}

void RatFn::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(den_.symbols(), Rational(1));
        return;
    }
    // Shared monomial factor.
    Monomial mn = num_.min_exponents();
    Monomial md = den_.min_exponents();
    Monomial common;
    bool any = false;
    for (std::size_t s = 0; s < SymbolTable::max_symbols; ++s) {
        common.e[s] = std::min(mn.e[s], md.e[s]);
        any = any || common.e[s] != 0;
    }
    if (any) {
        num_.divide_by_monomial(common);
        den_.divide_by_monomial(common);
    }
    // Scale both sides to coprime integer coefficients: with cn = content(num)
    // and cd = content(den), num/den = (p*num^)/(q*den^) where cn/cd = p/q.
    Rational cn = num_.content();
    Rational cd = den_.content();
    Rational ratio = cn / cd;
    num_ *= Rational(ratio.numerator(), mpz_class(1)) / cn;
    den_ *= Rational(ratio.denominator(), mpz_class(1)) / cd;
    if (den_.leading_coefficient().sign() < 0) {
        num_ *= Rational(-1);
        den_ *= Rational(-1);
    }
}

Rational RatFn::to_rational() const {
    if (!is_constant()) throw InvalidParamsError("rational function is not constant");
    return num_.constant_value() / den_.constant_value();
}

RatFn RatFn::operator-() const {
    RatFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFn operator+(const RatFn& a, const RatFn& b) {
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) {
    return RatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator*(const RatFn& a, const RatFn& b) {
    return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn operator/(const RatFn& a, const RatFn& b) {
    if (b.is_zero()) throw ZeroDenominatorError("division by zero rational function");
    return RatFn(a.num_ * b.den_, a.den_ * b.num_);
}

RatFn RatFn::inverse() const {
    if (is_zero()) throw ZeroDenominatorError("inverse of zero rational function");
    return RatFn(den_, num_);
}

bool operator==(const RatFn& a, const RatFn& b) {
    MultiPoly::require_same_symbols(a.num_, b.num_);
    return a.num_ * b.den_ == b.num_ * a.den_;
}

Rational RatFn::substitute(std::span<const Rational> point) const {
    Rational d = den_.eval(point);
    if (d.is_zero()) throw DenominatorVanishesError();
    return num_.eval(point) / d;
}

std::string RatFn::to_string() const {
    if (den_.is_constant() && den_.constant_value().is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFn& r) {
    return os << r.to_string();
}

} // namespace hypersum::exact
