#ifndef HYPERSUM_FIELD_HPP
#define HYPERSUM_FIELD_HPP

#include <string>

#include "hypersum/ratfn.hpp"

namespace hypersum {

// Uniform scalar-field adapter for the series code.  A "prototype" element is
// threaded through so RatFn constants can be built on the right symbol table;
// Rational and double ignore it.
template <class F>
struct FieldOps;

template <>
struct FieldOps<exact::Rational> {
    static exact::Rational from_integer(long n, const exact::Rational&) { return exact::Rational(n); }
    static exact::Rational from_rational(const exact::Rational& r, const exact::Rational&) { return r; }
    static bool is_zero(const exact::Rational& x) { return x.is_zero(); }
    static bool equal(const exact::Rational& a, const exact::Rational& b) { return a == b; }
    static std::string to_string(const exact::Rational& x) { return x.to_string(); }
};

template <>
struct FieldOps<exact::RatFn> {
    static exact::RatFn from_integer(long n, const exact::RatFn& proto) {
        return exact::RatFn::from_integer(proto.symbols(), n);
    }
    static exact::RatFn from_rational(const exact::Rational& r, const exact::RatFn& proto) {
        return exact::RatFn::from_rational(proto.symbols(), r);
    }
    static bool is_zero(const exact::RatFn& x) { return x.is_zero(); }
    static bool equal(const exact::RatFn& a, const exact::RatFn& b) { return a == b; }
    static std::string to_string(const exact::RatFn& x) { return x.to_string(); }
};

template <>
struct FieldOps<double> {
    static double from_integer(long n, double) { return static_cast<double>(n); }
    static double from_rational(const exact::Rational& r, double) { return r.to_double(); }
    static bool is_zero(double x) { return x == 0.0; }
    static bool equal(double a, double b) { return a == b; }
    static std::string to_string(double x);
};

std::string format_double(double x);

inline std::string FieldOps<double>::to_string(double x) { return format_double(x); }

} // namespace hypersum

#endif
