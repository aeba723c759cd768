#ifndef HYPERSUM_HYPER_HPP
#define HYPERSUM_HYPER_HPP

#include <vector>

#include "hypersum/field.hpp"
#include "hypersum/report.hpp"

namespace hypersum::hyper {

using exact::RatFn;
using exact::Rational;

// Rising factorial t(t+1)...(t+k-1); (t)_0 = 1.
template <class F>
F pochhammer(const F& t, unsigned k) {
    F r = FieldOps<F>::from_integer(1, t);
    for (unsigned i = 0; i < k; ++i) r = r * (t + FieldOps<F>::from_integer(long(i), t));
    return r;
}

// A truncated hypergeometric series.  term_count is the number of included
// term indices k = 0 .. term_count-1; truncation is always explicit, never
// inferred from terminating parameters, because series with negative-integer
// denominator parameters mean "the first so-many terms" and nothing else.
template <class F>
struct SeriesSpec {
    std::vector<F> upper;
    std::vector<F> lower;
    F argument;
    unsigned term_count = 0;
};

enum class TermPolicy {
    strict,              // vanishing lower Pochhammer factor at an included index: error
    skip_zero_numerator  // zero numerator product: term is zero, denominator never evaluated
};

// Single term k: prod (upper)_k / (k! prod (lower)_k) * z^k, from explicit
// Pochhammer products.  Used by proof-chain checks that compare termwise.
template <class F>
F series_term(const SeriesSpec<F>& spec, unsigned k) {
    const F& proto = spec.argument;
    F num = FieldOps<F>::from_integer(1, proto);
    for (const F& u : spec.upper) num = num * pochhammer(u, k);
    for (unsigned i = 0; i < k; ++i) num = num * spec.argument;
    if (FieldOps<F>::is_zero(num)) return num;
    F den = pochhammer(FieldOps<F>::from_integer(1, proto), k);
    for (const F& l : spec.lower) den = den * pochhammer(l, k);
    if (FieldOps<F>::is_zero(den)) throw DenominatorZeroError(k);
    return num / den;
}

// Sum of the first term_count terms, evaluated exactly.
//
// Terms are accumulated over the running common denominator
// B_k = k! * prod_j (lower_j)_k, so no division happens until the very end;
// over RatFn this keeps the result's denominator at the minimal product of
// linear factors instead of the blowup a naive fraction sum would produce.
// Invariant after step k: partial sum of terms 0..k equals P / B_k.
template <class F>
F truncated_sum(const SeriesSpec<F>& spec, TermPolicy policy = TermPolicy::strict) {
    const F& proto = spec.argument;
    const F one = FieldOps<F>::from_integer(1, proto);
    if (spec.term_count == 0) return FieldOps<F>::from_integer(0, proto);

    F upper_product = one;  // numerator product of term k, including z^k
    F partial = one;        // P
    F common_den = one;     // B_k
    for (unsigned k = 1; k < spec.term_count; ++k) {
        const F shift = FieldOps<F>::from_integer(long(k) - 1, proto);
        F step_num = spec.argument;
        for (const F& u : spec.upper) step_num = step_num * (u + shift);
        upper_product = upper_product * step_num;

        if (policy == TermPolicy::skip_zero_numerator && FieldOps<F>::is_zero(upper_product))
            break;  // every remaining term has a zero numerator product

        F step_den = FieldOps<F>::from_integer(long(k), proto);
        for (const F& l : spec.lower) step_den = step_den * (l + shift);
        if (FieldOps<F>::is_zero(step_den)) throw DenominatorZeroError(k);

        partial = partial * step_den + upper_product;
        common_den = common_den * step_den;
    }
    return partial / common_den;
}

// --- The truncated 3F2(a, b, -m; (a+b+1)/2, -2m; 1) summation -------------

template <class F>
SeriesSpec<F> eq3_series(const F& a, const F& b, unsigned m) {
    const F one = FieldOps<F>::from_integer(1, a);
    const F half = FieldOps<F>::from_rational(Rational(1, 2), a);
    return SeriesSpec<F>{{a, b, FieldOps<F>::from_integer(-long(m), a)},
                         {(a + b + one) * half, FieldOps<F>::from_integer(-2 * long(m), a)},
                         one,
                         m + 1};
}

// Sum of the first m+1 terms of 3F2(a, b, -m; (a+b+1)/2, -2m; 1).
// The factors (-2m)_k never vanish for k <= m, so strict policy suffices.
template <class F>
F eq3_lhs(const F& a, const F& b, unsigned m) {
    return truncated_sum(eq3_series(a, b, m), TermPolicy::strict);
}

// Closed form ((a+1)/2)_m ((b+1)/2)_m / ((1/2)_m ((a+b+1)/2)_m).
template <class F>
F eq3_rhs(const F& a, const F& b, unsigned m) {
    const F one = FieldOps<F>::from_integer(1, a);
    const F half = FieldOps<F>::from_rational(Rational(1, 2), a);
    F num = pochhammer((a + one) * half, m) * pochhammer((b + one) * half, m);
    F den = pochhammer(half, m) * pochhammer((a + b + one) * half, m);
    if (FieldOps<F>::is_zero(den)) throw DenominatorZeroError(m);
    return num / den;
}

// --- Pfaff-Saalschutz instance used by the proof chain --------------------

template <class F>
struct PfaffSaalschutz {
    F lhs;  // 3F2(a, b, -m; a+b+1/2, -m+1/2; 1), first m+1 terms
    F rhs;  // (a+1/2)_m (b+1/2)_m / ((a+b+1/2)_m (1/2)_m)
};

template <class F>
PfaffSaalschutz<F> pfaff_saalschutz(const F& a, const F& b, unsigned m) {
    const F one = FieldOps<F>::from_integer(1, a);
    const F half = FieldOps<F>::from_rational(Rational(1, 2), a);
    SeriesSpec<F> spec{{a, b, FieldOps<F>::from_integer(-long(m), a)},
                       {a + b + half, FieldOps<F>::from_integer(-long(m), a) + half},
                       one,
                       m + 1};
    F lhs = truncated_sum(spec, TermPolicy::strict);
    F num = pochhammer(a + half, m) * pochhammer(b + half, m);
    F den = pochhammer(a + b + half, m) * pochhammer(half, m);
    if (FieldOps<F>::is_zero(den)) throw DenominatorZeroError(m);
    return {lhs, num / den};
}

VerificationReport pfaff_saalschutz_report(const Rational& a, const Rational& b, unsigned m);

// Report-producing drivers.  The symbolic ones decide exact
// rational-function identities over RatFn; the point check works over
// Rational and reports DenominatorZero at excluded parameter points.
VerificationReport verify_eq3_symbolic(unsigned m);
VerificationReport verify_eq3_point(const Rational& a, const Rational& b, unsigned m);
VerificationReport verify_bailey(unsigned m);
VerificationReport verify_eq5_chain(unsigned m);

} // namespace hypersum::hyper

#endif
