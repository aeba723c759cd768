#ifndef HYPERSUM_QSERIES_HPP
#define HYPERSUM_QSERIES_HPP

#include "hypersum/field.hpp"
#include "hypersum/report.hpp"

namespace hypersum::qseries {

using exact::RatFn;
using exact::Rational;

// q^e for integer e of either sign.
template <class F>
F q_int_power(const F& q, long e) {
    F r = FieldOps<F>::from_integer(1, q);
    for (long i = 0; i < (e < 0 ? -e : e); ++i) r = r * q;
    if (e < 0) r = FieldOps<F>::from_integer(1, q) / r;
    return r;
}

// (x; q^step)_n = prod_{i=0}^{n-1} (1 - x q^{step*i})
template <class F>
F q_pochhammer_in(const F& x, const F& q, unsigned step, unsigned n) {
    const F one = FieldOps<F>::from_integer(1, q);
    F r = one;
    F qs = q_int_power(q, long(step));
    F shift = one;
    for (unsigned i = 0; i < n; ++i) {
        r = r * (one - x * shift);
        shift = shift * qs;
    }
    return r;
}

// Truncated 4phi3 with the +/- parameter pairs multiplied out, so square
// roots of q never appear: the series lives in the rational field of
// A (= a^2), B (= b^2) and q.  Exactly N+1 terms, k = 0..N.
//
//   sum_k (A;q)_k (B;q)_k (q^{-2N};q^2)_k q^k
//         / ((q;q)_k (ABq;q^2)_k (q^{-2N};q)_k)
//
// Accumulated over a running common denominator like hyper::truncated_sum.
template <class F>
F eq6_lhs_in(const F& A, const F& B, const F& q, unsigned N) {
    const F one = FieldOps<F>::from_integer(1, q);
    F q_pow = one;                            // q^{k-1}
    F q_sq_pow = q_int_power(q, -2 * long(N)); // q^{2(k-1)-2N}
    F q_neg_pow = q_int_power(q, -2 * long(N)); // q^{k-1-2N}

    F upper_product = one;
    F partial = one;
    F common_den = one;
    for (unsigned k = 1; k <= N; ++k) {
        F step_num = (one - A * q_pow) * (one - B * q_pow) * (one - q_sq_pow) * q;
        upper_product = upper_product * step_num;
        if (FieldOps<F>::is_zero(upper_product)) break;

        F step_den = (one - q_int_power(q, long(k))) * (one - A * B * q_int_power(q, 2 * long(k) - 1)) *
                     (one - q_neg_pow);
        if (FieldOps<F>::is_zero(step_den)) throw DenominatorZeroError(k);

        partial = partial * step_den + upper_product;
        common_den = common_den * step_den;

        q_pow = q_pow * q;
        q_sq_pow = q_sq_pow * q * q;
        q_neg_pow = q_neg_pow * q;
    }
    return partial / common_den;
}

// (Aq; q^2)_N (Bq; q^2)_N / ((ABq; q^2)_N (q; q^2)_N)
template <class F>
F eq6_rhs_in(const F& A, const F& B, const F& q, unsigned N) {
    F num = q_pochhammer_in(A * q, q, 2, N) * q_pochhammer_in(B * q, q, 2, N);
    F den = q_pochhammer_in(A * B * q, q, 2, N) * q_pochhammer_in(q, q, 2, N);
    if (FieldOps<F>::is_zero(den)) throw DenominatorZeroError(N);
    return num / den;
}

// --- public surface over the standard {A, B, q} field ---------------------

exact::Symbols standard_symbols();

// (x; q^step)_n with q resolved by name from x's symbol table.
RatFn q_pochhammer(const RatFn& x, unsigned q_power_step, unsigned n);

// (x^2; q^2)_n, the product (x;q)_n(-x;q)_n with the square-root pair
// already multiplied out; x_squared is the rational element standing for x^2.
RatFn paired_q_pochhammer(const RatFn& x_squared, unsigned n);

RatFn eq6_lhs(unsigned N);
RatFn eq6_rhs(unsigned N);

VerificationReport verify_eq6(unsigned N);

// Degeneration toward the classical identity: evaluates both sides of the
// q-identity in double precision at q = 1-h with A = q^a, B = q^b, N = m,
// and checks the deviation from the exact classical value at (a, b, m)
// shrinks when h is halved (ratio within [0.2, 0.7]; the true rate is
// second order since the deviation is even in ln q).
VerificationReport q_limit_check(const Rational& a, const Rational& b, unsigned m, double h);

// Single numeric evaluation used by q_limit_check and its tests.
double eq6_lhs_numeric(double A, double B, double q, unsigned N);
double eq6_rhs_numeric(double A, double B, double q, unsigned N);

} // namespace hypersum::qseries

#endif
