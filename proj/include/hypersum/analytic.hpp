#ifndef HYPERSUM_ANALYTIC_HPP
#define HYPERSUM_ANALYTIC_HPP

#include <span>
#include <utility>

#include "hypersum/rational.hpp"
#include "hypersum/report.hpp"

namespace hypersum::analytic {

using exact::Rational;

// Gamma function via a 15-term Lanczos approximation, with the reflection
// formula for arguments below 1/2.  Relative accuracy is ~1e-13 on |x| <= 50.
// Throws PoleError at non-positive integers.
double gamma(double x);

// log Gamma for strictly positive arguments (valid for arbitrarily large x);
// same Lanczos kernel in log form.
double log_gamma_pos(double x);

// sin(pi x) / cos(pi x) with the argument reduced mod 2 before multiplying
// by pi, so large parameters lose no precision.
double sin_pi(double x);
double cos_pi(double x);

// Exact reduction of a rational x into [-1, 1) modulo 2, then to double.
double rational_mod2(const Rational& x);

struct WatsonParams {
    double a = 0, b = 0, c = 0;
};

struct NumericTolerance {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    unsigned max_terms = 100000;
};

// The nonterminating series 3F2(a, b, c; (a+b+1)/2, 2c; 1), summed directly.
// Terms decay like k^{-(c + 3/2 - (a+b)/2)}, which near the convergence
// boundary is far too slow for plain truncation, so after max_terms the
// remaining tail is evaluated with an Euler-Maclaurin formula whose integral
// is computed by tanh-sinh quadrature; the result is returned only when the
// certified error estimate meets abs_tol, otherwise NoConvergence is thrown.
// Terminating cases (a numerator parameter a non-positive integer) sum
// exactly and return early.
double watson_series(const WatsonParams& p, const NumericTolerance& tol = {});

// Gamma-ratio right side of Watson's summation formula.
double watson_rhs(const WatsonParams& p);

// Watson's formula as a check: series and Gamma ratio must agree within
// abs_tol * (1 + |rhs|).
VerificationReport verify_eq1(const WatsonParams& p, const NumericTolerance& tol = {.abs_tol = 1e-10});

// Consistency of the limit decomposition with the exact truncated value,
// checked in cross-multiplied form so points with cos(pi(a+b)/2) = 0 stay
// well defined:
//   cos(pi a/2)cos(pi b/2) * R_m
//     = cos(pi(a+b)/2) * [exact truncated value] + sin(pi a/2)sin(pi b/2) * R_m
// where R_m is the Pochhammer ratio ((a+1)/2)_m((b+1)/2)_m/((1/2)_m((a+b+1)/2)_m).
// a and b are taken as exact rationals so the truncated value is exact; odd
// integer a or b (vanishing cos factors) is flagged as DegenerateTrig.
VerificationReport eq2_consistency(const Rational& a, const Rational& b, unsigned m,
                                   const NumericTolerance& tol = {.abs_tol = 1e-10});

// Both Gamma transformation identities, at every sample (a, m):
//   Gamma(a-m) = (-1)^m Gamma(a) / ((1-a)_m)
//   Gamma(1/2+t) Gamma(1/2-t-m) = (-1)^m pi / ((1/2+t)_m cos(pi t)),  t = a
VerificationReport gamma_transform_checks(std::span<const std::pair<double, int>> samples,
                                          double rel_tol = 1e-10);

} // namespace hypersum::analytic

#endif
