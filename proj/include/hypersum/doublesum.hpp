#ifndef HYPERSUM_DOUBLESUM_HPP
#define HYPERSUM_DOUBLESUM_HPP

#include <utility>

#include "hypersum/hyper.hpp"
#include "hypersum/report.hpp"

namespace hypersum::doublesum {

using exact::Rational;

struct DoubleSumPoint {
    unsigned m = 0;
    unsigned n = 0;
};

// The terminating double hypergeometric sum
//   S(m,n) = sum_{i=0}^{m} (-m)_i (n+1)_i / (i! (m+n+2)_i)
//            * sum_{j=0}^{n} (-n)_j (1/2-n)_j / (j! (1/2)_j) * 1/(i+j+1/2),
// evaluated exactly term by term.  This is the ground-truth oracle: the
// closed forms below are never trusted without comparing against it.
Rational S_direct(DoubleSumPoint p);

// 2^{2m+2n} m! (m+n)! (m+n+1)! (1/2)_n / (n! (n+2m+1)! (1/2)_{m+n+1})
Rational S_closed(DoubleSumPoint p);

// Equivalent product form 2^{2m+2n} m! (n+1)_m / ((n+m+2)_m (n+1/2)_{m+1}).
Rational S_closed_alt(DoubleSumPoint p);

// Inner sum A_{ni} = sum_{j=0}^{n} (-n)_j (1/2-n)_j / (j! (1/2)_j (i+j+1/2)).
Rational A(unsigned n, unsigned i);

// Binomial transform of the inner sum: B_{nk} = k! (k+n+1)_n / (1/2)_{k+n+1}.
Rational B(unsigned n, unsigned k);

// sum_{i=0}^{k} C(k,i) (-1)^i / (i+j+1/2)  vs  k!/(j+1/2)_{k+1}.
std::pair<Rational, Rational> chu_vandermonde_step(unsigned k, unsigned j);
VerificationReport chu_vandermonde_report(unsigned k, unsigned j);

// M with M_{ij} = C(i,j)(-1)^j (lower triangular) satisfies M*M = I.
VerificationReport binomial_matrix_self_inverse(unsigned size);

// Forward transform B_{nk} = sum_i C(k,i)(-1)^i A_{ni} and its inversion
// A_{nk} = sum_j C(k,j)(-1)^j B_{nj}, both exact.
VerificationReport binomial_transform_check(unsigned n, unsigned k);

// S(m,n)/S(m-1,n+1) = 2m(n+1) / ((2n+1)(n+2m+1)), via S_direct on both points.
VerificationReport ratio_check(unsigned m, unsigned n);

// S_direct = S_closed = S_closed_alt, all exactly.
VerificationReport verify_prop2(DoubleSumPoint p);

} // namespace hypersum::doublesum

#endif
