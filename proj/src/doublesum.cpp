#include "hypersum/doublesum.hpp"

#include <chrono>
#include <vector>

namespace hypersum::doublesum {

using hyper::pochhammer;

namespace {

std::int64_t micros_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
        .count();
}

// (t)_0 .. (t)_len, built incrementally.
std::vector<Rational> poch_table(const Rational& t, unsigned len) {
    std::vector<Rational> v;
    v.reserve(len + 1);
    v.push_back(Rational(1));
    for (unsigned k = 0; k < len; ++k) v.push_back(v.back() * (t + Rational(long(k))));
    return v;
}

const Rational kHalf(1, 2);

} // namespace

Rational S_direct(DoubleSumPoint p) {
    const long m = p.m, n = p.n;
    auto poch_neg_m = poch_table(Rational(-m), p.m);
    auto poch_n1 = poch_table(Rational(n + 1), p.m);
    auto poch_mn2 = poch_table(Rational(m + n + 2), p.m);
    auto poch_neg_n = poch_table(Rational(-n), p.n);
    auto poch_half_minus_n = poch_table(kHalf - Rational(n), p.n);
    auto poch_half = poch_table(kHalf, p.n);
    auto fact_i = poch_table(Rational(1), p.m);
    auto fact_j = poch_table(Rational(1), p.n);

    Rational total(0);
    for (unsigned i = 0; i <= p.m; ++i) {
        Rational outer = poch_neg_m[i] * poch_n1[i] / (fact_i[i] * poch_mn2[i]);
        if (outer.is_zero()) continue;
        Rational inner(0);
        for (unsigned j = 0; j <= p.n; ++j) {
            Rational t = poch_neg_n[j] * poch_half_minus_n[j] / (fact_j[j] * poch_half[j]);
            inner += t / (Rational(long(i + j)) + kHalf);
        }
        total += outer * inner;
    }
    return total;
}

Rational S_closed(DoubleSumPoint p) {
    const unsigned long m = p.m, n = p.n;
    Rational num = exact::rational_pow2(2 * long(m + n)) * exact::factorial(m) *
                   exact::factorial(m + n) * exact::factorial(m + n + 1) * pochhammer(kHalf, n);
    Rational den = exact::factorial(n) * exact::factorial(n + 2 * m + 1) *
                   pochhammer(kHalf, m + n + 1);
    return num / den;
}

Rational S_closed_alt(DoubleSumPoint p) {
    const unsigned long m = p.m, n = p.n;
    Rational num = exact::rational_pow2(2 * long(m + n)) * exact::factorial(m) *
                   pochhammer(Rational(long(n + 1)), m);
    Rational den = pochhammer(Rational(long(n + m + 2)), m) *
                   pochhammer(Rational(long(n)) + kHalf, m + 1);
    return num / den;
}

Rational A(unsigned n, unsigned i) {
    auto poch_neg_n = poch_table(Rational(-long(n)), n);
    auto poch_half_minus_n = poch_table(kHalf - Rational(long(n)), n);
    auto poch_half = poch_table(kHalf, n);
    auto fact = poch_table(Rational(1), n);
    Rational total(0);
    for (unsigned j = 0; j <= n; ++j) {
        Rational t = poch_neg_n[j] * poch_half_minus_n[j] / (fact[j] * poch_half[j]);
        total += t / (Rational(long(i + j)) + kHalf);
    }
    return total;
}

Rational B(unsigned n, unsigned k) {
    return exact::factorial(k) * pochhammer(Rational(long(k + n + 1)), n) /
           pochhammer(kHalf, k + n + 1);
}

std::pair<Rational, Rational> chu_vandermonde_step(unsigned k, unsigned j) {
    Rational lhs(0);
    for (unsigned i = 0; i <= k; ++i) {
        Rational t = exact::binomial(k, i) / (Rational(long(i + j)) + kHalf);
        lhs += (i % 2 == 0) ? t : -t;
    }
    Rational rhs = exact::factorial(k) / pochhammer(Rational(long(j)) + kHalf, k + 1);
    return {lhs, rhs};
}

VerificationReport chu_vandermonde_report(unsigned k, unsigned j) {
    auto t0 = std::chrono::steady_clock::now();
    auto [lhs, rhs] = chu_vandermonde_step(k, j);
    return make_report("cvstep", {{"k", std::to_string(k)}, {"j", std::to_string(j)}},
                       lhs.to_string(), rhs.to_string(), lhs == rhs, micros_since(t0));
}

VerificationReport binomial_matrix_self_inverse(unsigned size) {
    auto t0 = std::chrono::steady_clock::now();
    // M_{ij} = C(i,j)(-1)^j, zero above the diagonal.
    std::vector<std::vector<Rational>> M(size, std::vector<Rational>(size, Rational(0)));
    for (unsigned i = 0; i < size; ++i)
        for (unsigned j = 0; j <= i; ++j)
            M[i][j] = (j % 2 == 0) ? exact::binomial(i, j) : -exact::binomial(i, j);

    bool ok = true;
    for (unsigned i = 0; i < size && ok; ++i) {
        for (unsigned j = 0; j <= i && ok; ++j) {
            Rational dot(0);
            for (unsigned k = j; k <= i; ++k) dot += M[i][k] * M[k][j];
            ok = dot == Rational(i == j ? 1 : 0);
        }
    }
    return make_report("minv", {{"size", std::to_string(size)}}, "M*M",
                       "I", ok, micros_since(t0));
}

VerificationReport binomial_transform_check(unsigned n, unsigned k) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Rational> a_vals;
    a_vals.reserve(k + 1);
    for (unsigned i = 0; i <= k; ++i) a_vals.push_back(A(n, i));

    Rational forward(0);
    for (unsigned i = 0; i <= k; ++i) {
        Rational t = exact::binomial(k, i) * a_vals[i];
        forward += (i % 2 == 0) ? t : -t;
    }
    bool forward_ok = forward == B(n, k);

    Rational back(0);
    for (unsigned j = 0; j <= k; ++j) {
        Rational t = exact::binomial(k, j) * B(n, j);
        back += (j % 2 == 0) ? t : -t;
    }
    bool back_ok = back == a_vals[k];

    return make_report("binom_transform", {{"n", std::to_string(n)}, {"k", std::to_string(k)}},
                       forward.to_string(), B(n, k).to_string(), forward_ok && back_ok,
                       micros_since(t0));
}

VerificationReport ratio_check(unsigned m, unsigned n) {
    auto t0 = std::chrono::steady_clock::now();
    if (m == 0) throw InvalidParamsError("ratio_check requires m >= 1");
    Rational lhs = S_direct({m, n}) / S_direct({m - 1, n + 1});
    Rational rhs = Rational(2 * long(m)) * Rational(long(n) + 1) /
                   (Rational(2 * long(n) + 1) * Rational(long(n) + 2 * long(m) + 1));
    return make_report("ratio", {{"m", std::to_string(m)}, {"n", std::to_string(n)}},
                       lhs.to_string(), rhs.to_string(), lhs == rhs, micros_since(t0));
}

VerificationReport verify_prop2(DoubleSumPoint p) {
    auto t0 = std::chrono::steady_clock::now();
    Rational direct = S_direct(p);
    Rational closed = S_closed(p);
    Rational alt = S_closed_alt(p);
    bool ok = direct == closed && closed == alt;
    return make_report("prop2", {{"m", std::to_string(p.m)}, {"n", std::to_string(p.n)}},
                       direct.to_string(), closed.to_string(), ok, micros_since(t0));
}

} // namespace hypersum::doublesum
