#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hypersum/hyper.hpp"
#include "hypersum/qseries.hpp"

using namespace hypersum;
using namespace hypersum::qseries;
using exact::MultiPoly;
using exact::Monomial;
using exact::Rational;
using exact::RatFn;
using exact::SymbolTable;
using exact::Symbols;

namespace {

RatFn sym(const char* name) { return RatFn::variable(standard_symbols(), name); }
RatFn one() { return RatFn::from_integer(standard_symbols(), 1); }

} // namespace

TEST_CASE("q-pochhammer products") {
    RatFn q = sym("q"), A = sym("A"), B = sym("B");
    CHECK(q_pochhammer(A, 1, 0) == one());
    CHECK(q_pochhammer(q, 2, 2) == (one() - q) * (one() - q * q * q));  // (q;q^2)_2
    CHECK(q_pochhammer(A * q, 2, 1) == one() - A * q);                  // (Aq;q^2)_1
    CHECK(paired_q_pochhammer(A, 2) == (one() - A) * (one() - A * q * q));

    // the square-root pair (ab sqrt(q), -ab sqrt(q)) lands on (ABq; q^2)_n
    CHECK(paired_q_pochhammer(A * B * q, 1) == one() - A * B * q);

    // the (q^{-N}, -q^{-N}) pair at N = 1: (q^{-2}; q^2)_1 = 1 - q^{-2}
    RatFn q_neg2 = one() / (q * q);
    CHECK(paired_q_pochhammer(q_neg2, 1) == one() - q_neg2);
    CHECK(paired_q_pochhammer(q_neg2, 0) == one());
}

TEST_CASE("square-root pairs multiply out to even powers") {
    // (x;q)_n (-x;q)_n = (x^2;q^2)_n, checked by mapping x^2 -> X
    Symbols xq = SymbolTable::make({"x", "q"});
    Symbols Xq = SymbolTable::make({"X", "q"});
    std::size_t x_idx = xq->index("x");
    for (unsigned n = 0; n <= 8; ++n) {
        RatFn x = RatFn::variable(xq, "x");
        RatFn prod = q_pochhammer(x, 1, n) * q_pochhammer(-x, 1, n);
        CHECK(prod.den() == MultiPoly::constant(xq, Rational(1)));

        MultiPoly mapped = MultiPoly::zero(Xq);
        for (const auto& term : prod.num().terms()) {
            REQUIRE(term.mono.e[x_idx] % 2 == 0);
            Monomial m = term.mono;
            m.e[x_idx] = static_cast<std::uint16_t>(m.e[x_idx] / 2);
            mapped += MultiPoly::constant(Xq, term.coeff) *
                      MultiPoly::variable(Xq, "X", m.e[0]) * MultiPoly::variable(Xq, "q", m.e[1]);
        }
        RatFn expected = q_pochhammer(RatFn::variable(Xq, "X"), 2, n);
        CHECK(RatFn(mapped, MultiPoly::constant(Xq, Rational(1))) == expected);
    }
}

TEST_CASE("eq6 left side hand expansion at N=1") {
    RatFn A = sym("A"), B = sym("B"), q = sym("q");
    RatFn expected =
        one() + ((one() - A) * (one() - B) * q) / ((one() - q) * (one() - A * B * q));
    CHECK(eq6_lhs(1) == expected);
}

TEST_CASE("eq6 right side at N=1") {
    RatFn A = sym("A"), B = sym("B"), q = sym("q");
    RatFn expected = ((one() - A * q) * (one() - B * q)) / ((one() - A * B * q) * (one() - q));
    CHECK(eq6_rhs(1) == expected);
}

TEST_CASE("A = 1 kills every term past k = 0") {
    for (unsigned N = 1; N <= 4; ++N) {
        RatFn lhs = eq6_lhs_in(one(), sym("B"), sym("q"), N);
        CHECK(lhs == one());
    }
}

TEST_CASE("A = B = 0 collapses both sides identically") {
    RatFn zero = RatFn::from_integer(standard_symbols(), 0);
    for (unsigned N = 1; N <= 4; ++N) {
        RatFn lhs = eq6_lhs_in(zero, zero, sym("q"), N);
        RatFn rhs = eq6_rhs_in(zero, zero, sym("q"), N);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("q-identity holds exactly for small N") {
    for (unsigned N = 1; N <= 3; ++N) {
        auto report = verify_eq6(N);
        CHECK(report.status == Status::pass);
        CHECK(report.identity_id == "eq6");
    }
    CHECK_THROWS_AS(eq6_lhs(0), InvalidParamsError);
}

TEST_CASE("specializing A = B preserves the identity") {
    RatFn B = sym("B"), q = sym("q");
    for (unsigned N = 1; N <= 3; ++N)
        CHECK(eq6_lhs_in(B, B, q, N) == eq6_rhs_in(B, B, q, N));
}

TEST_CASE("numeric and exact evaluations agree at a rational point") {
    // q = 1/2, A = 1/3, B = 1/5
    Rational point[] = {Rational(1, 3), Rational(1, 5), Rational(1, 2)};
    for (unsigned N = 1; N <= 4; ++N) {
        double numeric = eq6_lhs_numeric(1.0 / 3, 0.2, 0.5, N);
        double exact_val = eq6_lhs(N).substitute(point).to_double();
        CHECK(std::abs(numeric - exact_val) < 1e-13 * (1 + std::abs(exact_val)));
    }
}

TEST_CASE("q->1 degeneration converges to the classical value") {
    auto r = q_limit_check(Rational(1), Rational(1), 1, 1e-3);
    CHECK(r.status == Status::pass);
    CHECK(r.rhs == "4/3");

    // a = 0 is the degenerate exact case at every q
    CHECK(q_limit_check(Rational(0), Rational(2, 3), 2, 1e-3).status == Status::pass);

    CHECK(q_limit_check(Rational(1, 2), Rational(1, 2), 2, 1e-4).status == Status::pass);
}

TEST_CASE("q->1 deviation decreases monotonically in h") {
    for (auto [a, b] : {std::pair{Rational(1, 2), Rational(1, 2)},
                        {Rational(1, 2), Rational(1)},
                        {Rational(1, 3), Rational(2, 3)}}) {
        for (unsigned m = 1; m <= 3; ++m) {
            double target = hyper::eq3_rhs(a, b, m).to_double();
            double prev = -1.0;
            for (double h : {1e-2, 1e-3, 1e-4}) {
                double q = 1.0 - h;
                double av = std::pow(q, a.to_double()), bv = std::pow(q, b.to_double());
                double err = std::abs(eq6_lhs_numeric(av, bv, q, m) - target);
                if (prev >= 0.0) CHECK(err < prev);
                prev = err;
            }
        }
    }
}

TEST_CASE("q_limit_check rejects bad steps") {
    CHECK_THROWS_AS(q_limit_check(Rational(1), Rational(1), 1, 0.7), InvalidParamsError);
    CHECK_THROWS_AS(q_limit_check(Rational(1), Rational(1), 0, 1e-3), InvalidParamsError);
}
