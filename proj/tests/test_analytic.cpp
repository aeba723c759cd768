#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "hypersum/analytic.hpp"
#include "hypersum/hyper.hpp"

using namespace hypersum;
using namespace hypersum::analytic;
using exact::Rational;

namespace {

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

} // namespace

TEST_CASE("gamma classical values") {
    CHECK(rel_err(analytic::gamma(0.5), std::sqrt(M_PI)) < 1e-13);
    CHECK(rel_err(analytic::gamma(5.0), 24.0) < 1e-13);
    CHECK(rel_err(analytic::gamma(1.0), 1.0) < 1e-14);
    CHECK(rel_err(analytic::gamma(20.0), 1.21645100408832e17) < 1e-12);
    CHECK_THROWS_AS(analytic::gamma(0.0), PoleError);
    CHECK_THROWS_AS(analytic::gamma(-3.0), PoleError);
}

TEST_CASE("gamma functional equation on random arguments") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> dist(0.1, 20.0);
    for (int i = 0; i < 400; ++i) {
        double x = dist(rng);
        CHECK(rel_err(analytic::gamma(x + 1.0) / analytic::gamma(x), x) < 1e-12);
    }
}

TEST_CASE("gamma reflection region") {
    // Gamma(-0.5) = -2 sqrt(pi), Gamma(-1.5) = 4 sqrt(pi)/3
    CHECK(rel_err(analytic::gamma(-0.5), -2.0 * std::sqrt(M_PI)) < 1e-12);
    CHECK(rel_err(analytic::gamma(-1.5), 4.0 * std::sqrt(M_PI) / 3.0) < 1e-12);
    // consistency of log form on moderate and large arguments
    for (double x : {0.7, 3.3, 17.0, 49.5}) {
        CHECK(rel_err(std::exp(log_gamma_pos(x)), analytic::gamma(x)) < 1e-12);
    }
}

TEST_CASE("argument-reduced trig") {
    CHECK(sin_pi(1.0) == 0.0);
    CHECK(sin_pi(1e8 + 0.5) == 1.0);  // exactly representable offset
    CHECK(cos_pi(0.5) == 0.0);
    CHECK(cos_pi(11.0) == -1.0);

    // exact rational reduction keeps full precision at huge arguments
    Rational huge = Rational(3000000000000000001L, 3);  // 10^18 + 1/3
    CHECK(std::abs(cos_pi(rational_mod2(huge)) - 0.5) < 1e-15);
    CHECK(rational_mod2(Rational(7, 2)) == doctest::Approx(-0.5));
    CHECK(rational_mod2(Rational(-1, 3)) == doctest::Approx(-1.0 / 3));
}

TEST_CASE("watson series equals gamma ratio on fast and slow points") {
    NumericTolerance tol{.abs_tol = 1e-11};
    // a = 0: every term after k = 0 vanishes
    CHECK(watson_series({0.0, 0.4, 1.3}, tol) == 1.0);

    for (auto [a, b, c] : {std::tuple{0.3, 0.4, 1.2}, {0.5, 0.5, 2.0}, {0.7, 0.7, 1.0}}) {
        double series = watson_series({a, b, c}, tol);
        double rhs = watson_rhs({a, b, c});
        CHECK(std::abs(series - rhs) <= 1e-10 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("terminating watson cases match the exact truncated sum") {
    // a = -2n ends the series; compare against exact rational summation
    for (long n : {1L, 2L, 3L}) {
        Rational a(-2 * n), b(1, 2), c(3, 2);
        hyper::SeriesSpec<Rational> spec{
            {a, b, c}, {(a + b + Rational(1)) / Rational(2), c * Rational(2)}, Rational(1),
            unsigned(2 * n) + 1};
        Rational exact_sum = hyper::truncated_sum(spec);
        double series = watson_series({a.to_double(), b.to_double(), c.to_double()});
        CHECK(std::abs(series - exact_sum.to_double()) <= 1e-12 * (1 + std::abs(series)));
        double rhs = watson_rhs({a.to_double(), b.to_double(), c.to_double()});
        CHECK(std::abs(series - rhs) <= 1e-10 * (1 + std::abs(rhs)));
    }
}

TEST_CASE("gamma against 20-digit references") {
    // reference values computed independently at the exact binary arguments
    const struct {
        double x, want;
    } refs[] = {
        {0.1, 9.5135076986687312858},
        {2.5, 1.3293403881791370205},
        {10.3, 716430.68906237640663},
        {33.7, 3.0321626547398717871e+36},
        {49.5, 8.6676018431352723453e+61},
        {-0.7, -4.2736699824108433611},
        {-25.3, 9.4582944856111438522e-26},
    };
    for (const auto& r : refs) CHECK(rel_err(analytic::gamma(r.x), r.want) < 1e-12);
}

TEST_CASE("watson series against 20-digit references") {
    const struct {
        double a, b, c, want;
    } refs[] = {
        {0.3, 0.4, 1.2, 1.1275875200331820576},
        {0.7, 0.7, 1.0, 1.5584480371201773949},  // slowest decay on the grid
        {0.1, 0.7, 2.5, 1.0614382425079074022},
        {0.5, 0.5, 2.0, 1.2223099629457561787},
        {-2.0, 0.5, 1.5, 1.75},                  // terminating
    };
    for (const auto& r : refs) {
        double got = watson_series({r.a, r.b, r.c}, {.abs_tol = 1e-11});
        CHECK(std::abs(got - r.want) < 5e-13 * (1.0 + std::abs(r.want)));
    }
}

TEST_CASE("gamma across the contract range") {
    // ratio chain ties Gamma(-49.5) back to Gamma(0.5)
    double x = -49.5;
    double prod = 1.0;
    for (int i = 0; i < 50; ++i) prod *= (x + i);
    CHECK(rel_err(analytic::gamma(x) * prod, analytic::gamma(0.5)) < 1e-11);
    CHECK(rel_err(analytic::gamma(50.0), 49.0 * 48.0 * analytic::gamma(48.0)) < 1e-12);
}

TEST_CASE("unreachable tolerance raises NoConvergence") {
    CHECK_THROWS_AS(analytic::watson_series({0.7, 0.7, 1.0}, {.abs_tol = 1e-17}),
                    NoConvergenceError);
}

TEST_CASE("watson rhs with paired-off factors") {
    // a = b = 0, c = 1: numerator and denominator Gamma factors cancel pairwise
    CHECK(rel_err(watson_rhs({0.0, 0.0, 1.0}), 1.0) < 1e-13);
}

TEST_CASE("watson precondition violations") {
    CHECK_THROWS_AS(watson_series({2.0, 2.0, 1.0}), InvalidParamsError);   // 2c+1-a-b <= 0
    CHECK_THROWS_AS(watson_series({0.3, 0.4, -1.0}), InvalidParamsError);  // 2c non-positive int
    CHECK_THROWS_AS(watson_series({-1.5, -1.5, 1.0}), InvalidParamsError); // (a+b+1)/2 = -1
    CHECK_THROWS_AS(watson_rhs({0.3, 0.7, 0.0}), PoleError);
}

TEST_CASE("verify_eq1 report") {
    auto rep = verify_eq1({0.3, 0.4, 1.2});
    CHECK(rep.status == Status::pass);
    CHECK(rep.identity_id == "eq1");
}

TEST_CASE("eq2 consistency") {
    CHECK(eq2_consistency(Rational(3, 10), Rational(2, 5), 2).status == Status::pass);
    // a + b = 1: the split degenerates but the cross-multiplied form stays true
    CHECK(eq2_consistency(Rational(1, 2), Rational(1, 2), 1).status == Status::pass);
    CHECK(eq2_consistency(Rational(3, 10), Rational(7, 10), 2).status == Status::pass);
    // a = 0: tail factor vanishes, identity reduces to the exact value
    CHECK(eq2_consistency(Rational(0), Rational(3, 10), 3).status == Status::pass);
    // odd integer a: cos(pi a/2) = 0 is flagged, not silently passed
    CHECK_THROWS_AS(eq2_consistency(Rational(3), Rational(1, 4), 1), DegenerateTrigError);
}

TEST_CASE("gamma transformation identities") {
    // 2.5 exercises the reflection identity only: at half-odd t the second
    // identity is exactly degenerate and skipped
    std::vector<std::pair<double, int>> samples{{2.5, 3}, {0.25, 2}, {1.3, 0}, {7.7, 5}, {0.9, 1}};
    auto rep = analytic::gamma_transform_checks(samples, 1e-10);
    CHECK(rep.status == Status::pass);
    CHECK(rep.identity_id == "gamma_xform");

    std::vector<std::pair<double, int>> near_degenerate{{0.5 + 1e-10, 1}};
    CHECK_THROWS_AS(analytic::gamma_transform_checks(near_degenerate, 1e-10),
                    DegenerateTrigError);
}

TEST_CASE("termwise limit of (c)_k/(2c)_k at c -> -m") {
    // at c = -m + 1e-6 the ratio approaches (-m)_k/(-2m)_k, which vanishes
    // for m < k <= 2m
    for (unsigned m = 1; m <= 4; ++m) {
        double c = -double(m) + 1e-6;
        for (unsigned k = 0; k <= 2 * m; ++k) {
            double num = 1.0, den = 1.0;
            for (unsigned i = 0; i < k; ++i) {
                num *= c + i;
                den *= 2.0 * c + i;
            }
            double target =
                (hyper::pochhammer(Rational(-long(m)), k) /
                 hyper::pochhammer(Rational(-2 * long(m)), k))
                    .to_double();
            CHECK(std::abs(num / den - target) < 1e-4);
        }
    }
}

TEST_CASE("pochhammer-gamma reflection bridge") {
    // (1-a)_m Gamma(a-m)/Gamma(a) = (-1)^m
    for (auto [a, m] : {std::pair{2.7, 4}, {0.3, 2}, {5.25, 7}}) {
        double poch = 1.0;
        for (int i = 0; i < m; ++i) poch *= (1.0 - a) + i;
        double value = poch * analytic::gamma(a - m) / analytic::gamma(a);
        double want = (m % 2 == 0) ? 1.0 : -1.0;
        CHECK(std::abs(value - want) < 1e-11);
    }
}
