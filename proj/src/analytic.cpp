#include "hypersum/analytic.hpp"

#include <chrono>
#include <cmath>
#include <string>
#include <vector>

#include "hypersum/field.hpp"
#include "hypersum/hyper.hpp"

namespace hypersum::analytic {

namespace {

std::int64_t micros_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
        .count();
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Godfrey's 15-term Lanczos coefficients for g = 607/128.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};

double lanczos_sum(double x) {
    double s = kLanczos[0];
    for (int i = 1; i < 15; ++i) s += kLanczos[i] / (x + i - 1);
    return s;
}

double gamma_positive(double x) {
    // x >= 0.5
    double t = x + kLanczosG - 0.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, x - 0.5) * std::exp(-t) * lanczos_sum(x);
}

} // namespace

double sin_pi(double x) {
    double r = std::fmod(x, 2.0);
    if (r > 1.0) r -= 2.0;
    if (r < -1.0) r += 2.0;
    if (r > 0.5) r = 1.0 - r;
    if (r < -0.5) r = -1.0 - r;
    return std::sin(M_PI * r);
}

double cos_pi(double x) { return sin_pi(x + 0.5); }

double rational_mod2(const Rational& x) {
    // x - 2*floor(x/2), reduced exactly, then shifted into [-1, 1).
    Rational half_x = x / Rational(2);
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), half_x.numerator().get_mpz_t(), half_x.denominator().get_mpz_t());
    Rational r = x - Rational(fl, mpz_class(1)) * Rational(2);
    if (r >= Rational(1)) r -= Rational(2);
    return r.to_double();
}

double gamma(double x) {
    if (is_nonpositive_integer(x))
        throw PoleError("Gamma pole at " + format_double(x));
    if (x >= 0.5) return gamma_positive(x);
    // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)).
    return M_PI / (sin_pi(x) * gamma_positive(1.0 - x));
}

double log_gamma_pos(double x) {
    if (!(x > 0.0)) throw PoleError("log Gamma requires a positive argument");
    if (x < 0.5) return std::log(gamma(x));
    double t = x + kLanczosG - 0.5;
    return 0.5 * std::log(2.0 * M_PI) + (x - 0.5) * std::log(t) - t + std::log(lanczos_sum(x));
}

namespace {

void validate_watson(const WatsonParams& p) {
    if (!(2.0 * p.c + 1.0 - p.a - p.b > 0.0))
        throw InvalidParamsError("convergence requires 2c + 1 - a - b > 0");
    if (is_nonpositive_integer(2.0 * p.c))
        throw InvalidParamsError("lower parameter 2c is a non-positive integer");
    if (is_nonpositive_integer((p.a + p.b + 1.0) / 2.0))
        throw InvalidParamsError("lower parameter (a+b+1)/2 is a non-positive integer");
}

// log of term(x)/term(x0) for real-valued index x, used by the tail formula.
struct TermLog {
    double a, b, c, d, e, x0;
    double operator()(double x) const {
        return log_gamma_pos(a + x) + log_gamma_pos(b + x) + log_gamma_pos(c + x) -
               log_gamma_pos(1.0 + x) - log_gamma_pos(d + x) - log_gamma_pos(e + x) -
               (log_gamma_pos(a + x0) + log_gamma_pos(b + x0) + log_gamma_pos(c + x0) -
                log_gamma_pos(1.0 + x0) - log_gamma_pos(d + x0) - log_gamma_pos(e + x0));
    }
};

struct Quadrature {
    double value;
    double error;
};

// tanh-sinh quadrature of f over (0, 1); handles the mild endpoint
// singularity of the tail integrand.
template <class F>
Quadrature tanh_sinh_01(F f) {
    auto node = [](double tau, double& u, double& w) {
        double s = 0.5 * M_PI * std::sinh(tau);
        u = 1.0 / (1.0 + std::exp(2.0 * s));  // = (1 - tanh(s)) / 2
        double ch = std::cosh(s);
        w = 0.25 * M_PI * std::cosh(tau) / (ch * ch);
    };
    const double tau_max = 6.5;
    double h = 0.5;
    double sum = 0.0;
    {
        double u, w;
        node(0.0, u, w);
        sum = w * f(u);
        for (double tau = h; tau <= tau_max; tau += h) {
            node(tau, u, w);
            if (w > 0.0 && u > 0.0 && u < 1.0) sum += w * (f(u) + f(1.0 - u));
        }
    }
    double prev = sum * h;
    double value = prev;
    double err = std::abs(prev);
    for (int level = 0; level < 4; ++level) {
        h *= 0.5;
        for (double tau = h; tau <= tau_max; tau += 2.0 * h) {
            double u, w;
            node(tau, u, w);
            if (w > 0.0 && u > 0.0 && u < 1.0) sum += w * (f(u) + f(1.0 - u));
        }
        value = sum * h;
        err = std::abs(value - prev);
        prev = value;
        if (err <= 1e-14 * (1.0 + std::abs(value))) break;
    }
    return {value, err};
}

} // namespace

double watson_series(const WatsonParams& p, const NumericTolerance& tol) {
    validate_watson(p);
    const double d = (p.a + p.b + 1.0) / 2.0;
    const double e = 2.0 * p.c;

    double term = 1.0;
    double sum = 0.0, comp = 0.0;  // Kahan
    unsigned k = 0;
    for (; k < tol.max_terms; ++k) {
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;

        double dk = double(k);
        double next = term * ((p.a + dk) * (p.b + dk) * (p.c + dk)) /
                      ((1.0 + dk) * (d + dk) * (e + dk));
        if (next == 0.0) return sum;  // terminating series: the sum is exact
        term = next;
        if (std::abs(term) < 1e-305) return sum;  // tail below representable noise
    }

    // Tail from index K0 = max_terms onward:
    //   sum_{j>=K0} t(j) = I + t(K0)/2 - t'(K0)/12 + O(t'''(K0)),
    // with I = integral_{K0}^inf t(x) dx mapped onto (0,1) by x = K0/u.
    const double K0 = double(tol.max_terms);
    const double t_k0 = term;
    TermLog lt{p.a, p.b, p.c, d, e, K0};

    // Past x_cut the Gamma magnitudes make direct log differences noisy, so
    // the integrand is continued with its exact power-law exponent
    // p = d + e + 1 - a - b - c, matched at x_cut.
    const double decay = d + e + 1.0 - p.a - p.b - p.c;
    const double x_cut = 1e9;
    const double r_cut = lt(x_cut) + decay * std::log(x_cut / K0);

    auto integrand = [&](double u) {
        double x = K0 / u;
        double lg = x <= x_cut ? lt(x) : r_cut - decay * std::log(x / K0);
        double log_value = lg - 2.0 * std::log(u);  // u^2 alone can underflow
        if (log_value < -745.0) return 0.0;
        return std::exp(log_value);
    };
    Quadrature quad = tanh_sinh_01(integrand);
    double integral = t_k0 * K0 * quad.value;

    double deriv = t_k0 * (lt(K0 + 0.5) - lt(K0 - 0.5));  // t'(K0), central difference
    double tail = integral + t_k0 / 2.0 - deriv / 12.0;

    double err_est = std::abs(t_k0 * K0 * quad.error) + std::abs(deriv) * 1e-2 +
                     std::abs(tail) * 1e-12;
    if (err_est > tol.abs_tol)
        throw NoConvergenceError("tail error estimate " + format_double(err_est) +
                                 " exceeds abs_tol after max_terms");
    return sum + tail;
}

double watson_rhs(const WatsonParams& p) {
    struct Factor {
        const char* label;
        double value;
    };
    const Factor num[4] = {{"Gamma(1/2)", 0.5},
                           {"Gamma(1/2+c)", 0.5 + p.c},
                           {"Gamma(1/2+a/2+b/2)", 0.5 + p.a / 2 + p.b / 2},
                           {"Gamma(1/2-a/2-b/2+c)", 0.5 - p.a / 2 - p.b / 2 + p.c}};
    const Factor den[4] = {{"Gamma(1/2+a/2)", 0.5 + p.a / 2},
                           {"Gamma(1/2+b/2)", 0.5 + p.b / 2},
                           {"Gamma(1/2-a/2+c)", 0.5 - p.a / 2 + p.c},
                           {"Gamma(1/2-b/2+c)", 0.5 - p.b / 2 + p.c}};
    double result = 1.0;
    for (const auto& f : num) {
        if (is_nonpositive_integer(f.value)) throw PoleError(std::string(f.label) + " has a pole");
        result *= gamma(f.value);
    }
    for (const auto& f : den) {
        if (is_nonpositive_integer(f.value)) throw PoleError(std::string(f.label) + " has a pole");
        result /= gamma(f.value);
    }
    return result;
}

VerificationReport verify_eq1(const WatsonParams& p, const NumericTolerance& tol) {
    auto t0 = std::chrono::steady_clock::now();
    NumericTolerance series_tol = tol;
    // one decade tighter than the comparison, floored at what the summation
    // can certify at all
    series_tol.abs_tol = std::max(std::min(tol.abs_tol * 0.1, 1e-11), 5e-13);
    double lhs = watson_series(p, series_tol);
    double rhs = watson_rhs(p);
    bool ok = std::abs(lhs - rhs) <= tol.abs_tol * (1.0 + std::abs(rhs));
    return make_report("eq1",
                       {{"a", format_double(p.a)}, {"b", format_double(p.b)},
                        {"c", format_double(p.c)}},
                       format_double(lhs), format_double(rhs), ok, micros_since(t0));
}

VerificationReport eq2_consistency(const Rational& a, const Rational& b, unsigned m,
                                   const NumericTolerance& tol) {
    auto t0 = std::chrono::steady_clock::now();
    if (a.is_integer() && a.numerator() % 2 != 0)
        throw DegenerateTrigError("a is an odd integer; cos(pi a/2) vanishes");
    if (b.is_integer() && b.numerator() % 2 != 0)
        throw DegenerateTrigError("b is an odd integer; cos(pi b/2) vanishes");

    double cos_a = cos_pi(rational_mod2(a / Rational(2)));
    double cos_b = cos_pi(rational_mod2(b / Rational(2)));
    double sin_a = sin_pi(rational_mod2(a / Rational(2)));
    double sin_b = sin_pi(rational_mod2(b / Rational(2)));
    double cos_ab = cos_pi(rational_mod2((a + b) / Rational(2)));

    // Pochhammer ratio in floating point; the exact value comes from the
    // truncated-sum machinery.
    double r_m = hyper::eq3_rhs<double>(a.to_double(), b.to_double(), m);
    Rational exact_value = hyper::eq3_rhs(a, b, m);

    // Cross-multiplied by cos(pi(a+b)/2): valid even where that factor
    // vanishes (a+b an odd integer), where the split itself degenerates.
    double lhs = cos_a * cos_b * r_m;
    double rhs = cos_ab * exact_value.to_double() + sin_a * sin_b * r_m;
    bool ok = std::abs(lhs - rhs) <= tol.abs_tol * (1.0 + std::abs(exact_value.to_double()));

    return make_report("eq2",
                       {{"a", a.to_string()}, {"b", b.to_string()}, {"m", std::to_string(m)}},
                       format_double(lhs), format_double(rhs), ok, micros_since(t0));
}

VerificationReport gamma_transform_checks(std::span<const std::pair<double, int>> samples,
                                          double rel_tol) {
    auto t0 = std::chrono::steady_clock::now();
    double worst = 1.0;  // product farthest from 1 across both identities
    for (const auto& [a, m] : samples) {
        double sign = (m % 2 == 0) ? 1.0 : -1.0;

        double poch = 1.0;
        for (int i = 0; i < m; ++i) poch *= (1.0 - a) + i;
        double product1 = gamma(a - m) * poch * sign / gamma(a);
        if (std::abs(product1 - 1.0) > std::abs(worst - 1.0)) worst = product1;

        // Second identity at t = a.  Half-odd t makes both sides exactly
        // degenerate (cos(pi t) = 0 against a Gamma pole), so the identity is
        // inapplicable there; a nearby-but-inexact zero is flagged instead.
        double t = a;
        bool exactly_degenerate = is_nonpositive_integer(0.5 + t) ||
                                  is_nonpositive_integer(0.5 - t - m) || cos_pi(t) == 0.0;
        if (exactly_degenerate) continue;
        if (std::abs(cos_pi(t)) < 1e-8)
            throw DegenerateTrigError("cos(pi t) vanishes at sample t = " + format_double(t));
        double poch_half = 1.0;
        for (int i = 0; i < m; ++i) poch_half *= 0.5 + t + i;
        double product2 =
            gamma(0.5 + t) * gamma(0.5 - t - m) * poch_half * cos_pi(t) * sign / M_PI;
        if (std::abs(product2 - 1.0) > std::abs(worst - 1.0)) worst = product2;
    }
    bool ok = std::abs(worst - 1.0) <= rel_tol;
    return make_report("gamma_xform", {{"samples", std::to_string(samples.size())}},
                       format_double(worst), "1", ok, micros_since(t0));
}

} // namespace hypersum::analytic
