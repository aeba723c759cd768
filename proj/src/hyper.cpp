#include "hypersum/hyper.hpp"

#include <chrono>

namespace hypersum::hyper {

using exact::MultiPoly;
using exact::SymbolTable;
using exact::Symbols;

namespace {

class Stopwatch {
public:
    std::int64_t micros() const {
        return std::chrono::duration_cast<std::chrono::microseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

RatFn sym(const Symbols& s, const char* name) { return RatFn::variable(s, name); }

} // namespace

VerificationReport verify_eq3_symbolic(unsigned m) {
    Stopwatch sw;
    auto syms = SymbolTable::make({"a", "b"});
    RatFn a = sym(syms, "a"), b = sym(syms, "b");
    RatFn lhs = eq3_lhs(a, b, m);
    RatFn rhs = eq3_rhs(a, b, m);
    return make_report("eq3", {{"m", std::to_string(m)}}, lhs.to_string(), rhs.to_string(),
                       lhs == rhs, sw.micros());
}

VerificationReport verify_eq3_point(const Rational& a, const Rational& b, unsigned m) {
    Stopwatch sw;
    std::vector<std::pair<std::string, std::string>> params{
        {"a", a.to_string()}, {"b", b.to_string()}, {"m", std::to_string(m)}};
    try {
        Rational lhs = eq3_lhs(a, b, m);
        Rational rhs = eq3_rhs(a, b, m);
        return make_report("eq3", std::move(params), lhs.to_string(), rhs.to_string(), lhs == rhs,
                           sw.micros());
    } catch (const Error& e) {
        VerificationReport r;
        r.identity_id = "eq3";
        r.params = std::move(params);
        r.status = Status::error;
        r.error_kind = e.kind();
        r.elapsed_micros = sw.micros();
        return r;
    }
}

VerificationReport pfaff_saalschutz_report(const Rational& a, const Rational& b, unsigned m) {
    Stopwatch sw;
    auto [lhs, rhs] = pfaff_saalschutz(a, b, m);
    return make_report("eq5",
                       {{"a", a.to_string()}, {"b", b.to_string()}, {"m", std::to_string(m)}},
                       lhs.to_string(), rhs.to_string(), lhs == rhs, sw.micros());
}

VerificationReport verify_bailey(unsigned m) {
    Stopwatch sw;
    auto syms = SymbolTable::make({"a", "b", "c"});
    RatFn a = sym(syms, "a"), b = sym(syms, "b"), c = sym(syms, "c");
    RatFn one = RatFn::from_integer(syms, 1);
    RatFn half = RatFn::from_rational(syms, Rational(1, 2));
    RatFn two = RatFn::from_integer(syms, 2);
    RatFn neg_m = RatFn::from_integer(syms, -long(m));

    SeriesSpec<RatFn> lhs_spec{{neg_m, two * a, two * b}, {a + b + half, two * c}, one, m + 1};
    SeriesSpec<RatFn> rhs_spec{{a, b, two * c + RatFn::from_integer(syms, long(m)), neg_m},
                               {a + b + half, c, c + half},
                               one,
                               m + 1};
    RatFn lhs = truncated_sum(lhs_spec);
    RatFn rhs = truncated_sum(rhs_spec);
    return make_report("eq4", {{"m", std::to_string(m)}}, lhs.to_string(), rhs.to_string(),
                       lhs == rhs, sw.micros());
}

VerificationReport verify_eq5_chain(unsigned m) {
    Stopwatch sw;
    auto syms = SymbolTable::make({"a", "b"});
    RatFn a = sym(syms, "a"), b = sym(syms, "b");
    RatFn one = RatFn::from_integer(syms, 1);
    RatFn half = RatFn::from_rational(syms, Rational(1, 2));
    RatFn two = RatFn::from_integer(syms, 2);
    RatFn neg_m = RatFn::from_integer(syms, -long(m));

    // Limit form of the transformed pair at c -> -m, all truncated to m+1 terms:
    //   sum (-m)_k (2a)_k (2b)_k / (k! (a+b+1/2)_k (-2m)_k)
    SeriesSpec<RatFn> limit_spec{
        {neg_m, two * a, two * b}, {a + b + half, RatFn::from_integer(syms, -2 * long(m))}, one, m + 1};
    // Pre-cancelled form with the duplicated (-m)_k pair kept explicit.
    SeriesSpec<RatFn> precancel_spec{
        {a, b, neg_m, neg_m}, {a + b + half, neg_m, neg_m + half}, one, m + 1};
    // Balanced 3F2 summed by Pfaff-Saalschutz.
    auto ps = pfaff_saalschutz(a, b, m);

    RatFn limit_sum = truncated_sum(limit_spec);
    RatFn precancel_sum = truncated_sum(precancel_spec);

    bool link1 = limit_sum == precancel_sum;
    bool link2 = precancel_sum == ps.lhs;
    bool link3 = ps.lhs == ps.rhs;

    // Substituting a -> a/2, b -> b/2 in the limit form must reproduce the
    // eq3 series termwise.
    SeriesSpec<RatFn> substituted{
        {neg_m, two * (a * half), two * (b * half)},
        {a * half + b * half + half, RatFn::from_integer(syms, -2 * long(m))},
        one,
        m + 1};
    SeriesSpec<RatFn> eq3spec = eq3_series(a, b, m);
    bool subst_ok = true;
    for (unsigned k = 0; k <= m && subst_ok; ++k)
        subst_ok = series_term(substituted, k) == series_term(eq3spec, k);

    return make_report("eq5", {{"m", std::to_string(m)}}, limit_sum.to_string(),
                       ps.rhs.to_string(), link1 && link2 && link3 && subst_ok, sw.micros());
}

} // namespace hypersum::hyper
