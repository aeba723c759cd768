#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypersum/analytic.hpp"
#include "hypersum/doublesum.hpp"
#include "hypersum/hyper.hpp"
#include "hypersum/qseries.hpp"

namespace py = pybind11;
using namespace hypersum;
using exact::Rational;

namespace {

Rational rat(const std::string& s) { return Rational::from_string(s); }

py::dict to_dict(const VerificationReport& r) {
    py::dict d;
    d["identity_id"] = r.identity_id;
    py::dict params;
    for (const auto& [k, v] : r.params) params[py::str(k)] = v;
    d["params"] = params;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["status"] = std::string(status_name(r.status));
    d["error_kind"] = r.error_kind;
    d["elapsed_micros"] = r.elapsed_micros;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact and numeric verification of hypergeometric summation identities";

    py::register_exception<Error>(m, "HypersumError");

    // exact scalar helpers (values travel as canonical "p/q" strings)
    m.def("rat_add", [](const std::string& a, const std::string& b) {
        return (rat(a) + rat(b)).to_string();
    });
    m.def("rat_mul", [](const std::string& a, const std::string& b) {
        return (rat(a) * rat(b)).to_string();
    });
    m.def("pochhammer", [](const std::string& t, unsigned k) {
        return hyper::pochhammer(rat(t), k).to_string();
    });

    // single-sum identities
    m.def("eq3_lhs", [](const std::string& a, const std::string& b, unsigned m) {
        return hyper::eq3_lhs(rat(a), rat(b), m).to_string();
    });
    m.def("eq3_rhs", [](const std::string& a, const std::string& b, unsigned m) {
        return hyper::eq3_rhs(rat(a), rat(b), m).to_string();
    });
    m.def("verify_eq3_symbolic", [](unsigned m) { return to_dict(hyper::verify_eq3_symbolic(m)); });
    m.def("verify_eq3_point", [](const std::string& a, const std::string& b, unsigned m) {
        return to_dict(hyper::verify_eq3_point(rat(a), rat(b), m));
    });
    m.def("verify_bailey", [](unsigned m) { return to_dict(hyper::verify_bailey(m)); });
    m.def("verify_eq5_chain", [](unsigned m) { return to_dict(hyper::verify_eq5_chain(m)); });
    m.def("pfaff_saalschutz", [](const std::string& a, const std::string& b, unsigned m) {
        auto ps = hyper::pfaff_saalschutz(rat(a), rat(b), m);
        return py::make_tuple(ps.lhs.to_string(), ps.rhs.to_string());
    });

    // double sum
    m.def("s_direct", [](unsigned m, unsigned n) {
        return doublesum::S_direct({m, n}).to_string();
    });
    m.def("s_closed", [](unsigned m, unsigned n) {
        return doublesum::S_closed({m, n}).to_string();
    });
    m.def("s_closed_alt", [](unsigned m, unsigned n) {
        return doublesum::S_closed_alt({m, n}).to_string();
    });
    m.def("a_inner", [](unsigned n, unsigned i) { return doublesum::A(n, i).to_string(); });
    m.def("b_closed", [](unsigned n, unsigned k) { return doublesum::B(n, k).to_string(); });
    m.def("verify_prop2", [](unsigned m, unsigned n) {
        return to_dict(doublesum::verify_prop2({m, n}));
    });
    m.def("ratio_check", [](unsigned m, unsigned n) {
        return to_dict(doublesum::ratio_check(m, n));
    });
    m.def("binomial_matrix_self_inverse", [](unsigned size) {
        return to_dict(doublesum::binomial_matrix_self_inverse(size));
    });
    m.def("binomial_transform_check", [](unsigned n, unsigned k) {
        return to_dict(doublesum::binomial_transform_check(n, k));
    });
    m.def("chu_vandermonde_step", [](unsigned k, unsigned j) {
        auto [lhs, rhs] = doublesum::chu_vandermonde_step(k, j);
        return py::make_tuple(lhs.to_string(), rhs.to_string());
    });

    // q-analogue
    m.def("eq6_lhs", [](unsigned N) { return qseries::eq6_lhs(N).to_string(); });
    m.def("eq6_rhs", [](unsigned N) { return qseries::eq6_rhs(N).to_string(); });
    m.def("verify_eq6", [](unsigned N) { return to_dict(qseries::verify_eq6(N)); });
    m.def("q_limit_check", [](const std::string& a, const std::string& b, unsigned m, double h) {
        return to_dict(qseries::q_limit_check(rat(a), rat(b), m, h));
    }, py::arg("a"), py::arg("b"), py::arg("m"), py::arg("h") = 1e-3);

    // analytic checks
    m.def("gamma", [](double x) { return analytic::gamma(x); });
    m.def("watson_series", [](double a, double b, double c, double abs_tol) {
        return analytic::watson_series({a, b, c}, {.abs_tol = abs_tol});
    }, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("abs_tol") = 1e-12);
    m.def("watson_rhs", [](double a, double b, double c) {
        return analytic::watson_rhs({a, b, c});
    });
    m.def("verify_eq1", [](double a, double b, double c, double abs_tol) {
        return to_dict(analytic::verify_eq1({a, b, c}, {.abs_tol = abs_tol}));
    }, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("abs_tol") = 1e-10);
    m.def("eq2_consistency", [](const std::string& a, const std::string& b, unsigned m,
                                double abs_tol) {
        return to_dict(analytic::eq2_consistency(rat(a), rat(b), m, {.abs_tol = abs_tol}));
    }, py::arg("a"), py::arg("b"), py::arg("m"), py::arg("abs_tol") = 1e-10);
}
