// hypersum: exact and numeric verification of truncated hypergeometric
// summation identities over parameter grids, with deterministic reports.

#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypersum/analytic.hpp"
#include "hypersum/doublesum.hpp"
#include "hypersum/hyper.hpp"
#include "hypersum/qseries.hpp"
#include "hypersum/sweep.hpp"

using namespace hypersum;
using exact::Rational;

namespace {

struct IdentityInfo {
    const char* id;
    bool numeric;  // accepts --tol
    const char* axes;
    const char* summary;
};

// The identity catalog: id, numeric?, grid axes, and what gets compared.
const IdentityInfo kIdentities[] = {
    {"eq1", true, "a,b,c",
     "Watson: 3F2(a,b,c; (a+b+1)/2, 2c; 1) = Gamma-ratio closed form (numeric)"},
    {"eq2", true, "a,b,m",
     "limit split: cos-ratio * R_m = truncated value + sin-ratio * R_m (numeric)"},
    {"eq3", false, "m | a,b,m",
     "sum_{k<=m} (a)_k(b)_k(-m)_k/(k!((a+b+1)/2)_k(-2m)_k) = ((a+1)/2)_m((b+1)/2)_m/((1/2)_m((a+b+1)/2)_m)"},
    {"eq4", false, "m",
     "Bailey transform: 3F2(-m,2a,2b; a+b+1/2, 2c; 1) = 4F3(a,b,2c+m,-m; a+b+1/2, c, c+1/2; 1), first m+1 terms"},
    {"eq5", false, "m",
     "proof chain to Pfaff-Saalschutz, plus the a->a/2, b->b/2 substitution back to eq3"},
    {"eq6", false, "n",
     "q-analogue: truncated 4phi3 in A=a^2, B=b^2 equals (Aq;q^2)_N(Bq;q^2)_N/((ABq;q^2)_N(q;q^2)_N)"},
    {"prop2", false, "m,n", "S(m,n) direct double sum = closed form = product form"},
    {"ratio", false, "m,n", "S(m,n)/S(m-1,n+1) = 2m(n+1)/((2n+1)(n+2m+1))"},
    {"minv", false, "size", "binomial matrix M_{ij} = C(i,j)(-1)^j satisfies M*M = I"},
    {"binom_transform", false, "n,k", "B_{nk} = sum_i C(k,i)(-1)^i A_{ni} and its inversion"},
    {"cvstep", false, "k,j",
     "Chu-Vandermonde: sum_i C(k,i)(-1)^i/(i+j+1/2) = k!/((j+1/2)_{k+1})"},
    {"qlimit", true, "a,b,m", "q->1 degeneration of eq6 toward eq3 (first-order rate check)"},
    {"gamma_xform", true, "-",
     "Gamma(a-m) = (-1)^m Gamma(a)/((1-a)_m) and Gamma(1/2+t)Gamma(1/2-t-m) = (-1)^m pi/((1/2+t)_m cos(pi t))"},
};

const IdentityInfo* find_identity(const std::string& id) {
    for (const auto& info : kIdentities)
        if (id == info.id) return &info;
    return nullptr;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto next = s.find(sep, pos);
        if (next == std::string::npos) {
            out.push_back(s.substr(pos));
            break;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

// "lo..hi" (inclusive) or a single value or "v1|v2|v3"; exact rationals allowed.
std::vector<Rational> parse_values(const std::string& spec) {
    auto dots = spec.find("..");
    std::vector<Rational> vals;
    if (dots != std::string::npos) {
        Rational lo = Rational::from_string(spec.substr(0, dots));
        Rational hi = Rational::from_string(spec.substr(dots + 2));
        if (!lo.is_integer() || !hi.is_integer())
            throw UsageError("range endpoints must be integers: \"" + spec + "\"");
        for (Rational v = lo; v <= hi; v += Rational(1)) vals.push_back(v);
        return vals;
    }
    for (const auto& part : split(spec, '|')) {
        if (part.empty()) throw UsageError("empty value in \"" + spec + "\"");
        vals.push_back(Rational::from_string(part));
    }
    std::sort(vals.begin(), vals.end());
    return vals;
}

long to_int(const Rational& v, const char* what, long min_value) {
    if (!v.is_integer()) throw UsageError(std::string(what) + " must be an integer");
    if (!(v >= Rational(min_value)))
        throw UsageError(std::string(what) + " must be >= " + std::to_string(min_value));
    return std::stol(v.numerator().get_str());
}

struct Grid {
    // axis name -> sorted values; looked up by the identity runners
    std::vector<std::pair<std::string, std::vector<Rational>>> axes;

    const std::vector<Rational>& get(const std::string& name) const {
        for (const auto& [n, v] : axes)
            if (n == name) return v;
        throw UsageError("missing required parameter --" + name);
    }
    bool has(const std::string& name) const {
        for (const auto& [n, v] : axes)
            if (n == name) return true;
        return false;
    }
};

struct RunOptions {
    double tol = 0.0;      // 0 = identity default
    bool tol_given = false;
    double h = 1e-3;
    unsigned samples = 50;
    unsigned seed = 20240803;
};

// Parameter names each identity accepts (eq3 takes either m alone or a,b,m).
std::vector<std::string> allowed_axes(const std::string& id) {
    if (id == "eq1") return {"a", "b", "c"};
    if (id == "eq2" || id == "qlimit" || id == "eq3") return {"a", "b", "m"};
    if (id == "eq4" || id == "eq5") return {"m"};
    if (id == "eq6") return {"n"};
    if (id == "prop2" || id == "ratio") return {"m", "n"};
    if (id == "minv") return {"size"};
    if (id == "binom_transform") return {"n", "k"};
    if (id == "cvstep") return {"k", "j"};
    return {};  // gamma_xform: sampled, no axes
}

void validate_axes(const IdentityInfo& info, const Grid& grid) {
    auto allowed = allowed_axes(info.id);
    for (std::size_t i = 0; i < grid.axes.size(); ++i) {
        const auto& name = grid.axes[i].first;
        bool known = false;
        for (const auto& ok : allowed) known = known || ok == name;
        if (!known)
            throw UsageError(std::string(info.id) + " does not take parameter \"" + name + "\"");
        for (std::size_t j = i + 1; j < grid.axes.size(); ++j)
            if (grid.axes[j].first == name)
                throw UsageError("parameter \"" + name + "\" given more than once");
    }
}

using Task = std::function<VerificationReport()>;

// Expands the grid into one task per parameter point, nested loops in axis
// order with ascending values, which yields lexicographic report order.
std::vector<Task> build_tasks(const IdentityInfo& info, const Grid& grid, const RunOptions& opt) {
    std::vector<Task> tasks;
    const std::string id = info.id;

    auto ints = [&](const std::string& name, long min_value) {
        std::vector<long> out;
        for (const auto& v : grid.get(name)) out.push_back(to_int(v, name.c_str(), min_value));
        return out;
    };

    if (id == "eq1") {
        analytic::NumericTolerance tol{.abs_tol = opt.tol_given ? opt.tol : 1e-10};
        for (const auto& a : grid.get("a"))
            for (const auto& b : grid.get("b"))
                for (const auto& c : grid.get("c"))
                    tasks.push_back([=] {
                        auto report = analytic::verify_eq1(
                            {a.to_double(), b.to_double(), c.to_double()}, tol);
                        // keep the exact parameter spellings the caller gave
                        report.params = {{"a", a.to_string()},
                                         {"b", b.to_string()},
                                         {"c", c.to_string()}};
                        return report;
                    });
    } else if (id == "eq2") {
        analytic::NumericTolerance tol{.abs_tol = opt.tol_given ? opt.tol : 1e-10};
        for (const auto& a : grid.get("a"))
            for (const auto& b : grid.get("b"))
                for (long m : ints("m", 0))
                    tasks.push_back(
                        [=] { return analytic::eq2_consistency(a, b, unsigned(m), tol); });
    } else if (id == "eq3") {
        if (grid.has("a") || grid.has("b")) {
            for (const auto& a : grid.get("a"))
                for (const auto& b : grid.get("b"))
                    for (long m : ints("m", 0))
                        tasks.push_back([=] { return hyper::verify_eq3_point(a, b, unsigned(m)); });
        } else {
            for (long m : ints("m", 1))
                tasks.push_back([=] { return hyper::verify_eq3_symbolic(unsigned(m)); });
        }
    } else if (id == "eq4") {
        for (long m : ints("m", 1))
            tasks.push_back([=] { return hyper::verify_bailey(unsigned(m)); });
    } else if (id == "eq5") {
        for (long m : ints("m", 1))
            tasks.push_back([=] { return hyper::verify_eq5_chain(unsigned(m)); });
    } else if (id == "eq6") {
        for (long n : ints("n", 1))
            tasks.push_back([=] { return qseries::verify_eq6(unsigned(n)); });
    } else if (id == "prop2") {
        for (long m : ints("m", 0))
            for (long n : ints("n", 0))
                tasks.push_back([=] {
                    return doublesum::verify_prop2({unsigned(m), unsigned(n)});
                });
    } else if (id == "ratio") {
        for (long m : ints("m", 1))
            for (long n : ints("n", 0))
                tasks.push_back([=] { return doublesum::ratio_check(unsigned(m), unsigned(n)); });
    } else if (id == "minv") {
        for (long s : ints("size", 1))
            tasks.push_back([=] { return doublesum::binomial_matrix_self_inverse(unsigned(s)); });
    } else if (id == "binom_transform") {
        for (long n : ints("n", 0))
            for (long k : ints("k", 0))
                tasks.push_back(
                    [=] { return doublesum::binomial_transform_check(unsigned(n), unsigned(k)); });
    } else if (id == "cvstep") {
        for (long k : ints("k", 0))
            for (long j : ints("j", 0))
                tasks.push_back(
                    [=] { return doublesum::chu_vandermonde_report(unsigned(k), unsigned(j)); });
    } else if (id == "qlimit") {
        for (const auto& a : grid.get("a"))
            for (const auto& b : grid.get("b"))
                for (long m : ints("m", 1))
                    tasks.push_back(
                        [=] { return qseries::q_limit_check(a, b, unsigned(m), opt.h); });
    } else if (id == "gamma_xform") {
        double tol = opt.tol_given ? opt.tol : 1e-10;
        unsigned samples = opt.samples, seed = opt.seed;
        tasks.push_back([=] {
            std::mt19937 rng(seed);
            std::uniform_real_distribution<double> dist_a(0.15, 12.0);
            std::uniform_int_distribution<int> dist_m(0, 6);
            std::vector<std::pair<double, int>> pts;
            while (pts.size() < samples) {
                double a = dist_a(rng);
                double frac = a - std::floor(a);
                // keep clear of Gamma poles and cos(pi t) zeros
                if (frac < 0.05 || frac > 0.95 || std::abs(frac - 0.5) < 0.05) continue;
                pts.emplace_back(a, dist_m(rng));
            }
            return analytic::gamma_transform_checks(pts, tol);
        });
    } else {
        throw UsageError("unknown identity \"" + id + "\"");
    }
    if (tasks.empty()) throw UsageError("empty parameter range for " + id);
    return tasks;
}

void print_list() {
    std::printf("%-16s %-8s %-8s %s\n", "identity", "mode", "axes", "statement");
    for (const auto& info : kIdentities)
        std::printf("%-16s %-8s %-8s %s\n", info.id, info.numeric ? "numeric" : "exact",
                    info.axes, info.summary);
}

struct CommonFlags {
    std::string format = "text";
    unsigned jobs = 1;
    bool timings = false;
};

int emit_and_exit(const std::vector<VerificationReport>& reports, const CommonFlags& flags) {
    std::fputs(emit_report(reports, parse_report_format(flags.format), flags.timings).c_str(),
               stdout);
    return worst_exit_code(reports);
}

// --- eval: single-point evaluation of every quantity -----------------------

struct EvalArgs {
    std::string quantity;
    Grid grid;
    double tol = 1e-11;
};

long eval_int(const Grid& g, const char* name, long min_value) {
    const auto& vals = g.get(name);
    if (vals.size() != 1) throw UsageError(std::string("--") + name + " must be a single value");
    return to_int(vals[0], name, min_value);
}

Rational eval_rat(const Grid& g, const char* name) {
    const auto& vals = g.get(name);
    if (vals.size() != 1) throw UsageError(std::string("--") + name + " must be a single value");
    return vals[0];
}

std::string run_eval(const EvalArgs& args) {
    const auto& q = args.quantity;
    const Grid& g = args.grid;
    if (q == "poch")
        return hyper::pochhammer(eval_rat(g, "t"), unsigned(eval_int(g, "k", 0))).to_string();
    if (q == "eq3-lhs")
        return hyper::eq3_lhs(eval_rat(g, "a"), eval_rat(g, "b"), unsigned(eval_int(g, "m", 0)))
            .to_string();
    if (q == "eq3-rhs")
        return hyper::eq3_rhs(eval_rat(g, "a"), eval_rat(g, "b"), unsigned(eval_int(g, "m", 0)))
            .to_string();
    if (q == "ps-lhs" || q == "ps-rhs") {
        auto ps = hyper::pfaff_saalschutz(eval_rat(g, "a"), eval_rat(g, "b"),
                                          unsigned(eval_int(g, "m", 1)));
        return (q == "ps-lhs" ? ps.lhs : ps.rhs).to_string();
    }
    if (q == "dblsum")
        return doublesum::S_direct({unsigned(eval_int(g, "m", 0)), unsigned(eval_int(g, "n", 0))})
            .to_string();
    if (q == "dblsum-closed")
        return doublesum::S_closed({unsigned(eval_int(g, "m", 0)), unsigned(eval_int(g, "n", 0))})
            .to_string();
    if (q == "dblsum-alt")
        return doublesum::S_closed_alt(
                   {unsigned(eval_int(g, "m", 0)), unsigned(eval_int(g, "n", 0))})
            .to_string();
    if (q == "asum")
        return doublesum::A(unsigned(eval_int(g, "n", 0)), unsigned(eval_int(g, "i", 0)))
            .to_string();
    if (q == "bclosed")
        return doublesum::B(unsigned(eval_int(g, "n", 0)), unsigned(eval_int(g, "k", 0)))
            .to_string();
    if (q == "cv-lhs" || q == "cv-rhs") {
        auto [lhs, rhs] = doublesum::chu_vandermonde_step(unsigned(eval_int(g, "k", 0)),
                                                          unsigned(eval_int(g, "j", 0)));
        return (q == "cv-lhs" ? lhs : rhs).to_string();
    }
    if (q == "eq6-lhs") return qseries::eq6_lhs(unsigned(eval_int(g, "n", 1))).to_string();
    if (q == "eq6-rhs") return qseries::eq6_rhs(unsigned(eval_int(g, "n", 1))).to_string();
    if (q == "gamma") return format_double(analytic::gamma(eval_rat(g, "x").to_double()));
    if (q == "watson-series" || q == "watson-rhs") {
        analytic::WatsonParams p{eval_rat(g, "a").to_double(), eval_rat(g, "b").to_double(),
                                 eval_rat(g, "c").to_double()};
        if (q == "watson-rhs") return format_double(analytic::watson_rhs(p));
        return format_double(analytic::watson_series(p, {.abs_tol = args.tol}));
    }
    throw UsageError("unknown quantity \"" + q + "\"; see --help");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and numeric verification of hypergeometric summation identities"};
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(0, 1);

    bool list_flag = false;
    app.add_flag("--list", list_flag, "list every identity id with its statement");

    CommonFlags flags;
    std::string identity, quantity, grid_spec;
    std::map<std::string, std::string> axis_flags;
    RunOptions opt;
    std::string m_max, n_max, k_max, size_max;

    auto make_sub = [&](const char* name, const char* desc) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        cmd->set_help_flag("--help", "print help and exit");
        return cmd;
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", flags.format, "report format: text, json, or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--jobs", flags.jobs, "worker threads for the sweep")
            ->envname("HYPERSUM_JOBS");
        cmd->add_flag("--timings", flags.timings, "include measured elapsed_micros in reports");
    };
    auto add_axes = [&](CLI::App* cmd) {
        for (const char* name : {"m", "n", "k", "j", "size", "a", "b", "c", "t", "x", "i"})
            cmd->add_option(std::string("--") + name, axis_flags[name],
                            std::string("values for ") + name + " (lo..hi, v, or v1|v2|v3)");
    };

    CLI::App* verify = make_sub("verify", "verify one identity over parameter ranges");
    verify->add_option("identity", identity, "identity id (see --list)")->required();
    add_axes(verify);
    verify->add_option("--m-max", m_max, "shorthand for --m 1..H");
    verify->add_option("--n-max", n_max, "shorthand for --n 1..H");
    verify->add_option("--k-max", k_max, "shorthand for --k 0..H");
    verify->add_option("--size-max", size_max, "shorthand for --size 1..H");
    auto* tol_opt = verify->add_option("--tol", opt.tol, "absolute tolerance (numeric identities only)");
    verify->add_option("--h", opt.h, "q->1 step for qlimit");
    verify->add_option("--samples", opt.samples, "sample count for gamma_xform");
    verify->add_option("--seed", opt.seed, "random seed for gamma_xform");
    add_common(verify);

    CLI::App* sweep = make_sub("sweep", "verify one identity over an explicit grid");
    sweep->add_option("identity", identity, "identity id (see --list)")->required();
    sweep->add_option("--grid", grid_spec, "grid spec: name=lo..hi;name=v1|v2|...")->required();
    auto* sweep_tol = sweep->add_option("--tol", opt.tol, "absolute tolerance (numeric identities only)");
    sweep->add_option("--h", opt.h, "q->1 step for qlimit");
    sweep->add_option("--samples", opt.samples, "sample count for gamma_xform");
    sweep->add_option("--seed", opt.seed, "random seed for gamma_xform");
    add_common(sweep);

    CLI::App* eval = make_sub("eval", "evaluate one quantity at one parameter point");
    eval->add_option("quantity", quantity,
                     "poch, eq3-lhs, eq3-rhs, ps-lhs, ps-rhs, dblsum, dblsum-closed, dblsum-alt, "
                     "asum, bclosed, cv-lhs, cv-rhs, eq6-lhs, eq6-rhs, gamma, watson-series, "
                     "watson-rhs")
        ->required();
    add_axes(eval);
    double eval_tol = 1e-11;
    eval->add_option("--tol", eval_tol, "series tolerance for watson-series");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (list_flag) {
            print_list();
            return 0;
        }
        if (!verify->parsed() && !sweep->parsed() && !eval->parsed()) {
            std::cerr << app.help();
            return 2;
        }

        Grid grid;
        if (sweep->parsed()) {
            for (const auto& part : split(grid_spec, ';')) {
                auto eq = part.find('=');
                if (eq == std::string::npos)
                    throw UsageError("bad grid entry \"" + part + "\" (want name=values)");
                grid.axes.emplace_back(part.substr(0, eq), parse_values(part.substr(eq + 1)));
            }
        } else {
            auto add_axis = [&](const std::string& name, const std::string& spec) {
                if (!spec.empty()) grid.axes.emplace_back(name, parse_values(spec));
            };
            if (!m_max.empty()) axis_flags["m"] = "1.." + m_max;
            if (!n_max.empty()) axis_flags["n"] = "1.." + n_max;
            if (!k_max.empty()) axis_flags["k"] = "0.." + k_max;
            if (!size_max.empty()) axis_flags["size"] = "1.." + size_max;
            for (const auto& [name, spec] : axis_flags) add_axis(name, spec);
        }

        if (eval->parsed()) {
            std::printf("%s\n", run_eval({quantity, grid, eval_tol}).c_str());
            return 0;
        }

        const IdentityInfo* info = find_identity(identity);
        if (!info) throw UsageError("unknown identity \"" + identity + "\"; see --list");
        validate_axes(*info, grid);
        opt.tol_given = (verify->parsed() && tol_opt->count() > 0) ||
                        (sweep->parsed() && sweep_tol->count() > 0);
        if (opt.tol_given && !info->numeric)
            throw UsageError(std::string(info->id) + " is exact; --tol is not accepted");

        auto tasks = build_tasks(*info, grid, opt);
        auto reports = run_ordered(tasks, flags.jobs);
        return emit_and_exit(reports, flags);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error (" << e.kind() << "): " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
