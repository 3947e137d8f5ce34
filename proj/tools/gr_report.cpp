// gr_report: command-line front end for the Gurov-Reshetnyak power-function
// computations. Subcommands reproduce the reference table of norms and
// extremal points, emit plot-ready data series, run the quadrature-oracle
// verification suite, and print the companion BMO constants.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/domain error,
// 3 solver non-convergence.

#include <array>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gr/gr.hpp"

namespace {

using nlohmann::json;

constexpr std::array<double, 13> kDefaultP = {1.15, 1.20, 1.33, 1.50, 1.67, 2.0, 3.0,
                                              6.0,  11.0, 21.0, 101.0, 1001.0, 9999.0};

// 4-decimal alpha column of the reference table. Row p=1.67 lists 1.4993,
// which is 1/(p-1) for p=1.667 rather than p=1.67: the table's p column is
// rounded. --alpha-driven reproduces the table by driving rows from here.
constexpr std::array<double, 13> kReferenceAlphaPlus = {
    6.6667, 5.0000, 3.0303, 2.0000, 1.4993, 1.0000, 0.5000,
    0.2000, 0.1000, 0.0500, 0.0100, 0.0010, 0.0001};

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

struct Formats {
    const char* p;
    const char* eps;
    const char* c;
    const char* alpha;
    const char* eta;
};

Formats table_formats(bool raw) {
    if (raw) return {"%.17g", "%.17g", "%.17g", "%.17g", "%.17g"};
    return {"%.2f", "%.4f", "%.6f", "%.4f", "%.4f"};
}

struct TableRow {
    double p = 0.0;
    double eps_halfline = 0.0;
    double eps_realline = 0.0;
    double c_eps = 0.0;
    double alpha_plus = 0.0;
    double eta_max_plus = 0.0;
    double alpha_minus = 0.0;
    double eta_max_minus = 0.0;
};

TableRow make_row(double p, std::optional<double> alpha_plus_override) {
    double alpha_plus, p_eff;
    if (alpha_plus_override) {
        alpha_plus = *alpha_plus_override;
        p_eff = 1.0 + 1.0 / alpha_plus;
    } else {
        gr::SummabilityExponent se(p);
        alpha_plus = se.alpha_plus();
        p_eff = p;
    }
    const double alpha_minus = -1.0 / p_eff;

    const gr::NormReport plus = gr::norm_realline(gr::PowerExponent(alpha_plus));
    const gr::NormReport minus = gr::norm_realline(gr::PowerExponent(alpha_minus));

    TableRow row;
    row.p = p;
    row.eps_halfline = plus.eps_halfline;
    row.eps_realline = plus.eps_realline;
    row.c_eps = plus.ratio;
    row.alpha_plus = alpha_plus;
    row.eta_max_plus = plus.eta_max;
    row.alpha_minus = alpha_minus;
    row.eta_max_minus = minus.eta_max;
    return row;
}

double round4(double x) { return std::round(x * 1e4) / 1e4; }

int cmd_table(const std::vector<double>& p_list, bool p_list_given, bool alpha_driven,
              bool raw, const std::string& format) {
    std::vector<double> ps(p_list);
    const bool default_list = !p_list_given;
    if (default_list) ps.assign(kDefaultP.begin(), kDefaultP.end());

    for (double p : ps)
        if (!(p > 1.0)) {
            std::cerr << "table: every p must be > 1 (got " << p << ")\n";
            return 2;
        }

    int exit_code = 0;
    std::vector<std::string> notes;
    std::vector<std::optional<TableRow>> rows(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
        std::optional<double> alpha_override;
        if (alpha_driven) {
            alpha_override = default_list ? kReferenceAlphaPlus[i]
                                          : round4(1.0 / (ps[i] - 1.0));
            if (std::fabs(*alpha_override - 1.0 / (ps[i] - 1.0)) > 1e-4) {
                notes.push_back("row p=" + fmt("%g", ps[i]) + " driven by alpha=" +
                                fmt("%g", *alpha_override) +
                                " (its printed p is rounded)");
                std::cerr << "note: " << notes.back() << "\n";
            }
        }
        try {
            rows[i] = make_row(ps[i], alpha_override);
        } catch (const gr::SolverError& e) {
            std::cerr << "table: row p=" << ps[i] << ": " << e.what() << "\n";
            exit_code = 3;
        }
    }

    const Formats f = table_formats(raw);
    if (format == "json") {
        json out;
        out["metadata"] = {{"driven", alpha_driven ? "alpha" : "p"}, {"notes", notes}};
        out["rows"] = json::array();
        for (std::size_t i = 0; i < ps.size(); ++i) {
            if (!rows[i]) {
                out["rows"].push_back({{"p", ps[i]}, {"error", "solver failure"}});
                continue;
            }
            const TableRow& r = *rows[i];
            out["rows"].push_back({{"p", r.p},
                                   {"eps_halfline", r.eps_halfline},
                                   {"eps_realline", r.eps_realline},
                                   {"c_eps", r.c_eps},
                                   {"alpha_plus", r.alpha_plus},
                                   {"eta_max_plus", r.eta_max_plus},
                                   {"alpha_minus", r.alpha_minus},
                                   {"eta_max_minus", r.eta_max_minus}});
        }
        std::cout << out.dump(2) << "\n";
        return exit_code;
    }

    std::cout << "p,eps_halfline,eps_realline,c_eps,alpha_plus,eta_max_plus,"
                 "alpha_minus,eta_max_minus\n";
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (!rows[i]) {
            std::cout << fmt(f.p, ps[i]) << ",error,error,error,error,error,error,error\n";
            continue;
        }
        const TableRow& r = *rows[i];
        std::cout << fmt(f.p, r.p) << ',' << fmt(f.eps, r.eps_halfline) << ','
                  << fmt(f.eps, r.eps_realline) << ',' << fmt(f.c, r.c_eps) << ','
                  << fmt(f.alpha, r.alpha_plus) << ',' << fmt(f.eta, r.eta_max_plus) << ','
                  << fmt(f.alpha, r.alpha_minus) << ',' << fmt(f.eta, r.eta_max_minus)
                  << '\n';
    }
    return exit_code;
}

int cmd_figures(const std::string& out_dir, bool raw) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);

    const auto open = [&](const std::string& name) {
        std::ofstream os(fs::path(out_dir) / name, std::ios::binary);
        if (!os)
            throw std::runtime_error("figures: cannot open " +
                                     (fs::path(out_dir) / name).string() + " for writing");
        os << "series_id,x,y\n";
        return os;
    };
    const Formats f = table_formats(raw);

    std::vector<TableRow> rows;
    rows.reserve(kDefaultP.size());
    for (double p : kDefaultP) rows.push_back(make_row(p, std::nullopt));

    {
        auto os = open("fig1_norms_vs_p.csv");
        for (const TableRow& r : rows)
            os << "eps_halfline," << fmt(f.p, r.p) << ',' << fmt(f.eps, r.eps_halfline)
               << '\n';
        for (const TableRow& r : rows)
            os << "eps_realline," << fmt(f.p, r.p) << ',' << fmt(f.eps, r.eps_realline)
               << '\n';
    }
    {
        auto os = open("fig1_p_vs_eps.csv");
        for (const TableRow& r : rows)
            os << "p_of_eps_halfline," << fmt(f.eps, r.eps_halfline) << ',' << fmt(f.p, r.p)
               << '\n';
        for (const TableRow& r : rows)
            os << "p_of_eps_realline," << fmt(f.eps, r.eps_realline) << ',' << fmt(f.p, r.p)
               << '\n';
    }
    {
        auto os = open("fig2_extension_factor.csv");
        for (const TableRow& r : rows)
            os << "c_eps_vs_p," << fmt(f.p, r.p) << ',' << fmt(f.c, r.c_eps) << '\n';
        for (const TableRow& r : rows)
            os << "c_eps_vs_eps," << fmt(f.eps, r.eps_halfline) << ',' << fmt(f.c, r.c_eps)
               << '\n';
    }
    {
        auto os = open("fig3_psi_curves.csv");
        const char* eta_fmt = raw ? "%.17g" : "%.6f";
        const char* psi_fmt = raw ? "%.17g" : "%.6f";
        const std::array<std::pair<const char*, double>, 3> curves = {
            std::make_pair("psi(1)", 1.0), std::make_pair("psi(-1/2)", -0.5),
            std::make_pair("psi(1/2)", 0.5)};
        for (const auto& [name, alpha] : curves) {
            const gr::PowerExponent a(alpha);
            const double eta1 = gr::solve_eta1(a).root;
            for (int i = 0; i < 1000; ++i) {
                const double eta = static_cast<double>(i) / 999.0;
                const double v = gr::psi(a, gr::IntervalParam(eta), eta1).value;
                os << name << ',' << fmt(eta_fmt, eta) << ',' << fmt(psi_fmt, v) << '\n';
            }
        }
    }
    return 0;
}

struct CheckLine {
    std::string name;
    bool passed = false;
    double margin = 0.0;  ///< how much head-room the check had (negative = failed)
};

gr::IntegrableFunction power_fn(double alpha) {
    gr::IntegrableFunction f;
    f.evaluator = [alpha](double x) { return std::pow(std::fabs(x), alpha); };
    if (alpha < 0.0) f.singularities = {0.0};
    return f;
}

int cmd_verify(double tol, int grid, const std::string& format) {
    std::vector<CheckLine> checks;
    const auto add = [&checks](const std::string& name, bool ok, double margin) {
        checks.push_back({name, ok, margin});
    };

    // Oracle vs closed forms: mean and oscillation on (-eta,1) across the
    // alpha x eta grid, each within 1e-7 absolute.
    try {
        const std::array<double, 8> alphas = {-0.8696, -0.5, -0.1667, 0.2,
                                              0.5,     1.0,  2.0,    5.0};
        double worst = 0.0;
        for (double a : alphas) {
            const gr::PowerExponent pe(a);
            const double eta1 = gr::solve_eta1(pe).root;
            const gr::IntegrableFunction f = power_fn(a);
            for (double eta : {0.0, 0.1, eta1, 0.7, 1.0}) {
                const auto parts = gr::oracle_oscillation_parts(f, -eta, 1.0, tol);
                const double dm =
                    std::fabs(parts.mean.value - gr::mean_value_power(pe, gr::IntervalParam(eta)));
                const double dw = std::fabs(parts.oscillation.value -
                                            gr::mean_oscillation_power(pe, gr::IntervalParam(eta)));
                worst = std::fmax(worst, std::fmax(dm, dw));
            }
        }
        add("oracle-vs-analytic(8x5 grid)", worst <= 1e-7, 1e-7 - worst);
    } catch (const gr::BudgetExceededError& e) {
        add(std::string("oracle-vs-analytic(8x5 grid) [") + e.what() + "]", false, -1.0);
    } catch (const gr::SolverError& e) {
        add(std::string("oracle-vs-analytic(8x5 grid) [") + e.what() + "]", false, -1.0);
    }

    // Symmetry suite (closed forms only, no quadrature).
    {
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const double a = (i < 10) ? (-0.95 + 0.1 * i) : (0.05 + 1.05 * (i - 10));
            const gr::PowerExponent pa(a);
            const double b = -a / (a + 1.0);
            const gr::PowerExponent pb(b);
            const double eta1_a = gr::solve_eta1(pa).root;
            const double eta1_b = gr::solve_eta1(pb).root;
            for (int j = 0; j < 20; ++j) {
                const double eta = static_cast<double>(j) / 19.0;
                const double lhs =
                    gr::psi(pb, gr::IntervalParam(std::pow(eta, a + 1.0)), eta1_b).value;
                const double rhs = gr::psi(pa, gr::IntervalParam(eta), eta1_a).value;
                worst = std::fmax(worst, std::fabs(lhs - rhs) / rhs);
            }
        }
        add("symmetry-psi(20x20 grid)", worst <= 1e-10, 1e-10 - worst);

        double worst_map = 0.0, worst_max = 0.0;
        for (double p : {1.5, 2.0, 3.0, 6.0}) {
            const gr::SummabilityExponent se(p);
            const gr::NormReport plus = gr::norm_realline(gr::PowerExponent(se.alpha_plus()));
            const gr::NormReport minus = gr::norm_realline(gr::PowerExponent(se.alpha_minus()));
            worst_map = std::fmax(worst_map,
                                  std::fabs(minus.eta_max -
                                            std::pow(plus.eta_max, p / (p - 1.0))));
            worst_max =
                std::fmax(worst_max, std::fabs(plus.ratio - minus.ratio) / plus.ratio);
        }
        add("symmetry-eta-max-map", worst_map <= 1e-8, 1e-8 - worst_map);
        add("symmetry-max-psi0", worst_max <= 1e-9, 1e-9 - worst_max);
    }

    // Reflection inequality on the sample set.
    try {
        for (const auto& [name, f, b] :
             {std::make_tuple("reflection(|x|,b=1)", power_fn(1.0), 1.0),
              std::make_tuple("reflection(|x|^-1/2,b=2)", power_fn(-0.5), 2.0),
              std::make_tuple("reflection(const,b=1)",
                              gr::IntegrableFunction{[](double) { return 1.0; }, {}}, 1.0)}) {
            const auto res = gr::check_reflection_inequality(f, b, 50, tol);
            add(name, res.passed, res.worst_margin);
        }
    } catch (const gr::BudgetExceededError& e) {
        add(std::string("reflection-suite [") + e.what() + "]", false, -1.0);
    } catch (const gr::SolverError& e) {
        add(std::string("reflection-suite [") + e.what() + "]", false, -1.0);
    }

    // Grid supremum against the solver route.
    try {
        for (double a : {1.0, 0.5, -0.5}) {
            const auto scan = gr::oracle_norm_realline(power_fn(a), grid, tol);
            const gr::NormReport rep = gr::norm_realline(gr::PowerExponent(a));
            const double diff = std::fabs(scan.estimate.value - rep.eps_realline);
            const double allowance = scan.estimate.abs_error_bound + 1e-6;
            add("grid-sup(alpha=" + fmt("%g", a) + ")", diff <= allowance, allowance - diff);
        }
    } catch (const gr::BudgetExceededError& e) {
        add(std::string("grid-sup-suite [") + e.what() + "]", false, -1.0);
    } catch (const gr::SolverError& e) {
        add(std::string("grid-sup-suite [") + e.what() + "]", false, -1.0);
    }

    bool all = true;
    for (const CheckLine& c : checks) all = all && c.passed;

    if (format == "json") {
        json out;
        out["passed"] = all;
        out["checks"] = json::array();
        for (const CheckLine& c : checks)
            out["checks"].push_back(
                {{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"margin", c.margin}});
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "check,status,margin\n";
        for (const CheckLine& c : checks)
            std::cout << c.name << ',' << (c.passed ? "pass" : "fail") << ','
                      << fmt("%.3e", c.margin) << '\n';
    }
    return all ? 0 : 1;
}

int cmd_bmo(bool raw, const std::string& format) {
    const gr::BmoReport rep = gr::bmo_norm_f0();
    const double c_gr = gr::extension_factor_sweep({1e-6}).supremum;
    const double diff = std::fabs(c_gr - rep.c0);
    const char* g = raw ? "%.17g" : "%.10g";
    if (format == "json") {
        json out = {{"t_root", rep.t_root},
                    {"norm_halfline", rep.norm_halfline},
                    {"norm_realline", rep.norm_realline},
                    {"c0", rep.c0},
                    {"c_gr", c_gr},
                    {"abs_diff", diff}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "t_root,norm_halfline,norm_realline,c0,c_gr,abs_diff\n";
        std::cout << fmt(g, rep.t_root) << ',' << fmt(g, rep.norm_halfline) << ','
                  << fmt(g, rep.norm_realline) << ',' << fmt(g, rep.c0) << ','
                  << fmt(g, c_gr) << ',' << fmt(g, diff) << '\n';
    }
    return 0;
}

int cmd_norm(double alpha, bool raw, const std::string& format) {
    const gr::NormReport rep = gr::norm_realline(gr::PowerExponent(alpha));
    const char* g = raw ? "%.17g" : "%.10g";
    if (format == "json") {
        json out = {{"alpha", rep.alpha},         {"eps_halfline", rep.eps_halfline},
                    {"eps_realline", rep.eps_realline}, {"c_eps", rep.ratio},
                    {"eta1", rep.eta1},           {"eta_max", rep.eta_max}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "alpha,eps_halfline,eps_realline,c_eps,eta1,eta_max\n";
        std::cout << fmt(g, rep.alpha) << ',' << fmt(g, rep.eps_halfline) << ','
                  << fmt(g, rep.eps_realline) << ',' << fmt(g, rep.ratio) << ','
                  << fmt(g, rep.eta1) << ',' << fmt(g, rep.eta_max) << '\n';
    }
    return 0;
}

int cmd_exponent(double eps, bool raw, const std::string& format) {
    const gr::SummabilityExponent se = gr::limiting_exponent(eps);
    const char* g = raw ? "%.17g" : "%.10g";
    if (format == "json") {
        json out = {{"eps", eps}, {"p", se.p()}, {"p_minus", se.p_minus()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "eps,p,p_minus\n";
        std::cout << fmt(g, eps) << ',' << fmt(g, se.p()) << ',' << fmt(g, se.p_minus())
                  << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gurov-Reshetnyak norms of power functions: tables, figures, "
                 "verification and BMO companion constants"};
    app.require_subcommand(1);
    app.fallthrough();  // let global flags follow the subcommand

    std::string format = "csv";
    bool raw = false;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--raw", raw, "Emit full-precision values");

    auto* table = app.add_subcommand("table", "Reproduce the norm/extremal-point table");
    std::vector<double> p_list;
    bool alpha_driven = false;
    auto* p_opt = table->add_option("--p", p_list, "Summability exponents p > 1 (default: "
                                                   "the reference table's p column)")
                      ->expected(0, -1);
    table->add_flag("--alpha-driven", alpha_driven,
                    "Drive rows by the 4-decimal alpha column instead of exact p");

    auto* figures = app.add_subcommand("figures", "Write plot data series as CSV files");
    std::string out_dir = ".";
    figures->add_option("--out", out_dir, "Output directory (default: current)");

    auto* verify = app.add_subcommand("verify", "Run the oracle/symmetry verification suite");
    double tol = 1e-10;
    int grid = 10000;
    verify->add_option("--tol", tol, "Quadrature tolerance (default 1e-10)");
    verify->add_option("--grid", grid, "Grid size for the supremum scan (default 10000)");

    app.add_subcommand("bmo", "Companion BMO norms of ln(1/|x|) and the constant C0");

    auto* norm = app.add_subcommand("norm", "Norm report for one power exponent");
    double alpha = 0.0;
    norm->add_option("--alpha", alpha, "Exponent alpha > -1, alpha != 0")->required();

    auto* exponent = app.add_subcommand("exponent", "Limiting summability exponent p(eps)");
    double eps = 0.0;
    exponent->add_option("--eps", eps, "Relative-oscillation bound eps in (0,2)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    // A bare `--p` arrives as one empty token; it means an explicit empty list.
    if (p_opt->results().size() == 1 && p_opt->results()[0].empty()) p_list.clear();

    try {
        if (table->parsed())
            return cmd_table(p_list, p_opt->count() > 0, alpha_driven, raw, format);
        if (figures->parsed()) return cmd_figures(out_dir, raw);
        if (verify->parsed()) return cmd_verify(tol, grid, format);
        if (app.get_subcommand("bmo")->parsed()) return cmd_bmo(raw, format);
        if (norm->parsed()) return cmd_norm(alpha, raw, format);
        if (exponent->parsed()) return cmd_exponent(eps, raw, format);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gr::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const gr::SolverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
