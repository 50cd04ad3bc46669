#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pnc/canonical.hpp"
#include "pnc/core.hpp"
#include "pnc/cosexp.hpp"
#include "pnc/elementary.hpp"
#include "pnc/geometry.hpp"
#include "pnc/integration.hpp"
#include "pnc/literal.hpp"
#include "pnc/polynomial.hpp"

namespace {

int exit_code_for(const pnc::Error& e) {
    switch (e.kind()) {
        case pnc::ErrorKind::PointOnPath:
        case pnc::ErrorKind::NoConvergence:
        case pnc::ErrorKind::Overflow:
            return 3;
        default:
            return 2;
    }
}

struct EvalJob {
    std::string op;
    std::string lit_a;
    std::string lit_b;  // second literal (add/mul) or exponent (pow)
    int digits = 12;
};

void run_eval(const EvalJob& job) {
    using pnc::PolarNComplex;
    const PolarNComplex a = pnc::parse_literal(job.lit_a);
    PolarNComplex out(a.dim());
    if (job.op == "add" || job.op == "mul") {
        const PolarNComplex b = pnc::parse_literal(job.lit_b);
        out = job.op == "add" ? pnc::add(a, b) : pnc::mul(a, b);
    } else if (job.op == "pow") {
        char* end = nullptr;
        const double m = std::strtod(job.lit_b.c_str(), &end);
        if (end == job.lit_b.c_str() || *end != '\0')
            throw pnc::Error(pnc::ErrorKind::Usage, "bad exponent '" + job.lit_b + "'");
        out = pnc::pow(a, m);
    } else if (job.op == "inv") {
        out = pnc::inverse(a);
    } else if (job.op == "exp") {
        out = pnc::exp(a);
    } else if (job.op == "log") {
        out = pnc::log(a);
    } else if (job.op == "sin") {
        out = pnc::sin(a);
    } else if (job.op == "cos") {
        out = pnc::cos(a);
    } else if (job.op == "sinh") {
        out = pnc::sinh(a);
    } else if (job.op == "cosh") {
        out = pnc::cosh(a);
    }
    std::cout << pnc::format_literal(out, job.digits) << "\n";
}

void run_decompose(const std::string& lit, int digits) {
    const pnc::PolarNComplex u = pnc::parse_literal(lit);
    const pnc::CanonicalCoords c = pnc::to_canonical(u);
    auto num = [&](double v) { return pnc::format_real(v, digits); };

    std::cout << "v_plus=" << num(c.v_plus) << "\n";
    if (c.v_minus) std::cout << "v_minus=" << num(*c.v_minus) << "\n";
    for (std::size_t k = 1; k <= c.K(); ++k) {
        std::cout << "v_" << k << "=" << num(c.pairs[k - 1].real()) << "\n";
        std::cout << "vt_" << k << "=" << num(c.pairs[k - 1].imag()) << "\n";
    }
    std::cout << "d=" << num(pnc::modulus(u)) << "\n";
    std::cout << "nu=" << num(pnc::nu(u)) << "\n";

    try {
        const pnc::PolarForm f = pnc::polar_decompose(u);
        if (f.rho) std::cout << "rho=" << num(*f.rho) << "\n";
        std::cout << "theta_plus=" << num(f.theta_plus) << "\n";
        if (f.theta_minus) std::cout << "theta_minus=" << num(*f.theta_minus) << "\n";
        auto list = [&](const std::vector<double>& v) {
            std::string s = "[";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) s += ',';
                s += num(v[i]);
            }
            return s + "]";
        };
        std::cout << "psi=" << list(f.psi) << "\n";
        std::cout << "phi=" << list(f.phi) << "\n";
        std::cout << "rho_k=" << list(f.rho_k) << "\n";
    } catch (const pnc::Error& e) {
        if (e.kind() != pnc::ErrorKind::DegenerateDirection) throw;
        std::cout << "note=" << e.what() << "\n";
    }
}

void run_cosexp(std::size_t n, std::optional<std::size_t> k, double ymin, double ymax,
                double step, bool verify, int digits) {
    if (step <= 0.0) throw pnc::Error(pnc::ErrorKind::Usage, "step must be positive");
    if (ymax < ymin) throw pnc::Error(pnc::ErrorKind::Usage, "ymax must be >= ymin");
    if (k && *k >= n) throw pnc::Error(pnc::ErrorKind::Usage, "k out of range");

    std::vector<double> ys;
    for (std::size_t i = 0;; ++i) {
        const double y = ymin + static_cast<double>(i) * step;
        if (y > ymax + 1e-9 * step) break;
        ys.push_back(y);
    }
    const auto rows = pnc::table(n, ys);

    std::cout << "y";
    if (k)
        std::cout << ",g_n" << *k;
    else
        for (std::size_t j = 0; j < n; ++j) std::cout << ",g_n" << j;
    std::cout << "\n";

    double worst = 0.0;
    for (const auto& row : rows) {
        std::cout << pnc::format_real(row.y, digits);
        if (k) {
            std::cout << ',' << pnc::format_real(row.values[*k], digits);
        } else {
            for (double v : row.values) std::cout << ',' << pnc::format_real(v, digits);
        }
        std::cout << "\n";
        if (verify) {
            double sum = 0.0;
            for (double v : row.values) sum += v;
            worst = std::max(worst, std::abs(sum - std::exp(row.y)));
        }
    }
    if (verify) std::cout << "max_sum_deviation=" << pnc::format_real(worst, 3) << "\n";
}

void run_factor(std::optional<std::size_t> n_flag, const std::string& coeffs,
                std::size_t cap, int digits) {
    pnc::NPolynomial P;
    std::size_t pos = 0;
    while (pos <= coeffs.size()) {
        std::size_t semi = coeffs.find(';', pos);
        if (semi == std::string::npos) semi = coeffs.size();
        P.coeffs.push_back(pnc::parse_literal(std::string_view(coeffs).substr(pos, semi - pos)));
        pos = semi + 1;
        if (semi == coeffs.size()) break;
    }
    const std::size_t n = P.dim();
    if (n_flag && *n_flag != n)
        throw pnc::Error(pnc::ErrorKind::Usage,
                         "--n disagrees with the literal length " + std::to_string(n));

    const pnc::Enumeration e = pnc::enumerate_rootsets(P, cap);
    std::cout << "count=" << e.total_count << "\n";
    if (e.truncated) std::cout << "truncated=1\n";
    for (std::size_t i = 0; i < e.sets.size(); ++i) {
        std::cout << "set=" << i + 1 << "\n";
        for (const auto& r : e.sets[i].roots)
            std::cout << pnc::format_literal(r, digits) << "\n";
    }
}

void run_integrate(const std::string& pole, const std::string& path_file,
                   const std::string& fn, int steps, int digits) {
    const pnc::PolarNComplex u0 = pnc::parse_literal(pole);
    std::ifstream in(path_file);
    if (!in) throw pnc::Error(pnc::ErrorKind::Usage, "cannot open path file " + path_file);
    pnc::ClosedPath path = pnc::make_path(pnc::read_path_file(in));

    pnc::NFunction integrand;
    pnc::PolarNComplex closed(u0.dim());
    if (fn.empty()) {
        integrand = [&](const pnc::PolarNComplex& u) { return pnc::inverse(pnc::sub(u, u0)); };
        closed = pnc::residue_value(u0, path);
    } else if (fn == "exp") {
        integrand = [&](const pnc::PolarNComplex& u) {
            return pnc::mul(pnc::exp(u), pnc::inverse(pnc::sub(u, u0)));
        };
        closed = pnc::cauchy_eval([](const pnc::PolarNComplex& w) { return pnc::exp(w); }, u0,
                                  path);
    } else {
        throw pnc::Error(pnc::ErrorKind::Usage, "unknown --fn '" + fn + "'");
    }
    const pnc::PolarNComplex numeric = pnc::contour_integral(integrand, path, steps);

    double dev = 0.0;
    for (std::size_t i = 0; i < numeric.dim(); ++i)
        dev = std::max(dev, std::abs(numeric[i] - closed[i]));
    std::cout << "numeric=" << pnc::format_literal(numeric, digits) << "\n";
    std::cout << "closed=" << pnc::format_literal(closed, digits) << "\n";
    std::cout << "deviation=" << pnc::format_real(dev, 3) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polar n-complex calculator"};
    app.require_subcommand(1);

    EvalJob job;
    for (const char* op : {"add", "mul"}) {
        auto* sub = app.add_subcommand(op, std::string("component/cyclic ") + op);
        sub->add_option("a", job.lit_a, "first literal")->required();
        sub->add_option("b", job.lit_b, "second literal")->required();
        sub->add_option("--digits", job.digits, "output significant digits");
        sub->callback([&job, op] {
            job.op = op;
            run_eval(job);
        });
    }
    for (const char* op : {"inv", "exp", "log", "sin", "cos", "sinh", "cosh"}) {
        auto* sub = app.add_subcommand(op, std::string(op) + " of a literal");
        sub->add_option("a", job.lit_a, "literal")->required();
        sub->add_option("--digits", job.digits, "output significant digits");
        sub->callback([&job, op] {
            job.op = op;
            run_eval(job);
        });
    }
    {
        auto* sub = app.add_subcommand("pow", "power u^m");
        sub->add_option("a", job.lit_a, "literal")->required();
        sub->add_option("m", job.lit_b, "real exponent")->required();
        sub->add_option("--digits", job.digits, "output significant digits");
        sub->callback([&job] {
            job.op = "pow";
            run_eval(job);
        });
    }

    std::string dec_lit;
    int dec_digits = 12;
    {
        auto* sub = app.add_subcommand("decompose", "canonical and polar decomposition");
        sub->add_option("a", dec_lit, "literal")->required();
        sub->add_option("--digits", dec_digits, "output significant digits");
        sub->callback([&] { run_decompose(dec_lit, dec_digits); });
    }

    std::size_t ce_n = 0, ce_k = 0;
    bool ce_has_k = false, ce_verify = false;
    double ce_ymin = 0.0, ce_ymax = 0.0, ce_step = 0.0;
    int ce_digits = 17;
    {
        auto* sub = app.add_subcommand("cosexp", "cosexponential function table (CSV)");
        sub->add_option("--n", ce_n, "dimension")->required()->check(CLI::Range(std::size_t{2}, std::size_t{4096}));
        auto* kopt = sub->add_option("--k", ce_k, "single column index");
        sub->add_option("--ymin", ce_ymin, "grid start")->required();
        sub->add_option("--ymax", ce_ymax, "grid end")->required();
        sub->add_option("--step", ce_step, "grid step")->required();
        sub->add_flag("--verify", ce_verify, "print max deviation of row sums from e^y");
        sub->add_option("--digits", ce_digits, "output significant digits");
        sub->callback([&, kopt] {
            ce_has_k = kopt->count() > 0;
            run_cosexp(ce_n, ce_has_k ? std::optional<std::size_t>(ce_k) : std::nullopt,
                       ce_ymin, ce_ymax, ce_step, ce_verify, ce_digits);
        });
    }

    std::string fa_coeffs;
    std::size_t fa_n = 0, fa_cap = 1024;
    int fa_digits = 12;
    {
        auto* sub = app.add_subcommand("factor", "enumerate polynomial root sets");
        auto* nopt = sub->add_option("--n", fa_n, "dimension (validated against literals)");
        sub->add_option("--coeffs", fa_coeffs, "monic coefficients a1;a2;...;am")->required();
        sub->add_option("--cap", fa_cap, "max root sets to print");
        sub->add_option("--digits", fa_digits, "output significant digits");
        sub->callback([&, nopt] {
            run_factor(nopt->count() ? std::optional<std::size_t>(fa_n) : std::nullopt,
                       fa_coeffs, fa_cap, fa_digits);
        });
    }

    std::string in_pole, in_path, in_fn;
    int in_steps = 8, in_digits = 12;
    {
        auto* sub = app.add_subcommand("integrate", "loop integral vs closed form");
        sub->add_option("--pole", in_pole, "pole literal u0")->required();
        sub->add_option("--path", in_path, "path file (one literal per line)")->required();
        sub->add_option("--fn", in_fn, "numerator function (exp)");
        sub->add_option("--steps", in_steps, "quadrature steps per segment");
        sub->add_option("--digits", in_digits, "output significant digits");
        sub->callback([&] { run_integrate(in_pole, in_path, in_fn, in_steps, in_digits); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "Usage: " << e.what() << "\n";
        return 2;
    } catch (const pnc::Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e);
    }
    return 0;
}
