#include "cli.hpp"

#include "mincub/biangle.hpp"
#include "mincub/composed.hpp"
#include "mincub/oracle.hpp"
#include "mincub/rule_io.hpp"
#include "mincub/squaremin.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace mincub::cli {

namespace {

namespace fs = std::filesystem;

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Writes next to the destination and renames, so a failed write never leaves a partial file.
void write_file(const std::string& path, const std::string& data) {
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + path);
        }
        out << data;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error("cannot write " + path);
        }
    }
    fs::rename(tmp, target);
}

Gamma parse_gamma(double g) {
    try {
        return gamma_from_value(g);
    } catch (const std::exception&) {
        throw std::invalid_argument("--gamma must be -0.5 or 0.5");
    }
}

int require_count(const std::optional<int>& v, const char* flag, const std::string& family) {
    if (!v) {
        throw std::invalid_argument(family + " needs " + flag);
    }
    if (*v < 1) {
        throw std::invalid_argument(std::string(flag) + " must be at least 1");
    }
    return *v;
}

void check_params(const RuleParams& p) {
    if (p.weight != "jacobi") {
        throw std::invalid_argument("unsupported --weight '" + p.weight + "' (only jacobi)");
    }
    if (!(p.alpha > -1.0) || !(p.beta > -1.0)) {
        throw std::invalid_argument("--alpha and --beta must exceed -1");
    }
    if (p.ell < 1) {
        throw std::invalid_argument("--ell must be at least 1");
    }
}

// Metadata of a rule, nodes left empty.
CubatureRule2D describe(const RuleParams& p) {
    check_params(p);
    CubatureRule2D rule;
    const RuleFamily family = rule_family_from_string(p.family);
    rule.family = family;
    switch (family) {
    case RuleFamily::biangle: {
        const int n = require_count(p.n, "--n", p.family);
        rule.domain = Domain::biangle;
        rule.weight = WeightSpec::biangle(p.alpha, p.beta, parse_gamma(p.gamma.value_or(-0.5)));
        rule.param = n;
        rule.degree = 2 * n - 1;
        break;
    }
    case RuleFamily::square_even:
    case RuleFamily::square_odd: {
        const int m = require_count(p.m, "--m", p.family);
        rule.weight = WeightSpec::square(p.alpha, p.beta, parse_gamma(p.gamma.value_or(-0.5)));
        rule.param = m;
        rule.degree = family == RuleFamily::square_even ? 4 * m - 1 : 4 * m + 1;
        break;
    }
    case RuleFamily::composed: {
        const int m = require_count(p.m, "--m", p.family);
        if (p.gamma && parse_gamma(*p.gamma) != Gamma::minus_half) {
            throw std::invalid_argument("composed rules exist for --gamma -0.5 only");
        }
        rule.weight = WeightSpec::composed(p.alpha, p.beta, p.ell);
        rule.param = m;
        rule.degree = 4 * p.ell * m - 1;
        break;
    }
    }
    return rule;
}

std::string infer_format(const std::string& format, const std::string& path) {
    if (!format.empty()) {
        if (format != "csv" && format != "json") {
            throw std::invalid_argument("--format must be csv or json");
        }
        return format;
    }
    return ends_with(path, ".json") ? "json" : "csv";
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\n' || c == '\r' || c == '\t') continue;
        return c == '{';
    }
    return false;
}

void add_rule_flags(CLI::App* app, RuleParams& p) {
    app->add_option("--weight", p.weight, "Base weight (jacobi)");
    app->add_option("--alpha", p.alpha, "Jacobi alpha");
    app->add_option("--beta", p.beta, "Jacobi beta");
    app->add_option("--gamma", p.gamma, "-0.5 or 0.5");
    app->add_option("--ell", p.ell, "Composition order (composed family)");
    app->add_option("--n", p.n, "Degree parameter n (biangle)");
    app->add_option("--m", p.m, "Degree parameter m (square and composed)");
}

} // namespace

CubatureRule2D build_rule(const RuleParams& params) {
    const CubatureRule2D meta = describe(params);
    const auto param = static_cast<std::size_t>(meta.param);
    switch (meta.family) {
    case RuleFamily::biangle:
        return gauss_cubature_biangle(meta.weight, param);
    case RuleFamily::square_even:
        return minimal_rule_even(meta.weight, param);
    case RuleFamily::square_odd:
        return minimal_rule_odd(params.alpha, params.beta, meta.weight.gamma, param);
    case RuleFamily::composed:
        return composed_rule(meta.weight, param);
    }
    throw std::logic_error("unreachable");
}

CubatureRule2D load_rule(const std::string& path, const RuleParams& csv_meta) {
    const std::string text = read_file(path);
    if (looks_like_json(text)) {
        return rule_from_json(text);
    }
    if (csv_meta.family.empty()) {
        throw std::invalid_argument("CSV rule files need --family and the rule parameters");
    }
    return rule_from_csv(text, describe(csv_meta));
}

int cmd_bound(long long n, std::ostream& out, std::ostream& err) {
    if (n < 1) {
        err << "bound: --n must be at least 1\n";
        return exit_invalid_arguments;
    }
    out << moller_bound(n) << '\n';
    return exit_ok;
}

int cmd_build(const BuildOptions& opts, std::ostream& out, std::ostream& err) {
    std::string format;
    CubatureRule2D rule;
    try {
        format = infer_format(opts.format, opts.out);
        describe(opts.rule);
    } catch (const std::exception& e) {
        err << "build: " << e.what() << '\n';
        return exit_invalid_arguments;
    }
    try {
        rule = build_rule(opts.rule);
    } catch (const std::invalid_argument& e) {
        err << "build: " << e.what() << '\n';
        return exit_invalid_arguments;
    } catch (const std::exception& e) {
        err << "build: construction failed: " << e.what() << '\n';
        return exit_construction_failure;
    }
    const std::string data = format == "json" ? rule_to_json(rule) : rule_to_csv(rule);
    if (opts.out.empty()) {
        out << data;
        return exit_ok;
    }
    try {
        write_file(opts.out, data);
    } catch (const std::exception& e) {
        err << "build: " << e.what() << '\n';
        return exit_construction_failure;
    }
    out << to_string(rule.family) << ": " << rule.size() << " nodes, degree " << rule.degree << " -> " << opts.out
        << '\n';
    return exit_ok;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
    CubatureRule2D rule;
    Basis basis = Basis::chebyshev;
    try {
        if (opts.basis == "monomial") {
            basis = Basis::monomial;
        } else if (opts.basis != "chebyshev") {
            throw std::invalid_argument("--basis must be chebyshev or monomial");
        }
        if (!(opts.tol > 0.0)) {
            throw std::invalid_argument("--tol must be positive");
        }
        if (opts.max_degree && *opts.max_degree < 0) {
            throw std::invalid_argument("--max-degree must be nonnegative");
        }
        rule = load_rule(opts.file, opts.csv_meta);
    } catch (const std::exception& e) {
        err << "verify: " << e.what() << '\n';
        return exit_invalid_arguments;
    }
    const int max_degree = opts.max_degree.value_or(rule.degree);

    MomentTable table;
    try {
        table = rule.domain == Domain::biangle ? biangle_moment_table(rule.weight, max_degree, basis)
                                               : square_moment_table(rule.weight, max_degree, basis);
    } catch (const std::exception& e) {
        err << "verify: unverifiable: " << e.what() << '\n';
        return exit_unverifiable;
    }
    const ExactnessReport report = certify(rule, table, max_degree, opts.tol);
    const bool passed = report.certified_degree >= rule.degree;

    if (!opts.report.empty()) {
        try {
            write_file(opts.report, report_to_json(rule, report, opts.tol));
        } catch (const std::exception& e) {
            err << "verify: " << e.what() << '\n';
            return exit_invalid_arguments;
        }
    }
    char worst[32];
    std::snprintf(worst, sizeof worst, "%.3e", report.worst_rel_error);
    out << to_string(rule.family) << ": declared " << rule.degree << ", certified " << report.certified_degree
        << " of " << max_degree << " tested, worst " << worst << ", " << report.failures.size() << " failures -> "
        << (passed ? "PASS" : "FAIL") << '\n';
    return passed ? exit_ok : exit_verification_failure;
}

int cmd_plot(const PlotOptions& opts, std::ostream& out, std::ostream& err) {
    std::string svg;
    try {
        RuleParams meta = opts.csv_meta;
        svg = rule_to_svg(load_rule(opts.file, meta), opts.size);
    } catch (const std::exception& e) {
        err << "plot: " << e.what() << '\n';
        return exit_invalid_arguments;
    }
    if (opts.svg.empty()) {
        out << svg;
        return exit_ok;
    }
    try {
        write_file(opts.svg, svg);
    } catch (const std::exception& e) {
        err << "plot: " << e.what() << '\n';
        return exit_invalid_arguments;
    }
    return exit_ok;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gauss and minimal cubature rules on the biangle and the square", "mincub"};
    app.require_subcommand(1);

    long long bound_n = 0;
    auto* bound = app.add_subcommand("bound", "Print Moller's lower bound for degree 2n-1");
    bound->add_option("--n", bound_n, "n")->required();

    BuildOptions build_opts;
    auto* build = app.add_subcommand("build", "Construct a rule and write its nodes and weights");
    build->add_option("family", build_opts.rule.family, "biangle, square-even, square-odd or composed")
        ->required()
        ->check(CLI::IsMember({"biangle", "square-even", "square-odd", "composed"}));
    add_rule_flags(build, build_opts.rule);
    build->add_option("--out", build_opts.out, "Output path (default: standard output)");
    build->add_option("--format", build_opts.format, "csv or json");

    VerifyOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "Certify the polynomial degree of a rule file");
    verify->add_option("file", verify_opts.file, "Rule file (JSON, or CSV with --family)")->required();
    verify->add_option("--max-degree", verify_opts.max_degree, "Highest total degree tested");
    verify->add_option("--tol", verify_opts.tol, "Relative tolerance");
    verify->add_option("--report", verify_opts.report, "Write a JSON report here");
    verify->add_option("--basis", verify_opts.basis, "chebyshev or monomial");
    verify->add_option("--family", verify_opts.csv_meta.family, "Rule family of a CSV file");
    add_rule_flags(verify, verify_opts.csv_meta);

    PlotOptions plot_opts;
    auto* plot = app.add_subcommand("plot", "Draw the nodes of a rule file as SVG");
    plot->add_option("file", plot_opts.file, "Rule file (JSON, or CSV with --family)")->required();
    plot->add_option("--svg", plot_opts.svg, "Output path (default: standard output)");
    plot->add_option("--size", plot_opts.size, "Width and height in pixels");
    plot->add_option("--family", plot_opts.csv_meta.family, "Rule family of a CSV file");
    add_rule_flags(plot, plot_opts.csv_meta);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_invalid_arguments;
    }

    if (bound->parsed()) return cmd_bound(bound_n, out, err);
    if (build->parsed()) return cmd_build(build_opts, out, err);
    if (verify->parsed()) return cmd_verify(verify_opts, out, err);
    return cmd_plot(plot_opts, out, err);
}

} // namespace mincub::cli
