#ifndef MINCUB_TOOLS_CLI_HPP
#define MINCUB_TOOLS_CLI_HPP

#include "mincub/cubature.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace mincub::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_invalid_arguments = 1,
    exit_construction_failure = 2,
    exit_verification_failure = 3,
    exit_unverifiable = 4,
};

/// Parameters identifying a rule. `param` is n for the biangle family and m otherwise.
struct RuleParams {
    std::string family;
    std::string weight = "jacobi";
    double alpha = -0.5;
    double beta = -0.5;
    std::optional<double> gamma;
    int ell = 1;
    std::optional<int> n;
    std::optional<int> m;
};

struct BuildOptions {
    RuleParams rule;
    std::string out;    // empty: write to the output stream
    std::string format; // csv or json; empty: from the extension of `out`, else csv
};

struct VerifyOptions {
    std::string file;
    std::optional<int> max_degree; // default: declared degree
    double tol = 1e-9;
    std::string report;
    std::string basis = "chebyshev";
    RuleParams csv_meta; // metadata for CSV files, which carry only nodes
};

struct PlotOptions {
    std::string file;
    std::string svg;
    int size = 800;
    RuleParams csv_meta;
};

/// Throws std::invalid_argument for bad parameters; construction errors propagate.
CubatureRule2D build_rule(const RuleParams& params);

/// Reads a JSON rule file, or a CSV file described by `csv_meta`. Throws ParseError.
CubatureRule2D load_rule(const std::string& path, const RuleParams& csv_meta);

int cmd_bound(long long n, std::ostream& out, std::ostream& err);
int cmd_build(const BuildOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_plot(const PlotOptions& opts, std::ostream& out, std::ostream& err);

/// Full command line, argv[0] included.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace mincub::cli

#endif
