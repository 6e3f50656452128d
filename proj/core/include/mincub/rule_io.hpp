#ifndef MINCUB_RULE_IO_HPP
#define MINCUB_RULE_IO_HPP

#include "mincub/cubature.hpp"
#include "mincub/oracle.hpp"

#include <stdexcept>
#include <string>

namespace mincub {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shortest decimal that reads back to the same double.
std::string format_double(double v);

/// Header `x1,x2,weight`, one node per line, LF endings, nodes in lexicographic order.
std::string rule_to_csv(const CubatureRule2D& rule);

/// Fills nodes and weights of `meta` from CSV text; everything else in `meta` is kept.
CubatureRule2D rule_from_csv(const std::string& text, CubatureRule2D meta);

/// Fixed field order: family, alpha, beta, gamma, ell, param_n_or_m, degree, node_count,
/// moller_bound, nodes. Only Jacobi-based rules can be written.
std::string rule_to_json(const CubatureRule2D& rule);
CubatureRule2D rule_from_json(const std::string& text);

std::string report_to_json(const CubatureRule2D& rule, const ExactnessReport& report, double rel_tol);

/// Standalone SVG: domain outline plus one filled circle per node.
std::string rule_to_svg(const CubatureRule2D& rule, int size);

} // namespace mincub

#endif
