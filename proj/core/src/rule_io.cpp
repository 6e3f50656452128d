#include "mincub/rule_io.hpp"

#include "mincub/squaremin.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace mincub {

namespace {

using ordered_json = nlohmann::ordered_json;

double parse_double(std::string_view s, std::size_t line) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("line " + std::to_string(line) + ": cannot parse number '" + std::string(s) + "'");
    }
    return v;
}

void check_node_weights(const CubatureRule2D& rule) {
    if (rule.nodes.empty()) {
        throw ParseError("rule file has no nodes");
    }
    for (double w : rule.weights) {
        if (!std::isfinite(w)) {
            throw ParseError("rule file has a non-finite weight");
        }
    }
}

std::string svg_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) {
        throw std::runtime_error("format_double: conversion failed");
    }
    return std::string(buf, ptr);
}

std::string rule_to_csv(const CubatureRule2D& rule) {
    std::string out = "x1,x2,weight\n";
    for (std::size_t k = 0; k < rule.size(); ++k) {
        out += format_double(rule.nodes[k].x1);
        out += ',';
        out += format_double(rule.nodes[k].x2);
        out += ',';
        out += format_double(rule.weights[k]);
        out += '\n';
    }
    return out;
}

CubatureRule2D rule_from_csv(const std::string& text, CubatureRule2D meta) {
    meta.nodes.clear();
    meta.weights.clear();
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!header) {
            if (line != "x1,x2,weight") {
                throw ParseError("expected CSV header 'x1,x2,weight'");
            }
            header = true;
            continue;
        }
        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
        if (c2 == std::string::npos || line.find(',', c2 + 1) != std::string::npos) {
            throw ParseError("line " + std::to_string(lineno) + ": expected three fields");
        }
        const std::string_view sv(line);
        meta.nodes.push_back({parse_double(sv.substr(0, c1), lineno), parse_double(sv.substr(c1 + 1, c2 - c1 - 1), lineno)});
        meta.weights.push_back(parse_double(sv.substr(c2 + 1), lineno));
    }
    if (!header) {
        throw ParseError("empty CSV file");
    }
    check_node_weights(meta);
    return meta;
}

std::string rule_to_json(const CubatureRule2D& rule) {
    if (!rule.weight.is_jacobi()) {
        throw std::invalid_argument("rule_to_json: only Jacobi-based rules can be written");
    }
    const auto num = [](double v) { return format_double(v); };
    const int n = (rule.degree + 1) / 2;
    std::string out = "{\n";
    out += "  \"family\": " + ordered_json(to_string(rule.family)).dump() + ",\n";
    out += "  \"alpha\": " + num(rule.weight.alpha) + ",\n";
    out += "  \"beta\": " + num(rule.weight.beta) + ",\n";
    out += "  \"gamma\": " + num(value(rule.weight.gamma)) + ",\n";
    out += "  \"ell\": " + (rule.family == RuleFamily::composed ? std::to_string(rule.weight.ell) : std::string("null")) + ",\n";
    out += "  \"param_n_or_m\": " + std::to_string(rule.param) + ",\n";
    out += "  \"degree\": " + std::to_string(rule.degree) + ",\n";
    out += "  \"node_count\": " + std::to_string(rule.size()) + ",\n";
    out += "  \"moller_bound\": " + std::to_string(moller_bound(n)) + ",\n";
    out += "  \"nodes\": [";
    for (std::size_t k = 0; k < rule.size(); ++k) {
        out += k == 0 ? "\n    [" : ",\n    [";
        out += num(rule.nodes[k].x1) + ", " + num(rule.nodes[k].x2) + ", " + num(rule.weights[k]) + "]";
    }
    out += "\n  ]\n}\n";
    return out;
}

CubatureRule2D rule_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        CubatureRule2D rule;
        rule.family = rule_family_from_string(j.at("family").get<std::string>());
        const double alpha = j.at("alpha").get<double>();
        const double beta = j.at("beta").get<double>();
        const Gamma gamma = gamma_from_value(j.at("gamma").get<double>());
        switch (rule.family) {
        case RuleFamily::biangle:
            rule.domain = Domain::biangle;
            rule.weight = WeightSpec::biangle(alpha, beta, gamma);
            break;
        case RuleFamily::square_even:
        case RuleFamily::square_odd:
            rule.weight = WeightSpec::square(alpha, beta, gamma);
            break;
        case RuleFamily::composed:
            rule.weight = WeightSpec::composed(alpha, beta, j.at("ell").get<int>());
            // Kept as written; such a file parses and plots but has no reference moments.
            rule.weight.gamma = gamma;
            break;
        }
        rule.param = j.at("param_n_or_m").get<int>();
        rule.degree = j.at("degree").get<int>();
        const auto count = j.at("node_count").get<std::size_t>();
        const auto bound = j.at("moller_bound").get<long long>();
        for (const auto& row : j.at("nodes")) {
            if (!row.is_array() || row.size() != 3) {
                throw ParseError("each node must be [x1, x2, weight]");
            }
            rule.nodes.push_back({row[0].get<double>(), row[1].get<double>()});
            rule.weights.push_back(row[2].get<double>());
        }
        if (rule.degree < 1 || rule.degree % 2 == 0) {
            throw ParseError("degree must be odd and positive");
        }
        if (count != rule.size()) {
            throw ParseError("node_count " + std::to_string(count) + " does not match " +
                             std::to_string(rule.size()) + " node records");
        }
        if (bound != moller_bound((rule.degree + 1) / 2)) {
            throw ParseError("moller_bound field does not match the degree");
        }
        check_node_weights(rule);
        return rule;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed rule file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("malformed rule file: ") + e.what());
    }
}

std::string report_to_json(const CubatureRule2D& rule, const ExactnessReport& report, double rel_tol) {
    ordered_json j;
    j["family"] = to_string(rule.family);
    j["declared_degree"] = rule.degree;
    j["basis"] = report.basis == Basis::monomial ? "monomial" : "chebyshev";
    j["max_degree_tested"] = report.max_degree_tested;
    j["certified_degree"] = report.certified_degree;
    j["worst_rel_error"] = report.worst_rel_error;
    j["tolerance"] = rel_tol;
    j["passed"] = report.certified_degree >= rule.degree;
    j["failures"] = ordered_json::array();
    for (const auto& f : report.failures) {
        j["failures"].push_back({{"i", f.i}, {"j", f.j}, {"rel_error", f.rel_error}});
    }
    return j.dump(2) + "\n";
}

std::string rule_to_svg(const CubatureRule2D& rule, int size) {
    if (size < 16) {
        throw std::invalid_argument("rule_to_svg: size must be at least 16");
    }
    if (rule.nodes.empty()) {
        throw std::invalid_argument("rule_to_svg: rule has no nodes");
    }
    const double margin = 0.05 * size;
    const double span = size - 2.0 * margin;
    const bool biangle = rule.domain == Domain::biangle;
    // Square [-1,1]^2, or the biangle's box [-2,2] x [-1,1] at equal scale.
    const double scale = biangle ? span / 4.0 : span / 2.0;
    const double cx = 0.5 * size;
    const double cy = 0.5 * size;
    const auto px = [&](double x) { return cx + scale * x; };
    const auto py = [&](double y) { return cy - scale * y; };

    double dmin = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < rule.size(); ++a) {
        for (std::size_t b = a + 1; b < rule.size(); ++b) {
            dmin = std::min(dmin, std::hypot(rule.nodes[a].x1 - rule.nodes[b].x1, rule.nodes[a].x2 - rule.nodes[b].x2));
        }
    }
    double radius = std::isfinite(dmin) ? 0.4 * dmin * scale : 0.01 * size;
    radius = std::clamp(radius, 0.5, 0.015 * size);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(size) + "\" height=\"" +
           std::to_string(size) + "\" viewBox=\"0 0 " + std::to_string(size) + " " + std::to_string(size) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (biangle) {
        // Lines u2 = |u1| - 1 from (-2,1) through (0,-1) to (2,1), closed by the parabola u2 = u1^2/4.
        std::string d = "M " + svg_number(px(-2.0)) + " " + svg_number(py(1.0)) + " L " + svg_number(px(0.0)) + " " +
                        svg_number(py(-1.0)) + " L " + svg_number(px(2.0)) + " " + svg_number(py(1.0));
        constexpr int segments = 128;
        for (int k = 1; k <= segments; ++k) {
            const double u1 = 2.0 - 4.0 * k / segments;
            d += " L " + svg_number(px(u1)) + " " + svg_number(py(0.25 * u1 * u1));
        }
        out += "<path d=\"" + d + " Z\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    } else {
        out += "<rect x=\"" + svg_number(px(-1.0)) + "\" y=\"" + svg_number(py(1.0)) + "\" width=\"" +
               svg_number(2.0 * scale) + "\" height=\"" + svg_number(2.0 * scale) +
               "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    const std::string r = svg_number(radius);
    for (const auto& p : rule.nodes) {
        out += "<circle cx=\"" + svg_number(px(p.x1)) + "\" cy=\"" + svg_number(py(p.x2)) + "\" r=\"" + r +
               "\" fill=\"black\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace mincub
