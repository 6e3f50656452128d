#include "support.hpp"

#include "mincub/biangle.hpp"
#include "mincub/composed.hpp"
#include "mincub/rule_io.hpp"
#include "mincub/squaremin.hpp"

#include <doctest.h>

#include <bit>
#include <charconv>
#include <cstdint>
#include <limits>
#include <string>

using namespace mincub;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

// std::stod rejects subnormals, so read back with from_chars.
double read_back(const std::string& s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    REQUIRE(ec == std::errc());
    REQUIRE(ptr == s.data() + s.size());
    return v;
}

bool same_bits(double a, double b) { return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b); }

void check_identical(const CubatureRule2D& a, const CubatureRule2D& b) {
    CHECK(a.family == b.family);
    CHECK(a.domain == b.domain);
    CHECK(a.degree == b.degree);
    CHECK(a.param == b.param);
    CHECK(a.weight.alpha == b.weight.alpha);
    CHECK(a.weight.beta == b.weight.beta);
    CHECK(a.weight.gamma == b.weight.gamma);
    CHECK(a.weight.ell == b.weight.ell);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(same_bits(a.nodes[k].x1, b.nodes[k].x1));
        CHECK(same_bits(a.nodes[k].x2, b.nodes[k].x2));
        CHECK(same_bits(a.weights[k], b.weights[k]));
    }
}

CubatureRule2D metadata_of(const CubatureRule2D& r) {
    CubatureRule2D meta = r;
    meta.nodes.clear();
    meta.weights.clear();
    return meta;
}

std::vector<CubatureRule2D> sample_rules() {
    return {gauss_cubature_biangle(WeightSpec::biangle(-0.5, -0.5, Gamma::minus_half), 5),
            gauss_cubature_biangle(WeightSpec::biangle(0.5, 0.0, Gamma::plus_half), 4),
            minimal_rule_even(WeightSpec::square(0.0, 0.5, Gamma::plus_half), 3),
            minimal_rule_odd(-0.5, -0.5, Gamma::minus_half, 2),
            composed_rule(WeightSpec::composed(0.5, 0.5, 2), 2)};
}

} // namespace

TEST_CASE("format_double round trips bit-exactly") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(-2.0) == "-2");
    CHECK(format_double(0.1) == "0.1");
    auto g = testing::rng(7);
    for (int k = 0; k < 20000; ++k) {
        const double v = std::ldexp(testing::uniform(g, -1.0, 1.0), testing::uniform_int(g, -60, 60));
        const std::string s = format_double(v);
        CHECK(s.size() <= 24);
        CHECK(same_bits(read_back(s), v));
    }
    for (double v : {std::numeric_limits<double>::min(), std::numeric_limits<double>::max(),
                     std::numeric_limits<double>::denorm_min(), std::nextafter(1.0, 2.0)}) {
        CHECK(same_bits(read_back(format_double(v)), v));
    }
}

TEST_CASE("CSV layout") {
    const auto r = minimal_rule_even(WeightSpec::square(-0.5, -0.5, Gamma::minus_half), 1);
    const std::string csv = rule_to_csv(r);
    CHECK(csv.rfind("x1,x2,weight\n", 0) == 0);
    CHECK(count_of(csv, "\n") == r.size() + 1);
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(csv.back() == '\n');
}

TEST_CASE("nodes are written in lexicographic order") {
    for (const auto& r : sample_rules()) {
        const auto back = rule_from_csv(rule_to_csv(r), metadata_of(r));
        for (std::size_t k = 1; k < back.size(); ++k) {
            const auto& p = back.nodes[k - 1];
            const auto& q = back.nodes[k];
            CHECK((p.x1 < q.x1 || (p.x1 == q.x1 && p.x2 < q.x2)));
        }
    }
}

TEST_CASE("CSV and JSON round trips are bit-identical") {
    for (const auto& r : sample_rules()) {
        const auto from_csv = rule_from_csv(rule_to_csv(r), metadata_of(r));
        const auto from_json = rule_from_json(rule_to_json(r));
        check_identical(from_csv, r);
        check_identical(from_json, r);
        check_identical(from_csv, from_json);
        CHECK(rule_to_json(from_json) == rule_to_json(r));
    }
}

TEST_CASE("JSON field order") {
    const auto r = composed_rule(WeightSpec::composed(-0.5, -0.5, 2), 1);
    const std::string js = rule_to_json(r);
    std::size_t last = 0;
    for (const char* key : {"\"family\"", "\"alpha\"", "\"beta\"", "\"gamma\"", "\"ell\"", "\"param_n_or_m\"",
                            "\"degree\"", "\"node_count\"", "\"moller_bound\"", "\"nodes\""}) {
        const auto pos = js.find(key);
        REQUIRE(pos != std::string::npos);
        CHECK(pos > last);
        last = pos;
    }
    CHECK(js.find("\"family\": \"composed\"") != std::string::npos);
    CHECK(js.find("\"ell\": 2") != std::string::npos);
    CHECK(js.find("\"moller_bound\": 12") != std::string::npos);
    const auto b = gauss_cubature_biangle(WeightSpec::biangle(-0.5, -0.5, Gamma::minus_half), 2);
    CHECK(rule_to_json(b).find("\"ell\": null") != std::string::npos);
}

TEST_CASE("rule files are validated") {
    const auto r = minimal_rule_even(WeightSpec::square(-0.5, -0.5, Gamma::minus_half), 1);
    const std::string good = rule_to_json(r);
    const auto replaced = [&](const std::string& from, const std::string& to) {
        std::string s = good;
        const auto pos = s.find(from);
        REQUIRE(pos != std::string::npos);
        return s.replace(pos, from.size(), to);
    };
    CHECK_NOTHROW(rule_from_json(good));
    CHECK_THROWS_AS(rule_from_json(replaced("\"node_count\": 4", "\"node_count\": 5")), ParseError);
    CHECK_THROWS_AS(rule_from_json(replaced("\"degree\": 3", "\"degree\": 4")), ParseError);
    CHECK_THROWS_AS(rule_from_json(replaced("\"moller_bound\": 4", "\"moller_bound\": 3")), ParseError);
    CHECK_THROWS_AS(rule_from_json(replaced("\"gamma\": -0.5", "\"gamma\": 0.25")), ParseError);
    CHECK_THROWS_AS(rule_from_json(replaced("\"family\": \"square-even\"", "\"family\": \"disk\"")), ParseError);
    CHECK_THROWS_AS(rule_from_json("{"), ParseError);
    CHECK_THROWS_AS(rule_from_json("{}"), ParseError);

    std::string empty_nodes = good.substr(0, good.find("\"node_count\"")) +
                              "\"node_count\": 0,\n  \"moller_bound\": 4,\n  \"nodes\": []\n}\n";
    CHECK_THROWS_AS(rule_from_json(empty_nodes), ParseError);

    const auto meta = metadata_of(r);
    CHECK_THROWS_AS(rule_from_csv("", meta), ParseError);
    CHECK_THROWS_AS(rule_from_csv("x1,x2,weight\n", meta), ParseError);
    CHECK_THROWS_AS(rule_from_csv("a,b,c\n1,2,3\n", meta), ParseError);
    CHECK_THROWS_AS(rule_from_csv("x1,x2,weight\n1,2\n", meta), ParseError);
    CHECK_THROWS_AS(rule_from_csv("x1,x2,weight\n1,2,3,4\n", meta), ParseError);
    CHECK_THROWS_AS(rule_from_csv("x1,x2,weight\n1,zz,3\n", meta), ParseError);
    CHECK(rule_from_csv("x1,x2,weight\r\n0.5,-0.25,2\r\n", meta).weights.at(0) == 2.0);
}

TEST_CASE("SVG plots") {
    const auto square = minimal_rule_even(WeightSpec::square(-0.5, -0.5, Gamma::minus_half), 3);
    const std::string s = rule_to_svg(square, 400);
    CHECK(count_of(s, "<circle") == square.size());
    CHECK(count_of(s, "<path") == 0);
    CHECK(count_of(s, "fill=\"none\"") == 1);
    CHECK(s.find("viewBox=\"0 0 400 400\"") != std::string::npos);
    CHECK(s.find("fill=\"white\"") != std::string::npos);
    CHECK(s == rule_to_svg(square, 400));

    const auto bi = gauss_cubature_biangle(WeightSpec::biangle(-0.5, -0.5, Gamma::minus_half), 6);
    const std::string b = rule_to_svg(bi, 300);
    CHECK(count_of(b, "<circle") == bi.size());
    CHECK(count_of(b, "<path") == 1);
    // 5% margin on the [-2,2] x [-1,1] box at equal scale: 67.5 px per unit in a 300 px viewport.
    CHECK(b.find("M 15.000 82.500 L 150.000 217.500 L 285.000 82.500") != std::string::npos);

    CubatureRule2D empty = square;
    empty.nodes.clear();
    empty.weights.clear();
    CHECK_THROWS(rule_to_svg(empty, 400));
    CHECK_THROWS(rule_to_svg(square, 4));
}

TEST_CASE("report JSON") {
    const auto spec = WeightSpec::square(-0.5, -0.5, Gamma::minus_half);
    const auto r = minimal_rule_even(spec, 1);
    const auto rep = certify(r, square_moment_table(spec, 4), 4);
    const std::string js = report_to_json(r, rep, 1e-9);
    std::size_t last = 0;
    for (const char* key : {"\"family\"", "\"declared_degree\"", "\"basis\"", "\"max_degree_tested\"",
                            "\"certified_degree\"", "\"worst_rel_error\"", "\"tolerance\"", "\"passed\"",
                            "\"failures\""}) {
        const auto pos = js.find(key);
        REQUIRE(pos != std::string::npos);
        CHECK(pos > last);
        last = pos;
    }
    CHECK(js.find("\"certified_degree\": 3") != std::string::npos);
    CHECK(js.find("\"passed\": true") != std::string::npos);
    CHECK(count_of(js, "\"rel_error\"") == rep.failures.size());
}
