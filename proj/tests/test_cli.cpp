#include "lagdef/cli/commands.hpp"
#include "lagdef/cli/germ_parser.hpp"
#include "lagdef/deformation.hpp"

#include "support/random.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace lagdef;
using namespace lagdef::cli;

namespace {

const char *kCusp = "pairs 1;\nF1 = q1^3 - p1^2;\n";

ParseError parse_failure(std::string_view text) {
    try {
        parse_germ(text);
    } catch (const ParseError &e) {
        return e;
    }
    FAIL("expected a parse error for: " << text);
    return ParseError(0, 0, "");
}

} // namespace

TEST_CASE("parse_germ examples") {
    auto g = parse_germ("pairs 1; F1 = q1*p1;");
    CHECK(g.context->pairs() == 1);
    REQUIRE(g.generators.size() == 1);
    CHECK(g.generators[0].first == "F1");
    CHECK(g["F1"].to_string() == "q1*p1");

    auto v = parse_germ("pairs 1; params l1 l2; F1 = q1^3 - p1^2 + l1 + l2*q1;");
    auto ctx = VariableContext::make(1);
    auto versal = versal_family_curve(pow(Poly::variable(ctx, "q1"), 3) -
                                      pow(Poly::variable(ctx, "p1"), 2));
    CHECK(*v.context == *versal.context());
    CHECK(v["F1"] == versal.generators()[0]);

    auto full = parse_germ("# comment\npairs 2 ;params a b;time t;\n"
                           "G = (q1 + 1/2*a)^2 - -3/6 * t*p2 ; H=+q2 # trailing\n;");
    CHECK(full.context->time_name() == std::optional<std::string>("t"));
    CHECK(full["G"].to_string() == "q1^2 + q1*a + 1/4*a^2 + 1/2*p2*t");
    CHECK(full["H"].to_string() == "q2");
}

TEST_CASE("parse_germ errors carry positions") {
    auto e = parse_failure("pairs 1;\n  F1 = x1;");
    CHECK(e.line() == 2);
    CHECK(e.column() == 8);
    CHECK(e.detail() == "undeclared identifier x1");

    CHECK(parse_failure("pairs 1; F1 = q1^-2;").detail() == "negative exponent -2");
    CHECK(parse_failure("pairs 1; F1 = q1 / p1;").column() == 18);
    CHECK(parse_failure("pairs 1; F1 = 1/0;").detail() == "zero denominator");
    CHECK(parse_failure("pairs 0; F1 = 1;").line() == 1);
    CHECK(parse_failure("pairs 1;").detail() == "expected at least one generator");
    CHECK(parse_failure("pairs 1; F1 = q1").detail() == "expected ';', found end of input");
    CHECK(parse_failure("pairs 1; params q1; F1 = q1;").detail() == "'q1' is already declared");
    CHECK(parse_failure("pairs 1; F1 = q1; F1 = p1;").detail() == "duplicate generator 'F1'");
    CHECK(parse_failure("pairs 1; time t; params l; F1 = q1;").detail() ==
          "'params' must appear before the generators");
    CHECK(parse_failure("pairs 1; F1 = (q1 + p1;").column() == 23);
    CHECK(parse_failure("pairs 1; F1 = q1 $ p1;").detail() == "unexpected character '$'");
}

TEST_CASE("parse and print round-trip on random germs") {
    std::mt19937 rng(20261015);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t pairs = 1 + trial % 3;
        std::vector<std::string> params;
        for (int j = 0; j < trial % 3; ++j)
            params.push_back("l" + std::to_string(j + 1));
        std::optional<std::string> time;
        if (trial % 2)
            time = "t";
        GermFile g;
        g.context = VariableContext::make(pairs, params, time);
        for (std::size_t i = 0; i < 1 + trial % 4; ++i)
            g.generators.emplace_back("F" + std::to_string(i + 1),
                                      testing::random_poly(rng, g.context, 4));
        std::string text = print_germ(g);
        auto back = parse_germ(text);
        CHECK(back == g);
        CHECK(print_germ(back) == text);
    }
}

TEST_CASE("digest is FNV-1a 64") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(digest("foobar") == "fnv1a64:85944171f73967e8");
}

TEST_CASE("run_command examples") {
    CommandOptions o;
    o.degree = 6;
    auto h1 = run_command("h1", kCusp, o);
    REQUIRE(h1.exit_code == 0);
    CHECK((*h1.report)["result"]["dimension"] == 2);
    CHECK((*h1.report)["stabilized"] == true);
    CHECK((*h1.report)["schema_version"] == kSchemaVersion);
    CHECK_FALSE(h1.report->contains("timing"));

    auto lag = run_command("check-lagrangian", "pairs 1; F1=q1; F2=p1;", {});
    CHECK(lag.exit_code == 2);
    const auto &w = (*lag.report)["result"]["witnesses"];
    REQUIRE(w.size() == 1);
    CHECK(w[0]["pair"] == Json::array({"F1", "F2"}));
    CHECK(w[0]["bracket"] == "1");
    CHECK((*lag.report)["result"]["dimension_ok"] == false);

    CHECK(run_command("check-lagrangian", "pairs 1; F1 = q1;", {}).exit_code == 0);

    auto mil = run_command("milnor", kCusp, {});
    CHECK(mil.exit_code == 0);
    CHECK((*mil.report)["result"]["mu"] == 2);
    CHECK((*mil.report)["result"]["basis"] == Json::array({"1", "q1"}));

    auto nonisolated = run_command("milnor", "pairs 1; F1 = q1^2;", {});
    CHECK(nonisolated.exit_code == 2);
    CHECK((*nonisolated.report)["result"]["mu"].is_null());
}

TEST_CASE("run_command exit codes") {
    auto parse = run_command("h1", "pairs 1; F1 = x1;", {});
    CHECK(parse.exit_code == 1);
    CHECK(parse.parse_error);
    CHECK_FALSE(parse.report);
    CHECK(parse.error == "1:15: undeclared identifier x1");

    CHECK(run_command("nope", kCusp, {}).exit_code == 1);
    CHECK(run_command("milnor", "pairs 2; F1 = q1; F2 = q2;", {}).exit_code == 1);
    CommandOptions global;
    global.order = "global";
    CHECK(run_command("h1", kCusp, global).exit_code == 1);
    CHECK(run_command("check-lagrangian", kCusp, global).exit_code == 0);

    CommandOptions capped;
    capped.degree = 9;
    capped.max_degree = 8;
    CHECK(run_command("h1", kCusp, capped).exit_code == 1);

    // Two generators for one pair is not a complete intersection family.
    auto math = run_command("h1", "pairs 1; F1 = q1; F2 = p1;", {});
    CHECK(math.exit_code == 2);
    CHECK((*math.report)["status"] == "error");

    CHECK(run_command("solve-infinitesimal", "pairs 1; time t; F1 = q1*p1 + t;", {}).exit_code ==
          2);
    CHECK(run_command("solve-infinitesimal", kCusp, {}).exit_code == 1);
}

TEST_CASE("reports are deterministic and timing is opt-in") {
    CommandOptions o;
    o.degree = 6;
    for (const auto &name : command_names()) {
        std::string input = name == "solve-infinitesimal" ? "pairs 1; params l; time t;\n"
                                                            "F1 = q1*p1 + l + t*q1;\n"
                            : name == "ks-check" || name == "special-fiber"
                                ? "pairs 1; params l1 l2; F1 = q1^3 - p1^2 + l1 + l2*q1;"
                                : kCusp;
        auto a = run_command(name, input, o);
        auto b = run_command(name, input, o);
        CHECK_MESSAGE(a.exit_code == 0, name);
        CHECK(a.output == b.output);
        CHECK(a.output.find("timing") == std::string::npos);
    }
    o.timing = true;
    o.format = Format::Text;
    auto t = run_command("milnor", kCusp, o);
    CHECK(t.output.find("timing.seconds: ") != std::string::npos);
    CHECK(t.output.find("result.basis: [1, q1]") != std::string::npos);
}

TEST_CASE("LAGDEF_MAX_DEGREE") {
    ::setenv("LAGDEF_MAX_DEGREE", "5", 1);
    CHECK(max_degree_from_env() == 5);
    ::setenv("LAGDEF_MAX_DEGREE", "five", 1);
    CHECK_THROWS_AS(max_degree_from_env(), std::invalid_argument);
    ::unsetenv("LAGDEF_MAX_DEGREE");
    CHECK_FALSE(max_degree_from_env());
}
