#include "lagdef/errors.hpp"
#include "lagdef/stratification.hpp"

#include <doctest.h>

using namespace lagdef;

TEST_CASE("determinant by Laplace expansion") {
    auto ctx = VariableContext::make(1);
    Poly q = Poly::variable(ctx, "q1"), p = Poly::variable(ctx, "p1");
    Poly one = Poly::constant(ctx, 1);
    CHECK(determinant({{q, p}, {one, q}}) == q * q - p);
    CHECK(determinant({{one, Poly(ctx), Poly(ctx)}, {Poly(ctx), q, Poly(ctx)},
                       {Poly(ctx), Poly(ctx), p}}) == q * p);
}

TEST_CASE("strata_ideals examples") {
    auto ctx = VariableContext::make(1);
    Poly q = Poly::variable(ctx, "q1"), p = Poly::variable(ctx, "p1");
    auto ideals = strata_ideals(Ideal(ctx, {q * p}));
    REQUIRE(ideals.size() == 2);
    CHECK(ideals[0].generators() == std::vector<Poly>{q * p, -1 * q, p});
    CHECK(ideals[1].generators() == std::vector<Poly>{q * p});

    auto ctx2 = VariableContext::make(2);
    Poly q1 = Poly::variable(ctx2, "q1"), p1 = Poly::variable(ctx2, "p1"),
         q2 = Poly::variable(ctx2, "q2"), p2 = Poly::variable(ctx2, "p2");
    auto sep = strata_ideals(Ideal(ctx2, {q1 * p1, q2 * p2}));
    CHECK(krull_dimension(sep[0]) == 0);
    for (const auto &v : {q1, p1, q2, p2})
        CHECK(ideal_membership(v, sep[0]).member);
}

TEST_CASE("pyramidal_check examples") {
    auto ctx = VariableContext::make(1);
    Poly q = Poly::variable(ctx, "q1"), p = Poly::variable(ctx, "p1");
    auto a1 = pyramidal_check(Ideal(ctx, {q * p}));
    CHECK(a1.pyramidal);
    CHECK(a1.strata[0].dimension == 0);
    CHECK(a1.strata[1].dimension == 1);

    auto smooth = pyramidal_check(Ideal(ctx, {p}));
    CHECK(smooth.pyramidal);
    CHECK(smooth.strata[0].dimension == -1);

    auto ctx2 = VariableContext::make(2);
    Poly q1 = Poly::variable(ctx2, "q1"), p1 = Poly::variable(ctx2, "p1"),
         p2 = Poly::variable(ctx2, "p2");
    auto skew = pyramidal_check(Ideal(ctx2, {p1, p2 + q1 * p1}));
    CHECK(skew.pyramidal);
    CHECK(skew.strata[1].dimension <= 1);
}

TEST_CASE("a non-pyramidal germ") {
    // Non-reduced (q1^2, q2^2): both fields vanish on the whole plane q1 = q2 = 0.
    auto ctx2 = VariableContext::make(2);
    Poly q1 = Poly::variable(ctx2, "q1"), q2 = Poly::variable(ctx2, "q2");
    auto r = pyramidal_check(Ideal(ctx2, {q1 * q1, q2 * q2}));
    CHECK(r.strata[0].dimension == 2);
    CHECK_FALSE(r.pyramidal);
}

TEST_CASE("strata loci are nested and dimensions increase") {
    auto ctx2 = VariableContext::make(2);
    Poly q1 = Poly::variable(ctx2, "q1"), p1 = Poly::variable(ctx2, "p1"),
         q2 = Poly::variable(ctx2, "q2"), p2 = Poly::variable(ctx2, "p2");
    std::vector<Ideal> inputs{Ideal(ctx2, {q1 * p1, q2 * p2}), Ideal(ctx2, {p1, p2 + q1 * p1}),
                              Ideal(ctx2, {p1 * p1 - pow(q1, 3), p2}),
                              Ideal(ctx2, {q1 * q1, q2 * q2})};
    for (const auto &ideal : inputs) {
        auto ideals = strata_ideals(ideal);
        auto report = pyramidal_check(ideal);
        for (std::size_t j = 0; j + 1 < ideals.size(); ++j) {
            for (const auto &g : ideals[j + 1].generators())
                CHECK(ideal_membership(g, ideals[j]).member);
            CHECK(report.strata[j].dimension <= report.strata[j + 1].dimension);
        }
    }
}

TEST_CASE("smooth germs: the origin has full rank") {
    auto ctx2 = VariableContext::make(2);
    Poly q1 = Poly::variable(ctx2, "q1"), p1 = Poly::variable(ctx2, "p1"),
         q2 = Poly::variable(ctx2, "q2"), p2 = Poly::variable(ctx2, "p2");
    auto r = pyramidal_check(Ideal(ctx2, {p1 + q1 * q1, p2 + q2 * q2}));
    CHECK(r.pyramidal);
    CHECK(r.strata[1].dimension == -1);
}

TEST_CASE("relative mode adds the base dimension") {
    auto ctx = VariableContext::make(1, {"l"});
    Poly q = Poly::variable(ctx, "q1"), p = Poly::variable(ctx, "p1"),
         l = Poly::variable(ctx, "l");
    LagrangianFamily family(ctx, {q * p + l});
    auto rel = pyramidal_check(family, StrataMode::Relative);
    CHECK(rel.base_dimension == 1);
    CHECK(rel.pyramidal);
    CHECK(rel.strata[0].bound == 1);
    CHECK(rel.strata[1].dimension == 2);
    auto abs = pyramidal_check(family, StrataMode::Absolute);
    CHECK(abs.pyramidal);
    CHECK(abs.strata[1].dimension == 1);
}
