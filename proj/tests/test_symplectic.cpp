#include "lagdef/errors.hpp"
#include "lagdef/symplectic.hpp"
#include "support/exterior.hpp"
#include "support/forms.hpp"
#include "support/random.hpp"

#include <doctest.h>

using namespace lagdef;

TEST_CASE("poisson_bracket examples") {
    auto ctx = VariableContext::make(1);
    Poly q = Poly::variable(ctx, "q1"), p = Poly::variable(ctx, "p1");
    CHECK(poisson_bracket(q, p) == Poly::constant(ctx, 1));
    CHECK(poisson_bracket(p, q) == Poly::constant(ctx, -1));
    CHECK(poisson_bracket(q * p, q) == -1 * q);
    CHECK(poisson_bracket(q * p, p) == p);
    Poly f = pow(q, 3) - pow(p, 2);
    CHECK(poisson_bracket(f, f).is_zero());
    CHECK(poisson_bracket(f, q * p) == 3 * pow(q, 3) + 2 * pow(p, 2));
}

TEST_CASE("parameters are inert under the bracket") {
    auto ctx = VariableContext::make(1, {"l"}, "t");
    Poly q = Poly::variable(ctx, "q1"), l = Poly::variable(ctx, "l"), t = Poly::variable(ctx, "t");
    CHECK(poisson_bracket(l, q).is_zero());
    CHECK(poisson_bracket(l * t, q * l).is_zero());
}

TEST_CASE("bracket axioms on random polynomials") {
    for (std::size_t pairs : {1u, 2u}) {
        auto ctx = VariableContext::make(pairs);
        std::mt19937 rng(101 + static_cast<unsigned>(pairs));
        using lagdef::testing::random_symplectic_poly;
        for (int trial = 0; trial < 20; ++trial) {
            Poly f = random_symplectic_poly(rng, ctx, 4), g = random_symplectic_poly(rng, ctx, 4),
                 h = random_symplectic_poly(rng, ctx, 3);
            CHECK(poisson_bracket(f, g) == -1 * poisson_bracket(g, f));
            CHECK(poisson_bracket(f, g * h) ==
                  poisson_bracket(f, g) * h + g * poisson_bracket(f, h));
            Poly jacobi = poisson_bracket(f, poisson_bracket(g, h)) +
                          poisson_bracket(g, poisson_bracket(h, f)) +
                          poisson_bracket(h, poisson_bracket(f, g));
            CHECK(jacobi.is_zero());
            CHECK(poisson_bracket(f, g) == lagdef::testing::bracket_via_form(f, g));
        }
    }
}

TEST_CASE("bracket times the volume form is n df^dg^w^(n-1)") {
    using namespace lagdef::testing;
    CHECK(wedge_sign(0b01, 0b10) == 1);
    CHECK(wedge_sign(0b10, 0b01) == -1);
    CHECK(wedge_sign(0b101, 0b010) == -1);
    for (std::size_t pairs : {1u, 2u, 3u}) {
        auto ctx = VariableContext::make(pairs);
        std::mt19937 rng(7 + static_cast<unsigned>(pairs));
        Form w = darboux_form(ctx);
        Poly volume = top_coefficient(power(w, pairs, ctx), ctx);
        Form rest = power(w, pairs - 1, ctx);
        for (int trial = 0; trial < 10; ++trial) {
            Poly f = random_symplectic_poly(rng, ctx, 3), g = random_symplectic_poly(rng, ctx, 3);
            Poly rhs = top_coefficient(wedge(wedge(exterior_d(f), exterior_d(g)), rest), ctx);
            CHECK(poisson_bracket(f, g) * volume == Rational(pairs) * rhs);
        }
    }
}

TEST_CASE("hamiltonian_field examples") {
    auto ctx = VariableContext::make(1);
    Poly q = Poly::variable(ctx, "q1"), p = Poly::variable(ctx, "p1");
    auto xq = hamiltonian_field(q);
    CHECK(xq.components == std::vector<Poly>{Poly(ctx), Poly::constant(ctx, 1)});
    auto xqp = hamiltonian_field(q * p);
    CHECK(xqp.components == std::vector<Poly>{-1 * q, p});
    CHECK(hamiltonian_field(Poly::constant(ctx, 3)).is_zero());
}

TEST_CASE("hamiltonian field acts as the bracket") {
    auto ctx = VariableContext::make(2);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Poly f = lagdef::testing::random_symplectic_poly(rng, ctx, 4);
        Poly g = lagdef::testing::random_symplectic_poly(rng, ctx, 4);
        CHECK(hamiltonian_field(f).apply(g) == poisson_bracket(f, g));
    }
}

TEST_CASE("check_lagrangian examples") {
    auto ctx = VariableContext::make(1);
    Poly q = Poly::variable(ctx, "q1"), p = Poly::variable(ctx, "p1");
    auto a1 = check_lagrangian(Ideal(ctx, {q * p}));
    CHECK(a1.ok());
    CHECK(a1.dimension == 1);
    CHECK_FALSE(a1.reducedness_checked);

    auto point = check_lagrangian(Ideal(ctx, {q, p}));
    CHECK_FALSE(point.involutive);
    CHECK_FALSE(point.dimension_ok);
    REQUIRE(point.bracket_witnesses.size() == 1);
    CHECK(point.bracket_witnesses[0].first == 0);
    CHECK(point.bracket_witnesses[0].second == 1);
    CHECK(point.bracket_witnesses[0].bracket == Poly::constant(ctx, 1));

    auto ctx2 = VariableContext::make(2);
    Poly q1 = Poly::variable(ctx2, "q1"), p1 = Poly::variable(ctx2, "p1"),
         q2 = Poly::variable(ctx2, "q2"), p2 = Poly::variable(ctx2, "p2");
    CHECK(check_lagrangian(Ideal(ctx2, {q1 * p1, q2 * p2})).ok());
    CHECK(check_lagrangian(Ideal(ctx2, {p1, p2 + q1 * p1})).ok());
    auto bad = check_lagrangian(Ideal(ctx2, {q1, p1}));
    CHECK_FALSE(bad.involutive);
    CHECK(bad.dimension == 2);
    CHECK(bad.dimension_ok);

    auto with_param = VariableContext::make(1, {"l"});
    CHECK_THROWS_AS(check_lagrangian(Ideal(with_param, {Poly::variable(with_param, "l")})),
                    std::invalid_argument);
}

TEST_CASE("structure_functions examples") {
    auto ctx = VariableContext::make(2);
    Poly q1 = Poly::variable(ctx, "q1"), p1 = Poly::variable(ctx, "p1"),
         q2 = Poly::variable(ctx, "q2"), p2 = Poly::variable(ctx, "p2");
    std::vector<Poly> gens{p1, p2 + q1 * p1};
    auto sf = structure_functions(gens);
    CHECK(sf.size() == 2);
    CHECK(sf.polynomial());
    // {p1, p2 + q1 p1} = -p1.
    CHECK(sf.coefficients(0, 1) == std::vector<Poly>{Poly::constant(ctx, -1), Poly(ctx)});

    auto diag = structure_functions({q1 * p1, q2 * p2});
    CHECK(diag.coefficients(0, 1) == std::vector<Poly>{Poly(ctx), Poly(ctx)});

    CHECK_THROWS_AS(structure_functions({q1, p1}), NotCoisotropic);
}

TEST_CASE("structure functions reproduce every bracket") {
    auto ctx = VariableContext::make(2);
    Poly q1 = Poly::variable(ctx, "q1"), p1 = Poly::variable(ctx, "p1"),
         q2 = Poly::variable(ctx, "q2"), p2 = Poly::variable(ctx, "p2");
    std::vector<std::vector<Poly>> systems{
        {p1, p2 + q1 * p1},
        {q1 * p1, q2 * p2},
        {p1 - q1 * q1 * p2, p2},
    };
    for (const auto &gens : systems) {
        auto sf = structure_functions(gens);
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j) {
                Poly rhs(ctx);
                for (std::size_t m = 0; m < gens.size(); ++m)
                    rhs += sf.coefficients(i, j)[m] * gens[m];
                CHECK(sf.unit(i, j) * poisson_bracket(gens[i], gens[j]) == rhs);
            }
    }
}
