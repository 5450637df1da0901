#include "lagdef/complex.hpp"
#include "support/random.hpp"

#include <doctest.h>

using namespace lagdef;
using lagdef::testing::random_poly;

namespace {


struct Families {
    ContextPtr c1 = VariableContext::make(1, {"l"});
    ContextPtr c2 = VariableContext::make(2);

    LagrangianFamily a1_versal() const {
        return LagrangianFamily(c1, {Poly::variable(c1, "q1") * Poly::variable(c1, "p1") +
                                     Poly::variable(c1, "l")});
    }
    LagrangianFamily separable() const {
        auto v = [&](const char *n) { return Poly::variable(c2, n); };
        return LagrangianFamily(c2, {v("q1") * v("p1"), v("q2") * v("p2")});
    }
    LagrangianFamily skew() const {
        auto v = [&](const char *n) { return Poly::variable(c2, n); };
        return LagrangianFamily(c2, {v("p1"), v("p2") + v("q1") * v("p1")});
    }
};

LagrangianFamily curve(const std::string &which) {
    auto ctx = VariableContext::make(1);
    Poly q = Poly::variable(ctx, "q1"), p = Poly::variable(ctx, "p1");
    if (which == "p")
        return LagrangianFamily(ctx, {p});
    if (which == "qp")
        return LagrangianFamily(ctx, {q * p});
    return LagrangianFamily(ctx, {pow(q, 3) - pow(p, 2)});
}

bool in_ideal(const Poly &f, const LagrangianFamily &family) {
    return f.is_zero() || ideal_membership(f, family.ideal()).member;
}

} // namespace

TEST_CASE("index tuples") {
    CHECK(index_tuples(3, 2) == std::vector<IndexTuple>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(index_tuples(2, 0) == std::vector<IndexTuple>{{}});
    CHECK(index_tuples(1, 2).empty());
}

TEST_CASE("delta examples") {
    Families f;
    auto a1 = f.a1_versal();
    auto one = Cochain::scalar(1, Poly::constant(f.c1, 1));
    CHECK(delta(one, a1).is_zero());
    auto dq = delta(Cochain::scalar(1, Poly::variable(f.c1, "q1")), a1);
    CHECK(dq.entries() == std::vector<Poly>{-Poly::variable(f.c1, "q1")});
    auto d1 = delta(Cochain::from_components({Poly::variable(f.c1, "p1")}), a1);
    CHECK(d1.degree() == 2);
    CHECK(d1.is_zero());

    // a^{12} = (-1, 0): only the first component feeds the structure term.
    auto skew = f.skew();
    auto phi = Cochain::from_components({Poly(f.c2), Poly::constant(f.c2, 1)});
    auto dphi = delta(phi, skew);
    CHECK(dphi.entries() == std::vector<Poly>{Poly(f.c2)});
    auto psi = Cochain::from_components({Poly::constant(f.c2, 1), Poly(f.c2)});
    CHECK(delta(psi, skew).entries() == std::vector<Poly>{Poly::constant(f.c2, 1)});
}

TEST_CASE("delta squares to zero modulo the ideal") {
    Families f;
    std::mt19937 rng(2024);
    for (const auto &family : {f.a1_versal(), f.separable(), f.skew()}) {
        const auto &ctx = family.context();
        for (int trial = 0; trial < 10; ++trial) {
            auto h = Cochain::scalar(family.size(), random_poly(rng, ctx, 3, 4));
            auto ddh = delta(delta(h, family), family);
            for (const auto &e : ddh.entries())
                CHECK(in_ideal(e, family));
            std::vector<Poly> comps;
            for (std::size_t i = 0; i < family.size(); ++i)
                comps.push_back(random_poly(rng, ctx, 3, 4));
            auto phi = Cochain::from_components(comps);
            auto ddphi = delta(delta(phi, family), family);
            for (const auto &e : ddphi.entries())
                CHECK(in_ideal(e, family));
        }
    }
}

TEST_CASE("H1 of plane curves") {
    auto smooth = curve("p");
    for (int d = 0; d <= 6; ++d)
        CHECK(cohomology(smooth, 1, d).dimension == 0);

    auto a1 = curve("qp");
    for (int d : {2, 3}) {
        auto r = cohomology(a1, 1, d);
        CHECK(r.dimension == 1);
        CHECK(r.stabilized);
        REQUIRE(r.representatives.size() == 1);
        CHECK(r.representatives[0].entries() ==
              std::vector<Poly>{Poly::constant(a1.context(), 1)});
    }

    auto a2 = curve("cusp");
    for (int d : {4, 6}) {
        auto r = cohomology(a2, 1, d);
        CHECK(r.dimension == 2);
        CHECK(r.stabilized);
        REQUIRE(r.representatives.size() == 2);
        std::vector<std::string> reps;
        for (const auto &c : r.representatives)
            reps.push_back(c.entries()[0].to_string());
        std::sort(reps.begin(), reps.end());
        CHECK(reps == std::vector<std::string>{"1", "q1"});
    }
}

TEST_CASE("H1 of the separable system") {
    Families f;
    auto r = cohomology(f.separable(), 1, 4);
    CHECK(r.dimension == 2);
    CHECK(r.stabilized);
}

TEST_CASE("H1 representatives satisfy the cocycle identity") {
    Families f;
    for (const auto &family : {f.separable(), f.skew()}) {
        auto r = cohomology(family, 1, 3);
        JetSpace jet(family.ideal(), 3);
        for (const auto &rep : r.representatives) {
            auto d = delta(rep, family);
            for (const auto &e : d.entries())
                CHECK(jet.reduce(e).is_zero());
        }
    }
}

TEST_CASE("H0 with parameters contains the parameter constants") {
    Families f;
    auto family = f.a1_versal();
    JetComplex jc(family, 3, 2);
    auto h0 = jet_cohomology(jc, 0);
    EchelonBasis span(jc.dimension(0));
    for (const auto &v : h0.representatives)
        span.insert(v);
    Poly l = Poly::variable(f.c1, "l");
    for (const auto &c : {Poly::constant(f.c1, 1), l, l * l})
        CHECK(span.contains(jc.encode(Cochain::scalar(1, c))));
    CHECK_FALSE(span.contains(jc.encode(Cochain::scalar(1, Poly::variable(f.c1, "q1")))));
}
