#include "lagdef/singularity.hpp"

#include "lagdef/complex.hpp"
#include "lagdef/errors.hpp"
#include "lagdef/jet.hpp"

#include <stdexcept>

namespace lagdef {

namespace {

/// The curve over the bare context (q1, p1).
Poly as_curve(const Poly &f) {
    const auto &ctx = f.context();
    if (!ctx || ctx->pairs() != 1)
        throw std::invalid_argument("plane-curve invariants need exactly one symplectic pair");
    if (!f.supported_in(0, 2))
        throw std::invalid_argument("the curve must not involve parameters");
    if (ctx->num_vars() == 2)
        return f;
    return f.embed(VariableContext::make(1));
}

std::size_t image_rank(const JetComplex &jc, const JetCohomology &h,
                       const std::vector<Monomial> &basis) {
    EchelonBasis span(jc.dimension(1));
    for (const auto &v : h.coboundaries)
        span.insert(v);
    std::size_t before = span.rank();
    const auto &ctx = jc.family().context();
    for (const auto &m : basis)
        span.insert(jc.encode(Cochain::from_components({Poly::term(ctx, m, 1)})));
    return span.rank() - before;
}

} // namespace

Ideal jacobian_ideal(const Poly &f) {
    Poly c = as_curve(f);
    const auto &ctx = c.context();
    return Ideal(ctx, {c.derivative(ctx->q(0)), c.derivative(ctx->p(0))});
}

std::optional<std::vector<Monomial>> local_quotient_basis(const Ideal &ideal) {
    const auto &sb = ideal.local_basis();
    if (sb.contains_unit())
        return std::vector<Monomial>{};
    if (krull_dimension(sb) > 0)
        return std::nullopt;
    // Zero-dimensional: every variable has a pure power among the leading
    // monomials, and all standard monomials lie below the sum of those powers.
    int bound = 0;
    const std::size_t nv = ideal.context()->num_vars();
    for (std::size_t v = 0; v < nv; ++v) {
        int best = -1;
        for (const auto &lm : sb.leading)
            if (lm.degree() == lm[v] && (best < 0 || lm[v] < best))
                best = lm[v];
        bound += best;
    }
    return JetSpace(ideal, bound).basis();
}

MilnorData milnor_data(const Poly &f) {
    Poly c = as_curve(f);
    MilnorData d{c, jacobian_ideal(c), std::nullopt, {}};
    if (auto basis = local_quotient_basis(d.jacobian)) {
        d.mu = basis->size();
        d.basis = std::move(*basis);
    }
    return d;
}

std::optional<std::size_t> milnor_number(const Poly &f) { return milnor_data(f).mu; }

std::vector<Monomial> milnor_basis(const Poly &f) {
    auto d = milnor_data(f);
    if (!d.mu)
        throw MathError("non-isolated singularity: the Milnor number is infinite");
    return d.basis;
}

std::string to_string(BrieskornMode mode) {
    return mode == BrieskornMode::Milnor ? "milnor" : "tjurina";
}

BrieskornReport brieskorn_check(const Poly &f, int d_x) {
    auto data = milnor_data(f);
    if (!data.mu)
        throw MathError("non-isolated singularity: the Milnor number is infinite");
    LagrangianFamily curve(data.f.context(), {data.f});
    JetComplex jc(curve, d_x, std::nullopt);
    auto h = jet_cohomology(jc, 1);

    BrieskornReport r;
    r.quasi_homogeneous = ideal_membership(data.f, data.jacobian).member;
    r.h1_dimension = h.dimension;
    r.stabilized =
        jet_cohomology(JetComplex(curve, d_x + 1, std::nullopt), 1).dimension == h.dimension;
    r.algebra_dimension = *data.mu;
    r.image_rank = image_rank(jc, h, data.basis);
    r.bijective = r.image_rank == r.algebra_dimension && r.image_rank == r.h1_dimension;
    if (!r.bijective && !r.quasi_homogeneous) {
        auto tjurina = local_quotient_basis(data.jacobian.plus({data.f}));
        if (tjurina) {
            std::size_t rank = image_rank(jc, h, *tjurina);
            if (rank == tjurina->size() && rank == h.dimension) {
                r.mode = BrieskornMode::Tjurina;
                r.algebra_dimension = tjurina->size();
                r.image_rank = rank;
                r.bijective = true;
            }
        }
    }
    return r;
}

} // namespace lagdef
