#include "lagdef/symplectic.hpp"

#include "lagdef/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace lagdef {

Poly poisson_bracket(const Poly &f, const Poly &g) {
    ContextPtr ctx = f.context() ? f.context() : g.context();
    if (f.context() && g.context() && !same_context(f.context(), g.context()))
        throw ContextMismatch();
    Poly r(ctx);
    if (!ctx || f.is_zero() || g.is_zero())
        return r;
    for (std::size_t i = 0; i < ctx->pairs(); ++i) {
        std::size_t q = ctx->q(i), p = ctx->p(i);
        r += f.derivative(q) * g.derivative(p);
        r -= f.derivative(p) * g.derivative(q);
    }
    return r;
}

Poly HamiltonianField::apply(const Poly &g) const {
    Poly r;
    if (components.empty())
        return r;
    const auto &ctx = components.front().context();
    r = Poly(ctx);
    for (std::size_t v = 0; v < components.size(); ++v)
        if (!components[v].is_zero())
            r += components[v] * g.derivative(v);
    return r;
}

bool HamiltonianField::is_zero() const {
    return std::all_of(components.begin(), components.end(),
                       [](const Poly &c) { return c.is_zero(); });
}

HamiltonianField hamiltonian_field(const Poly &f) {
    const auto &ctx = f.context();
    if (!ctx)
        throw std::invalid_argument("Hamiltonian field of a context-free polynomial");
    HamiltonianField x;
    x.components.resize(ctx->num_symplectic(), Poly(ctx));
    for (std::size_t i = 0; i < ctx->pairs(); ++i) {
        x.components[ctx->q(i)] = -f.derivative(ctx->p(i));
        x.components[ctx->p(i)] = f.derivative(ctx->q(i));
    }
    return x;
}

LagrangianReport check_lagrangian(const Ideal &ideal, const MonomialOrder &order) {
    if (!ideal.is_symplectic_only())
        throw std::invalid_argument("check_lagrangian expects an ideal in the symplectic "
                                    "variables only; specialize the parameters first");
    const auto &ctx = ideal.context();
    const auto &gens = ideal.generators();
    LagrangianReport report;

    std::optional<StandardBasis> global;
    const StandardBasis *sb = nullptr;
    if (order.is_local()) {
        sb = &ideal.local_basis();
    } else {
        global = standard_basis(ideal, order, false);
        sb = &*global;
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            Poly b = poisson_bracket(gens[i], gens[j]);
            if (!normal_form(b, *sb).remainder.is_zero()) {
                report.involutive = false;
                report.bracket_witnesses.push_back({i, j, b});
            }
        }
    report.dimension = krull_dimension(ideal, ctx->num_symplectic());
    report.dimension_ok = report.dimension == static_cast<int>(ctx->pairs());
    return report;
}

const std::vector<Poly> &StructureFunctions::coefficients(std::size_t i, std::size_t j) const {
    return coefficients_.at({i, j});
}

const Poly &StructureFunctions::unit(std::size_t i, std::size_t j) const {
    return units_.at({i, j});
}

bool StructureFunctions::polynomial() const {
    return std::all_of(units_.begin(), units_.end(), [](const auto &u) {
        return u.second.is_constant() && u.second.constant_term() == 1;
    });
}

StructureFunctions structure_functions(const std::vector<Poly> &generators) {
    StructureFunctions sf;
    sf.n_ = generators.size();
    if (sf.n_ < 2)
        return sf;
    const auto &ctx = generators.front().context();
    Ideal ideal(ctx, generators);
    if (ideal.size() != generators.size())
        throw std::invalid_argument("structure functions need nonzero generators");

    std::optional<StandardBasis> global;
    for (std::size_t i = 0; i < sf.n_; ++i)
        for (std::size_t j = i + 1; j < sf.n_; ++j) {
            Poly b = poisson_bracket(generators[i], generators[j]);
            if (b.is_zero()) {
                sf.coefficients_[{i, j}] = std::vector<Poly>(sf.n_, Poly(ctx));
                sf.units_[{i, j}] = Poly::constant(ctx, 1);
                continue;
            }
            if (!global)
                global = standard_basis(ideal, MonomialOrder::global(), true);
            Membership m = ideal_membership(b, *global);
            if (!m.member)
                m = ideal_membership(b, ideal.local_basis());
            if (!m.member)
                throw NotCoisotropic(i, j, b.to_string());
            sf.coefficients_[{i, j}] = std::move(m.cofactors);
            sf.units_[{i, j}] = std::move(m.unit);
        }
    return sf;
}

} // namespace lagdef
