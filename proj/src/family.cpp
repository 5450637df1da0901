#include "lagdef/family.hpp"

#include "lagdef/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace lagdef {

LagrangianFamily::LagrangianFamily(ContextPtr ctx, std::vector<Poly> generators)
    : ctx_(std::move(ctx)), gens_(std::move(generators)), ideal_(ctx_, gens_) {
    if (gens_.size() != ctx_->pairs())
        throw MathError("a family needs exactly as many generators as symplectic pairs (" +
                        std::to_string(ctx_->pairs()) + "), got " +
                        std::to_string(gens_.size()));
    for (auto &g : gens_) {
        if (!g.context())
            g = Poly(ctx_);
        else if (!same_context(g.context(), ctx_))
            throw ContextMismatch();
    }
    try {
        structure_ = structure_functions(gens_);
    } catch (const NotCoisotropic &e) {
        witnesses_.push_back(
            {e.first, e.second, poisson_bracket(gens_[e.first], gens_[e.second])});
    }
}

const StructureFunctions &LagrangianFamily::structure() const {
    if (!structure_) {
        const auto &w = witnesses_.front();
        throw NotCoisotropic(w.first, w.second, w.bracket.to_string());
    }
    return *structure_;
}

int LagrangianFamily::max_degree() const {
    int d = 0;
    for (const auto &g : gens_)
        d = std::max(d, g.degree(0, ctx_->num_symplectic()));
    return d;
}

int LagrangianFamily::degree_drop() const {
    const std::size_t x = ctx_->num_symplectic();
    for (const auto &g : gens_)
        for (const auto &[m, c] : g.terms())
            if (m.degree(0, x) == 1)
                return 1;
    return 0;
}

LagrangianFamily LagrangianFamily::central_fiber() const {
    auto base = VariableContext::make(ctx_->pairs());
    std::vector<Poly> fiber;
    for (const auto &g : gens_) {
        Poly h = g;
        for (std::size_t v = ctx_->num_symplectic(); v < ctx_->num_vars(); ++v)
            h = h.evaluate(v, 0);
        fiber.push_back(h.embed(base));
    }
    return LagrangianFamily(base, std::move(fiber));
}

} // namespace lagdef
