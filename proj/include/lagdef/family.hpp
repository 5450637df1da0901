#pragma once

#include "lagdef/standard_basis.hpp"
#include "lagdef/symplectic.hpp"

#include <optional>
#include <vector>

namespace lagdef {

/// n generators F_1..F_n in the symplectic variables and the parameters
/// (and optionally time) of a context with n symplectic pairs.
/// Involutivity modulo the ideal of the family is decided on construction;
/// a failing family keeps its witness and throws NotCoisotropic from
/// structure().
class LagrangianFamily {
  public:
    LagrangianFamily(ContextPtr ctx, std::vector<Poly> generators);

    const ContextPtr &context() const { return ctx_; }
    const std::vector<Poly> &generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    std::size_t num_params() const { return ctx_->num_params(); }
    bool has_time() const { return ctx_->has_time(); }
    bool has_parameters() const { return ctx_->num_vars() > ctx_->num_symplectic(); }

    const Ideal &ideal() const { return ideal_; }
    bool involutive() const { return structure_.has_value(); }
    const std::vector<BracketWitness> &witnesses() const { return witnesses_; }
    const StructureFunctions &structure() const;

    /// Largest symplectic degree of a generator term.
    int max_degree() const;
    /// 1 when some generator has a term of symplectic degree 1 (brackets
    /// with it lower the degree by one), else 0.
    int degree_drop() const;

    /// Every parameter and the time set to zero, over a context without them.
    LagrangianFamily central_fiber() const;

  private:
    ContextPtr ctx_;
    std::vector<Poly> gens_;
    Ideal ideal_;
    std::optional<StructureFunctions> structure_;
    std::vector<BracketWitness> witnesses_;
};

} // namespace lagdef
