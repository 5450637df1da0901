#pragma once

#include "lagdef/order.hpp"
#include "lagdef/poly.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

namespace lagdef {

struct StandardBasis;

/// Finitely generated ideal of the polynomial ring over a context.
/// Zero generators are dropped on construction. Copies share a write-once
/// cache holding the local standard basis with cofactors.
class Ideal {
  public:
    Ideal(ContextPtr ctx, std::vector<Poly> generators);

    const ContextPtr &context() const { return ctx_; }
    const std::vector<Poly> &generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }
    /// True when no generator involves a parameter or the time variable.
    bool is_symplectic_only() const;

    Ideal plus(const std::vector<Poly> &more) const;

    /// Local (negdegrevlex) standard basis with cofactors, computed once.
    const StandardBasis &local_basis() const;

  private:
    struct Cache;

    ContextPtr ctx_;
    std::vector<Poly> gens_;
    std::shared_ptr<Cache> cache_;
};

/// Standard basis of an ideal under a monomial order. When cofactors are
/// tracked, elements[i] == sum_j cofactors[i][j] * generators[j] exactly,
/// with `generators` the generator list of the source ideal.
struct StandardBasis {
    ContextPtr ctx;
    MonomialOrder order;
    std::vector<Poly> elements;
    std::vector<Monomial> leading;
    std::optional<std::vector<std::vector<Poly>>> cofactors;
    std::size_t num_generators = 0;

    bool contains_unit() const;
    std::size_t size() const { return elements.size(); }
};

/// Buchberger's algorithm for the global order, Mora's tangent-cone
/// algorithm for the local order. Deterministic for fixed input. The result
/// is minimal: no leading monomial divides another.
StandardBasis standard_basis(const Ideal &ideal, const MonomialOrder &order,
                             bool with_cofactors = false);

/// unit * f == sum_i cofactors[i] * sb.elements[i] + remainder.
/// For the global order the remainder is fully reduced and unit is 1. For the
/// local order Mora's reduction is used: the remainder's leading monomial is
/// not divisible by any leading monomial and unit is invertible in the local
/// ring (nonzero constant term).
struct NormalFormResult {
    Poly remainder;
    Poly unit;
    std::vector<Poly> cofactors;
};

NormalFormResult normal_form(const Poly &f, const StandardBasis &sb, bool with_cofactors = false);

/// S-polynomial of two nonzero polynomials.
Poly spoly(const Poly &f, const Poly &g, const MonomialOrder &order);

/// unit * f == sum_j cofactors[j] * ideal.generators()[j] when `member`.
struct Membership {
    bool member = false;
    Poly unit;
    std::vector<Poly> cofactors;
};

/// Membership of the germ of f in the ideal of germs at the origin
/// (local order), or in the polynomial ideal (global order).
Membership ideal_membership(const Poly &f, const Ideal &ideal,
                            const MonomialOrder &order = MonomialOrder::local());
Membership ideal_membership(const Poly &f, const StandardBasis &sb_with_cofactors);

/// Krull dimension of the germ at 0 of V(ideal): the largest set of
/// variables whose coordinate subspace contains no leading monomial of a
/// local standard basis. Only the first `nvars` variables are considered
/// (default: all). Returns -1 for the unit ideal (empty germ).
int krull_dimension(const Ideal &ideal, std::optional<std::size_t> nvars = std::nullopt);
int krull_dimension(const StandardBasis &sb, std::optional<std::size_t> nvars = std::nullopt);

} // namespace lagdef
