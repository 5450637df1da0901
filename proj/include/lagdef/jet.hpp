#pragma once

#include "lagdef/linalg.hpp"
#include "lagdef/standard_basis.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace lagdef {

/// Finite-dimensional model O/(I + m^{d+1} + n^{e+1}) of the local ring,
/// where m is generated by the symplectic coordinates and n by parameters
/// and time. `e` is required as soon as the context has non-symplectic
/// variables.
///
/// Two constructions, with the same canonical output:
///  * ideals in the symplectic variables only: the basis is the set of
///    standard monomials of the local standard basis, and reduction is
///    truncated full reduction by that basis;
///  * ideals involving parameters: the truncated ideal is spanned
///    explicitly (all monomial multiples of the generators) and brought to
///    echelon form with columns in descending local order, so pivots are
///    leading monomials and the non-pivot monomials form the basis.
class JetSpace {
  public:
    JetSpace(const Ideal &ideal, int degree, std::optional<int> param_degree = std::nullopt);

    const ContextPtr &context() const { return ctx_; }
    int degree() const { return degree_; }
    std::optional<int> param_degree() const { return param_degree_; }
    std::size_t dimension() const { return basis_.size(); }
    /// Standard monomials in descending local order (1 first).
    const std::vector<Monomial> &basis() const { return basis_; }
    bool uses_standard_basis() const { return sb_.has_value(); }

    bool in_range(const Monomial &m) const;
    Poly truncate(const Poly &f) const;
    /// Canonical representative: a combination of basis monomials.
    Poly reduce(const Poly &f) const;
    SparseVector coordinates(const Poly &f) const;
    Poly from_coordinates(const SparseVector &v) const;
    std::optional<std::size_t> index_of(const Monomial &m) const;

  private:
    Poly reduce_by_basis(const Poly &f) const;

    ContextPtr ctx_;
    int degree_;
    std::optional<int> param_degree_;
    std::vector<Monomial> basis_;
    std::map<Monomial, std::size_t> index_;

    std::optional<StandardBasis> sb_;
    std::vector<Monomial> columns_;
    std::map<Monomial, std::size_t> column_index_;
    EchelonBasis macaulay_;
};

/// Every monomial with symplectic degree <= d and parameter degree <= e,
/// in descending local order.
std::vector<Monomial> jet_monomials(const VariableContext &ctx, int d, std::optional<int> e);

} // namespace lagdef
