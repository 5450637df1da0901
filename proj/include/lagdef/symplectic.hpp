#pragma once

#include "lagdef/poly.hpp"
#include "lagdef/standard_basis.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace lagdef {

/// Poisson bracket of the Darboux form w = sum dq_i ^ dp_i:
///   {f, g} = sum_i (d_{q_i} f d_{p_i} g - d_{p_i} f d_{q_i} g),
/// so {q_i, p_i} = 1. Parameters and time are constants for the bracket.
Poly poisson_bracket(const Poly &f, const Poly &g);

/// Hamiltonian vector field X_f, stored as its 2n components on
/// (d_{q_1}..d_{q_n}, d_{p_1}..d_{p_n}). The components are
/// (-d_{p_i} f, d_{q_i} f), which makes X_f(g) == {f, g}.
struct HamiltonianField {
    std::vector<Poly> components;

    Poly apply(const Poly &g) const;
    bool is_zero() const;
};

HamiltonianField hamiltonian_field(const Poly &f);

struct BracketWitness {
    std::size_t first;
    std::size_t second;
    Poly bracket;
};

struct LagrangianReport {
    bool involutive = true;
    std::vector<BracketWitness> bracket_witnesses;
    int dimension = 0;
    bool dimension_ok = false;
    /// Reducedness (radical ideal) is never verified.
    bool reducedness_checked = false;

    bool ok() const { return involutive && dimension_ok; }
};

/// Involutivity of the generators (every pairwise bracket lies in the ideal
/// of germs, or in the polynomial ideal for a global order) and dimension of
/// the germ against n. The ideal must not involve parameters.
LagrangianReport check_lagrangian(const Ideal &ideal,
                                  const MonomialOrder &order = MonomialOrder::local());

/// Structure functions of a generator list: for i < j,
///   unit(i,j) * {F_i, F_j} == sum_m coefficients(i,j)[m] * F_m
/// exactly as polynomials. The unit is 1 whenever the bracket lies in the
/// polynomial ideal; otherwise it is a local unit from Mora's reduction.
class StructureFunctions {
  public:
    StructureFunctions() = default;

    std::size_t size() const { return n_; }
    const std::vector<Poly> &coefficients(std::size_t i, std::size_t j) const;
    const Poly &unit(std::size_t i, std::size_t j) const;
    /// True when every unit is the constant 1.
    bool polynomial() const;

  private:
    friend StructureFunctions structure_functions(const std::vector<Poly> &);

    std::size_t n_ = 0;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Poly>> coefficients_;
    std::map<std::pair<std::size_t, std::size_t>, Poly> units_;
};

/// Throws NotCoisotropic naming the first failing pair.
StructureFunctions structure_functions(const std::vector<Poly> &generators);

} // namespace lagdef
