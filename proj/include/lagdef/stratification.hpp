#pragma once

#include "lagdef/family.hpp"
#include "lagdef/standard_basis.hpp"

#include <string>
#include <vector>

namespace lagdef {

enum class StrataMode { Absolute, Relative };

std::string to_string(StrataMode mode);

/// Closed locus {l <= j}: the ideal plus every (j+1)x(j+1) minor of the
/// matrix whose rows are the Hamiltonian fields of the generators.
struct Stratum {
    int j = 0;
    Ideal ideal;
    /// Germ dimension; -1 when the locus does not contain the origin.
    int dimension = 0;
    int bound = 0;
    bool ok = false;
};

/// Pyramidal iff dim {l <= j} <= j (+ dim of the base in relative mode) for
/// every j; dim {l <= j} is the maximum of dim Z_i over i <= j, so bounding
/// the closed loci is equivalent to bounding each stratum.
struct StrataReport {
    StrataMode mode = StrataMode::Absolute;
    int base_dimension = 0;
    std::vector<Stratum> strata;
    bool pyramidal = false;
};

/// Ideals of {l <= j} for j = 0..n, where n is the number of pairs.
std::vector<Ideal> strata_ideals(const Ideal &ideal);
std::vector<Ideal> strata_ideals(const LagrangianFamily &family);

/// Determinant of a square matrix of polynomials by Laplace expansion.
Poly determinant(const std::vector<std::vector<Poly>> &m);

/// Absolute mode needs an ideal in the symplectic variables only.
StrataReport pyramidal_check(const Ideal &ideal, StrataMode mode = StrataMode::Absolute);
/// Absolute mode uses the central fiber; relative mode counts every
/// parameter and the time into the base dimension.
StrataReport pyramidal_check(const LagrangianFamily &family, StrataMode mode);

} // namespace lagdef
