#pragma once

#include "lagdef/standard_basis.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lagdef {

/// (d_q f, d_p f) for f in one symplectic pair. Zero partials are dropped,
/// so a smooth germ gives the unit ideal.
Ideal jacobian_ideal(const Poly &f);

struct MilnorData {
    Poly f;
    Ideal jacobian;
    /// nullopt when the singularity is not isolated.
    std::optional<std::size_t> mu;
    /// Standard monomials of the local standard basis of Jf, 1 first.
    std::vector<Monomial> basis;
};

MilnorData milnor_data(const Poly &f);
std::optional<std::size_t> milnor_number(const Poly &f);
/// Throws MathError for a non-isolated singularity.
std::vector<Monomial> milnor_basis(const Poly &f);

/// Monomial basis of O/J for a zero-dimensional germ; nullopt otherwise.
std::optional<std::vector<Monomial>> local_quotient_basis(const Ideal &ideal);

enum class BrieskornMode { Milnor, Tjurina };

std::string to_string(BrieskornMode mode);

/// Compares a monomial basis of the Milnor algebra O/Jf with H^1 of the
/// curve (f) at jet order d_x: the identity map sends a monomial e to the
/// class of the cochain (e). For f not in Jf the Tjurina algebra
/// O/(Jf + (f)) is tried as well when the Milnor comparison fails.
struct BrieskornReport {
    bool bijective = false;
    BrieskornMode mode = BrieskornMode::Milnor;
    bool quasi_homogeneous = false;
    std::size_t algebra_dimension = 0;
    std::size_t h1_dimension = 0;
    std::size_t image_rank = 0;
    bool stabilized = false;
};

BrieskornReport brieskorn_check(const Poly &f, int d_x);

} // namespace lagdef
