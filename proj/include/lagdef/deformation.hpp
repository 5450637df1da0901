#pragma once

#include "lagdef/complex.hpp"
#include "lagdef/family.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lagdef {

enum class KSMode { Relative, Absolute };

/// Kodaira-Spencer class of one parameter direction: the degree-1 cochain
/// (d_l F_1, ..., d_l F_n), restricted to the central fiber in absolute mode.
struct KSClass {
    Cochain cochain;
    KSMode mode;
    /// Checked exactly (every entry of its differential lies in the ideal)
    /// whenever the structure functions are polynomial.
    bool verified = false;
};

/// `direction` must name a parameter or the time. Throws std::logic_error if
/// the class fails the cocycle check.
KSClass kodaira_spencer(const LagrangianFamily &family, std::string_view direction, KSMode mode);

/// f + sum_i l_i e_i over the Milnor basis e_i, parameters named l1..l_mu.
/// Throws MathError for a non-isolated singularity.
LagrangianFamily versal_family_curve(const Poly &f);

struct KSSurjectivity {
    bool surjective = false;
    std::size_t h1_dimension = 0;
    std::size_t spanned_dimension = 0;
    bool stabilized = false;
};

/// Whether the absolute classes of every parameter direction span the
/// jet model of H^1 of the central fiber at d_x.
KSSurjectivity ks_surjectivity_check(const LagrangianFamily &family, int d_x);

/// (F + G)(alpha, l, x) = F(l, x) + G(alpha, x) - f over the merged
/// parameters (those of G first). Throws MathError unless both families
/// restrict to f at zero parameters.
LagrangianFamily sum_deformation(const LagrangianFamily &F, const LagrangianFamily &G,
                                 const std::vector<Poly> &f);

/// A parameter (or the time) is set to a constant or renamed; renaming onto
/// an existing parameter merges the two.
using Assignment = std::map<std::string, std::variant<Rational, std::string>>;

LagrangianFamily restrict_family(const LagrangianFamily &family, const Assignment &assignment);

struct InfinitesimalSolution {
    Poly h;
    std::vector<std::vector<Poly>> B;
    std::vector<Poly> b;
    int d_x = 0;
    int d_param = 0;
    int h_degree = 0;
};

enum class SolveStatus { Solved, UnsolvableAtDegree, Obstructed };

std::string to_string(SolveStatus status);

/// Obstructed is the definitive verdict: the system restricted to symplectic
/// degree 0 is already inconsistent. That subsystem only sees the x-linear
/// part of h, B at x = 0 and b, so it is a quotient of the germ equation and
/// its inconsistency persists at every truncation.
struct InfinitesimalResult {
    SolveStatus status = SolveStatus::UnsolvableAtDegree;
    std::optional<InfinitesimalSolution> solution;
};

/// Solves {h, G_i} + sum_j B_ij G_j + sum_l b_l d_{l} G_i = -d_t G_i modulo
/// symplectic degree > d_x and parameter degree > d_param. Unknowns: h up to
/// symplectic degree d_x + s (s the bracket's degree drop), B up to d_x, b in
/// the parameters and time only.
InfinitesimalResult solve_infinitesimal(const LagrangianFamily &G, int d_x, int d_param);

/// Left-hand side plus d_t G_i, truncated; zero for a valid solution.
std::vector<Poly> infinitesimal_residual(const LagrangianFamily &G,
                                         const InfinitesimalSolution &s);

struct SpecialFiberReport {
    bool surjective = false;
    bool injective = false;
    /// Rank of relative H^1 modulo the parameters' maximal ideal.
    std::size_t source_rank = 0;
    /// Dimension of absolute H^1.
    std::size_t target_rank = 0;
    std::size_t map_rank = 0;
    bool stabilized = false;
};

/// Restriction to zero parameters from relative H^1 / m_Lambda H^1 to the
/// absolute H^1, on the jet models at (d_x, d_param).
SpecialFiberReport special_fiber_check(const LagrangianFamily &F, int d_x, int d_param);

} // namespace lagdef
