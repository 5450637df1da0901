#pragma once

#include "lagdef/family.hpp"
#include "lagdef/jet.hpp"
#include "lagdef/linalg.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace lagdef {

using IndexTuple = std::vector<std::size_t>;

/// Strictly increasing k-tuples from {0..n-1} in lexicographic order.
std::vector<IndexTuple> index_tuples(std::size_t n, int k);

/// Degree-k cochain of the Lagrange complex on the free model: one entry per
/// increasing index tuple. A degree-0 cochain has the single tuple ().
class Cochain {
  public:
    Cochain(ContextPtr ctx, std::size_t n, int degree);
    static Cochain scalar(std::size_t n, const Poly &h);
    static Cochain from_components(const std::vector<Poly> &components);

    const ContextPtr &context() const { return ctx_; }
    std::size_t n() const { return n_; }
    int degree() const { return degree_; }
    const std::vector<IndexTuple> &tuples() const { return tuples_; }
    const std::vector<Poly> &entries() const { return entries_; }
    std::vector<Poly> &entries() { return entries_; }

    const Poly &at(const IndexTuple &t) const;
    Poly &at(const IndexTuple &t);
    bool is_zero() const;

    friend bool operator==(const Cochain &a, const Cochain &b) {
        return a.degree_ == b.degree_ && a.n_ == b.n_ && a.entries_ == b.entries_;
    }

  private:
    std::size_t position(const IndexTuple &t) const;

    ContextPtr ctx_;
    std::size_t n_;
    int degree_;
    std::vector<IndexTuple> tuples_;
    std::vector<Poly> entries_;
};

/// Chevalley-Eilenberg differential with the family's structure functions:
///   (d phi)(i_0..i_k) = sum_a (-1)^a {F_{i_a}, phi(..^i_a..)}
///                     + sum_{a<b} (-1)^{a+b} phi({F_{i_a}, F_{i_b}} ^ ..^i_a..^i_b..)
/// computed exactly on polynomial representatives. Requires polynomial
/// structure functions (unit 1); see JetComplex otherwise.
Cochain delta(const Cochain &phi, const LagrangianFamily &family);

/// The complex restricted to jets. Cochain entries live in
/// O/(I + m^{d+1} + n^{e+1}); the differential is applied to full polynomial
/// representatives and projected afterwards. Three levels are used:
///  * level d, where cohomology is reported;
///  * level d + s (s = degree drop of the bracket), the domain of the
///    cocycle condition, which makes d well defined into level d;
///  * level d + maxdeg(F), the domain of the coboundaries.
class JetComplex {
  public:
    JetComplex(const LagrangianFamily &family, int d_x, std::optional<int> d_param);

    const LagrangianFamily &family() const { return family_; }
    const JetSpace &space() const { return target_; }
    int degree() const { return target_.degree(); }
    std::optional<int> param_degree() const { return target_.param_degree(); }

    std::size_t dimension(int k) const;
    /// Coordinates of a cochain reduced at level d, tuple-major.
    SparseVector encode(const Cochain &c) const;
    Cochain decode(const SparseVector &v, int k) const;

    /// Basis of the level-d projection of the degree-k cocycles.
    std::vector<SparseVector> cocycles(int k) const;
    /// Spanning set of the level-d coboundaries in degree k.
    std::vector<SparseVector> coboundaries(int k) const;

    /// Differential using the jet structure functions (units inverted as
    /// truncated series), not yet reduced.
    Cochain differential(const Cochain &phi) const;

  private:
    SparseVector encode_at(const JetSpace &space, const Cochain &c) const;
    Cochain decode_at(const JetSpace &space, const SparseVector &v, int k) const;

    LagrangianFamily family_;
    JetSpace target_;
    JetSpace cocycle_domain_;
    JetSpace coboundary_domain_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Poly>> structure_;
};

/// Cohomology of a JetComplex in one degree. Representatives are canonical:
/// reduced modulo the coboundaries with pivots at the highest coordinates,
/// which selects the lowest-degree monomials as class representatives.
struct JetCohomology {
    std::size_t dimension = 0;
    std::vector<SparseVector> cocycles;
    std::vector<SparseVector> coboundaries;
    std::vector<SparseVector> representatives;
};

JetCohomology jet_cohomology(const JetComplex &complex, int k);

struct CohomologyReport {
    int degree = 0;
    int d_x = 0;
    std::optional<int> d_param;
    std::size_t dimension = 0;
    std::vector<Cochain> representatives;
    /// Dimension recomputed at d_x + 1.
    std::size_t next_dimension = 0;
    bool stabilized = false;
};

/// H^0 or H^1 of the jet model at (d_x, d_param), with the stabilization
/// flag from a second computation at d_x + 1. Throws NotCoisotropic for a
/// non-involutive family.
CohomologyReport cohomology(const LagrangianFamily &family, int degree, int d_x,
                            std::optional<int> d_param = std::nullopt);

} // namespace lagdef
