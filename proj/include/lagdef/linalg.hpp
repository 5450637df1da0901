#pragma once

#include "lagdef/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace lagdef {

using Vector = std::vector<Rational>;
/// Column index -> nonzero entry.
using SparseVector = std::map<std::size_t, Rational>;

class RationalMatrix {
  public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational &at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational &at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Vector row(std::size_t r) const;
    Vector operator*(const Vector &x) const;

    friend bool operator==(const RationalMatrix &, const RationalMatrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult {
    RationalMatrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form over Q. Pivot rule: first nonzero column.
RrefResult rref(const RationalMatrix &m);
std::size_t rank(const RationalMatrix &m);
/// Basis of the right null space, one vector per free column in column order.
std::vector<Vector> kernel_basis(const RationalMatrix &m);
/// A particular solution of m x = rhs (free variables set to zero), or
/// nullopt when the system is inconsistent.
std::optional<Vector> solve(const RationalMatrix &m, const Vector &rhs);

/// Incrementally maintained reduced row echelon basis of a subspace of Q^cols.
///
/// Rows are stored as primitive integer vectors (content 1, positive pivot)
/// and renormalized by their gcd after each elimination step, which keeps
/// coefficient growth in check on the large jet systems. The basis is kept
/// fully reduced, so it equals the unique RREF of the span at all times.
class EchelonBasis {
  public:
    explicit EchelonBasis(std::size_t cols = 0) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    /// Adds v to the span; returns true when the rank grew.
    bool insert(const SparseVector &v);
    /// The unique vector congruent to v modulo the span with zero entries at
    /// every pivot column. Exact.
    SparseVector reduce(const SparseVector &v) const;
    bool contains(const SparseVector &v) const { return reduce(v).empty(); }
    std::vector<std::size_t> pivots() const;
    bool is_pivot(std::size_t col) const { return rows_.count(col) != 0; }
    /// RREF rows (pivot entry 1) in increasing pivot order.
    std::vector<SparseVector> rows() const;

  private:
    using IntRow = std::vector<std::pair<std::size_t, Integer>>;

    static void make_primitive(IntRow &row);
    static void eliminate(IntRow &row, std::size_t at, const IntRow &pivot_row);
    IntRow reduce_int(IntRow row) const;

    std::size_t cols_;
    std::map<std::size_t, IntRow> rows_;
};

/// Kernel of the linear map whose images of the domain basis vectors are
/// `columns` (vectors in a codomain of dimension `codim`). Returned vectors
/// are in domain coordinates and form a basis of the null space.
std::vector<SparseVector> kernel_of_columns(const std::vector<SparseVector> &columns,
                                            std::size_t codim);

/// Solves the sparse system whose equations are `rows` (over `ncols`
/// unknowns) with right-hand side `rhs`. Free unknowns are set to zero.
std::optional<Vector> solve_sparse(const std::vector<SparseVector> &rows, std::size_t ncols,
                                   const Vector &rhs);

SparseVector to_sparse(const Vector &v);
Vector to_dense(const SparseVector &v, std::size_t n);

} // namespace lagdef
