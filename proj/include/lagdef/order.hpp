#pragma once

#include "lagdef/monomial.hpp"

#include <compare>
#include <cstddef>
#include <string>

namespace lagdef {

enum class OrderKind {
    GlobalDegRevLex,   ///< degree first, larger degree is larger; a well-order
    LocalNegDegRevLex, ///< degree first, smaller degree is larger; 1 is maximal
};

/// A monomial order. With `split > 0` the variables are divided into the
/// block [0, split) (the symplectic coordinates) and the block [split, n)
/// (parameters and time); blocks are compared in that priority, each with
/// the same kind. Within a block, ties are broken reverse-lexicographically
/// by the fixed declaration order of the variables.
struct MonomialOrder {
    OrderKind kind = OrderKind::LocalNegDegRevLex;
    std::size_t split = 0;

    static MonomialOrder local() { return {OrderKind::LocalNegDegRevLex, 0}; }
    static MonomialOrder global() { return {OrderKind::GlobalDegRevLex, 0}; }
    static MonomialOrder local_blocks(std::size_t split) {
        return {OrderKind::LocalNegDegRevLex, split};
    }

    bool is_local() const { return kind == OrderKind::LocalNegDegRevLex; }

    std::strong_ordering compare(const Monomial &a, const Monomial &b) const;
    bool less(const Monomial &a, const Monomial &b) const { return compare(a, b) < 0; }
    bool greater(const Monomial &a, const Monomial &b) const { return compare(a, b) > 0; }

    std::string name() const;

    friend bool operator==(const MonomialOrder &, const MonomialOrder &) = default;
};

/// Strict-weak "a comes before b" functor listing monomials from the
/// largest to the smallest under `order`.
struct DescendingIn {
    MonomialOrder order;
    bool operator()(const Monomial &a, const Monomial &b) const { return order.greater(a, b); }
};

} // namespace lagdef
