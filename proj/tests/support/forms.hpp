#pragma once

// Differential forms on the 2n symplectic coordinates with polynomial
// coefficients. A basis form dx_{i1}^...^dx_{ik} (i1 < ... < ik) is a bitmask
// over the coordinate order q1..qn, p1..pn.

#include "lagdef/poly.hpp"

#include <bit>
#include <cstdint>
#include <map>

namespace lagdef::testing {

using Form = std::map<std::uint32_t, Poly>;

/// Sign of sorting the concatenation a ++ b of two disjoint index sets.
inline int wedge_sign(std::uint32_t a, std::uint32_t b) {
    int swaps = 0;
    for (std::uint32_t rest = b; rest; rest &= rest - 1) {
        std::uint32_t bit = rest & -rest;
        swaps += std::popcount(a & ~(bit | (bit - 1)));
    }
    return swaps % 2 ? -1 : 1;
}

inline Form wedge(const Form &x, const Form &y) {
    Form out;
    for (const auto &[a, f] : x)
        for (const auto &[b, g] : y) {
            if (a & b)
                continue;
            Poly term = f * g * Rational(wedge_sign(a, b));
            auto it = out.find(a | b);
            if (it == out.end())
                out.emplace(a | b, term);
            else
                it->second += term;
        }
    return out;
}

inline Form exterior_d(const Poly &f) {
    Form out;
    for (std::size_t v = 0; v < f.context()->num_symplectic(); ++v) {
        Poly c = f.derivative(v);
        if (!c.is_zero())
            out.emplace(1u << v, c);
    }
    return out;
}

inline Form darboux_form(const ContextPtr &ctx) {
    Form w;
    for (std::size_t i = 0; i < ctx->pairs(); ++i)
        w.emplace((1u << ctx->q(i)) | (1u << ctx->p(i)), Poly::constant(ctx, 1));
    return w;
}

inline Form power(const Form &x, std::size_t k, const ContextPtr &ctx) {
    Form out{{0u, Poly::constant(ctx, 1)}};
    for (std::size_t i = 0; i < k; ++i)
        out = wedge(out, x);
    return out;
}

/// Coefficient of dx_1^...^dx_{2n}.
inline Poly top_coefficient(const Form &x, const ContextPtr &ctx) {
    std::uint32_t top = (1u << ctx->num_symplectic()) - 1;
    auto it = x.find(top);
    return it == x.end() ? Poly(ctx) : it->second;
}

} // namespace lagdef::testing
