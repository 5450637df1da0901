#pragma once

#include "lagdef/context.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace lagdef {

/// Exponent vector indexed by the variables of a VariableContext.
/// The default comparison is plain lexicographic on exponents and only
/// serves as a storage key; monomial orders live in order.hpp.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps);

    static Monomial variable(std::size_t nvars, std::size_t v, int power = 1);

    std::size_t size() const { return exps_.size(); }
    int operator[](std::size_t v) const { return exps_[v]; }
    const std::vector<int> &exponents() const { return exps_; }

    int degree() const;
    /// Total degree over the variables [begin, end).
    int degree(std::size_t begin, std::size_t end) const;
    bool is_one() const { return degree() == 0; }

    bool divides(const Monomial &other) const;
    Monomial operator*(const Monomial &other) const;
    /// Exact quotient; requires divisor.divides(*this).
    Monomial operator/(const Monomial &divisor) const;
    Monomial with_exponent(std::size_t v, int e) const;

    friend Monomial lcm(const Monomial &a, const Monomial &b);
    friend bool operator==(const Monomial &, const Monomial &) = default;
    friend auto operator<=>(const Monomial &, const Monomial &) = default;

    /// "1", "q1^2*p1", ...
    std::string to_string(const VariableContext &ctx) const;

  private:
    std::vector<int> exps_;
};

/// All monomials over `nvars` variables whose exponents are zero outside
/// [begin, end) and whose degree over that range is exactly `deg`.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::size_t begin,
                                          std::size_t end, int deg);

} // namespace lagdef
