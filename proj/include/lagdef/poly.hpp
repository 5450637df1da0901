#pragma once

#include "lagdef/context.hpp"
#include "lagdef/monomial.hpp"
#include "lagdef/order.hpp"
#include "lagdef/rational.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>

namespace lagdef {

/// Sparse multivariate polynomial with exact rational coefficients over a
/// VariableContext. No zero coefficient is ever stored, so two polynomials
/// over the same context are equal iff their term maps are equal.
///
/// A default-constructed Poly is the zero polynomial with no context; it
/// adopts the context of whatever it is combined with.
class Poly {
  public:
    using Terms = std::map<Monomial, Rational>;

    Poly() = default;
    explicit Poly(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static Poly constant(ContextPtr ctx, const Rational &c);
    static Poly variable(ContextPtr ctx, std::size_t v);
    static Poly variable(ContextPtr ctx, std::string_view name);
    static Poly term(ContextPtr ctx, const Monomial &m, const Rational &c);

    const ContextPtr &context() const { return ctx_; }
    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const Monomial &m) const;
    Rational constant_term() const;
    bool is_constant() const;

    /// Maximum total degree; -1 for zero.
    int degree() const;
    /// Maximum / minimum degree over the variables [begin, end); -1 for zero.
    int degree(std::size_t begin, std::size_t end) const;
    int order(std::size_t begin, std::size_t end) const;
    bool involves(std::size_t v) const;
    /// True when every term has zero exponent outside [begin, end).
    bool supported_in(std::size_t begin, std::size_t end) const;

    Monomial leading_monomial(const MonomialOrder &order) const;
    Rational leading_coefficient(const MonomialOrder &order) const;
    /// Degree minus degree of the leading monomial (Mora's ecart).
    int ecart(const MonomialOrder &order) const;

    Poly operator-() const;
    Poly &operator+=(const Poly &other);
    Poly &operator-=(const Poly &other);
    Poly &operator*=(const Rational &c);
    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator*(const Poly &a, const Poly &b);
    friend Poly operator*(Poly a, const Rational &c) { return a *= c; }
    friend Poly operator*(const Rational &c, Poly a) { return a *= c; }

    /// c * m * this, accumulated into `out` (no temporaries for the product).
    void add_scaled_to(Poly &out, const Rational &c, const Monomial &m) const;
    void add_term(const Monomial &m, const Rational &c);

    Poly derivative(std::size_t v) const;
    Poly derivative(std::string_view name) const;
    /// Replace variable v by `value` (same context).
    Poly substitute(std::size_t v, const Poly &value) const;
    Poly evaluate(std::size_t v, const Rational &value) const;
    /// Keep only the terms whose monomial satisfies `keep`.
    Poly filtered(const std::function<bool(const Monomial &)> &keep) const;
    /// Re-express over `target`, matching variables by name. Throws
    /// std::invalid_argument if a variable in use is absent from `target`.
    Poly embed(const ContextPtr &target) const;

    /// Parser-compatible rendering, terms listed in descending degrevlex order.
    std::string to_string() const;

    friend bool operator==(const Poly &a, const Poly &b);

  private:
    void adopt(const Poly &other);

    ContextPtr ctx_;
    Terms terms_;
};

/// Formal partial derivative with respect to a named variable.
Poly derivative(const Poly &f, std::string_view var);

/// Raise to a non-negative integer power.
Poly pow(const Poly &f, int e);

} // namespace lagdef
