#pragma once

#include "lagdef/context.hpp"
#include "lagdef/poly.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lagdef::cli {

/// A germ file:
///
///   pairs 2;
///   params l1 l2;     # optional
///   time t;           # optional
///   F1 = q1*p1 + l1;
///   F2 = q2*p2 + l2;
///
/// q1..qn and p1..pn are declared by `pairs`.
struct GermFile {
    ContextPtr context;
    std::vector<std::pair<std::string, Poly>> generators;

    std::vector<Poly> polys() const;
    const Poly &operator[](std::string_view name) const;
};

bool operator==(const GermFile &a, const GermFile &b);

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, std::size_t column, const std::string &message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    /// Message without the position prefix.
    const std::string &detail() const { return detail_; }

  private:
    std::size_t line_;
    std::size_t column_;
    std::string detail_;
};

GermFile parse_germ(std::string_view text);

/// Canonical text of a germ file; parse_germ(print_germ(g)) == g.
std::string print_germ(const GermFile &germ);

} // namespace lagdef::cli
