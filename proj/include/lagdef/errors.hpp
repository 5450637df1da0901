#pragma once

#include <stdexcept>
#include <string>

namespace lagdef {

/// Raised when an input is well-formed but mathematically unusable:
/// a non-involutive ideal, a non-isolated singularity, mismatched central fibers.
class MathError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The generators of an ideal fail to be closed under the Poisson bracket.
class NotCoisotropic : public MathError {
  public:
    NotCoisotropic(std::size_t i, std::size_t j, const std::string &bracket)
        : MathError("not coisotropic: bracket {F" + std::to_string(i + 1) +
                    ",F" + std::to_string(j + 1) + "} = " + bracket +
                    " is not in the ideal"),
          first(i), second(j) {}

    std::size_t first;
    std::size_t second;
};

/// Two objects built over different variable contexts were combined.
class ContextMismatch : public std::invalid_argument {
  public:
    ContextMismatch() : std::invalid_argument("variable context mismatch") {}
};

} // namespace lagdef
