#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lagdef {

/// Variable layout shared by every polynomial of a computation.
///
/// Variables are stored in the fixed declaration order
///   q1..qn, p1..pn, parameters..., time
/// and that order is the tie-break for every monomial order. The first 2n
/// variables carry the Darboux pairing {q_i, p_i} = 1; parameters and time
/// are inert under the Poisson bracket.
class VariableContext {
  public:
    static std::shared_ptr<const VariableContext>
    make(std::size_t pairs, std::vector<std::string> params = {},
         std::optional<std::string> time = std::nullopt);

    std::size_t pairs() const { return pairs_; }
    std::size_t num_vars() const { return names_.size(); }
    std::size_t num_symplectic() const { return 2 * pairs_; }
    std::size_t num_params() const { return params_; }
    bool has_time() const { return has_time_; }

    std::size_t q(std::size_t i) const { return i; }
    std::size_t p(std::size_t i) const { return pairs_ + i; }
    std::size_t param(std::size_t j) const { return 2 * pairs_ + j; }
    std::size_t time() const;

    bool is_symplectic(std::size_t v) const { return v < 2 * pairs_; }
    bool is_param(std::size_t v) const { return v >= 2 * pairs_ && v < 2 * pairs_ + params_; }
    bool is_time(std::size_t v) const { return has_time_ && v == names_.size() - 1; }

    const std::string &name(std::size_t v) const { return names_.at(v); }
    const std::vector<std::string> &names() const { return names_; }
    std::vector<std::string> param_names() const;
    std::optional<std::string> time_name() const;

    std::optional<std::size_t> find(std::string_view name) const;
    /// Index of `name`; throws std::invalid_argument for an unknown variable.
    std::size_t index(std::string_view name) const;

    friend bool operator==(const VariableContext &a, const VariableContext &b) {
        return a.pairs_ == b.pairs_ && a.params_ == b.params_ &&
               a.has_time_ == b.has_time_ && a.names_ == b.names_;
    }

  private:
    VariableContext() = default;

    std::size_t pairs_ = 0;
    std::size_t params_ = 0;
    bool has_time_ = false;
    std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

bool same_context(const ContextPtr &a, const ContextPtr &b);

} // namespace lagdef
