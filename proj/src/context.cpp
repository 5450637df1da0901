#include "lagdef/context.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lagdef {

std::shared_ptr<const VariableContext>
VariableContext::make(std::size_t pairs, std::vector<std::string> params,
                      std::optional<std::string> time) {
    std::shared_ptr<VariableContext> ctx(new VariableContext());
    ctx->pairs_ = pairs;
    ctx->params_ = params.size();
    ctx->has_time_ = time.has_value();
    for (std::size_t i = 0; i < pairs; ++i)
        ctx->names_.push_back("q" + std::to_string(i + 1));
    for (std::size_t i = 0; i < pairs; ++i)
        ctx->names_.push_back("p" + std::to_string(i + 1));
    for (auto &p : params)
        ctx->names_.push_back(std::move(p));
    if (time)
        ctx->names_.push_back(*time);

    std::set<std::string> seen;
    for (const auto &n : ctx->names_) {
        if (n.empty())
            throw std::invalid_argument("empty variable name");
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate variable name '" + n + "'");
    }
    return ctx;
}

std::size_t VariableContext::time() const {
    if (!has_time_)
        throw std::invalid_argument("context declares no time variable");
    return names_.size() - 1;
}

std::vector<std::string> VariableContext::param_names() const {
    return {names_.begin() + static_cast<std::ptrdiff_t>(2 * pairs_),
            names_.begin() + static_cast<std::ptrdiff_t>(2 * pairs_ + params_)};
}

std::optional<std::string> VariableContext::time_name() const {
    if (!has_time_)
        return std::nullopt;
    return names_.back();
}

std::optional<std::size_t> VariableContext::find(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::size_t VariableContext::index(std::string_view name) const {
    if (auto v = find(name))
        return *v;
    throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

bool same_context(const ContextPtr &a, const ContextPtr &b) {
    return a == b || (a && b && *a == *b);
}

} // namespace lagdef
