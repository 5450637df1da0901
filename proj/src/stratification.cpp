#include "lagdef/stratification.hpp"

#include <optional>
#include <stdexcept>

namespace lagdef {

namespace {

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t> &cur,
             std::vector<std::vector<std::size_t>> &out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    subsets(n, k, 0, cur, out);
    return out;
}

std::vector<Poly> minors(const std::vector<std::vector<Poly>> &m, std::size_t size) {
    std::vector<Poly> out;
    if (m.empty() || size > m.size() || size > m.front().size())
        return out;
    for (const auto &rows : subsets(m.size(), size))
        for (const auto &cols : subsets(m.front().size(), size)) {
            std::vector<std::vector<Poly>> sub;
            for (auto r : rows) {
                sub.emplace_back();
                for (auto c : cols)
                    sub.back().push_back(m[r][c]);
            }
            Poly d = determinant(sub);
            if (!d.is_zero())
                out.push_back(std::move(d));
        }
    return out;
}

std::vector<std::vector<Poly>> hamiltonian_matrix(const std::vector<Poly> &gens) {
    std::vector<std::vector<Poly>> m;
    for (const auto &g : gens)
        m.push_back(hamiltonian_field(g).components);
    return m;
}

StrataReport check(const Ideal &ideal, StrataMode mode, int base) {
    StrataReport r;
    r.mode = mode;
    r.base_dimension = base;
    r.pyramidal = true;
    auto ideals = strata_ideals(ideal);
    std::optional<std::size_t> vars;
    if (mode == StrataMode::Absolute)
        vars = ideal.context()->num_symplectic();
    for (std::size_t j = 0; j < ideals.size(); ++j) {
        Stratum s{static_cast<int>(j), ideals[j], krull_dimension(ideals[j], vars),
                  static_cast<int>(j) + base, false};
        s.ok = s.dimension <= s.bound;
        r.pyramidal = r.pyramidal && s.ok;
        r.strata.push_back(std::move(s));
    }
    return r;
}

} // namespace

std::string to_string(StrataMode mode) {
    return mode == StrataMode::Absolute ? "absolute" : "relative";
}

Poly determinant(const std::vector<std::vector<Poly>> &m) {
    const std::size_t n = m.size();
    if (n == 0)
        return Poly();
    if (n == 1)
        return m[0][0];
    Poly det;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero())
            continue;
        std::vector<std::vector<Poly>> sub;
        for (std::size_t r = 1; r < n; ++r) {
            sub.emplace_back();
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    sub.back().push_back(m[r][k]);
        }
        Poly term = m[0][c] * determinant(sub);
        if (c % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

std::vector<Ideal> strata_ideals(const Ideal &ideal) {
    const std::size_t n = ideal.context()->pairs();
    auto m = hamiltonian_matrix(ideal.generators());
    std::vector<Ideal> out;
    for (std::size_t j = 0; j <= n; ++j)
        out.push_back(ideal.plus(minors(m, j + 1)));
    return out;
}

std::vector<Ideal> strata_ideals(const LagrangianFamily &family) {
    return strata_ideals(family.ideal());
}

StrataReport pyramidal_check(const Ideal &ideal, StrataMode mode) {
    const auto &ctx = ideal.context();
    if (mode == StrataMode::Absolute) {
        if (!ideal.is_symplectic_only())
            throw std::invalid_argument("absolute pyramidal check expects an ideal in the "
                                        "symplectic variables only");
        return check(ideal, mode, 0);
    }
    return check(ideal, mode, static_cast<int>(ctx->num_vars() - ctx->num_symplectic()));
}

StrataReport pyramidal_check(const LagrangianFamily &family, StrataMode mode) {
    if (mode == StrataMode::Absolute)
        return check(family.central_fiber().ideal(), mode, 0);
    return pyramidal_check(family.ideal(), mode);
}

} // namespace lagdef
