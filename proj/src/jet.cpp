#include "lagdef/jet.hpp"

#include <algorithm>
#include <stdexcept>

namespace lagdef {

std::vector<Monomial> jet_monomials(const VariableContext &ctx, int d, std::optional<int> e) {
    const std::size_t nv = ctx.num_vars(), ns = ctx.num_symplectic();
    int pmax = nv > ns ? e.value_or(0) : 0;
    std::vector<Monomial> xs, ps, out;
    for (int k = 0; k <= d; ++k)
        for (auto &m : monomials_of_degree(nv, 0, ns, k))
            xs.push_back(std::move(m));
    for (int k = 0; k <= pmax; ++k)
        for (auto &m : monomials_of_degree(nv, ns, nv, k))
            ps.push_back(std::move(m));
    for (const auto &a : xs)
        for (const auto &b : ps)
            out.push_back(a * b);
    std::sort(out.begin(), out.end(), DescendingIn{MonomialOrder::local()});
    return out;
}

JetSpace::JetSpace(const Ideal &ideal, int degree, std::optional<int> param_degree)
    : ctx_(ideal.context()), degree_(degree), param_degree_(param_degree) {
    if (degree < 0)
        throw std::invalid_argument("jet degree must be non-negative");
    const bool has_params = ctx_->num_vars() > ctx_->num_symplectic();
    if (has_params && !param_degree)
        throw std::invalid_argument("a parameter degree bound is required when the context "
                                    "declares parameters or time");
    if (param_degree && *param_degree < 0)
        throw std::invalid_argument("parameter degree must be non-negative");

    auto all = jet_monomials(*ctx_, degree, param_degree);
    if (ideal.is_symplectic_only()) {
        sb_ = ideal.local_basis();
        for (const auto &m : all) {
            bool standard = std::none_of(sb_->leading.begin(), sb_->leading.end(),
                                         [&](const Monomial &lm) { return lm.divides(m); });
            if (standard)
                basis_.push_back(m);
        }
    } else {
        columns_ = std::move(all);
        for (std::size_t i = 0; i < columns_.size(); ++i)
            column_index_.emplace(columns_[i], i);
        macaulay_ = EchelonBasis(columns_.size());
        for (const auto &g : ideal.generators()) {
            for (const auto &m : columns_) {
                SparseVector row;
                for (const auto &[t, c] : g.terms()) {
                    Monomial mt = t * m;
                    if (auto it = column_index_.find(mt); it != column_index_.end())
                        row.emplace(it->second, c);
                }
                if (!row.empty())
                    macaulay_.insert(row);
            }
        }
        for (std::size_t i = 0; i < columns_.size(); ++i)
            if (!macaulay_.is_pivot(i))
                basis_.push_back(columns_[i]);
    }
    for (std::size_t i = 0; i < basis_.size(); ++i)
        index_.emplace(basis_[i], i);
}

bool JetSpace::in_range(const Monomial &m) const {
    const std::size_t ns = ctx_->num_symplectic();
    if (m.degree(0, ns) > degree_)
        return false;
    if (ctx_->num_vars() > ns && m.degree(ns, ctx_->num_vars()) > param_degree_.value_or(0))
        return false;
    return true;
}

Poly JetSpace::truncate(const Poly &f) const {
    return f.filtered([this](const Monomial &m) { return in_range(m); });
}

Poly JetSpace::reduce_by_basis(const Poly &f) const {
    // Each step removes the leading term and only adds smaller terms, and
    // there are finitely many monomials in range, so this terminates.
    const auto &order = sb_->order;
    Poly h = truncate(f);
    Poly rest(ctx_);
    while (!h.is_zero()) {
        Monomial lm = h.leading_monomial(order);
        Rational lc = h.coefficient(lm);
        std::size_t which = sb_->size();
        for (std::size_t i = 0; i < sb_->size(); ++i)
            if (sb_->leading[i].divides(lm)) {
                which = i;
                break;
            }
        if (which == sb_->size()) {
            rest.add_term(lm, lc);
            h.add_term(lm, -lc);
            continue;
        }
        const Poly &g = sb_->elements[which];
        Monomial shift = lm / sb_->leading[which];
        Rational k = -(lc / g.coefficient(sb_->leading[which]));
        for (const auto &[t, c] : g.terms()) {
            Monomial mt = t * shift;
            if (in_range(mt))
                h.add_term(mt, k * c);
        }
    }
    return rest;
}

Poly JetSpace::reduce(const Poly &f) const {
    if (!f.is_zero() && !same_context(f.context(), ctx_))
        throw std::invalid_argument("polynomial context differs from the jet space context");
    if (sb_)
        return reduce_by_basis(f);
    SparseVector v;
    for (const auto &[m, c] : f.terms())
        if (auto it = column_index_.find(m); it != column_index_.end())
            v.emplace(it->second, c);
    Poly out(ctx_);
    for (const auto &[i, c] : macaulay_.reduce(v))
        out.add_term(columns_[i], c);
    return out;
}

SparseVector JetSpace::coordinates(const Poly &f) const {
    SparseVector v;
    Poly r = reduce(f);
    for (const auto &[m, c] : r.terms())
        v.emplace(index_.at(m), c);
    return v;
}

Poly JetSpace::from_coordinates(const SparseVector &v) const {
    Poly out(ctx_);
    for (const auto &[i, c] : v)
        out.add_term(basis_.at(i), c);
    return out;
}

std::optional<std::size_t> JetSpace::index_of(const Monomial &m) const {
    auto it = index_.find(m);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

} // namespace lagdef
