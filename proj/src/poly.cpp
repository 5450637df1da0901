#include "lagdef/poly.hpp"

#include "lagdef/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace lagdef {

Poly Poly::constant(ContextPtr ctx, const Rational &c) {
    Poly r(ctx);
    r.add_term(Monomial(ctx->num_vars()), c);
    return r;
}

Poly Poly::variable(ContextPtr ctx, std::size_t v) {
    Poly r(ctx);
    r.add_term(Monomial::variable(ctx->num_vars(), v), 1);
    return r;
}

Poly Poly::variable(ContextPtr ctx, std::string_view name) {
    std::size_t v = ctx->index(name);
    return variable(std::move(ctx), v);
}

Poly Poly::term(ContextPtr ctx, const Monomial &m, const Rational &c) {
    if (m.size() != ctx->num_vars())
        throw std::invalid_argument("monomial length does not match the context");
    Poly r(std::move(ctx));
    r.add_term(m, c);
    return r;
}

Rational Poly::coefficient(const Monomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const {
    if (!ctx_)
        return 0;
    return coefficient(Monomial(ctx_->num_vars()));
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Poly::degree() const {
    int d = -1;
    for (const auto &[m, c] : terms_)
        d = std::max(d, m.degree());
    return d;
}

int Poly::degree(std::size_t begin, std::size_t end) const {
    int d = -1;
    for (const auto &[m, c] : terms_)
        d = std::max(d, m.degree(begin, end));
    return d;
}

int Poly::order(std::size_t begin, std::size_t end) const {
    int d = -1;
    for (const auto &[m, c] : terms_) {
        int k = m.degree(begin, end);
        if (d < 0 || k < d)
            d = k;
    }
    return d;
}

bool Poly::involves(std::size_t v) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [v](const auto &t) { return t.first[v] != 0; });
}

bool Poly::supported_in(std::size_t begin, std::size_t end) const {
    for (const auto &[m, c] : terms_)
        if (m.degree() != m.degree(begin, end))
            return false;
    return true;
}

Monomial Poly::leading_monomial(const MonomialOrder &order) const {
    if (terms_.empty())
        throw std::invalid_argument("leading monomial of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.greater(it->first, best->first))
            best = it;
    return best->first;
}

Rational Poly::leading_coefficient(const MonomialOrder &order) const {
    return coefficient(leading_monomial(order));
}

int Poly::ecart(const MonomialOrder &order) const {
    return degree() - leading_monomial(order).degree();
}

void Poly::adopt(const Poly &other) {
    if (!ctx_) {
        ctx_ = other.ctx_;
        return;
    }
    if (other.ctx_ && !same_context(ctx_, other.ctx_))
        throw ContextMismatch();
}

void Poly::add_term(const Monomial &m, const Rational &c) {
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto &[m, c] : r.terms_)
        c = -c;
    return r;
}

Poly &Poly::operator+=(const Poly &other) {
    adopt(other);
    for (const auto &[m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Poly &Poly::operator-=(const Poly &other) {
    adopt(other);
    for (const auto &[m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Poly &Poly::operator*=(const Rational &c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, coef] : terms_)
        coef *= c;
    return *this;
}

Poly operator*(const Poly &a, const Poly &b) {
    Poly r(a.ctx_);
    r.adopt(b);
    for (const auto &[ma, ca] : a.terms_)
        for (const auto &[mb, cb] : b.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

void Poly::add_scaled_to(Poly &out, const Rational &c, const Monomial &m) const {
    out.adopt(*this);
    if (sgn(c) == 0)
        return;
    for (const auto &[mt, ct] : terms_)
        out.add_term(mt * m, ct * c);
}

Poly Poly::derivative(std::size_t v) const {
    Poly r(ctx_);
    for (const auto &[m, c] : terms_) {
        int e = m[v];
        if (e == 0)
            continue;
        r.add_term(m.with_exponent(v, e - 1), c * e);
    }
    return r;
}

Poly Poly::derivative(std::string_view name) const {
    if (!ctx_)
        throw std::invalid_argument("derivative of a context-free polynomial");
    return derivative(ctx_->index(name));
}

Poly Poly::substitute(std::size_t v, const Poly &value) const {
    Poly r(ctx_);
    r.adopt(value);
    std::vector<Poly> powers{Poly::constant(r.ctx_, 1)};
    for (const auto &[m, c] : terms_) {
        int e = m[v];
        while (static_cast<int>(powers.size()) <= e)
            powers.push_back(powers.back() * value);
        powers[static_cast<std::size_t>(e)].add_scaled_to(r, c, m.with_exponent(v, 0));
    }
    return r;
}

Poly Poly::evaluate(std::size_t v, const Rational &value) const {
    Poly r(ctx_);
    for (const auto &[m, c] : terms_) {
        Rational scale = c;
        for (int i = 0; i < m[v]; ++i)
            scale *= value;
        r.add_term(m.with_exponent(v, 0), scale);
    }
    return r;
}

Poly Poly::filtered(const std::function<bool(const Monomial &)> &keep) const {
    Poly r(ctx_);
    for (const auto &[m, c] : terms_)
        if (keep(m))
            r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
}

Poly Poly::embed(const ContextPtr &target) const {
    Poly r(target);
    if (!ctx_)
        return r;
    std::vector<std::size_t> map(ctx_->num_vars(), target->num_vars());
    for (std::size_t v = 0; v < ctx_->num_vars(); ++v)
        if (auto t = target->find(ctx_->name(v)))
            map[v] = *t;
    for (const auto &[m, c] : terms_) {
        std::vector<int> exps(target->num_vars(), 0);
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0)
                continue;
            if (map[v] == target->num_vars())
                throw std::invalid_argument("variable '" + ctx_->name(v) +
                                            "' does not exist in the target context");
            exps[map[v]] = m[v];
        }
        r.add_term(Monomial(std::move(exps)), c);
    }
    return r;
}

std::string Poly::to_string() const {
    if (terms_.empty())
        return "0";
    std::vector<const Terms::value_type *> sorted;
    for (const auto &t : terms_)
        sorted.push_back(&t);
    auto order = MonomialOrder::global();
    std::sort(sorted.begin(), sorted.end(),
              [&](auto *a, auto *b) { return order.greater(a->first, b->first); });
    std::string out;
    bool first = true;
    for (const auto *t : sorted) {
        Rational c = t->second;
        bool negative = sgn(c) < 0;
        if (negative)
            c = -c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        bool unit_monomial = t->first.is_one();
        if (unit_monomial)
            out += lagdef::to_string(c);
        else if (c == 1)
            out += t->first.to_string(*ctx_);
        else
            out += lagdef::to_string(c) + "*" + t->first.to_string(*ctx_);
    }
    return out;
}

bool operator==(const Poly &a, const Poly &b) {
    if (a.terms_.empty() && b.terms_.empty())
        return !a.ctx_ || !b.ctx_ || same_context(a.ctx_, b.ctx_);
    return same_context(a.ctx_, b.ctx_) && a.terms_ == b.terms_;
}

Poly derivative(const Poly &f, std::string_view var) { return f.derivative(var); }

Poly pow(const Poly &f, int e) {
    if (e < 0)
        throw std::invalid_argument("negative exponent");
    Poly r = Poly::constant(f.context(), 1);
    Poly base = f;
    while (e > 0) {
        if (e & 1)
            r = r * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return r;
}

} // namespace lagdef
