#include "lagdef/standard_basis.hpp"

#include "lagdef/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <mutex>
#include <set>
#include <stdexcept>
#include <tuple>

namespace lagdef {

struct Ideal::Cache {
    std::once_flag once;
    std::optional<StandardBasis> local;
};

Ideal::Ideal(ContextPtr ctx, std::vector<Poly> generators)
    : ctx_(std::move(ctx)), cache_(std::make_shared<Cache>()) {
    for (auto &g : generators) {
        if (g.is_zero())
            continue;
        if (!same_context(g.context(), ctx_))
            throw ContextMismatch();
        gens_.push_back(std::move(g));
    }
}

bool Ideal::is_symplectic_only() const {
    return std::all_of(gens_.begin(), gens_.end(), [&](const Poly &g) {
        return g.supported_in(0, ctx_->num_symplectic());
    });
}

Ideal Ideal::plus(const std::vector<Poly> &more) const {
    std::vector<Poly> all = gens_;
    all.insert(all.end(), more.begin(), more.end());
    return Ideal(ctx_, std::move(all));
}

const StandardBasis &Ideal::local_basis() const {
    std::call_once(cache_->once, [this] {
        cache_->local = standard_basis(*this, MonomialOrder::local(), true);
    });
    return *cache_->local;
}

bool StandardBasis::contains_unit() const {
    return std::any_of(leading.begin(), leading.end(), [](const Monomial &m) { return m.is_one(); });
}

namespace {

/// A polynomial together with its expression as a combination of a fixed
/// list of symbols (original generators, or the input and the basis).
struct Tracked {
    Poly poly;
    std::vector<Poly> combo;
    Monomial lm;
    Rational lc;
    int ecart = 0;

    void refresh(const MonomialOrder &order) {
        if (poly.is_zero())
            return;
        lm = poly.leading_monomial(order);
        lc = poly.coefficient(lm);
        ecart = poly.degree() - lm.degree();
    }
};

Tracked make_tracked(Poly p, std::vector<Poly> combo, const MonomialOrder &order) {
    Tracked t{std::move(p), std::move(combo), {}, 0, 0};
    t.refresh(order);
    return t;
}

/// h -= (lc(h)/lc(g)) * (lm(h)/lm(g)) * g, on the polynomial and its combination.
void reduce_by(Tracked &h, const Tracked &g, const MonomialOrder &order) {
    Rational k = -(h.lc / g.lc);
    Monomial m = h.lm / g.lm;
    g.poly.add_scaled_to(h.poly, k, m);
    for (std::size_t i = 0; i < h.combo.size(); ++i)
        if (!g.combo[i].is_zero())
            g.combo[i].add_scaled_to(h.combo[i], k, m);
    h.refresh(order);
}

/// Mora's normal form: reduce the leading term, choosing reducers of
/// minimal ecart and remembering intermediate results as extra reducers.
Tracked mora_reduce(Tracked h, std::vector<Tracked> reducers, const MonomialOrder &order) {
    while (!h.poly.is_zero()) {
        std::size_t best = reducers.size();
        for (std::size_t i = 0; i < reducers.size(); ++i) {
            if (!reducers[i].lm.divides(h.lm))
                continue;
            if (best == reducers.size() || reducers[i].ecart < reducers[best].ecart)
                best = i;
        }
        if (best == reducers.size())
            break;
        Tracked g = reducers[best];
        if (g.ecart > h.ecart)
            reducers.push_back(h);
        reduce_by(h, g, order);
    }
    return h;
}

/// Full reduction for a well-order: every term of the result is irreducible.
Tracked global_reduce(Tracked h, const std::vector<Tracked> &reducers, const MonomialOrder &order) {
    Poly rest(h.poly.context());
    while (!h.poly.is_zero()) {
        const Tracked *g = nullptr;
        for (const auto &r : reducers)
            if (r.lm.divides(h.lm)) {
                g = &r;
                break;
            }
        if (g) {
            reduce_by(h, *g, order);
        } else {
            rest.add_term(h.lm, h.lc);
            h.poly.add_term(h.lm, -h.lc);
            h.refresh(order);
        }
    }
    h.poly = std::move(rest);
    h.refresh(order);
    return h;
}

Tracked reduce(Tracked h, const std::vector<Tracked> &reducers, const MonomialOrder &order) {
    if (order.is_local())
        return mora_reduce(std::move(h), reducers, order);
    return global_reduce(std::move(h), reducers, order);
}

Tracked tracked_spoly(const Tracked &f, const Tracked &g, const MonomialOrder &order) {
    Monomial l = lcm(f.lm, g.lm);
    Tracked s{Poly(f.poly.context()), std::vector<Poly>(f.combo.size(), Poly(f.poly.context())),
              {}, 0, 0};
    Rational one_f = Rational(1) / f.lc, one_g = -(Rational(1) / g.lc);
    Monomial mf = l / f.lm, mg = l / g.lm;
    f.poly.add_scaled_to(s.poly, one_f, mf);
    g.poly.add_scaled_to(s.poly, one_g, mg);
    for (std::size_t i = 0; i < s.combo.size(); ++i) {
        f.combo[i].add_scaled_to(s.combo[i], one_f, mf);
        g.combo[i].add_scaled_to(s.combo[i], one_g, mg);
    }
    s.refresh(order);
    return s;
}

bool coprime(const Monomial &a, const Monomial &b) {
    for (std::size_t v = 0; v < a.size(); ++v)
        if (a[v] != 0 && b[v] != 0)
            return false;
    return true;
}

} // namespace

Poly spoly(const Poly &f, const Poly &g, const MonomialOrder &order) {
    Tracked tf = make_tracked(f, {}, order), tg = make_tracked(g, {}, order);
    return tracked_spoly(tf, tg, order).poly;
}

StandardBasis standard_basis(const Ideal &ideal, const MonomialOrder &order, bool with_cofactors) {
    const auto &ctx = ideal.context();
    const auto &gens = ideal.generators();
    const std::size_t ng = gens.size();
    const std::size_t width = with_cofactors ? ng : 0;

    std::vector<Tracked> basis;
    for (std::size_t j = 0; j < ng; ++j) {
        std::vector<Poly> combo(width, Poly(ctx));
        if (with_cofactors)
            combo[j] = Poly::constant(ctx, 1);
        basis.push_back(make_tracked(gens[j], std::move(combo), order));
    }

    // Pairs are processed by ascending lcm degree, then by index.
    std::set<std::tuple<int, std::size_t, std::size_t>> pairs;
    auto add_pairs_for = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            if (coprime(basis[i].lm, basis[k].lm))
                continue;
            pairs.emplace(lcm(basis[i].lm, basis[k].lm).degree(), k, i);
        }
    };
    for (std::size_t k = 1; k < basis.size(); ++k)
        add_pairs_for(k);

    while (!pairs.empty()) {
        auto [deg, k, i] = *pairs.begin();
        pairs.erase(pairs.begin());
        Tracked h = reduce(tracked_spoly(basis[i], basis[k], order), basis, order);
        if (h.poly.is_zero())
            continue;
        basis.push_back(std::move(h));
        add_pairs_for(basis.size() - 1);
    }

    StandardBasis sb;
    sb.ctx = ctx;
    sb.order = order;
    sb.num_generators = ng;
    if (with_cofactors)
        sb.cofactors.emplace();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (j == i || !basis[j].lm.divides(basis[i].lm))
                continue;
            redundant = basis[j].lm != basis[i].lm || j < i;
        }
        if (redundant)
            continue;
        sb.elements.push_back(basis[i].poly);
        sb.leading.push_back(basis[i].lm);
        if (with_cofactors)
            sb.cofactors->push_back(basis[i].combo);
    }
    return sb;
}

NormalFormResult normal_form(const Poly &f, const StandardBasis &sb, bool with_cofactors) {
    const auto &ctx = sb.ctx;
    if (!f.is_zero() && !same_context(f.context(), ctx))
        throw ContextMismatch();
    const std::size_t m = sb.elements.size();
    const std::size_t width = with_cofactors ? m + 1 : 1;

    std::vector<Tracked> reducers;
    reducers.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Poly> combo(width, Poly(ctx));
        if (with_cofactors)
            combo[i + 1] = Poly::constant(ctx, 1);
        reducers.push_back(make_tracked(sb.elements[i], std::move(combo), sb.order));
    }
    std::vector<Poly> start(width, Poly(ctx));
    start[0] = Poly::constant(ctx, 1);
    Poly input = f.is_zero() ? Poly(ctx) : f;
    Tracked h = reduce(make_tracked(input, std::move(start), sb.order), reducers, sb.order);

    NormalFormResult out{h.poly, h.combo[0], {}};
    if (with_cofactors) {
        out.cofactors.reserve(m);
        for (std::size_t i = 0; i < m; ++i)
            out.cofactors.push_back(-h.combo[i + 1]);
    }
    return out;
}

Membership ideal_membership(const Poly &f, const StandardBasis &sb) {
    if (!sb.cofactors)
        throw std::invalid_argument("membership cofactors need a basis with tracked cofactors");
    NormalFormResult nf = normal_form(f, sb, true);
    Membership out;
    out.member = nf.remainder.is_zero();
    out.unit = nf.unit;
    if (!out.member)
        return out;
    out.cofactors.assign(sb.num_generators, Poly(sb.ctx));
    for (std::size_t i = 0; i < sb.elements.size(); ++i) {
        if (nf.cofactors[i].is_zero())
            continue;
        for (std::size_t j = 0; j < sb.num_generators; ++j)
            out.cofactors[j] += nf.cofactors[i] * (*sb.cofactors)[i][j];
    }
    return out;
}

Membership ideal_membership(const Poly &f, const Ideal &ideal, const MonomialOrder &order) {
    if (order == MonomialOrder::local())
        return ideal_membership(f, ideal.local_basis());
    return ideal_membership(f, standard_basis(ideal, order, true));
}

int krull_dimension(const StandardBasis &sb, std::optional<std::size_t> nvars) {
    const std::size_t n = nvars.value_or(sb.ctx->num_vars());
    if (n > 24)
        throw std::invalid_argument("too many variables for the combinatorial dimension");
    if (sb.contains_unit())
        return -1;
    std::vector<std::uint32_t> supports;
    for (const auto &lm : sb.leading) {
        std::uint32_t mask = 0;
        bool outside = false;
        for (std::size_t v = 0; v < lm.size(); ++v) {
            if (lm[v] == 0)
                continue;
            if (v >= n)
                outside = true;
            else
                mask |= 1u << v;
        }
        if (!outside)
            supports.push_back(mask);
    }
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        int size = std::popcount(s);
        if (size <= best)
            continue;
        bool free = std::none_of(supports.begin(), supports.end(),
                                 [s](std::uint32_t m) { return (m & ~s) == 0; });
        if (free)
            best = size;
    }
    return best;
}

int krull_dimension(const Ideal &ideal, std::optional<std::size_t> nvars) {
    return krull_dimension(ideal.local_basis(), nvars);
}

} // namespace lagdef
