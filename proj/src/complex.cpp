#include "lagdef/complex.hpp"

#include "lagdef/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace lagdef {

namespace {

using Table = std::map<std::pair<std::size_t, std::size_t>, std::vector<Poly>>;

void tuples_from(std::size_t n, int k, std::size_t start, IndexTuple &cur,
                 std::vector<IndexTuple> &out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        tuples_from(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

IndexTuple without(const IndexTuple &t, std::size_t a, std::size_t b = SIZE_MAX) {
    IndexTuple r;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (i != a && i != b)
            r.push_back(t[i]);
    return r;
}

Cochain apply_delta(const Cochain &phi, const std::vector<Poly> &gens, const Table &table) {
    const auto &ctx = phi.context();
    Cochain out(ctx, phi.n(), phi.degree() + 1);
    for (std::size_t pos = 0; pos < out.tuples().size(); ++pos) {
        const IndexTuple &t = out.tuples()[pos];
        Poly acc(ctx);
        for (std::size_t a = 0; a < t.size(); ++a) {
            Poly term = poisson_bracket(gens[t[a]], phi.at(without(t, a)));
            if (a % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        for (std::size_t a = 0; a < t.size(); ++a)
            for (std::size_t b = a + 1; b < t.size(); ++b) {
                const auto &coeffs = table.at({t[a], t[b]});
                IndexTuple rest = without(t, a, b);
                for (std::size_t m = 0; m < coeffs.size(); ++m) {
                    if (coeffs[m].is_zero() ||
                        std::find(rest.begin(), rest.end(), m) != rest.end())
                        continue;
                    auto at = std::lower_bound(rest.begin(), rest.end(), m);
                    std::size_t shift = static_cast<std::size_t>(at - rest.begin());
                    IndexTuple full = rest;
                    full.insert(full.begin() + static_cast<std::ptrdiff_t>(shift), m);
                    Poly term = coeffs[m] * phi.at(full);
                    if ((a + b + shift) % 2 == 0)
                        acc += term;
                    else
                        acc -= term;
                }
            }
        out.entries()[pos] = std::move(acc);
    }
    return out;
}

bool in_box(const Monomial &m, std::size_t x, int dx, std::optional<int> dp) {
    return m.degree(0, x) <= dx && (!dp || m.degree(x, m.size()) <= *dp);
}

Poly truncated(const Poly &f, std::size_t x, int dx, std::optional<int> dp) {
    return f.filtered([&](const Monomial &m) { return in_box(m, x, dx, dp); });
}

/// 1/u as a power series truncated to the box; u must have a nonzero constant term.
Poly inverse_series(const Poly &u, std::size_t x, int dx, std::optional<int> dp) {
    const auto &ctx = u.context();
    Rational u0 = u.constant_term();
    Poly w = u * Rational(1 / u0) - Poly::constant(ctx, 1);
    Poly power = Poly::constant(ctx, 1), inv = Poly::constant(ctx, 1);
    while (!power.is_zero()) {
        power = truncated(power * (-w), x, dx, dp);
        inv += power;
    }
    return inv * Rational(1 / u0);
}

SparseVector reversed(const SparseVector &v, std::size_t n) {
    SparseVector r;
    for (const auto &[i, x] : v)
        r.emplace(n - 1 - i, x);
    return r;
}

} // namespace

std::vector<IndexTuple> index_tuples(std::size_t n, int k) {
    std::vector<IndexTuple> out;
    if (k < 0 || static_cast<std::size_t>(k) > n)
        return out;
    IndexTuple cur;
    tuples_from(n, k, 0, cur, out);
    return out;
}

Cochain::Cochain(ContextPtr ctx, std::size_t n, int degree)
    : ctx_(std::move(ctx)), n_(n), degree_(degree), tuples_(index_tuples(n, degree)),
      entries_(tuples_.size(), Poly(ctx_)) {}

Cochain Cochain::scalar(std::size_t n, const Poly &h) {
    Cochain c(h.context(), n, 0);
    c.entries_[0] = h;
    return c;
}

Cochain Cochain::from_components(const std::vector<Poly> &components) {
    if (components.empty())
        throw std::invalid_argument("a degree-1 cochain needs at least one component");
    Cochain c(components.front().context(), components.size(), 1);
    c.entries_ = components;
    return c;
}

std::size_t Cochain::position(const IndexTuple &t) const {
    auto it = std::lower_bound(tuples_.begin(), tuples_.end(), t);
    if (it == tuples_.end() || *it != t)
        throw std::out_of_range("index tuple is not increasing or out of range");
    return static_cast<std::size_t>(it - tuples_.begin());
}

const Poly &Cochain::at(const IndexTuple &t) const { return entries_[position(t)]; }
Poly &Cochain::at(const IndexTuple &t) { return entries_[position(t)]; }

bool Cochain::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Poly &p) { return p.is_zero(); });
}

Cochain delta(const Cochain &phi, const LagrangianFamily &family) {
    if (phi.n() != family.size())
        throw std::invalid_argument("cochain and family have different ranks");
    const auto &sf = family.structure();
    if (!sf.polynomial())
        throw MathError("structure functions are not polynomial; use the jet model");
    Table table;
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            table[{i, j}] = sf.coefficients(i, j);
    return apply_delta(phi, family.generators(), table);
}

JetComplex::JetComplex(const LagrangianFamily &family, int d_x, std::optional<int> d_param)
    : family_(family), target_(family.ideal(), d_x, d_param),
      cocycle_domain_(family.ideal(), d_x + family.degree_drop(), d_param),
      coboundary_domain_(family.ideal(), d_x + family.max_degree(), d_param) {
    const auto &sf = family_.structure();
    const std::size_t x = family_.context()->num_symplectic();
    const int top = coboundary_domain_.degree();
    for (std::size_t i = 0; i < family_.size(); ++i)
        for (std::size_t j = i + 1; j < family_.size(); ++j) {
            auto coeffs = sf.coefficients(i, j);
            const Poly &u = sf.unit(i, j);
            if (u != Poly::constant(u.context(), 1)) {
                Poly inv = inverse_series(u, x, top, d_param);
                for (auto &c : coeffs)
                    c = truncated(c * inv, x, top, d_param);
            }
            structure_[{i, j}] = std::move(coeffs);
        }
}

std::size_t JetComplex::dimension(int k) const {
    return index_tuples(family_.size(), k).size() * target_.dimension();
}

Cochain JetComplex::differential(const Cochain &phi) const {
    return apply_delta(phi, family_.generators(), structure_);
}

SparseVector JetComplex::encode_at(const JetSpace &space, const Cochain &c) const {
    SparseVector v;
    const std::size_t dim = space.dimension();
    for (std::size_t pos = 0; pos < c.entries().size(); ++pos)
        for (const auto &[i, x] : space.coordinates(c.entries()[pos]))
            v.emplace(pos * dim + i, x);
    return v;
}

SparseVector JetComplex::encode(const Cochain &c) const { return encode_at(target_, c); }

Cochain JetComplex::decode_at(const JetSpace &space, const SparseVector &v, int k) const {
    Cochain c(family_.context(), family_.size(), k);
    const std::size_t dim = space.dimension();
    for (const auto &[i, x] : v)
        c.entries()[i / dim].add_term(space.basis()[i % dim], x);
    return c;
}

Cochain JetComplex::decode(const SparseVector &v, int k) const { return decode_at(target_, v, k); }

std::vector<SparseVector> JetComplex::cocycles(int k) const {
    const std::size_t n = family_.size();
    if (k < 0 || static_cast<std::size_t>(k) > n)
        return {};
    const std::size_t dim = dimension(k);
    std::vector<SparseVector> out;
    if (static_cast<std::size_t>(k) == n) {
        for (std::size_t i = 0; i < dim; ++i)
            out.push_back({{i, Rational(1)}});
        return out;
    }
    const std::size_t tuples = index_tuples(n, k).size();
    const std::size_t dom_dim = cocycle_domain_.dimension();
    std::vector<SparseVector> columns;
    columns.reserve(tuples * dom_dim);
    for (std::size_t j = 0; j < tuples * dom_dim; ++j) {
        Cochain phi = decode_at(cocycle_domain_, {{j, Rational(1)}}, k);
        columns.push_back(encode(differential(phi)));
    }
    EchelonBasis basis(dim);
    for (const auto &kv : kernel_of_columns(columns, dimension(k + 1)))
        basis.insert(encode(decode_at(cocycle_domain_, kv, k)));
    return basis.rows();
}

std::vector<SparseVector> JetComplex::coboundaries(int k) const {
    const std::size_t n = family_.size();
    if (k <= 0 || static_cast<std::size_t>(k) > n)
        return {};
    std::vector<SparseVector> out;
    const std::size_t count = index_tuples(n, k - 1).size() * coboundary_domain_.dimension();
    for (std::size_t j = 0; j < count; ++j) {
        Cochain phi = decode_at(coboundary_domain_, {{j, Rational(1)}}, k - 1);
        SparseVector v = encode(differential(phi));
        if (!v.empty())
            out.push_back(std::move(v));
    }
    return out;
}

JetCohomology jet_cohomology(const JetComplex &complex, int k) {
    JetCohomology r;
    r.cocycles = complex.cocycles(k);
    r.coboundaries = complex.coboundaries(k);
    const std::size_t n = complex.dimension(k);
    if (n == 0)
        return r;
    EchelonBasis b(n), z(n);
    for (const auto &v : r.coboundaries)
        b.insert(reversed(v, n));
    for (const auto &v : r.cocycles)
        z.insert(reversed(v, n));
    EchelonBasis all = b;
    for (const auto &v : r.cocycles)
        all.insert(reversed(v, n));
    if (all.rank() != z.rank())
        throw std::logic_error("coboundaries are not contained in the cocycles");
    for (const auto &row : all.rows())
        if (!b.is_pivot(row.begin()->first))
            r.representatives.push_back(reversed(row, n));
    r.dimension = r.representatives.size();
    return r;
}

CohomologyReport cohomology(const LagrangianFamily &family, int degree, int d_x,
                            std::optional<int> d_param) {
    if (degree != 0 && degree != 1)
        throw std::invalid_argument("only H^0 and H^1 are computed");
    if (d_x < 0)
        throw std::invalid_argument("truncation degree must be non-negative");
    family.structure();
    CohomologyReport report;
    report.degree = degree;
    report.d_x = d_x;
    report.d_param = d_param;
    JetComplex jc(family, d_x, d_param);
    auto h = jet_cohomology(jc, degree);
    report.dimension = h.dimension;
    for (const auto &v : h.representatives)
        report.representatives.push_back(jc.decode(v, degree));
    report.next_dimension = jet_cohomology(JetComplex(family, d_x + 1, d_param), degree).dimension;
    report.stabilized = report.next_dimension == report.dimension;
    return report;
}

} // namespace lagdef
