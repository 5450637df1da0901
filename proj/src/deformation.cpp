#include "lagdef/deformation.hpp"

#include "lagdef/errors.hpp"
#include "lagdef/jet.hpp"
#include "lagdef/singularity.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lagdef {

namespace {

/// Every parameter and the time set to zero, over `target`.
Poly at_origin(const Poly &f, const ContextPtr &target) {
    const auto &ctx = f.context();
    Poly h = f;
    for (std::size_t v = ctx->num_symplectic(); v < ctx->num_vars(); ++v)
        h = h.evaluate(v, 0);
    return h.embed(target);
}

void verify_cocycle(KSClass &k, const LagrangianFamily &family) {
    if (!family.structure().polynomial())
        return;
    auto d = delta(k.cochain, family);
    for (const auto &e : d.entries())
        if (!e.is_zero() && !ideal_membership(e, family.ideal()).member)
            throw std::logic_error("Kodaira-Spencer class is not a cocycle; the family is "
                                   "not involutive");
    k.verified = true;
}

/// Rename variables by name while re-expressing over `target`.
Poly renamed(const Poly &f, const std::map<std::string, std::string> &names,
             const ContextPtr &target) {
    const auto &ctx = f.context();
    const std::size_t missing = target->num_vars();
    std::vector<std::size_t> map(ctx->num_vars(), missing);
    for (std::size_t v = 0; v < ctx->num_vars(); ++v) {
        auto it = names.find(ctx->name(v));
        if (auto t = target->find(it == names.end() ? ctx->name(v) : it->second))
            map[v] = *t;
    }
    Poly r(target);
    for (const auto &[m, c] : f.terms()) {
        std::vector<int> exps(target->num_vars(), 0);
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0)
                continue;
            if (map[v] == missing)
                throw std::logic_error("variable '" + ctx->name(v) + "' survived restriction");
            exps[map[v]] += m[v];
        }
        r.add_term(Monomial(std::move(exps)), c);
    }
    return r;
}

std::vector<Monomial> parameter_monomials(const VariableContext &ctx, int e) {
    return jet_monomials(ctx, 0, e);
}

} // namespace

KSClass kodaira_spencer(const LagrangianFamily &family, std::string_view direction,
                        KSMode mode) {
    const auto &ctx = family.context();
    auto v = ctx->find(direction);
    if (!v || ctx->is_symplectic(*v))
        throw std::invalid_argument("'" + std::string(direction) +
                                    "' is not a parameter of the family");
    std::vector<Poly> comps;
    for (const auto &g : family.generators())
        comps.push_back(g.derivative(*v));
    if (mode == KSMode::Relative) {
        KSClass k{Cochain::from_components(comps), mode};
        verify_cocycle(k, family);
        return k;
    }
    auto central = family.central_fiber();
    for (auto &c : comps)
        c = at_origin(c, central.context());
    KSClass k{Cochain::from_components(comps), mode};
    verify_cocycle(k, central);
    return k;
}

LagrangianFamily versal_family_curve(const Poly &f) {
    auto basis = milnor_basis(f);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < basis.size(); ++i)
        names.push_back("l" + std::to_string(i + 1));
    auto ctx = VariableContext::make(1, names);
    Poly F = f.embed(ctx);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<int> exps(ctx->num_vars(), 0);
        exps[ctx->q(0)] = basis[i][0];
        exps[ctx->p(0)] = basis[i][1];
        exps[ctx->param(i)] = 1;
        F.add_term(Monomial(std::move(exps)), 1);
    }
    return LagrangianFamily(ctx, {F});
}

KSSurjectivity ks_surjectivity_check(const LagrangianFamily &family, int d_x) {
    auto central = family.central_fiber();
    JetComplex jc(central, d_x, std::nullopt);
    auto h = jet_cohomology(jc, 1);
    KSSurjectivity r;
    r.h1_dimension = h.dimension;
    r.stabilized =
        jet_cohomology(JetComplex(central, d_x + 1, std::nullopt), 1).dimension == h.dimension;
    EchelonBasis span(jc.dimension(1));
    for (const auto &v : h.coboundaries)
        span.insert(v);
    const std::size_t before = span.rank();
    for (const auto &name : family.context()->param_names())
        span.insert(jc.encode(kodaira_spencer(family, name, KSMode::Absolute).cochain));
    r.spanned_dimension = span.rank() - before;
    r.surjective = r.spanned_dimension == r.h1_dimension;
    return r;
}

LagrangianFamily sum_deformation(const LagrangianFamily &F, const LagrangianFamily &G,
                                 const std::vector<Poly> &f) {
    const std::size_t n = F.size();
    if (G.size() != n || f.size() != n)
        throw std::invalid_argument("families and central fiber have different sizes");
    auto base = VariableContext::make(F.context()->pairs());
    std::vector<Poly> fb;
    for (const auto &g : f) {
        if (!g.supported_in(0, g.context()->num_symplectic()))
            throw std::invalid_argument("the central fiber must not involve parameters");
        fb.push_back(g.embed(base));
    }
    auto fc = F.central_fiber(), gc = G.central_fiber();
    for (std::size_t i = 0; i < n; ++i)
        if (fc.generators()[i].embed(base) != fb[i] || gc.generators()[i].embed(base) != fb[i])
            throw MathError("central fibers differ: generator " + std::to_string(i + 1));

    auto names = G.context()->param_names();
    for (const auto &p : F.context()->param_names()) {
        if (std::find(names.begin(), names.end(), p) != names.end())
            throw MathError("parameter '" + p + "' occurs in both families");
        names.push_back(p);
    }
    auto ft = F.context()->time_name(), gt = G.context()->time_name();
    if (ft && gt && *ft != *gt)
        throw MathError("the families use different time variables");
    auto ctx = VariableContext::make(n, names, ft ? ft : gt);
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < n; ++i)
        gens.push_back(F.generators()[i].embed(ctx) + G.generators()[i].embed(ctx) -
                       fb[i].embed(ctx));
    return LagrangianFamily(ctx, std::move(gens));
}

LagrangianFamily restrict_family(const LagrangianFamily &family, const Assignment &assignment) {
    const auto &ctx = family.context();
    for (const auto &[name, value] : assignment) {
        auto v = ctx->find(name);
        if (!v || ctx->is_symplectic(*v))
            throw std::invalid_argument("'" + name + "' is not a parameter of the family");
        if (auto target = std::get_if<std::string>(&value)) {
            auto t = ctx->find(*target);
            if (t && ctx->is_symplectic(*t))
                throw std::invalid_argument("cannot rename a parameter onto '" + *target + "'");
            if (t && *target != name && assignment.count(*target))
                throw std::invalid_argument("'" + *target + "' is both a target and restricted");
        }
    }
    // Survivors keep their position; a rename onto a new name renames in place.
    std::map<std::string, std::string> names;
    auto survivor = [&](const std::string &name) -> std::optional<std::string> {
        auto it = assignment.find(name);
        if (it == assignment.end())
            return name;
        if (std::holds_alternative<Rational>(it->second))
            return std::nullopt;
        const auto &target = std::get<std::string>(it->second);
        if (target != name && ctx->find(target))
            return std::nullopt;
        return target;
    };
    std::vector<std::string> params;
    for (const auto &p : ctx->param_names())
        if (auto s = survivor(p)) {
            params.push_back(*s);
            names[p] = *s;
        }
    std::optional<std::string> time;
    if (auto t = ctx->time_name())
        if (auto s = survivor(*t)) {
            time = *s;
            names[*t] = *s;
        }
    std::set<std::string> seen(params.begin(), params.end());
    if (seen.size() != params.size() || (time && seen.count(*time)))
        throw std::invalid_argument("renaming produces duplicate parameter names");
    auto target = VariableContext::make(ctx->pairs(), params, time);

    std::vector<Poly> gens;
    for (const auto &g : family.generators()) {
        Poly h = g;
        for (const auto &[name, value] : assignment) {
            std::size_t v = ctx->index(name);
            if (auto c = std::get_if<Rational>(&value))
                h = h.evaluate(v, *c);
            else if (const auto &s = std::get<std::string>(value); s != name && ctx->find(s))
                h = h.substitute(v, Poly::variable(ctx, s));
        }
        gens.push_back(renamed(h, names, target));
    }
    return LagrangianFamily(target, std::move(gens));
}

std::string to_string(SolveStatus status) {
    switch (status) {
    case SolveStatus::Solved:
        return "solved";
    case SolveStatus::UnsolvableAtDegree:
        return "unsolvable-at-degree";
    case SolveStatus::Obstructed:
        return "obstructed";
    }
    return "unknown";
}

InfinitesimalResult solve_infinitesimal(const LagrangianFamily &G, int d_x, int d_param) {
    const auto &ctx = G.context();
    if (!ctx->has_time())
        throw std::invalid_argument("the infinitesimal equation needs a time variable");
    if (d_x < 0 || d_param < 0)
        throw std::invalid_argument("truncation degrees must be non-negative");
    G.structure();
    const std::size_t n = G.size();
    const std::size_t xs = ctx->num_symplectic();
    const int s = G.degree_drop();

    auto box = jet_monomials(*ctx, d_x, d_param);
    std::map<Monomial, std::size_t> row_of;
    for (std::size_t i = 0; i < box.size(); ++i)
        row_of.emplace(box[i], i);
    auto h_monos = jet_monomials(*ctx, d_x + s, d_param);
    auto b_monos = parameter_monomials(*ctx, d_param);
    const std::size_t k = ctx->num_params();

    const std::size_t h_cols = h_monos.size();
    const std::size_t B_cols = n * n * box.size();
    const std::size_t ncols = h_cols + B_cols + k * b_monos.size();
    std::vector<SparseVector> rows(n * box.size());

    auto add_column = [&](std::size_t col, std::size_t comp, const Poly &p) {
        for (const auto &[m, c] : p.terms())
            if (auto it = row_of.find(m); it != row_of.end())
                rows[comp * box.size() + it->second][col] += c;
    };
    for (std::size_t a = 0; a < h_cols; ++a) {
        Poly m = Poly::term(ctx, h_monos[a], 1);
        for (std::size_t i = 0; i < n; ++i)
            add_column(a, i, poisson_bracket(m, G.generators()[i]));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t a = 0; a < box.size(); ++a)
                add_column(h_cols + (i * n + j) * box.size() + a, i,
                           Poly::term(ctx, box[a], 1) * G.generators()[j]);
    for (std::size_t l = 0; l < k; ++l)
        for (std::size_t a = 0; a < b_monos.size(); ++a) {
            Poly m = Poly::term(ctx, b_monos[a], 1);
            for (std::size_t i = 0; i < n; ++i)
                add_column(h_cols + B_cols + l * b_monos.size() + a, i,
                           m * G.generators()[i].derivative(ctx->param(l)));
        }
    for (auto &r : rows)
        for (auto it = r.begin(); it != r.end();)
            it = sgn(it->second) == 0 ? r.erase(it) : std::next(it);

    Vector rhs(rows.size());
    for (std::size_t i = 0; i < n; ++i) {
        Poly dt = G.generators()[i].derivative(ctx->time());
        for (const auto &[m, c] : dt.terms())
            if (auto it = row_of.find(m); it != row_of.end())
                rhs[i * box.size() + it->second] = -c;
    }

    InfinitesimalResult result;
    std::vector<SparseVector> low_rows;
    Vector low_rhs;
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (box[r % box.size()].degree(0, xs) == 0) {
            low_rows.push_back(rows[r]);
            low_rhs.push_back(rhs[r]);
        }
    if (!solve_sparse(low_rows, ncols, low_rhs)) {
        result.status = SolveStatus::Obstructed;
        return result;
    }
    auto x = solve_sparse(rows, ncols, rhs);
    if (!x) {
        result.status = SolveStatus::UnsolvableAtDegree;
        return result;
    }

    InfinitesimalSolution sol;
    sol.d_x = d_x;
    sol.d_param = d_param;
    sol.h_degree = d_x + s;
    sol.h = Poly(ctx);
    for (std::size_t a = 0; a < h_cols; ++a)
        sol.h.add_term(h_monos[a], (*x)[a]);
    sol.B.assign(n, std::vector<Poly>(n, Poly(ctx)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t a = 0; a < box.size(); ++a)
                sol.B[i][j].add_term(box[a], (*x)[h_cols + (i * n + j) * box.size() + a]);
    sol.b.assign(k, Poly(ctx));
    for (std::size_t l = 0; l < k; ++l)
        for (std::size_t a = 0; a < b_monos.size(); ++a)
            sol.b[l].add_term(b_monos[a], (*x)[h_cols + B_cols + l * b_monos.size() + a]);
    result.status = SolveStatus::Solved;
    result.solution = std::move(sol);
    return result;
}

std::vector<Poly> infinitesimal_residual(const LagrangianFamily &G,
                                         const InfinitesimalSolution &s) {
    const auto &ctx = G.context();
    const std::size_t xs = ctx->num_symplectic();
    std::vector<Poly> out;
    for (std::size_t i = 0; i < G.size(); ++i) {
        const Poly &Gi = G.generators()[i];
        Poly r = poisson_bracket(s.h, Gi) + Gi.derivative(ctx->time());
        for (std::size_t j = 0; j < G.size(); ++j)
            r += s.B[i][j] * G.generators()[j];
        for (std::size_t l = 0; l < s.b.size(); ++l)
            r += s.b[l] * Gi.derivative(ctx->param(l));
        out.push_back(r.filtered([&](const Monomial &m) {
            return m.degree(0, xs) <= s.d_x && m.degree(xs, m.size()) <= s.d_param;
        }));
    }
    return out;
}

SpecialFiberReport special_fiber_check(const LagrangianFamily &F, int d_x, int d_param) {
    auto central = F.central_fiber();
    JetComplex abs(central, d_x, std::nullopt);
    auto ha = jet_cohomology(abs, 1);
    SpecialFiberReport r;
    r.target_rank = ha.dimension;
    r.stabilized =
        jet_cohomology(JetComplex(central, d_x + 1, std::nullopt), 1).dimension == ha.dimension;

    JetComplex rel(F, d_x, d_param);
    auto z = rel.cocycles(1);
    const auto &ctx = F.context();
    EchelonBasis quotient(rel.dimension(1));
    for (const auto &v : rel.coboundaries(1))
        quotient.insert(v);
    for (const auto &v : z) {
        Cochain c = rel.decode(v, 1);
        for (std::size_t p = ctx->num_symplectic(); p < ctx->num_vars(); ++p) {
            Cochain shifted = c;
            for (auto &e : shifted.entries())
                e = e * Poly::variable(ctx, p);
            quotient.insert(rel.encode(shifted));
        }
    }
    const std::size_t sub = quotient.rank();
    for (const auto &v : z)
        quotient.insert(v);
    r.source_rank = quotient.rank() - sub;

    EchelonBasis image(abs.dimension(1));
    for (const auto &v : ha.coboundaries)
        image.insert(v);
    const std::size_t before = image.rank();
    for (const auto &v : z) {
        std::vector<Poly> comps;
        Cochain c = rel.decode(v, 1);
        for (const auto &e : c.entries())
            comps.push_back(at_origin(e, central.context()));
        image.insert(abs.encode(Cochain::from_components(comps)));
    }
    r.map_rank = image.rank() - before;
    r.surjective = r.map_rank == r.target_rank;
    r.injective = r.map_rank == r.source_rank;
    return r;
}

} // namespace lagdef
