#include "lagdef/cli/commands.hpp"

#include "lagdef/cli/germ_parser.hpp"
#include "lagdef/complex.hpp"
#include "lagdef/deformation.hpp"
#include "lagdef/errors.hpp"
#include "lagdef/singularity.hpp"
#include "lagdef/stratification.hpp"
#include "lagdef/symplectic.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>

namespace lagdef::cli {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A finished computation: the payload, the verdict and the stabilization
/// flag (null where no jet truncation is involved).
struct Outcome {
    Json result;
    bool positive = true;
    Json stabilized = nullptr;
};

using Handler = std::function<Outcome(const GermFile &, const CommandOptions &)>;

Json strings(const std::vector<Poly> &ps) {
    Json out = Json::array();
    for (const auto &p : ps)
        out.push_back(p.to_string());
    return out;
}

Json monomials(const std::vector<Monomial> &ms, const VariableContext &ctx) {
    Json out = Json::array();
    for (const auto &m : ms)
        out.push_back(m.to_string(ctx));
    return out;
}

void require_local(const CommandOptions &o, const std::string &name) {
    if (o.order != "local")
        throw UsageError(name + " works in the local ring; --order global is not supported");
}

const Poly &curve(const GermFile &g, const std::string &name) {
    const auto &ctx = *g.context;
    if (ctx.pairs() != 1 || ctx.num_params() > 0 || ctx.has_time() || g.generators.size() != 1)
        throw UsageError(name + " expects a plane curve: pairs 1, one generator, no parameters");
    return g.generators.front().second;
}

LagrangianFamily family(const GermFile &g) { return LagrangianFamily(g.context, g.polys()); }

std::optional<int> param_degree(const GermFile &g, const CommandOptions &o) {
    if (g.context->num_vars() == g.context->num_symplectic())
        return std::nullopt;
    return o.param_degree;
}

Outcome check_lagrangian_cmd(const GermFile &g, const CommandOptions &o) {
    Ideal ideal(g.context, g.polys());
    if (!ideal.is_symplectic_only())
        throw UsageError("check-lagrangian expects a germ without parameters or time");
    auto order = o.order == "global" ? MonomialOrder::global() : MonomialOrder::local();
    auto rep = check_lagrangian(ideal, order);
    Json witnesses = Json::array();
    for (const auto &w : rep.bracket_witnesses)
        witnesses.push_back({{"pair", {g.generators[w.first].first, g.generators[w.second].first}},
                             {"bracket", w.bracket.to_string()}});
    Outcome out;
    out.result = {{"involutive", rep.involutive},
                  {"witnesses", witnesses},
                  {"dimension", rep.dimension},
                  {"expected_dimension", g.context->pairs()},
                  {"dimension_ok", rep.dimension_ok},
                  {"reducedness_checked", rep.reducedness_checked},
                  {"lagrangian", rep.ok()}};
    out.positive = rep.ok();
    return out;
}

Outcome milnor_cmd(const GermFile &g, const CommandOptions &o) {
    require_local(o, "milnor");
    auto md = milnor_data(curve(g, "milnor"));
    Outcome out;
    out.result = {{"f", md.f.to_string()},
                  {"jacobian", strings(md.jacobian.generators())},
                  {"isolated", md.mu.has_value()},
                  {"mu", md.mu ? Json(*md.mu) : Json(nullptr)},
                  {"basis", monomials(md.basis, *g.context)}};
    out.positive = md.mu.has_value();
    return out;
}

Outcome h1_cmd(const GermFile &g, const CommandOptions &o) {
    require_local(o, "h1");
    auto rep = cohomology(family(g), 1, o.degree, param_degree(g, o));
    Json reps = Json::array();
    for (const auto &c : rep.representatives)
        reps.push_back(strings(c.entries()));
    Outcome out;
    out.result = {{"dimension", rep.dimension},
                  {"representatives", reps},
                  {"next_dimension", rep.next_dimension}};
    out.stabilized = rep.stabilized;
    return out;
}

Outcome versal_cmd(const GermFile &g, const CommandOptions &o) {
    require_local(o, "versal");
    auto F = versal_family_curve(curve(g, "versal"));
    GermFile v;
    v.context = F.context();
    v.generators.emplace_back(g.generators.front().first, F.generators().front());
    Outcome out;
    out.result = {{"mu", F.num_params()},
                  {"parameters", F.context()->param_names()},
                  {"generators", {{v.generators.front().first, v.generators.front().second.to_string()}}},
                  {"germ", print_germ(v)}};
    return out;
}

Outcome ks_check_cmd(const GermFile &g, const CommandOptions &o) {
    require_local(o, "ks-check");
    auto F = family(g);
    auto ks = ks_surjectivity_check(F, o.degree);
    Json classes = Json::object();
    for (const auto &name : g.context->param_names()) {
        auto k = kodaira_spencer(F, name, KSMode::Absolute);
        classes[name] = {{"cochain", strings(k.cochain.entries())}, {"verified", k.verified}};
    }
    Outcome out;
    out.result = {{"h1_dimension", ks.h1_dimension},
                  {"spanned_dimension", ks.spanned_dimension},
                  {"surjective", ks.surjective},
                  {"classes", classes}};
    out.positive = ks.surjective;
    out.stabilized = ks.stabilized;
    return out;
}

Ideal central_ideal(const GermFile &g) {
    const auto &ctx = g.context;
    auto base = VariableContext::make(ctx->pairs());
    std::vector<Poly> gens;
    for (Poly f : g.polys()) {
        for (std::size_t v = ctx->num_symplectic(); v < ctx->num_vars(); ++v)
            f = f.evaluate(v, 0);
        gens.push_back(f.embed(base));
    }
    return Ideal(base, gens);
}

Outcome pyramidal_cmd(const GermFile &g, const CommandOptions &o) {
    require_local(o, "pyramidal");
    StrataReport rep;
    if (o.mode == "absolute")
        rep = pyramidal_check(central_ideal(g), StrataMode::Absolute);
    else if (o.mode == "relative")
        rep = pyramidal_check(Ideal(g.context, g.polys()), StrataMode::Relative);
    else
        throw UsageError("pyramidal --mode must be absolute or relative");
    Json strata = Json::array();
    for (const auto &s : rep.strata)
        strata.push_back({{"j", s.j},
                          {"dimension", s.dimension < 0 ? Json(nullptr) : Json(s.dimension)},
                          {"bound", s.bound},
                          {"ok", s.ok}});
    Outcome out;
    out.result = {{"mode", to_string(rep.mode)},
                  {"base_dimension", rep.base_dimension},
                  {"strata", strata},
                  {"pyramidal", rep.pyramidal}};
    out.positive = rep.pyramidal;
    return out;
}

Outcome solve_cmd(const GermFile &g, const CommandOptions &o) {
    require_local(o, "solve-infinitesimal");
    if (!g.context->has_time())
        throw UsageError("solve-infinitesimal expects a germ with a time variable");
    auto G = family(g);
    auto res = solve_infinitesimal(G, o.degree, o.param_degree);
    Outcome out;
    out.result = {{"status", to_string(res.status)}};
    if (res.solution) {
        const auto &s = *res.solution;
        Json B = Json::array();
        for (const auto &row : s.B)
            B.push_back(strings(row));
        bool residual_zero = true;
        for (const auto &r : infinitesimal_residual(G, s))
            residual_zero = residual_zero && r.is_zero();
        out.result["h"] = s.h.to_string();
        out.result["B"] = B;
        out.result["b"] = strings(s.b);
        out.result["h_degree"] = s.h_degree;
        out.result["residual_zero"] = residual_zero;
    }
    out.positive = res.status == SolveStatus::Solved;
    return out;
}

Outcome brieskorn_cmd(const GermFile &g, const CommandOptions &o) {
    require_local(o, "brieskorn");
    auto r = brieskorn_check(curve(g, "brieskorn"), o.degree);
    Outcome out;
    out.result = {{"bijective", r.bijective},
                  {"mode", to_string(r.mode)},
                  {"quasi_homogeneous", r.quasi_homogeneous},
                  {"algebra_dimension", r.algebra_dimension},
                  {"h1_dimension", r.h1_dimension},
                  {"image_rank", r.image_rank}};
    out.positive = r.bijective;
    out.stabilized = r.stabilized;
    return out;
}

Outcome special_fiber_cmd(const GermFile &g, const CommandOptions &o) {
    require_local(o, "special-fiber");
    auto r = special_fiber_check(family(g), o.degree, o.param_degree);
    Outcome out;
    out.result = {{"bijective", r.surjective && r.injective},
                  {"surjective", r.surjective},
                  {"injective", r.injective},
                  {"source_rank", r.source_rank},
                  {"target_rank", r.target_rank},
                  {"map_rank", r.map_rank}};
    out.positive = r.surjective && r.injective;
    out.stabilized = r.stabilized;
    return out;
}

const std::map<std::string, Handler> &handlers() {
    static const std::map<std::string, Handler> table = {
        {"check-lagrangian", check_lagrangian_cmd},
        {"milnor", milnor_cmd},
        {"h1", h1_cmd},
        {"versal", versal_cmd},
        {"ks-check", ks_check_cmd},
        {"pyramidal", pyramidal_cmd},
        {"solve-infinitesimal", solve_cmd},
        {"brieskorn", brieskorn_cmd},
        {"special-fiber", special_fiber_cmd},
    };
    return table;
}

Json input_json(const GermFile &g, std::string_view text) {
    Json gens = Json::object();
    for (const auto &[name, f] : g.generators)
        gens[name] = f.to_string();
    auto time = g.context->time_name();
    return {{"digest", digest(text)},
            {"pairs", g.context->pairs()},
            {"params", g.context->param_names()},
            {"time", time ? Json(*time) : Json(nullptr)},
            {"generators", gens}};
}

} // namespace

const std::vector<std::string> &command_names() {
    static const std::vector<std::string> names = {
        "check-lagrangian", "milnor",    "h1",        "versal",        "ks-check",
        "pyramidal",        "solve-infinitesimal", "brieskorn", "special-fiber"};
    return names;
}

std::optional<int> max_degree_from_env() {
    const char *raw = std::getenv("LAGDEF_MAX_DEGREE");
    if (!raw || !*raw)
        return std::nullopt;
    std::string s(raw);
    if (s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("LAGDEF_MAX_DEGREE must be a non-negative integer");
    return std::stoi(s);
}

CommandResult run_command(const std::string &name, std::string_view input,
                          const CommandOptions &options) {
    CommandResult res;
    auto usage = [&](const std::string &msg) {
        res.exit_code = 1;
        res.error = msg;
        return res;
    };
    auto it = handlers().find(name);
    if (it == handlers().end())
        return usage("unknown command '" + name + "'");
    if (options.degree < 0 || options.param_degree < 0)
        return usage("truncation degrees must be non-negative");
    if (options.max_degree &&
        (options.degree > *options.max_degree || options.param_degree > *options.max_degree))
        return usage("truncation degree exceeds LAGDEF_MAX_DEGREE=" +
                     std::to_string(*options.max_degree));
    if (options.order != "local" && options.order != "global")
        return usage("--order must be local or global");

    GermFile germ;
    try {
        germ = parse_germ(input);
    } catch (const ParseError &e) {
        res.parse_error = true;
        return usage(e.what());
    }

    Json report = {{"schema_version", kSchemaVersion},
                   {"command", name},
                   {"input", input_json(germ, input)}};
    Json config = {{"degree", options.degree},
                   {"param_degree", options.param_degree},
                   {"order", options.order}};
    if (name == "pyramidal")
        config["mode"] = options.mode;
    report["config"] = config;

    auto start = std::chrono::steady_clock::now();
    try {
        Outcome out = it->second(germ, options);
        report["status"] = out.positive ? "ok" : "negative";
        report["result"] = out.result;
        report["stabilized"] = out.stabilized;
        res.exit_code = out.positive ? 0 : 2;
    } catch (const UsageError &e) {
        return usage(e.what());
    } catch (const MathError &e) {
        report["status"] = "error";
        report["result"] = nullptr;
        report["error"] = e.what();
        report["stabilized"] = nullptr;
        res.exit_code = 2;
        res.error = e.what();
    } catch (const ContextMismatch &e) {
        return usage(e.what());
    } catch (const std::invalid_argument &e) {
        return usage(e.what());
    }
    if (options.timing) {
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        report["timing"] = {{"seconds", elapsed.count()}};
    }
    res.output = render(report, options.format);
    res.report = std::move(report);
    return res;
}

} // namespace lagdef::cli
