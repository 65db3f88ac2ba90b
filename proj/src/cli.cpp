#include "drinfeld/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <json.hpp>
#include <map>
#include <sstream>
#include <stdexcept>

#include "drinfeld/capacity.hpp"
#include "drinfeld/heights.hpp"
#include "drinfeld/paramsearch.hpp"
#include "drinfeld/roots.hpp"
#include "drinfeld/text.hpp"

namespace drinfeld::cli {

namespace {

using json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Report {
    json inputs = json::object();
    std::string result;
    json extra = json::object();
    json certificates = json::object();
    bool exhausted = false;
    bool undecided = false;
    std::optional<Table> table;
};

struct Ctx {
    SessionConfig cfg;
    FieldPtr field;
    std::map<std::string, std::string> opt;

    [[nodiscard]] std::optional<std::string> get(const std::string& name) const {
        const auto it = opt.find(name);
        if (it == opt.end()) return std::nullopt;
        return it->second;
    }
    [[nodiscard]] std::string need(const std::string& name) const {
        auto v = get(name);
        if (!v) throw InputError("missing required option --" + name);
        return *v;
    }
    [[nodiscard]] std::string get_or(const std::string& name, const std::string& fallback) const {
        return get(name).value_or(fallback);
    }
    [[nodiscard]] std::size_t count(const std::string& name, std::size_t fallback) const {
        const auto v = get(name);
        if (!v) return fallback;
        std::size_t pos = 0;
        unsigned long long x = 0;
        try {
            x = std::stoull(*v, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != v->size() || v->empty() || (*v)[0] == '-')
            throw InputError("--" + name + " expects a non-negative integer");
        return static_cast<std::size_t>(x);
    }
    [[nodiscard]] FamilyModule family() const { return parse_family(cfg.family, field); }
    [[nodiscard]] HeightBudget budget() const { return HeightBudget{cfg.budget_iter, HeightBudget{}.max_degree}; }
    [[nodiscard]] RootSearchOptions roots() const {
        RootSearchOptions o;
        o.divisor_budget = cfg.budget_div;
        o.seed = cfg.seed;
        return o;
    }

    RatFunc ratfunc(const std::string& name, Report& rep) const {
        const RatFunc x = parse_ratfunc(need(name), field);
        rep.inputs[name] = render(x);
        return x;
    }
    ParamPoly parampoly(const std::string& name, Report& rep) const {
        const ParamPoly x = parse_parampoly(need(name), field);
        rep.inputs[name] = render(x);
        return x;
    }
    OperatorPoly oppoly(const std::string& name, const std::string& fallback, Report& rep) const {
        OperatorPoly f(parse_fqpoly(get_or(name, fallback), field));
        if (f.is_zero()) throw InputError("--" + name + " must be a nonzero polynomial");
        rep.inputs[name] = render(f.poly());
        return f;
    }
    Place place(const std::string& fallback, Report& rep) const {
        const Place v = parse_place(get_or("place", fallback), field);
        rep.inputs["place"] = render(v);
        return v;
    }
    std::size_t n(std::size_t fallback, Report& rep) const {
        const std::size_t k = count("n", fallback);
        rep.inputs["n"] = std::to_string(k);
        return k;
    }
};

std::string str(std::size_t k) { return std::to_string(k); }

json render_list(const std::vector<RatFunc>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(render(x));
    return a;
}

template <class C>
json render_ore(const OrePoly<C>& A) {
    json a = json::array();
    for (const auto& c : A.coeffs()) a.push_back(render(c));
    return a;
}

OrePoly<ParamPoly> parse_ore(const std::string& text, const FieldPtr& field) {
    std::vector<ParamPoly> coeffs;
    std::size_t start = 0;
    for (;;) {
        const std::size_t end = text.find(';', start);
        coeffs.push_back(parse_parampoly(text.substr(start, end - start), field));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return OrePoly<ParamPoly>(field, std::move(coeffs));
}

const char* kind_name(const HeightValue& h) { return h.is_exact() ? "exact" : "upper_bound"; }

const char* outcome_name(LocalOrbit::Outcome o) {
    switch (o) {
        case LocalOrbit::Outcome::Escaped: return "escaped";
        case LocalOrbit::Outcome::Cycle: return "cycle";
        case LocalOrbit::Outcome::Integral: return "integral";
        case LocalOrbit::Outcome::Exhausted: return "exhausted";
    }
    return "";
}

const char* membership_name(Membership::Kind k) {
    switch (k) {
        case Membership::Kind::In: return "in";
        case Membership::Kind::Out: return "out";
        case Membership::Kind::Unknown: return "unknown";
    }
    return "";
}

json certificate_json(const DrinfeldModule& phi, const RatFunc& x, const TorsionCertificate& c) {
    json j = json::object();
    if (c.is_torsion()) {
        j["kind"] = "torsion";
        j["annihilator"] = render(c.annihilator->poly());
        j["preperiod"] = str(c.preperiod);
        j["period"] = str(c.period);
    } else {
        j["kind"] = "non-torsion";
        j["place"] = render(*c.place);
        j["step"] = str(c.step);
        j["escape_log"] = render(c.escape_log);
        j["log_rv"] = render(c.log_rv);
    }
    j["verified"] = verify_certificate(phi, x, c);
    return j;
}

// Runs is_torsion within the iteration budget; nullopt when the budget runs out.
std::optional<TorsionCertificate> decide_torsion(const Ctx& ctx, const DrinfeldModule& phi, const RatFunc& x) {
    try {
        return is_torsion(phi, x, ctx.cfg.budget_iter);
    } catch (const std::runtime_error&) {
        return std::nullopt;
    }
}

void require_standard(const FamilyModule& F) {
    if (!F.is_standard()) throw InputError("this command needs the family g1=z with g_i = 0 for i >= 2");
}

// ---- commands -------------------------------------------------------------

void cmd_ore_mul(Ctx& ctx, Report& rep) {
    const auto a = parse_ore(ctx.need("a"), ctx.field);
    const auto b = parse_ore(ctx.need("b"), ctx.field);
    rep.inputs["a"] = render_ore(a);
    rep.inputs["b"] = render_ore(b);
    rep.result = "ok";
    rep.extra["product"] = render_ore(a * b);
}

void cmd_phi(Ctx& ctx, Report& rep) {
    const FamilyModule F = ctx.family();
    const OperatorPoly f = ctx.oppoly("f", "t", rep);
    rep.result = "ok";
    if (ctx.get("lambda")) {
        const RatFunc lam = ctx.ratfunc("lambda", rep);
        rep.extra["phi_f"] = render_ore(specialize(F, lam).phi(f));
    } else {
        rep.extra["phi_f"] = render_ore(phi_image(F.generic_phi_t(), f));
    }
}

void cmd_act(Ctx& ctx, Report& rep) {
    const FamilyModule F = ctx.family();
    const OperatorPoly f = ctx.oppoly("f", "t", rep);
    rep.result = "ok";
    if (ctx.get("lambda")) {
        const RatFunc lam = ctx.ratfunc("lambda", rep);
        const RatFunc x = ctx.ratfunc("x", rep);
        rep.extra["value"] = render(act(specialize(F, lam).phi(f), x));
    } else {
        const ParamPoly x = ctx.parampoly("x", rep);
        rep.extra["value"] = render(act(phi_image(F.generic_phi_t(), f), x));
    }
}

void cmd_iterate(Ctx& ctx, Report& rep) {
    const FamilyModule F = ctx.family();
    const ParamPoly c = ctx.parampoly("c", rep);
    const std::size_t n = ctx.n(1, rep);
    const ParamPoly fn = iterate_point(F, c, n);
    rep.result = "ok";
    rep.extra["value"] = render(fn);
    rep.extra["degree"] = render(fn.degree());
}

void cmd_degree_law(Ctx& ctx, Report& rep) {
    const FamilyModule F = ctx.family();
    const ParamPoly c = ctx.parampoly("c", rep);
    const std::size_t n = ctx.n(1, rep);
    const HypothesisReport h = hypothesis_check(F, c);
    if (!h.holds) throw InputError("deg(c) does not exceed the family threshold " + render(h.threshold));
    const DegreeLawReport d = degree_law_check(F, c, n);
    rep.result = d.holds() ? "holds" : "fails";
    rep.extra["degree"] = render(d.degree);
    rep.extra["expected_degree"] = str(d.expected_degree);
    rep.extra["leading"] = render(d.leading);
    rep.extra["expected_leading"] = render(d.expected_leading);
    rep.certificates["hypothesis_threshold"] = render(h.threshold);
    rep.certificates["hypothesis_margin"] = render(*h.margin);
}

void cmd_height(Ctx& ctx, Report& rep) {
    const FamilyModule F = ctx.family();
    const RatFunc lam = ctx.ratfunc("lambda", rep);
    const RatFunc x = ctx.ratfunc("x", rep);
    const DrinfeldModule phi = specialize(F, lam);
    const HeightValue h = canonical_height(phi, x, ctx.budget());
    rep.result = kind_name(h);
    rep.extra["height"] = render(h.value);
    rep.extra["lower"] = render(h.lower);
    json places = json::array();
    for (const Place& v : height_places(phi, x)) {
        const LocalOrbit o = local_orbit(phi, v, x, ctx.budget());
        places.push_back(json{{"place", render(v)},
                              {"outcome", outcome_name(o.outcome)},
                              {"steps", str(o.steps)},
                              {"log_rv", render(o.log_rv)},
                              {"kind", kind_name(o.height)},
                              {"value", render(o.height.value)}});
    }
    rep.certificates["local"] = places;
    rep.undecided = rep.exhausted = !h.is_exact();
}

void cmd_local_height(Ctx& ctx, Report& rep) {
    const FamilyModule F = ctx.family();
    const RatFunc lam = ctx.ratfunc("lambda", rep);
    const RatFunc x = ctx.ratfunc("x", rep);
    const Place v = ctx.place("inf", rep);
    const LocalOrbit o = local_orbit(specialize(F, lam), v, x, ctx.budget());
    rep.result = kind_name(o.height);
    rep.extra["height"] = render(o.height.value);
    rep.extra["lower"] = render(o.height.lower);
    rep.certificates["outcome"] = outcome_name(o.outcome);
    rep.certificates["steps"] = str(o.steps);
    rep.certificates["log_rv"] = render(o.log_rv);
    rep.undecided = rep.exhausted = !o.height.is_exact();
}

void cmd_torsion_test(Ctx& ctx, Report& rep) {
    const FamilyModule F = ctx.family();
    const RatFunc lam = ctx.ratfunc("lambda", rep);
    const RatFunc x = ctx.ratfunc("x", rep);
    const DrinfeldModule phi = specialize(F, lam);
    const auto cert = decide_torsion(ctx, phi, x);
    if (!cert) {
        rep.result = "unknown";
        rep.undecided = rep.exhausted = true;
        return;
    }
    rep.result = cert->is_torsion() ? "torsion" : "non-torsion";
    if (cert->is_torsion()) rep.extra["annihilator"] = render(cert->annihilator->poly());
    rep.certificates = certificate_json(phi, x, *cert);
}

void cmd_torsion_params(Ctx& ctx, Report& rep) {
    const FamilyModule F = ctx.family();
    const ParamPoly a = ctx.parampoly("a", rep);
    const OperatorPoly f = ctx.oppoly("f", "t", rep);
    const ParamPoly P = torsion_param_poly(F, a, f);
    rep.extra["poly"] = render(P);
    if (P.is_zero()) {
        rep.result = "all";
        rep.extra["roots"] = "all";
        return;
    }
    const RootSearch rs = rational_roots(P, ctx.roots());
    rep.result = rs.complete() ? "complete" : "partial";
    rep.extra["roots"] = render_list(rs.roots);
    json checks = json::array();
    for (const RatFunc& lam : rs.roots) {
        const DrinfeldModule phi = specialize(F, lam);
        const RatFunc x = a.evaluate(lam);
        const bool killed = act(phi.phi(f), x).is_zero();
        checks.push_back(json{{"lambda", render(lam)}, {"annihilated", killed}});
    }
    rep.certificates["roots"] = checks;
    rep.certificates["pairs_examined"] = std::to_string(rs.pairs_examined);
    rep.undecided = rep.exhausted = !rs.complete();
}

void cmd_compare(Ctx& ctx, Report& rep) {
    const FamilyModule F = ctx.family();
    const ParamPoly a = ctx.parampoly("a", rep);
    const ParamPoly b = ctx.parampoly("b", rep);
    const OperatorPoly f = ctx.oppoly("f", "t", rep);
    const OperatorPoly g = ctx.oppoly("g", "t", rep);
    const ParamPoly P = torsion_param_poly(F, a, f);
    const ParamPoly Q = torsion_param_poly(F, b, g);
    if (P.is_zero() || Q.is_zero()) throw InputError("a and b must be nonzero");
    const RatFunc res = common_param_resultant(P, Q);
    const ParamPoly gcd = common_param_gcd(P, Q);
    rep.extra["resultant"] = render_factored(res, ctx.cfg.seed);
    if (!res.is_zero()) {
        rep.result = "disjoint";
        rep.extra["common_roots"] = "none";
    } else {
        const RootSearch rs = rational_roots(gcd, ctx.roots());
        rep.result = "common-factor";
        rep.extra["common_roots"] = render_list(rs.roots);
        rep.undecided = rep.exhausted = !rs.complete();
    }
    rep.extra["gcd"] = render(gcd);
    const DependenceReport d = dependence_check(a, b);
    json dep = json::object();
    dep["gamma"] = d.gamma ? json(render(*d.gamma)) : json(nullptr);
    dep["unit"] = d.unit ? json(render(*d.unit)) : json(nullptr);
    dep["unit_constant"] = d.unit_constant;
    rep.extra["dependence"] = dep;
    rep.certificates["P"] = render(P);
    rep.certificates["Q"] = render(Q);
}

void cmd_lambda0(Ctx& ctx, Report& rep) {
    const FamilyModule F = ctx.family();
    require_standard(F);
    const RatFunc a = ctx.ratfunc("a", rep);
    if (a.is_zero()) throw InputError("a must be nonzero");
    const RatFunc l0 = lambda0(F, a);
    rep.result = "ok";
    rep.extra["lambda0"] = render(l0);
    rep.certificates["a_is_t_torsion"] = act(specialize(F, l0).phi_t(), a).is_zero();
}

void cmd_case_verify(Ctx& ctx, Report& rep) {
    const FamilyModule F = ctx.family();
    require_standard(F);
    const RatFunc a = ctx.ratfunc("a", rep);
    const FqElem gamma = parse_constant(ctx.need("gamma"), ctx.field);
    rep.inputs["gamma"] = render(gamma);
    if (a.is_zero()) throw InputError("a must be nonzero");
    if (gamma.in_base_field()) throw InputError("gamma must lie outside F_q");
    const CaseReport c = case_analysis_verify(F, a, gamma);
    rep.extra["case"] = to_string(c.tag);
    rep.extra["place"] = render(c.place);
    rep.extra["lambda0"] = render(c.lambda0);
    rep.extra["b"] = render(c.b);
    rep.extra["image"] = render(c.image);
    rep.extra["steps"] = std::to_string(c.steps);
    rep.extra["computed"] = render(c.computed);
    rep.extra["threshold"] = render(c.threshold);
    rep.extra["escape_lower_bound"] = c.escape_lower_bound ? json(render(*c.escape_lower_bound)) : json(nullptr);
    const DrinfeldModule phi = specialize(F, c.lambda0);
    rep.certificates["a_is_t_torsion"] = act(phi.phi_t(), a).is_zero();
    const auto cert = decide_torsion(ctx, phi, c.b);
    if (!cert) {
        rep.result = "unknown";
        rep.undecided = rep.exhausted = true;
        return;
    }
    rep.certificates["b"] = certificate_json(phi, c.b, *cert);
    if (c.non_torsion && !cert->is_torsion())
        rep.result = "non-torsion";
    else if (cert->is_torsion())
        rep.result = "torsion";
    else
        rep.result = "inconclusive";
}

void cmd_green(Ctx& ctx, Report& rep) {
    const FamilyModule F = ctx.family();
    const ParamPoly c = ctx.parampoly("c", rep);
    const Place v = ctx.place("inf", rep);
    const RatFunc lam = ctx.ratfunc("lambda", rep);
    const std::size_t n = ctx.n(1, rep);
    const GreenValue g = green_estimate(F, c, v, lam, n);
    rep.result = g.stabilized ? "stabilized" : "estimate";
    rep.extra["value"] = render(g.value);
    rep.extra["stabilized"] = g.stabilized;
}

void cmd_capacity(Ctx& ctx, Report& rep) {
    const FamilyModule F = ctx.family();
    const ParamPoly c = ctx.parampoly("c", rep);
    const Place v = ctx.place("inf", rep);
    const CapacityReport cap = capacity_log(F, c, v);
    rep.result = cap.confirmed ? "confirmed" : "unconfirmed";
    rep.extra["capacity_log"] = render(cap.capacity_log);
    rep.extra["escape_bound"] = render(cap.escape_bound);
    rep.certificates["sample"] = render(cap.sample);
    rep.certificates["expected"] = render(cap.expected);
    json green = json::array();
    for (const GreenValue& g : cap.green)
        green.push_back(json{{"n", str(g.n)}, {"value", render(g.value)}, {"stabilized", g.stabilized}});
    rep.certificates["green"] = green;
}

void cmd_adelic(Ctx& ctx, Report& rep) {
    const FamilyModule F = ctx.family();
    const ParamPoly c = ctx.parampoly("c", rep);
    const AdelicReport a = adelic_capacity_log(F, c);
    rep.result = a.sum == 0 ? "balanced" : "unbalanced";
    rep.extra["sum"] = render(a.sum);
    json terms = json::array();
    for (const auto& [v, x] : a.terms) terms.push_back(json{{"place", render(v)}, {"capacity_log", render(x)}});
    rep.extra["terms"] = terms;
    json ex = json::array();
    for (const Place& v : a.exceptional) ex.push_back(render(v));
    rep.extra["exceptional"] = ex;
}

void cmd_membership(Ctx& ctx, Report& rep) {
    const FamilyModule F = ctx.family();
    const ParamPoly c = ctx.parampoly("c", rep);
    const Place v = ctx.place("inf", rep);
    const RatFunc lam = ctx.ratfunc("lambda", rep);
    const Membership m = membership(F, c, v, lam, ctx.budget());
    rep.result = membership_name(m.kind);
    rep.extra["n"] = str(m.n);
    if (m.kind == Membership::Kind::Unknown) {
        rep.extra["bound"] = render(m.bound);
        rep.undecided = rep.exhausted = true;
    }
}

void cmd_param_height(Ctx& ctx, Report& rep) {
    const FamilyModule F = ctx.family();
    const ParamPoly c = ctx.parampoly("c", rep);
    const RatFunc lam = ctx.ratfunc("lambda", rep);
    const std::size_t n = ctx.n(2, rep);
    const HeightValue h = param_height(F, c, lam, ctx.budget());
    const std::optional<Rational> g = green_height_sum(F, c, lam, n);
    rep.result = kind_name(h);
    rep.extra["height"] = render(h.value);
    rep.extra["lower"] = render(h.lower);
    rep.certificates["green_sum"] = g ? json(render(*g)) : json(nullptr);
    rep.certificates["agree"] = (g && h.is_exact()) ? json(*g == h.value) : json(nullptr);
    rep.undecided = rep.exhausted = !h.is_exact();
}

void cmd_sweep(Ctx& ctx, Report& rep) {
    const FamilyModule F = ctx.family();
    const ParamPoly c = ctx.parampoly("c", rep);
    const Place v = ctx.place("inf", rep);
    const std::size_t n = ctx.n(2, rep);
    const std::size_t max_deg = ctx.count("max-deg", 1);
    rep.inputs["max-deg"] = str(max_deg);
    const std::uint64_t Q = ctx.field->order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i <= max_deg; ++i) {
        total *= Q;
        if (total > 4096) throw InputError("sweep grid larger than 4096 points");
    }
    std::vector<RatFunc> grid;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        FqPoly lam(ctx.field);
        std::uint64_t k = idx;
        for (std::size_t i = 0; i <= max_deg; ++i, k /= Q)
            lam = lam + FqPoly::monomial(ctx.field, ctx.field->elem(static_cast<std::uint32_t>(k % Q)), i);
        grid.emplace_back(lam);
    }
    std::sort(grid.begin(), grid.end());
    Table table{{"lambda", "place", "n", "green", "stabilized", "membership"}, {}};
    json rows = json::array();
    bool unknown = false;
    for (const RatFunc& lam : grid) {
        const GreenValue g = green_estimate(F, c, v, lam, n);
        const Membership m = membership(F, c, v, lam, ctx.budget());
        unknown = unknown || m.kind == Membership::Kind::Unknown;
        std::vector<std::string> row{render(lam), render(v), str(n), render(g.value), g.stabilized ? "true" : "false",
                                     membership_name(m.kind)};
        rows.push_back(json{{"lambda", row[0]},
                            {"place", row[1]},
                            {"n", row[2]},
                            {"green", row[3]},
                            {"stabilized", g.stabilized},
                            {"membership", row[5]}});
        table.rows.push_back(std::move(row));
    }
    rep.result = unknown ? "partial" : "complete";
    rep.extra["rows"] = rows;
    rep.table = std::move(table);
    rep.exhausted = unknown;
}

struct CommandSpec {
    const char* name;
    const char* help;
    std::vector<std::pair<const char*, const char*>> options;
    std::function<void(Ctx&, Report&)> run;
};

const std::vector<CommandSpec>& commands() {
    static const std::vector<CommandSpec> specs = {
        {"ore-mul", "twisted product of two Ore polynomials over K[z]",
         {{"a", "coefficients c0;c1;... of the left factor"}, {"b", "coefficients of the right factor"}}, cmd_ore_mul},
        {"phi", "phi_f over K[z], or at z = lambda",
         {{"f", "operator polynomial in F_q[t] (default t)"}, {"lambda", "optional parameter"}}, cmd_phi},
        {"act", "phi_f applied to x",
         {{"f", "operator polynomial (default t)"}, {"x", "point"}, {"lambda", "optional parameter"}}, cmd_act},
        {"iterate", "f_{c,n}(z)", {{"c", "marked point in K[z]"}, {"n", "iterate (default 1)"}}, cmd_iterate},
        {"degree-law", "degree and leading coefficient of f_{c,n}",
         {{"c", "marked point"}, {"n", "iterate (default 1)"}}, cmd_degree_law},
        {"height", "canonical height of x for phi^lambda", {{"lambda", "parameter"}, {"x", "point"}}, cmd_height},
        {"local-height", "local canonical height at a place",
         {{"lambda", "parameter"}, {"x", "point"}, {"place", "place (default inf)"}}, cmd_local_height},
        {"torsion-test", "decide whether x is torsion for phi^lambda", {{"lambda", "parameter"}, {"x", "point"}},
         cmd_torsion_test},
        {"torsion-params", "parameters in K where a is f-torsion",
         {{"a", "point in K[z]"}, {"f", "operator polynomial (default t)"}}, cmd_torsion_params},
        {"compare", "common torsion parameters of a and b",
         {{"a", "first point"}, {"b", "second point"}, {"f", "annihilator for a (default t)"},
          {"g", "annihilator for b (default t)"}},
         cmd_compare},
        {"lambda0", "parameter where a becomes t-torsion", {{"a", "nonzero point in K"}}, cmd_lambda0},
        {"case-verify", "valuation case analysis for b = gamma a",
         {{"a", "nonzero point in K"}, {"gamma", "constant outside F_q"}}, cmd_case_verify},
        {"green", "Green function estimate",
         {{"c", "marked point"}, {"place", "place (default inf)"}, {"lambda", "parameter"}, {"n", "iterate (default 1)"}},
         cmd_green},
        {"capacity", "log capacity of the Mandelbrot set at a place",
         {{"c", "marked point"}, {"place", "place (default inf)"}}, cmd_capacity},
        {"adelic", "sum of log capacities over all places", {{"c", "marked point"}}, cmd_adelic},
        {"membership", "membership of lambda in the v-adic Mandelbrot set",
         {{"c", "marked point"}, {"place", "place (default inf)"}, {"lambda", "parameter"}}, cmd_membership},
        {"param-height", "height of lambda relative to the adelic Mandelbrot set",
         {{"c", "marked point"}, {"lambda", "parameter"}, {"n", "Green iterate for the cross-check (default 2)"}},
         cmd_param_height},
        {"sweep", "Green values and membership over all polynomial lambda of bounded degree",
         {{"c", "marked point"}, {"place", "place (default inf)"}, {"n", "iterate (default 2)"},
          {"max-deg", "largest degree of lambda (default 1)"}},
         cmd_sweep},
    };
    return specs;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
    } else if (j.is_string()) {
        out.emplace_back(prefix, j.get<std::string>());
    } else {
        out.emplace_back(prefix, j.dump());
    }
}

std::string to_csv(const json& doc, const std::optional<Table>& table) {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
        os << '\n';
    };
    if (table) {
        line(table->header);
        for (const auto& r : table->rows) line(r);
        return os.str();
    }
    std::vector<std::pair<std::string, std::string>> kv;
    flatten(doc, "", kv);
    line({"key", "value"});
    for (const auto& [k, v] : kv) line({k, v});
    return os.str();
}

std::string emit(const json& doc, const std::optional<Table>& table, Format fmt) {
    if (fmt == Format::Csv) return to_csv(doc, table);
    return doc.dump(2) + "\n";
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& c : commands()) v.emplace_back(c.name);
        return v;
    }();
    return names;
}

FieldPtr make_field(const SessionConfig& config) {
    FieldConfig fc{config.p, config.e, config.s, {}};
    if (config.modulus) {
        const FieldPtr prime = GaloisField::make(FieldConfig{config.p, 1, 1, {}});
        std::string text = *config.modulus;
        std::replace(text.begin(), text.end(), 'u', 't');
        const FqPoly m = parse_fqpoly(text, prime);
        fc.modulus.assign(m.coeffs().begin(), m.coeffs().end());
    }
    return GaloisField::make(fc);
}

Element parse_element(std::string_view text, ElementKind kind, const FieldPtr& field) {
    switch (kind) {
        case ElementKind::Constant: return parse_constant(text, field);
        case ElementKind::RatFunc: return parse_ratfunc(text, field);
        case ElementKind::ParamPoly: return parse_parampoly(text, field);
        case ElementKind::FqPoly: return parse_fqpoly(text, field);
    }
    throw std::invalid_argument("unknown element kind");
}

CommandResult run_command(const std::vector<std::string>& args) {
    CLI::App app("Drinfeld module and parametric torsion toolkit", "drinfeld-cli");
    app.fallthrough();
    app.require_subcommand(1);
    SessionConfig cfg;
    std::string format = "json";
    std::string modulus;
    app.add_option("--p", cfg.p, "characteristic");
    app.add_option("--e", cfg.e, "q = p^e");
    app.add_option("--s", cfg.s, "constants F_{q^s}");
    app.add_option("--modulus", modulus, "defining polynomial of F_{q^s} over F_p, in u");
    app.add_option("--family", cfg.family, "family string, e.g. r=2;g1=z");
    app.add_option("--budget-iter", cfg.budget_iter, "orbit step budget");
    app.add_option("--budget-div", cfg.budget_div, "divisor pair budget for root search");
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    std::map<std::string, std::string> opts;
    std::vector<std::pair<CLI::App*, const CommandSpec*>> subs;
    for (const auto& spec : commands()) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        for (const auto& [name, help] : spec.options) {
            const std::string key = name;
            sub->add_option_function<std::string>(
                "--" + key, [&opts, key](const std::string& v) { opts[key] = v; }, help);
        }
        subs.emplace_back(sub, &spec);
    }

    const std::string command = args.empty() ? std::string() : args.front();
    auto fail = [&](const std::string& msg) {
        json doc = json::object();
        doc["command"] = command;
        doc["error"] = msg;
        const Format fmt = format == "csv" ? Format::Csv : Format::Json;
        return CommandResult{1, emit(doc, std::nullopt, fmt)};
    };

    if (!command.empty() && command[0] != '-' &&
        std::find(command_names().begin(), command_names().end(), command) == command_names().end())
        return fail("unknown command '" + command + "'");
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        return CommandResult{0, app.help()};
    } catch (const CLI::CallForAllHelp&) {
        return CommandResult{0, app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        return fail(e.what());
    }
    if (!modulus.empty()) cfg.modulus = modulus;
    cfg.format = format == "csv" ? Format::Csv : Format::Json;

    const CommandSpec* spec = nullptr;
    for (const auto& [sub, s] : subs)
        if (sub->parsed()) spec = s;

    Report rep;
    Ctx ctx{cfg, nullptr, opts};
    try {
        ctx.field = make_field(cfg);
        const FamilyModule F = ctx.family();
        rep.inputs["field"] = json{{"p", std::to_string(cfg.p)},
                                   {"e", std::to_string(cfg.e)},
                                   {"s", std::to_string(cfg.s)},
                                   {"q", std::to_string(ctx.field->q())}};
        rep.inputs["family"] = render_family(F);
        spec->run(ctx, rep);
    } catch (const ParseError& e) {
        return fail(std::string("parse error ") + e.what());
    } catch (const InputError& e) {
        return fail(e.what());
    } catch (const std::invalid_argument& e) {
        return fail(e.what());
    } catch (const std::length_error& e) {
        return fail(e.what());
    } catch (const std::overflow_error& e) {
        return fail(e.what());
    }

    json doc = json::object();
    doc["command"] = spec->name;
    doc["inputs"] = rep.inputs;
    doc["result"] = rep.result;
    for (const auto& [k, v] : rep.extra.items()) doc[k] = v;
    doc["certificates"] = rep.certificates;
    doc["budget_status"] = rep.exhausted ? "exhausted" : "complete";
    return CommandResult{rep.undecided ? 2 : 0, emit(doc, rep.table, cfg.format)};
}

}  // namespace drinfeld::cli
