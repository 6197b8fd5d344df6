#include "arithcap/experiment.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <regex>
#include <sstream>

#include "arithcap/analytic_map.hpp"
#include "arithcap/family.hpp"
#include "arithcap/green.hpp"
#include "arithcap/identities.hpp"
#include "arithcap/integerization.hpp"
#include "arithcap/text_format.hpp"

namespace arithcap {

using nlohmann::json;

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IOError, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SyntaxError(e.byte, "invalid JSON in " + path);
    }
}

cplx to_cplx(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
    throw Error(ErrorCode::InvalidArgument, "expected a number or [re, im], got " + j.dump());
}

std::vector<cplx> to_cplx_list(const json& j) {
    if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, "expected a list of [re, im]");
    std::vector<cplx> out;
    for (const auto& e : j) out.push_back(to_cplx(e));
    return out;
}

json from_cplx(cplx z) { return json::array({z.real(), z.imag()}); }

std::vector<double> split_numbers(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw SyntaxError(0, "bad number '" + item + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos) throw SyntaxError(used, "bad number '" + item + "'");
        out.push_back(v);
    }
    return out;
}

DomainSpec domain_from_shorthand(const std::string& name, const std::vector<double>& a) {
    if (name == "circle" && (a.size() == 1 || a.size() == 3)) {
        const cplx O = a.size() == 3 ? cplx(a[1], a[2]) : cplx(0.0);
        return DomainSpec::circle(a[0], 0.0, O);
    }
    if (name == "ellipse" && (a.size() == 2 || a.size() == 3)) return DomainSpec::ellipse(a[0], a[1], a.size() == 3 ? a[2] : 0.0);
    throw Error(ErrorCode::InvalidArgument, "unknown domain shorthand " + name);
}

DomainSpec domain_from_object(const json& j) {
    const auto type = j.at("type").get<std::string>();
    const json params = j.value("params", json::object());
    const bool has_center = j.contains("center") && !j.at("center").is_null();
    const cplx O = has_center ? to_cplx(j.at("center")) : cplx(0.0);
    if (type == "circle") {
        return DomainSpec::circle(params.at("radius").get<double>(), params.contains("center") ? to_cplx(params.at("center")) : 0.0, O);
    }
    if (type == "ellipse") {
        return DomainSpec::ellipse(params.at("a").get<double>(), params.at("b").get<double>(), params.value("angle", 0.0),
                                   params.contains("center") ? to_cplx(params.at("center")) : 0.0, O);
    }
    if (type == "conformal_poly_image") {
        const auto c = to_cplx_list(params.at("coeffs"));
        return has_center ? DomainSpec::conformal_poly_image(c, O) : DomainSpec::conformal_poly_image(c);
    }
    if (type == "trigpoly") {
        std::vector<TrigCurve> curves;
        for (const auto& c : params.at("curves")) curves.emplace_back(to_cplx_list(c.at("a")), to_cplx_list(c.at("b")));
        return DomainSpec(std::move(curves), O);
    }
    if (type == "fourier") {
        std::vector<std::pair<int, cplx>> terms;
        for (const auto& t : params.at("terms")) terms.emplace_back(t.at(0).get<int>(), cplx(t.at(1).get<double>(), t.at(2).get<double>()));
        return DomainSpec::fourier(terms, O);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown domain type " + type);
}

AnalyticMap parse_map(const std::string& text) {
    if (text.empty()) throw Error(ErrorCode::InvalidArgument, "a map is required (--map)");
    if (text.front() == '[') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw SyntaxError(e.byte, "invalid map coefficient list");
        }
        return AnalyticMap::polynomial(to_cplx_list(j));
    }
    return AnalyticMap::polynomial(parse_polynomial(text));
}

IntPoly parse_int_poly(const std::string& text, const char* what) {
    if (text.empty()) throw Error(ErrorCode::InvalidArgument, std::string("missing ") + what);
    return to_int_poly(parse_polynomial(text));
}

GreenConfig green_config(const ExperimentConfig& c) {
    GreenConfig g;
    g.collocation = c.resolution;
    g.residual_threshold = c.residual_threshold;
    return g;
}

IdentityConfig identity_config(const ExperimentConfig& c) {
    IdentityConfig i;
    i.nodes = c.nodes;
    i.boundary_zero = c.boundary_zero;
    i.center_zero = c.center_zero;
    i.vanishing_tolerance = c.vanishing_tolerance;
    i.jet_order = c.jet_order;
    return i;
}

std::vector<cplx> sample_points_file(const std::string& path) { return to_cplx_list(read_json_file(path)); }

json green_summary(const GreenSolution& sol) {
    return {{"robin", sol.robin_c()},
            {"capacity", sol.capacity()},
            {"collocation", sol.collocation()},
            {"collocation_residual", sol.collocation_residual()},
            {"convergence_delta", sol.convergence_delta()},
            {"tau", sol.tau()}};
}

struct Context {
    const ExperimentConfig& cfg;
    std::string text; // artifact; JSON unless the command produces CSV
};

DomainSpec config_domain(const ExperimentConfig& c) {
    return parse_domain(c.domain.is_null() ? json("circle(1)") : c.domain);
}

void cmd_capacity(Context& ctx) {
    const auto sol = solve_green(config_domain(ctx.cfg), green_config(ctx.cfg));
    ctx.text = green_summary(sol).dump(2);
}

void cmd_green(Context& ctx) {
    if (!ctx.cfg.at) throw Error(ErrorCode::InvalidArgument, "green needs --at x,y");
    const auto& at = *ctx.cfg.at;
    const auto sol = solve_green(config_domain(ctx.cfg), green_config(ctx.cfg));
    const cplx x(at[0], at[1]);
    ctx.text = json{{"at", from_cplx(x)}, {"g", green_eval(sol, x)}, {"robin", sol.robin_c()}}.dump(2);
}

void cmd_measure(Context& ctx) {
    const auto sol = solve_green(config_domain(ctx.cfg), green_config(ctx.cfg));
    std::string out = "t,x,y,weight\n";
    std::array<char, 128> buf{};
    for (const auto& n : equilibrium_measure(sol, ctx.cfg.nodes)) {
        std::snprintf(buf.data(), buf.size(), "%.17g,%.17g,%.17g,%.17g\n", n.t, n.z.real(), n.z.imag(), n.weight);
        out += buf.data();
    }
    ctx.text = out;
}

void cmd_jet(Context& ctx) {
    const DomainSpec domain = config_domain(ctx.cfg);
    const auto sol = solve_green(domain, green_config(ctx.cfg));
    const JetData jet = taylor_jet(parse_map(ctx.cfg.map), domain, ctx.cfg.jet_order, ctx.cfg.vanishing_tolerance);
    json coeffs = json::array();
    for (const cplx c : jet.coeffs) coeffs.push_back(from_cplx(c));
    ctx.text = json{{"e", jet.e},
                    {"coeffs", coeffs},
                    {"leading", from_cplx(jet.leading())},
                    {"tolerance", jet.tolerance},
                    {"radius", jet.radius},
                    {"jet_cap_norm", jet_cap_norm(jet, sol)},
                    {"robin", sol.robin_c()}}
                   .dump(2);
}

void cmd_overflow(Context& ctx) {
    const auto sol = solve_green(config_domain(ctx.cfg), green_config(ctx.cfg));
    const AnalyticMap f = parse_map(ctx.cfg.map);
    const auto icfg = identity_config(ctx.cfg);
    json out = json::object();
    for (auto m : {OverflowMethod::Definition, OverflowMethod::Energy}) {
        const auto name = to_string(m);
        if (ctx.cfg.method == "both" || ctx.cfg.method == name) out[name] = overflow(sol, f, m, icfg);
    }
    if (out.size() == 2) out["difference"] = std::abs(out["def"].get<double>() - out["energy"].get<double>());
    ctx.text = out.dump(2);
}

void cmd_identity(Context& ctx) {
    const auto sol = solve_green(config_domain(ctx.cfg), green_config(ctx.cfg));
    const AnalyticMap f = parse_map(ctx.cfg.map);
    const auto icfg = identity_config(ctx.cfg);
    Identity which = Identity::ConstantTerm;
    if (ctx.cfg.which == "prop34") which = Identity::Pushforward;
    else if (ctx.cfg.which == "cor36") which = Identity::Combined;
    std::vector<cplx> points;
    if (which == Identity::ConstantTerm) points = {0.0};
    else if (ctx.cfg.at) points = {cplx((*ctx.cfg.at)[0], (*ctx.cfg.at)[1])};
    else if (!ctx.cfg.samples_path.empty()) points = sample_points_file(ctx.cfg.samples_path);
    else points = identity_sample_points(sol, f, ctx.cfg.samples);
    json rows = json::array();
    double worst = 0.0;
    for (const cplx x : points) {
        const auto t = identity_terms(sol, f, which, x, icfg);
        json row{{"lhs", t.lhs}, {"rhs", t.rhs}, {"residual", t.residual()}};
        if (which != Identity::ConstantTerm) row["x"] = from_cplx(x);
        rows.push_back(row);
        worst = std::max(worst, t.residual());
    }
    ctx.text = json{{"which", to_string(which)}, {"max_residual", worst}, {"points", rows}}.dump(2);
}

void cmd_classical(Context& ctx) {
    const auto r = classical_inverse_check(ctx.cfg.hole_radius, ctx.cfg.samples, green_config(ctx.cfg), identity_config(ctx.cfg));
    json pts = json::array();
    for (std::size_t i = 0; i < r.points.size(); ++i) pts.push_back({{"z", from_cplx(r.points[i])}, {"residual", r.residuals[i]}});
    ctx.text = json{{"hole_radius", ctx.cfg.hole_radius},
                    {"v_infinity", r.v_infinity},
                    {"max_residual", r.max_residual},
                    {"points", pts}}
                   .dump(2);
}

void cmd_symmetry(Context& ctx) {
    const auto r = symmetry_check(parse_map(ctx.cfg.map), config_domain(ctx.cfg), ctx.cfg.samples);
    json pts = json::array();
    for (std::size_t i = 0; i < r.points.size(); ++i) pts.push_back({{"z", from_cplx(r.points[i])}, {"deviation", r.deviations[i]}});
    ctx.text = json{{"max_deviation", r.max_deviation}, {"points", pts}}.dump(2);
}

void cmd_pseudoconvex(Context& ctx) {
    const DomainSpec domain = config_domain(ctx.cfg);
    const auto sol = solve_green(domain, green_config(ctx.cfg));
    const auto icfg = identity_config(ctx.cfg);
    const AnalyticMap phi = parse_map(ctx.cfg.phi);
    const JetData jet = taylor_jet(phi, domain, ctx.cfg.jet_order, ctx.cfg.vanishing_tolerance);
    const auto deg = arakelov_degree(sol, jet);
    json rel = json::array();
    for (std::size_t e = 1; e <= 3; ++e) {
        const auto r = degree_relation(sol, phi, IntPoly::monomial(e), icfg);
        rel.push_back({{"f", to_string(IntPoly::monomial(e), 'z')},
                       {"e", r.e},
                       {"jet_norm", r.jet_norm},
                       {"e_times_degree", r.e_times_degree},
                       {"residual", r.residual()}});
    }
    ctx.text = json{{"c1", from_cplx(jet.leading())},
                    {"robin", sol.robin_c()},
                    {"degree", deg.degree},
                    {"pseudoconvex", deg.pseudoconvex},
                    {"relations", rel}}
                   .dump(2);
}

void cmd_integerize(Context& ctx) {
    if (ctx.cfg.poly.empty()) throw Error(ErrorCode::InvalidArgument, "integerize needs --poly");
    const RatPoly f = parse_polynomial(ctx.cfg.poly);
    const auto r = ctx.cfg.search ? minimal_integerizing_exponent(f, ctx.cfg.top, ctx.cfg.cap) : integerizing_exponent(f, ctx.cfg.top);
    json primes = json::array();
    for (auto [p, e] : r.prime_exponents) primes.push_back({p, e});
    ctx.text = json{{"M", r.M.get_str()},
                    {"k", r.k.get_str()},
                    {"N", ctx.cfg.top},
                    {"route", to_string(r.route)},
                    {"verified", r.verified},
                    {"prime_exponents", primes}}
                   .dump(2);
}

void cmd_patch(Context& ctx) {
    if (ctx.cfg.poly.empty()) throw Error(ErrorCode::InvalidArgument, "patch needs --poly");
    if (ctx.cfg.holes_path.empty()) throw Error(ErrorCode::InvalidArgument, "patch needs --holes");
    const RatPoly m = parse_polynomial(ctx.cfg.poly);
    const RegionSpec region = parse_holes(read_json_file(ctx.cfg.holes_path));
    PatchConfig pc;
    pc.grid_resolution = ctx.cfg.grid;
    pc.max_grid_resolution = ctx.cfg.max_grid;
    pc.max_degree = ctx.cfg.max_degree;
    pc.denominator_limit = ctx.cfg.denominator_limit;
    pc.spot_samples = ctx.cfg.spot_samples;
    pc.seed = ctx.cfg.seed;
    const auto cert = patch(m, region, pc);
    const auto& P = cert.params;
    ctx.text = json{{"p", to_string(cert.p)},
                    {"degree", cert.p.degree()},
                    {"params",
                     {{"epsilon", to_string(P.epsilon)},
                      {"r", to_string(P.r)},
                      {"R_lower", to_string(P.R_lower)},
                      {"k", std::to_string(P.k)},
                      {"N", std::to_string(P.N)},
                      {"M", P.M.get_str()},
                      {"d", std::to_string(P.d)}}},
                    {"greedy_steps", cert.greedy_steps},
                    {"spot_check",
                     {{"samples", cert.spot_check.num_samples},
                      {"min_abs_value", cert.spot_check.min_abs_value},
                      {"min_log_abs", cert.spot_check.min_log_abs}}},
                    {"exact_cert_ok", cert.exact_cert_ok},
                    {"reconstruction_ok", cert.reconstruction_ok},
                    {"unchanged", cert.unchanged}}
                   .dump(2);
}

std::vector<SeedSequence> load_seeds(const std::string& path) {
    const json j = read_json_file(path);
    const json& list = j.is_object() ? j.at("seeds") : j;
    std::vector<SeedSequence> out;
    for (const auto& s : list) {
        SeedSequence seq;
        seq.values = s.get<std::vector<std::int64_t>>();
        seq.bound = j.is_object() ? j.value("bound", std::int64_t{1}) : std::int64_t{1};
        for (auto v : seq.values) seq.bound = std::max(seq.bound, v < 0 ? -v : v);
        out.push_back(std::move(seq));
    }
    return out;
}

void cmd_family(Context& ctx) {
    const IntPoly p = parse_int_poly(ctx.cfg.poly, "--p");
    if (!p.is_monic() || p.degree() < 1) throw Error(ErrorCode::NotMonic, "p must be monic of positive degree");
    const std::size_t order = ctx.cfg.order != 0 ? ctx.cfg.order : 16 * static_cast<std::size_t>(p.degree());
    const auto seeds = ctx.cfg.seeds_path.empty() ? random_seeds(ctx.cfg.count, ctx.cfg.length, ctx.cfg.bound, ctx.cfg.seed)
                                                  : load_seeds(ctx.cfg.seeds_path);
    std::optional<IntSeries> fser;
    if (!ctx.cfg.f.empty()) fser = IntSeries::from_poly(parse_int_poly(ctx.cfg.f, "--f"), order);
    json members = json::array();
    for (const auto& s : seeds) {
        const IntSeries g = family_member(p, s, order);
        json m{{"seed", s.values}, {"series", series_to_json(g)}};
        if (fser) m["composed"] = series_to_json(compose_with_f(g, *fser, order));
        members.push_back(m);
    }
    const auto rep = distinctness_check(p, seeds, order);
    json dist{{"distinct", rep.distinct}, {"collision", nullptr}};
    if (rep.collision) dist["collision"] = {rep.collision->first, rep.collision->second};
    json out{{"p", to_string(p)}, {"order", order}, {"members", members}, {"distinctness", dist}};
    if (!ctx.cfg.domain.is_null()) {
        const auto tb = tail_bound_check(p, parse_map(ctx.cfg.phi), config_domain(ctx.cfg), ctx.cfg.samples);
        out["tail_bound"] = {{"delta", tb.delta},
                             {"geometric_ok", tb.geometric_ok},
                             {"observed_ratio", observed_ratio(tb.ratios, ctx.cfg.length)}};
    }
    ctx.text = out.dump(2);
}

void cmd_suggest_region(Context& ctx) {
    if (ctx.cfg.samples_path.empty()) throw Error(ErrorCode::InvalidArgument, "suggest-region needs --samples-file");
    const RatPoly p = heuristic_real_candidate(sample_points_file(ctx.cfg.samples_path), ctx.cfg.degree_budget);
    ctx.text = json{{"candidate", to_string(p)}, {"degree", p.degree()}}.dump(2);
}

const std::map<std::string, std::function<void(Context&)>>& commands() {
    static const std::map<std::string, std::function<void(Context&)>> table{
        {"capacity", cmd_capacity},
        {"green", cmd_green},
        {"measure", cmd_measure},
        {"jet", cmd_jet},
        {"overflow", cmd_overflow},
        {"identity-check", cmd_identity},
        {"classical-check", cmd_classical},
        {"symmetry-check", cmd_symmetry},
        {"pseudoconvex", cmd_pseudoconvex},
        {"integerize", cmd_integerize},
        {"patch", cmd_patch},
        {"family", cmd_family},
        {"suggest-region", cmd_suggest_region},
    };
    return table;
}

} // namespace

void ExperimentConfig::validate() const {
    auto bad = [](const std::string& m) { throw Error(ErrorCode::InvalidArgument, m); };
    if (!command.empty() && !commands().contains(command)) bad("unknown command " + command);
    for (double t : {residual_threshold, vanishing_tolerance, boundary_zero, center_zero})
        if (!(t > 0.0)) bad("tolerances must be positive");
    if (resolution < 16 || nodes < 16 || grid < 16 || max_grid < grid) bad("resolutions must be at least 16");
    if (samples == 0) bad("samples must be positive");
    if (method != "def" && method != "energy" && method != "both") bad("method must be def, energy or both");
    if (which != "prop34" && which != "prop35" && which != "cor36") bad("which must be prop34, prop35 or cor36");
    if (at && at->size() != 2) bad("--at takes two numbers");
    if (!(hole_radius > 0.0)) bad("hole radius must be positive");
    if (bound < 0) bad("seed bound must be nonnegative");
}

void to_json(json& j, const ExperimentConfig& c) {
    j = json{{"command", c.command},
             {"domain", c.domain},
             {"poly", c.poly},
             {"map", c.map},
             {"phi", c.phi},
             {"f", c.f},
             {"holes", c.holes_path},
             {"seeds", c.seeds_path},
             {"samples_file", c.samples_path},
             {"output", c.output_path},
             {"method", c.method},
             {"which", c.which},
             {"at", c.at ? json(*c.at) : json(nullptr)},
             {"residual_threshold", c.residual_threshold},
             {"vanishing_tolerance", c.vanishing_tolerance},
             {"boundary_zero", c.boundary_zero},
             {"center_zero", c.center_zero},
             {"resolution", c.resolution},
             {"nodes", c.nodes},
             {"grid", c.grid},
             {"max_grid", c.max_grid},
             {"samples", c.samples},
             {"spot_samples", c.spot_samples},
             {"jet_order", c.jet_order},
             {"max_degree", c.max_degree},
             {"denominator_limit", c.denominator_limit},
             {"top", c.top},
             {"cap", c.cap},
             {"search", c.search},
             {"order", c.order},
             {"degree_budget", c.degree_budget},
             {"hole_radius", c.hole_radius},
             {"count", c.count},
             {"length", c.length},
             {"bound", c.bound},
             {"seed", c.seed}};
}

void from_json(const json& j, ExperimentConfig& c) {
    if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "config must be a JSON object");
    static const std::vector<std::string> known = [] {
        json d;
        to_json(d, ExperimentConfig{});
        std::vector<std::string> keys;
        for (auto it = d.begin(); it != d.end(); ++it) keys.push_back(it.key());
        return keys;
    }();
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw Error(ErrorCode::InvalidArgument, "unknown config key " + it.key());
    try {
        auto get = [&](const char* key, auto& field) {
            if (j.contains(key)) j.at(key).get_to(field);
        };
        get("command", c.command);
        if (j.contains("domain")) c.domain = j.at("domain");
        get("poly", c.poly);
        get("map", c.map);
        get("phi", c.phi);
        get("f", c.f);
        get("holes", c.holes_path);
        get("seeds", c.seeds_path);
        get("samples_file", c.samples_path);
        get("output", c.output_path);
        get("method", c.method);
        get("which", c.which);
        if (j.contains("at")) {
            if (j.at("at").is_null()) c.at.reset();
            else c.at = j.at("at").get<std::vector<double>>();
        }
        get("residual_threshold", c.residual_threshold);
        get("vanishing_tolerance", c.vanishing_tolerance);
        get("boundary_zero", c.boundary_zero);
        get("center_zero", c.center_zero);
        get("resolution", c.resolution);
        get("nodes", c.nodes);
        get("grid", c.grid);
        get("max_grid", c.max_grid);
        get("samples", c.samples);
        get("spot_samples", c.spot_samples);
        get("jet_order", c.jet_order);
        get("max_degree", c.max_degree);
        get("denominator_limit", c.denominator_limit);
        get("top", c.top);
        get("cap", c.cap);
        get("search", c.search);
        get("order", c.order);
        get("degree_budget", c.degree_budget);
        get("hole_radius", c.hole_radius);
        get("count", c.count);
        get("length", c.length);
        get("bound", c.bound);
        get("seed", c.seed);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("bad config value: ") + e.what());
    }
}

ExperimentConfig load_config(const std::string& path) { return read_json_file(path).get<ExperimentConfig>(); }

DomainSpec parse_domain(const json& spec) {
    try {
        if (spec.is_object()) return domain_from_object(spec);
        if (!spec.is_string()) throw Error(ErrorCode::InvalidArgument, "domain must be a string or an object");
        const auto s = spec.get<std::string>();
        static const std::regex shorthand(R"(\s*([a-z_]+)\s*\(([^()]*)\)\s*)");
        std::smatch m;
        if (std::regex_match(s, m, shorthand)) {
            DomainSpec d = domain_from_shorthand(m[1].str(), split_numbers(m[2].str()));
            d.set_description(s);
            return d;
        }
        return domain_from_object(read_json_file(s));
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("bad domain: ") + e.what());
    }
}

RegionSpec parse_holes(const json& holes) {
    try {
        std::vector<Hole> out;
        for (const auto& h : holes) out.push_back(Hole{to_cplx(h.at("center")), h.at("radius").get<double>()});
        if (out.empty()) throw Error(ErrorCode::InvalidArgument, "holes list is empty");
        return RegionSpec(std::move(out));
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("bad holes file: ") + e.what());
    }
}

int exit_code(ErrorFamily family) {
    switch (family) {
    case ErrorFamily::Usage: return 2;
    case ErrorFamily::IO: return 3;
    case ErrorFamily::Parse: return 4;
    case ErrorFamily::Algebra: return 5;
    case ErrorFamily::Integerization: return 6;
    case ErrorFamily::Patching: return 7;
    case ErrorFamily::Potential: return 8;
    case ErrorFamily::Family: return 9;
    }
    return 1;
}

json error_record(const Error& e) {
    return {{"error", {{"code", std::string(to_string(e.code()))}, {"family", std::string(to_string(e.family()))}, {"message", e.what()}}}};
}

int run(const ExperimentConfig& config, std::ostream& out) {
    try {
        config.validate();
        if (config.command.empty()) throw Error(ErrorCode::InvalidArgument, "no command given");
        Context ctx{config, {}};
        commands().at(config.command)(ctx);
        if (!ctx.text.empty() && ctx.text.back() != '\n') ctx.text += '\n';
        if (config.output_path.empty()) {
            out << ctx.text;
        } else {
            std::ofstream file(config.output_path, std::ios::binary);
            if (!file || !(file << ctx.text)) throw Error(ErrorCode::IOError, "cannot write " + config.output_path);
        }
        return 0;
    } catch (const Error& e) {
        out << error_record(e).dump(2) << '\n';
        return exit_code(e.family());
    } catch (const std::exception& e) {
        out << json{{"error", {{"code", "Internal"}, {"family", "internal"}, {"message", e.what()}}}}.dump(2) << '\n';
        return 1;
    }
}

} // namespace arithcap
