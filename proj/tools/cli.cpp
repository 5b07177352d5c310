#include "cli.hpp"

#include <CLI11.hpp>
#include <deque>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>

#include "sigma/fermat.hpp"
#include "sigma/parser.hpp"

namespace sigma {

namespace {

using nlohmann::json;

struct Common {
    int n = 1;
    double lambda = 1.0;
    std::string method = "auto";
    int res = 64;
    double tol = 1e-3;
    long budget = 10'000'000;
    bool as_json = false;
    long seed = 0;
    int workers = 1;
    std::string config_path;

    CLI::Option *on = nullptr, *olambda = nullptr, *omethod = nullptr, *ores = nullptr,
                *otol = nullptr, *obudget = nullptr, *oworkers = nullptr, *oseed = nullptr;

    void attach(CLI::App* sub) {
        on = sub->add_option("-n,--nvars", n, "number of variables of the function field")
                 ->check(CLI::PositiveNumber);
        olambda = sub->add_option("--lambda", lambda,
                                  "weight of the degree term in heights and place constants");
        omethod = sub->add_option("--method", method, "quadrature method")
                      ->check(CLI::IsMember({"auto", "jensen", "grid", "qmc"}));
        ores = sub->add_option("--res", res, "initial quadrature grid resolution")
                   ->check(CLI::PositiveNumber);
        otol = sub->add_option("--tol", tol, "quadrature refinement tolerance");
        obudget = sub->add_option("--budget", budget, "maximum integrand evaluations");
        oworkers = sub->add_option("--workers", workers, "quadrature worker threads")
                       ->check(CLI::PositiveNumber);
        oseed = sub->add_option("--seed", seed, "random seed recorded in the output");
        sub->add_flag("--json", as_json, "emit a single JSON document");
        sub->add_option("--config", config_path,
                        "JSON config file; explicit flags take precedence");
    }

    void merge_config() {
        if (config_path.empty()) return;
        std::ifstream in(config_path);
        if (!in) throw poly_error("config: cannot open " + config_path);
        json j = json::parse(in, nullptr, true, true);
        auto take = [&](const char* key, CLI::Option* opt, auto& slot) {
            if (j.contains(key) && (!opt || opt->count() == 0))
                slot = j.at(key).get<std::decay_t<decltype(slot)>>();
        };
        take("n", on, n);
        take("lambda", olambda, lambda);
        take("method", omethod, method);
        take("res", ores, res);
        take("tol", otol, tol);
        take("budget", obudget, budget);
        take("workers", oworkers, workers);
        take("seed", oseed, seed);
    }

    QuadratureSpec quad() const {
        QuadratureSpec s;
        s.initial_resolution = res;
        s.tolerance = tol;
        s.max_evaluations = budget;
        s.workers = workers;
        if (method == "grid") s.force_grid = true;
        if (method == "qmc") { s.force_grid = true; s.use_qmc = true; }
        return s;
    }

    AdelicParams params() const { return {n, lambda}; }

    // workers is deliberately absent: it cannot affect results, and the
    // output must be byte-identical across worker counts
    json inputs() const {
        return {{"n", n},     {"lambda", lambda}, {"method", method},  {"res", res},
                {"tol", tol}, {"budget", budget}, {"seed", seed}};
    }
};

json estimate_json(const MahlerEstimate& e) {
    return {{"value", e.value},
            {"error_bound", e.error_bound},
            {"method", to_string(e.method)},
            {"evaluations", e.evaluations},
            {"converged", e.converged}};
}

void print_human(std::ostream& out, const json& j, const std::string& indent = "") {
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            out << indent << key << ":\n";
            print_human(out, value, indent + "  ");
        } else if (value.is_string()) {
            out << indent << key << " = " << value.get<std::string>() << "\n";
        } else {
            out << indent << key << " = " << value.dump() << "\n";
        }
    }
}

void finish(std::ostream& out, const Common& c, const std::string& command, json extra_inputs,
            json result, std::vector<std::string> warnings = {},
            std::optional<double> error_bound = std::nullopt) {
    if (!c.as_json) {
        print_human(out, result);
        for (const auto& w : warnings) out << "warning: " << w << "\n";
        return;
    }
    json inputs = c.inputs();
    inputs.update(extra_inputs);
    json doc{{"command", command},
             {"inputs", inputs},
             {"result", result},
             {"warnings", warnings}};
    if (error_bound) doc["error_bound"] = *error_bound;
    out << doc.dump(2) << "\n";
}

Poly parse_poly(const std::string& text, int n) {
    RationalFunction f = parse_expr(text, n);
    if (!f.is_polynomial())
        throw poly_error("expected a polynomial, got a proper rational function: " + text);
    return f.numerator_scaled();
}

Rat parse_rat(const std::string& text) {
    RationalFunction f = parse_expr(text, 1);
    if (!f.num().is_constant() || !f.den().is_constant())
        throw poly_error("expected a rational constant: " + text);
    return f.scalar();
}

HeightProfile profile_from_json(const json& j) {
    HeightProfile H;
    std::string kind = j.value("kind", "const");
    if (kind == "const") {
        H.kind = HeightProfile::Kind::constant;
        H.c = j.value("c", 0.0);
    } else if (kind == "log_p") {
        H.kind = HeightProfile::Kind::log_p;
    } else if (kind == "table") {
        H.kind = HeightProfile::Kind::table;
        for (const auto& [key, value] : j.at("table").items())
            H.table[std::stol(key)] = value.get<double>();
    } else {
        throw poly_error("profile kind must be const, log_p or table");
    }
    return H;
}

// {"p0": 5, "rule": "identity" | {"const": k} | {"table": {"5": 2, ...}}
//                 | {"exp_profile": {"a": ..., "H": {...}}}}
DensitySpec spec_from_json(const json& j) {
    DensitySpec spec;
    spec.p0 = j.value("p0", 5L);
    if (!j.contains("rule")) return spec;
    const json& r = j.at("rule");
    if (r.is_string() && r == "identity") {
        spec.rule = DensitySpec::Rule::identity;
    } else if (r.is_object() && r.contains("const")) {
        spec.rule = DensitySpec::Rule::constant;
        spec.const_m = r.at("const").get<long>();
    } else if (r.is_object() && r.contains("table")) {
        spec.rule = DensitySpec::Rule::table;
        for (const auto& [key, value] : r.at("table").items())
            spec.table[std::stol(key)] = value.get<long>();
    } else if (r.is_object() && r.contains("exp_profile")) {
        spec.rule = DensitySpec::Rule::exp_profile;
        const json& e = r.at("exp_profile");
        spec.profile_a = e.at("a").get<double>();
        spec.profile_H = profile_from_json(e.at("H"));
    } else {
        throw poly_error("density rule must be \"identity\", {\"const\":k}, {\"table\":{...}} "
                         "or {\"exp_profile\":{a,H}}");
    }
    return spec;
}

json certificate_json(const DensityCertificate& cert) {
    return {{"epsilon", cert.epsilon},
            {"primes", cert.primes},
            {"Q", cert.Q.str()},
            {"phi_Q", cert.phi_Q.str()},
            {"n0", cert.n0},
            {"m_threshold", cert.m_threshold},
            {"verified_at_scale", cert.verified_at_scale},
            {"simulated_m", cert.simulated_m},
            {"simulated_ratio", cert.simulated_ratio},
            {"ratio_ok", cert.ratio_ok}};
}

json angle_json(const TorsionAngle& a) {
    if (a.is_zero_element) return {{"zero", true}};
    return {{"zero", false},
            {"q", rat_num(a.q).str() + "/" + rat_den(a.q).str()}};
}

struct DensityFlags {
    std::string spec_json;
    long p0 = 5;
    std::string rule = "const";
    long const_m = 1;
    double profile_a = 1;
    double profile_Hc = 0;

    void attach(CLI::App* sub) {
        sub->add_option("--spec", spec_json, "DensitySpec as a JSON object (overrides flags)");
        sub->add_option("--p0", p0, "smallest prime of the family");
        sub->add_option("--rule", rule, "threshold rule m_p")
            ->check(CLI::IsMember({"const", "identity", "exp_profile"}));
        sub->add_option("--const-m", const_m, "m_p for the const rule");
        sub->add_option("--profile-a", profile_a, "a in m_p = ceil(exp(H_p / a))");
        sub->add_option("--profile-H", profile_Hc, "constant H_p for the exp_profile rule");
    }

    DensitySpec build() const {
        if (!spec_json.empty()) return spec_from_json(json::parse(spec_json));
        DensitySpec spec;
        spec.p0 = p0;
        if (rule == "identity") {
            spec.rule = DensitySpec::Rule::identity;
        } else if (rule == "exp_profile") {
            spec.rule = DensitySpec::Rule::exp_profile;
            spec.profile_a = profile_a;
            spec.profile_H.kind = HeightProfile::Kind::constant;
            spec.profile_H.c = profile_Hc;
        } else {
            spec.rule = DensitySpec::Rule::constant;
            spec.const_m = const_m;
        }
        return spec;
    }

    json describe() const {
        if (!spec_json.empty()) return json::parse(spec_json);
        return {{"p0", p0}, {"rule", rule}, {"const_m", const_m}};
    }
};

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"sigma: heights, Mahler measures and density bounds on the adelic "
                 "structure of Q(X1..Xn)"};
    app.require_subcommand(1);
    std::deque<Common> commons;
    auto common = [&](CLI::App* sub) -> Common& {
        commons.emplace_back();
        commons.back().attach(sub);
        return commons.back();
    };

    // mahler
    auto* sc_mahler = app.add_subcommand(
        "mahler", "Mahler measure mu(f): the mean of log|f| over the unit torus");
    auto& c_mahler = common(sc_mahler);
    std::string mahler_expr;
    sc_mahler->add_option("expr", mahler_expr, "polynomial expression")->required();

    // height
    auto* sc_height = app.add_subcommand(
        "height", "projective height lambda*deg + integral of log max|x_i|");
    auto& c_height = common(sc_height);
    std::vector<std::string> height_coords;
    sc_height->add_option("coords", height_coords, "projective coordinates")
        ->required()
        ->expected(-1);

    // absval
    auto* sc_absval = app.add_subcommand(
        "absval", "absolute value |f| at a divisorial, p-adic or torus place");
    auto& c_absval = common(sc_absval);
    std::string absval_expr, absval_divisor, absval_prime;
    std::vector<double> absval_torus;
    bool absval_inf = false;
    sc_absval->add_option("expr", absval_expr, "rational function")->required();
    sc_absval->add_flag("--infinity", absval_inf, "the divisor at infinity");
    sc_absval->add_option("--divisor", absval_divisor,
                          "dehomogenized defining polynomial of a prime divisor");
    sc_absval->add_option("--prime", absval_prime, "rational prime p");
    sc_absval->add_option("--torus", absval_torus, "torus point t1,..,tn in [0,1)^n")
        ->delimiter(',');

    // pf-check
    auto* sc_pf = app.add_subcommand(
        "pf-check", "product formula: the sum of log|f| over all places must vanish");
    auto& c_pf = common(sc_pf);
    std::string pf_scalar = "1";
    std::vector<std::string> pf_factors;
    std::vector<long> pf_exps;
    sc_pf->add_option("--scalar", pf_scalar, "rational scalar of the factorization");
    sc_pf->add_option("--factor", pf_factors, "irreducible polynomial factor (repeatable)");
    sc_pf->add_option("--exp", pf_exps, "exponent per factor (default 1 each)");

    // torsion
    auto* sc_torsion = app.add_subcommand(
        "torsion", "height-zero test with a scaling witness into {0,+1,-1}");
    auto& c_torsion = common(sc_torsion);
    std::vector<std::string> torsion_coords;
    sc_torsion->add_option("coords", torsion_coords, "projective coordinates")
        ->required()
        ->expected(-1);

    // fermat-check
    auto* sc_fcheck = app.add_subcommand(
        "fermat-check", "membership of (x, y) in x^N + y^N = 1 and the torsion test");
    auto& c_fcheck = common(sc_fcheck);
    long fcheck_N = 1;
    std::vector<std::string> fcheck_xy;
    sc_fcheck->add_option("-N,--deg", fcheck_N, "curve exponent N")->check(CLI::PositiveNumber);
    sc_fcheck->add_option("coords", fcheck_xy, "affine coordinates x y")
        ->required()
        ->expected(2);

    // solutions
    auto* sc_sol = app.add_subcommand(
        "solutions", "solutions of e(N q1) + e(N q2) = 1 in the order-M torsion group");
    auto& c_sol = common(sc_sol);
    long sol_N = 1, sol_M = 1;
    sc_sol->add_option("-N,--deg", sol_N, "curve exponent N")->required();
    sc_sol->add_option("-M,--order", sol_M, "torsion group order M")->required();

    // bound
    auto* sc_bound = app.add_subcommand(
        "bound", "multiple bound m0 = ceil(exp(H/a)) plus the tight floor(H/a) + 1");
    auto& c_bound = common(sc_bound);
    double bound_H = 0, bound_a = 1;
    sc_bound->add_option("--height,-H", bound_H, "max height H over the point set")->required();
    sc_bound->add_option("-a,--inf", bound_a, "infimum a of positive heights")->required();

    // min-height
    auto* sc_minh = app.add_subcommand(
        "min-height", "least strictly positive height over a coefficient box");
    auto& c_minh = common(sc_minh);
    int minh_deg = 2, minh_dim = 1;
    long minh_coeff = 4, minh_cap = 50'000'000;
    sc_minh->add_option("--deg", minh_deg, "max coordinate degree");
    sc_minh->add_option("--coeff", minh_coeff, "max |coefficient|");
    sc_minh->add_option("--dim", minh_dim, "projective dimension");
    sc_minh->add_option("--cap", minh_cap, "tuple enumeration cap");

    // density
    auto* sc_density = app.add_subcommand(
        "density", "sieve count of [1, m] covered by the union of p Z_{>= m_p}");
    auto& c_density = common(sc_density);
    DensityFlags density_flags;
    density_flags.attach(sc_density);
    long long density_m = 100000;
    sc_density->add_option("-m,--limit", density_m, "sieve up to m")->required();

    // certificate
    auto* sc_cert = app.add_subcommand(
        "certificate", "epsilon-certificate: Euler product, Q, phi(Q), n0 and the 1 - 3 epsilon "
                       "density verification");
    auto& c_cert = common(sc_cert);
    DensityFlags cert_flags;
    cert_flags.attach(sc_cert);
    double cert_eps = 0.5;
    long long cert_cap = 10'000'000;
    sc_cert->add_option("--epsilon", cert_eps, "target epsilon in (0, 1)")->required();
    sc_cert->add_option("--cap", cert_cap, "largest m the verification will simulate");

    // pipeline
    auto* sc_pipe = app.add_subcommand(
        "pipeline", "height profile -> per-prime thresholds -> density + certificate");
    auto& c_pipe = common(sc_pipe);
    std::string pipe_kind = "const";
    double pipe_Hc = 0, pipe_a = 1, pipe_eps = 0.5;
    long long pipe_m = 100000;
    long pipe_p0 = 5;
    sc_pipe->add_option("--H-kind", pipe_kind, "height profile kind")
        ->check(CLI::IsMember({"const", "log_p"}));
    sc_pipe->add_option("--H-c", pipe_Hc, "constant H value for the const profile");
    sc_pipe->add_option("-a,--inf", pipe_a, "infimum a of positive heights")->required();
    sc_pipe->add_option("--epsilon", pipe_eps, "target epsilon in (0, 1)")->required();
    sc_pipe->add_option("-m,--limit", pipe_m, "density simulation size");
    sc_pipe->add_option("--p0", pipe_p0, "smallest prime of the family");

    // enum
    auto* sc_enum = app.add_subcommand(
        "enum", "integer polynomials with deg <= d and Mahler measure <= C");
    auto& c_enum = common(sc_enum);
    int enum_d = 1;
    double enum_C = 0;
    long enum_cap = 4'000'000;
    sc_enum->add_option("--deg", enum_d, "max degree")->required();
    sc_enum->add_option("-C,--bound", enum_C, "Mahler measure bound")->required();
    sc_enum->add_option("--cap", enum_cap, "enumeration box cap");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        for (auto& c : commons) c.merge_config();

        if (sc_mahler->parsed()) {
            Poly f = parse_poly(mahler_expr, c_mahler.n);
            MahlerEstimate est = mahler_measure(f, c_mahler.quad());
            std::vector<std::string> warnings;
            json result = estimate_json(est);
            if (!est.converged) {
                result["non_converged"] = true;
                warnings.push_back("evaluation budget exhausted before tolerance");
            }
            finish(out, c_mahler, "mahler", {{"expr", mahler_expr}}, result, warnings,
                   est.error_bound);
        } else if (sc_height->parsed()) {
            std::vector<RationalFunction> coords;
            for (const auto& s : height_coords) coords.push_back(parse_expr(s, c_height.n));
            ProjPoint pt = ProjPoint::canonicalize(coords);
            MahlerEstimate est = height(pt, c_height.params(), c_height.quad());
            std::vector<std::string> canonical;
            for (const Poly& c : pt.coords())
                canonical.push_back(format_expr(RationalFunction::from_poly(c)));
            std::vector<std::string> warnings;
            json result = estimate_json(est);
            result["degree"] = pt.max_degree();
            result["canonical"] = canonical;
            if (!est.converged) {
                result["non_converged"] = true;
                warnings.push_back("evaluation budget exhausted before tolerance");
            }
            finish(out, c_height, "height", {{"coords", height_coords}}, result, warnings,
                   est.error_bound);
        } else if (sc_absval->parsed()) {
            int picked = absval_inf + !absval_divisor.empty() + !absval_prime.empty() +
                         !absval_torus.empty();
            if (picked != 1)
                throw poly_error(
                    "choose exactly one of --infinity, --divisor, --prime, --torus");
            RationalFunction f = parse_expr(absval_expr, c_absval.n);
            Place place = PrimeDivisor::infinity(c_absval.n);
            json place_desc;
            if (absval_inf) {
                place_desc = {{"kind", "infinity"}};
            } else if (!absval_divisor.empty()) {
                place = PrimeDivisor::from_dehomogenized(
                    PrimitivePoly::split(parse_poly(absval_divisor, c_absval.n)).second);
                place_desc = {{"kind", "divisor"}, {"poly", absval_divisor}};
            } else if (!absval_prime.empty()) {
                Int p(absval_prime);
                if (!is_prime(p)) throw poly_error("--prime: " + absval_prime + " is not prime");
                place = p;
                place_desc = {{"kind", "prime"}, {"p", absval_prime}};
            } else {
                if (static_cast<int>(absval_torus.size()) != c_absval.n)
                    throw poly_error("--torus: expected n coordinates");
                place = TorusPlace{absval_torus};
                place_desc = {{"kind", "torus"}, {"t", absval_torus}};
            }
            double v = absolute_value(f, place, c_absval.params(), c_absval.quad());
            finish(out, c_absval, "absval", {{"expr", absval_expr}, {"place", place_desc}},
                   {{"value", v}, {"log_value", std::log(v)}});
        } else if (sc_pf->parsed()) {
            if (!pf_exps.empty() && pf_exps.size() != pf_factors.size())
                throw poly_error("--exp list must match --factor list");
            FactoredElement elem{parse_rat(pf_scalar), {}};
            for (std::size_t i = 0; i < pf_factors.size(); ++i) {
                long e = pf_exps.empty() ? 1 : pf_exps[i];
                auto [content, prim] = PrimitivePoly::split(parse_poly(pf_factors[i], c_pf.n));
                for (long k = 0; k < std::labs(e); ++k)
                    elem.scalar *= e > 0 ? content : 1 / content;
                elem.factors.emplace_back(prim, e);
            }
            MahlerEstimate est = product_formula_residual(elem, c_pf.params(), c_pf.quad());
            std::vector<std::string> warnings;
            json result = {{"residual", est.value},
                           {"error_bound", est.error_bound},
                           {"within_bound", std::fabs(est.value) <= est.error_bound + 1e-9},
                           {"evaluations", est.evaluations}};
            if (!est.converged) {
                result["non_converged"] = true;
                warnings.push_back("evaluation budget exhausted before tolerance");
            }
            finish(out, c_pf, "pf-check",
                   {{"scalar", pf_scalar}, {"factors", pf_factors}, {"exponents", pf_exps}},
                   result, warnings, est.error_bound);
        } else if (sc_torsion->parsed()) {
            std::vector<RationalFunction> coords;
            for (const auto& s : torsion_coords) coords.push_back(parse_expr(s, c_torsion.n));
            auto witness = torsion_witness(coords, c_torsion.params());
            json result = {{"height_zero", witness.has_value()}};
            if (witness) result["witness"] = format_expr(*witness);
            finish(out, c_torsion, "torsion", {{"coords", torsion_coords}}, result);
        } else if (sc_fcheck->parsed()) {
            auto check = fermat_check_point(parse_expr(fcheck_xy[0], c_fcheck.n),
                                            parse_expr(fcheck_xy[1], c_fcheck.n), fcheck_N);
            finish(out, c_fcheck, "fermat-check",
                   {{"N", fcheck_N}, {"x", fcheck_xy[0]}, {"y", fcheck_xy[1]}},
                   {{"on_curve", check.on_curve}, {"torsion", check.torsion_solution}});
        } else if (sc_sol->parsed()) {
            auto sols = roots_of_unity_solutions(sol_N, sol_M);
            json list = json::array();
            for (const auto& [a, b] : sols)
                list.push_back({{"q1", angle_json(a)}, {"q2", angle_json(b)}});
            finish(out, c_sol, "solutions", {{"N", sol_N}, {"M", sol_M}},
                   {{"count", sols.size()}, {"solutions", list}});
        } else if (sc_bound->parsed()) {
            MultipleBound b = multiple_bound({bound_H, bound_a});
            finish(out, c_bound, "bound", {{"H", bound_H}, {"a", bound_a}},
                   {{"m0", b.m0.str()}, {"m0_tight", b.m0_tight.str()}});
        } else if (sc_minh->parsed()) {
            MinHeightResult r = min_positive_height(c_minh.params(), minh_deg, minh_coeff,
                                                    minh_dim, minh_cap);
            std::vector<std::string> witness;
            for (const Poly& c : r.witness.coords())
                witness.push_back(format_expr(RationalFunction::from_poly(c)));
            finish(out, c_minh, "min-height",
                   {{"deg", minh_deg}, {"coeff", minh_coeff}, {"dim", minh_dim}},
                   {{"value", r.value},
                    {"error_bound", r.error_bound},
                    {"witness", witness},
                    {"tuples_examined", r.tuples_examined}},
                   {}, r.error_bound);
        } else if (sc_density->parsed()) {
            DensitySpec spec = density_flags.build();
            DensityCount d = density_simulate(spec, density_m);
            finish(out, c_density, "density",
                   {{"spec", density_flags.describe()}, {"m", density_m}},
                   {{"count", d.count}, {"ratio", d.ratio}});
        } else if (sc_cert->parsed()) {
            DensitySpec spec = cert_flags.build();
            DensityCertificate cert = density_certificate(spec, cert_eps, cert_cap);
            std::vector<std::string> warnings;
            if (!cert.verified_at_scale)
                warnings.push_back("m_threshold exceeds the simulation cap; "
                                   "density not verified at scale");
            finish(out, c_cert, "certificate",
                   {{"spec", cert_flags.describe()}, {"epsilon", cert_eps}},
                   certificate_json(cert), warnings);
        } else if (sc_pipe->parsed()) {
            HeightProfile H;
            if (pipe_kind == "log_p") H.kind = HeightProfile::Kind::log_p;
            else H.c = pipe_Hc;
            PipelineReport r = theorem_pipeline(H, pipe_a, pipe_eps, pipe_m, pipe_p0);
            std::vector<std::string> warnings;
            if (!r.certificate.verified_at_scale)
                warnings.push_back("m_threshold exceeds the simulation cap; "
                                   "density not verified at scale");
            finish(out, c_pipe, "pipeline",
                   {{"H_kind", pipe_kind}, {"H_c", pipe_Hc}, {"a", pipe_a},
                    {"epsilon", pipe_eps}, {"m", pipe_m}, {"p0", pipe_p0}},
                   {{"density", {{"count", r.density.count}, {"ratio", r.density.ratio}}},
                    {"certificate", certificate_json(r.certificate)}},
                   warnings);
        } else if (sc_enum->parsed()) {
            auto polys = northcott_enumerate(enum_d, enum_C, enum_cap);
            std::vector<std::string> listed;
            for (const Poly& p : polys)
                listed.push_back(format_expr(RationalFunction::from_poly(p)));
            finish(out, c_enum, "enum", {{"deg", enum_d}, {"C", enum_C}},
                   {{"count", polys.size()}, {"polynomials", listed}});
        }
    } catch (const poly_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace sigma
