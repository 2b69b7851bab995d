#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "contclose/json_io.hpp"
#include "contclose/parser.hpp"

using namespace contclose;
using nlohmann::json;

namespace {

constexpr int kExitMember = 0;
constexpr int kExitNotMember = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitUsage = 64;
constexpr int kExitNonMonomial = 65;
constexpr int kExitNonPrimary = 66;

struct CommonOpts {
    std::string ideal_text;
    std::string candidate_text;
    std::string vars_text;
    bool json_out = false;
};

std::vector<std::string> resolve_vars(const CommonOpts& opts) {
    if (!opts.vars_text.empty()) {
        std::vector<std::string> vars;
        std::string cur;
        for (char c : opts.vars_text) {
            if (c == ',') {
                if (!cur.empty()) vars.push_back(cur);
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                cur += c;
            }
        }
        if (!cur.empty()) vars.push_back(cur);
        if (vars.empty()) throw ParseError("empty --vars list", 0);
        return vars;
    }
    std::vector<std::string> vars = scan_variables({opts.ideal_text, opts.candidate_text});
    if (vars.empty()) throw ParseError("no variables found in input", 0);
    return vars;
}

// Each generator must be a single term; the coefficient is irrelevant for
// the monomial ideal it spans.
MonomialIdeal monomial_ideal_from_polys(const std::vector<Polynomial>& gens, std::size_t m) {
    std::vector<ExponentVector> exps;
    for (const auto& g : gens) {
        if (!g.is_monomial()) throw std::domain_error("non-monomial generator");
        exps.push_back(g.terms().begin()->first);
    }
    return MonomialIdeal(m, std::move(exps));
}

std::string monomial_text(const ExponentVector& e, const std::vector<std::string>& vars) {
    return Polynomial::monomial(e).to_string(vars);
}

void emit(const json& doc, bool json_out, const std::string& human) {
    if (json_out)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << human;
}

int run_closure(const CommonOpts& opts) {
    std::vector<std::string> vars = resolve_vars(opts);
    std::vector<Polynomial> gens = parse_polynomial_list(opts.ideal_text, vars);
    MonomialIdeal ideal = monomial_ideal_from_polys(gens, vars.size());
    if (!ideal.is_primary()) {
        std::cerr << "error: ideal is not primary (needs a pure power of every variable)\n";
        return kExitNonPrimary;
    }
    MonomialIdeal closed = closure_generators(ideal);
    NewtonPolyhedron p = NewtonPolyhedron::build(ideal);
    std::vector<std::pair<ExponentVector, PointLocation>> new_gens;
    for (const auto& g : closed.generators())
        if (!ideal.contains(g)) new_gens.emplace_back(g, locate(p, ideal, g));

    json doc = jsonio::closure_document(ideal, closed, vars, new_gens);
    std::string human = "closure generators:";
    for (const auto& g : closed.generators()) human += " " + monomial_text(g, vars);
    human += "\n";
    for (const auto& [g, loc] : new_gens)
        human += "  new generator " + monomial_text(g, vars) +
                 " (interior, eps = " + to_string(loc.epsilon) + ")\n";
    emit(doc, opts.json_out, human);
    return kExitMember;
}

ClosureKind parse_kind(const std::string& s) {
    if (s == "integral") return ClosureKind::Integral;
    if (s == "ax" || s == "axes") return ClosureKind::Axes;
    if (s == "cont" || s == "continuous") return ClosureKind::Continuous;
    throw ParseError("unknown --kind '" + s + "' (expected cont|ax|integral)", 0);
}

int exit_code_for(Verdict::Result r) {
    switch (r) {
        case Verdict::Result::Member: return kExitMember;
        case Verdict::Result::NotMember: return kExitNotMember;
        case Verdict::Result::Undecided: return kExitUndecided;
    }
    return kExitUsage;
}

std::string describe_certificate(const Verdict& v, const std::vector<std::string>& vars) {
    std::string s;
    if (const auto* a = std::get_if<Verdict::AlreadyInIdeal>(&v.certificate)) {
        s = "certificate: dominates generator " + monomial_text(a->dominated_generator, vars);
    } else if (const auto* iw = std::get_if<Verdict::InteriorWitness>(&v.certificate)) {
        s = iw->location.tag == PointLocation::Tag::Interior
                ? "certificate: interior of the Newton polyhedron, eps = " +
                      to_string(iw->location.epsilon)
                : "certificate: Newton polyhedron membership (boundary)";
        if (iw->power)
            s += "; power witness n = " + std::to_string(iw->power->n) +
                 ", theta = " + std::to_string(iw->power->theta);
    } else if (const auto* be = std::get_if<Verdict::BoundaryExclusion>(&v.certificate)) {
        s = "certificate: boundary exclusion, normal (";
        for (std::size_t j = 0; j < be->normal.normal.size(); ++j)
            s += (j ? "," : "") + be->normal.normal[j].str();
        s += "), degree " + be->normal.degree.str() + ", fill of " +
             std::to_string(be->fill.size()) + " monomials, span solve excluded";
    } else if (std::get_if<Verdict::OutsideHull>(&v.certificate)) {
        s = "certificate: outside the Newton polyhedron (separating facet recorded)";
    } else if (const auto* sc = std::get_if<Verdict::SpanCoefficients>(&v.certificate)) {
        s = "certificate: span coefficients (";
        for (std::size_t i = 0; i < sc->coefficients.size(); ++i)
            s += (i ? ", " : "") + to_string(sc->coefficients[i]);
        s += ")";
    } else if (const auto* nc = std::get_if<Verdict::NoCertificate>(&v.certificate)) {
        s = "no certificate: " + nc->reason;
    }
    return s + "\n";
}

int run_member(const CommonOpts& opts, const std::string& kind_text, std::int64_t n_max) {
    std::vector<std::string> vars = resolve_vars(opts);
    ClosureKind kind = parse_kind(kind_text);
    std::vector<Polynomial> gens = parse_polynomial_list(opts.ideal_text, vars);
    Polynomial candidate = parse_polynomial(opts.candidate_text, vars);
    if (candidate.is_zero()) {
        std::cerr << "error: zero candidate\n";
        return kExitUsage;
    }

    bool all_monomial = candidate.is_monomial();
    for (const auto& g : gens) all_monomial = all_monomial && g.is_monomial();

    if (all_monomial) {
        MonomialIdeal ideal = monomial_ideal_from_polys(gens, vars.size());
        ExponentVector tau = candidate.terms().begin()->first;
        Verdict v;
        try {
            v = monomial_membership(ideal, tau, kind, n_max);
        } catch (const NonPrimaryError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitNonPrimary;
        }
        json doc = jsonio::member_document(ideal, tau, kind, vars, v);
        std::string human = "verdict: ";
        human += doc.at("verdict").at("result").get<std::string>();
        human += " (kind: " + to_string(kind) + ", candidate " + monomial_text(tau, vars) + ")\n";
        human += describe_certificate(v, vars);
        emit(doc, opts.json_out, human);
        return exit_code_for(v.result);
    }

    // Polynomial route: the equal-degree test decides ax (and hence cont)
    // when everything is homogeneous of one degree.
    bool homogeneous = candidate.is_homogeneous();
    for (const auto& g : gens)
        homogeneous = homogeneous && !g.is_zero() && g.is_homogeneous() &&
                      g.total_degree() == candidate.total_degree();
    if (!homogeneous) {
        std::cerr << "error: non-monomial inputs are decided only in the equal-degree case "
                     "(all generators and the candidate homogeneous of one degree); "
                     "use 'verify' for power representations\n";
        return kExitUsage;
    }
    std::int64_t d = candidate.total_degree().value();
    EqualDegreeResult r = equal_degree_membership(candidate, gens, d);
    Verdict v;
    v.kind = kind;
    if (r.member) {
        v.result = Verdict::Result::Member;
        v.certificate = Verdict::SpanCoefficients{r.coefficients};
    } else if (kind == ClosureKind::Integral) {
        v.result = Verdict::Result::Undecided;
        v.certificate = Verdict::NoCertificate{
            "equal-degree span test decides axes/continuous kinds only"};
    } else {
        v.result = Verdict::Result::NotMember;
        v.certificate = Verdict::NoCertificate{"excluded by the equal-degree span test"};
    }
    json doc = jsonio::equal_degree_document(candidate, gens, kind, vars, v, r);
    std::string human = "verdict: " + doc.at("verdict").at("result").get<std::string>() +
                        " (kind: " + to_string(kind) + ", equal-degree route, d = " +
                        std::to_string(d) + ")\n" + describe_certificate(v, vars);
    emit(doc, opts.json_out, human);
    return exit_code_for(v.result);
}

int run_verify(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return kExitUsage;
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return kExitUsage;
    }
    jsonio::VerifyOutcome outcome = jsonio::verify_document(doc);
    for (const auto& step : outcome.steps)
        std::cout << (step.pass ? "[pass] " : "[FAIL] ") << step.name
                  << (step.detail.empty() ? "" : ": " + step.detail) << "\n";
    std::cout << (outcome.pass ? "verification passed\n" : "verification FAILED\n");
    return outcome.pass ? kExitMember : kExitNotMember;
}

int run_witness(const CommonOpts& opts, const std::string& construction, std::size_t samples,
                std::uint64_t seed, std::size_t sphere_points, int sphere_levels,
                const std::string& csv_path) {
    std::vector<std::string> vars = resolve_vars(opts);
    SampleSpec spec;
    spec.count = samples;
    spec.seed = seed;
    spec.sphere_points = sphere_points;
    spec.sphere_levels = sphere_levels;

    std::vector<Polynomial> gens = parse_polynomial_list(opts.ideal_text, vars);
    Polynomial candidate = parse_polynomial(opts.candidate_text, vars);

    WitnessReport rep;
    json input;
    input["construction"] = construction;
    input["samples"] = spec.count;
    input["seed"] = spec.seed;
    input["vars"] = vars;

    if (construction == "homogeneous") {
        input["sphere_points"] = spec.sphere_points;
        input["sphere_levels"] = spec.sphere_levels;
        json gj = json::array();
        for (const auto& g : gens) gj.push_back(jsonio::polynomial_to_json(g));
        input["ideal"] = gj;
        input["candidate"] = jsonio::polynomial_to_json(candidate);
        rep = homogeneous_witness(candidate, gens, spec);
    } else if (construction == "psi") {
        // Requires I = (z^e, w^e) and candidate z^r w^s.
        if (vars.size() != 2 || gens.size() != 2 || !gens[0].is_monomial() ||
            !gens[1].is_monomial() || !candidate.is_monomial())
            throw std::domain_error(
                "psi construction needs ideal (z^e, w^e) and a monomial candidate z^r*w^s");
        ExponentVector g0 = gens[0].terms().begin()->first;
        ExponentVector g1 = gens[1].terms().begin()->first;
        if (g0[1] != 0 || g1[0] != 0 || g0[0] != g1[1])
            throw std::domain_error("psi construction needs ideal (z^e, w^e) with equal exponents");
        std::int64_t e = g0[0];
        ExponentVector tau = candidate.terms().begin()->first;
        input["e"] = e;
        input["r"] = tau[0];
        input["s"] = tau[1];
        rep = psi_witness(e, tau[0], tau[1], spec);
    } else if (construction == "phi-probe") {
        json gj = json::array();
        for (const auto& g : gens) gj.push_back(jsonio::polynomial_to_json(g));
        input["ideal"] = gj;
        input["candidate"] = jsonio::polynomial_to_json(candidate);
        // Default probe paths: each coordinate axis, then the diagonal.
        std::vector<ProbePath> paths;
        const std::vector<std::string> tvar = {"t"};
        for (std::size_t j = 0; j < vars.size(); ++j) {
            ProbePath path;
            path.label = "axis " + vars[j];
            for (std::size_t i = 0; i < vars.size(); ++i)
                path.coords.push_back(parse_polynomial(i == j ? "t" : "0", tvar));
            paths.push_back(std::move(path));
        }
        ProbePath diag;
        diag.label = "diagonal";
        for (std::size_t i = 0; i < vars.size(); ++i)
            diag.coords.push_back(parse_polynomial("t", tvar));
        paths.push_back(std::move(diag));
        json pj = json::array();
        for (const auto& p : paths) {
            json cj = json::array();
            for (const auto& c : p.coords) cj.push_back(jsonio::polynomial_to_json(c));
            pj.push_back({{"label", p.label}, {"coords", cj}});
        }
        input["paths"] = pj;
        rep = phi_probe(candidate, gens, paths, spec);
    } else {
        std::cerr << "error: unknown --construction '" << construction
                  << "' (expected homogeneous|psi|phi-probe)\n";
        return kExitUsage;
    }

    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        csv << "sample,residual\n";
        for (std::size_t i = 0; i < rep.residuals.size(); ++i)
            csv << i << "," << rep.residuals[i] << "\n";
    }

    json doc = jsonio::witness_document(input, rep);
    std::string human = "witness report (" + rep.construction + ", seed " +
                        std::to_string(rep.seed) + ")\n";
    human += "  samples: " + std::to_string(rep.sample_count) +
             ", max residual: " + std::to_string(rep.max_residual) + "\n";
    if (!rep.sphere_sups.empty()) {
        human += "  sphere sup ratios:";
        for (double r : rep.sup_ratios) human += " " + std::to_string(r);
        human += rep.decay_consistent ? "  (decay consistent)\n" : "  (decay INCONSISTENT)\n";
    }
    for (const auto& probe : rep.probes) {
        human += "  phi_" + std::to_string(probe.phi_index + 1) + ": ";
        if (probe.consistent) {
            human += "consistent limit " + std::to_string(probe.limit.real());
            if (probe.limit.imag() != 0) human += " + " + std::to_string(probe.limit.imag()) + "i";
        } else {
            human += "NO LIMIT (paths " + std::to_string(probe.witness_paths.first) + " and " +
                     std::to_string(probe.witness_paths.second) + " disagree)";
        }
        human += "\n";
    }
    if (rep.construction == "psi")
        human += "  alternative cutoff max residual: " +
                 std::to_string(rep.alt_cutoff_max_residual) + "\n";
    emit(doc, opts.json_out, human);
    return kExitMember;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact continuous/axes closure computations for monomial ideals"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string kind_text = "cont";
    std::int64_t n_max = 64;
    std::string construction = "homogeneous";
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
    std::size_t sphere_points = 10000;
    int sphere_levels = 9;
    std::string certificate_path;
    std::string csv_path;

    CLI::App* closure = app.add_subcommand("closure", "minimal generators of I^cont = I^ax");
    closure->add_option("--ideal", opts.ideal_text, "comma-separated monomial generators")
        ->required();
    closure->add_option("--vars", opts.vars_text, "comma-separated variable names");
    closure->add_flag("--json", opts.json_out, "emit the JSON document");

    CLI::App* member = app.add_subcommand("member", "closure membership verdict with certificate");
    member->add_option("--ideal", opts.ideal_text, "comma-separated generators")->required();
    member->add_option("--candidate", opts.candidate_text, "candidate polynomial")->required();
    member->add_option("--kind", kind_text, "cont | ax | integral (default cont)");
    member->add_option("--n-max", n_max, "bound for the power witness search");
    member->add_option("--vars", opts.vars_text, "comma-separated variable names");
    member->add_flag("--json", opts.json_out, "emit the JSON document");

    CLI::App* verify = app.add_subcommand("verify", "replay a certificate document");
    verify->add_option("--certificate", certificate_path, "JSON file from this tool")->required();

    CLI::App* witness = app.add_subcommand("witness", "numeric continuous-solution reports");
    witness->add_option("--ideal", opts.ideal_text, "comma-separated generators")->required();
    witness->add_option("--candidate", opts.candidate_text, "candidate polynomial")->required();
    witness->add_option("--construction", construction, "homogeneous | psi | phi-probe");
    witness->add_option("--samples", samples, "number of residual samples");
    witness->add_option("--seed", seed, "RNG seed (echoed in the report)");
    witness->add_option("--sphere-points", sphere_points, "points per sup-norm sphere");
    witness->add_option("--sphere-levels", sphere_levels, "number of shrinking spheres");
    witness->add_option("--csv", csv_path, "dump per-sample residuals to a CSV file");
    witness->add_option("--vars", opts.vars_text, "comma-separated variable names");
    witness->add_flag("--json", opts.json_out, "emit the JSON document");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (closure->parsed()) return run_closure(opts);
        if (member->parsed()) return run_member(opts, kind_text, n_max);
        if (verify->parsed()) return run_verify(certificate_path);
        if (witness->parsed())
            return run_witness(opts, construction, samples, seed, sphere_points, sphere_levels,
                               csv_path);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonMonomial;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
