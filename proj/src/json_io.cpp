#include "contclose/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace contclose::jsonio {

namespace {

ClosureKind kind_from_string(const std::string& s) {
    if (s == "integral") return ClosureKind::Integral;
    if (s == "ax" || s == "axes") return ClosureKind::Axes;
    if (s == "cont" || s == "continuous") return ClosureKind::Continuous;
    throw std::invalid_argument("unknown closure kind '" + s + "'");
}

json qvec_to_json(const QVec& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(rational_to_json(q));
    return a;
}

QVec qvec_from_json(const json& j) {
    QVec v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

json integers_to_json(const std::vector<Integer>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

std::vector<Integer> integers_from_json(const json& j) {
    std::vector<Integer> v;
    for (const auto& x : j) v.emplace_back(x.get<std::string>());
    return v;
}

}  // namespace

json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

json exponents_to_json(const ExponentVector& e) {
    json a = json::array();
    for (std::size_t i = 0; i < e.size(); ++i) a.push_back(e[i]);
    return a;
}

ExponentVector exponents_from_json(const json& j) {
    std::vector<std::int64_t> v;
    for (const auto& x : j) v.push_back(x.get<std::int64_t>());
    return ExponentVector(std::move(v));
}

json polynomial_to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"exponents", exponents_to_json(e)}, {"coefficient", rational_to_json(c)}});
    return {{"num_vars", p.num_vars()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const json& j) {
    Polynomial p(j.at("num_vars").get<std::size_t>());
    for (const auto& t : j.at("terms"))
        p.add_term(exponents_from_json(t.at("exponents")), rational_from_json(t.at("coefficient")));
    return p;
}

json ideal_to_json(const MonomialIdeal& ideal) {
    json gens = json::array();
    for (const auto& g : ideal.generators()) gens.push_back(exponents_to_json(g));
    return {{"num_vars", ideal.num_vars()}, {"generators", gens}};
}

MonomialIdeal ideal_from_json(const json& j) {
    std::vector<ExponentVector> gens;
    for (const auto& g : j.at("generators")) gens.push_back(exponents_from_json(g));
    return MonomialIdeal(j.at("num_vars").get<std::size_t>(), std::move(gens));
}

json facet_to_json(const Facet& f) {
    return {{"normal", integers_to_json(f.normal)}, {"offset", f.offset.str()}};
}

Facet facet_from_json(const json& j) {
    Facet f;
    f.normal = integers_from_json(j.at("normal"));
    f.offset = Integer(j.at("offset").get<std::string>());
    return f;
}

json location_to_json(const PointLocation& loc) {
    json j;
    switch (loc.tag) {
        case PointLocation::Tag::InIdeal: j["tag"] = "in_ideal"; break;
        case PointLocation::Tag::Outside: j["tag"] = "outside"; break;
        case PointLocation::Tag::Boundary: j["tag"] = "boundary"; break;
        case PointLocation::Tag::Interior: j["tag"] = "interior"; break;
    }
    if (!loc.tight_facets.empty()) j["tight_facets"] = loc.tight_facets;
    if (loc.violated_facet) j["violated_facet"] = *loc.violated_facet;
    if (loc.tag == PointLocation::Tag::Boundary || loc.tag == PointLocation::Tag::Interior) {
        j["epsilon"] = rational_to_json(loc.epsilon);
        j["lambda"] = qvec_to_json(loc.lambda);
        j["mu"] = qvec_to_json(loc.mu);
    }
    return j;
}

PointLocation location_from_json(const json& j) {
    PointLocation loc;
    std::string tag = j.at("tag").get<std::string>();
    if (tag == "in_ideal") loc.tag = PointLocation::Tag::InIdeal;
    else if (tag == "outside") loc.tag = PointLocation::Tag::Outside;
    else if (tag == "boundary") loc.tag = PointLocation::Tag::Boundary;
    else if (tag == "interior") loc.tag = PointLocation::Tag::Interior;
    else throw std::invalid_argument("unknown location tag");
    if (j.contains("tight_facets"))
        loc.tight_facets = j.at("tight_facets").get<std::vector<std::size_t>>();
    if (j.contains("violated_facet")) loc.violated_facet = j.at("violated_facet").get<std::size_t>();
    if (j.contains("epsilon")) {
        loc.epsilon = rational_from_json(j.at("epsilon"));
        loc.lambda = qvec_from_json(j.at("lambda"));
        loc.mu = qvec_from_json(j.at("mu"));
    }
    return loc;
}

json power_witness_to_json(const PowerWitness& w) {
    return {{"n", w.n}, {"theta", w.theta}, {"alpha", w.alpha}};
}

PowerWitness power_witness_from_json(const json& j) {
    PowerWitness w;
    w.n = j.at("n").get<std::int64_t>();
    w.theta = j.at("theta").get<std::int64_t>();
    w.alpha = j.at("alpha").get<std::vector<std::int64_t>>();
    return w;
}

json equal_degree_to_json(const EqualDegreeResult& r) {
    json basis = json::array();
    for (const auto& b : r.basis) basis.push_back(exponents_to_json(b));
    json points = json::array();
    for (const auto& p : r.points.points) points.push_back(qvec_to_json(p));
    json j = {{"member", r.member},
              {"axes_path_member", r.axes_path_member},
              {"basis", basis},
              {"evaluation_points",
               {{"degree", r.points.degree},
                {"dimension", r.points.dimension},
                {"points", points},
                {"verified_rank", r.points.verified_rank}}}};
    if (r.member) j["coefficients"] = qvec_to_json(r.coefficients);
    else j["infeasibility_witness"] = qvec_to_json(r.infeasibility_witness);
    return j;
}

json verdict_to_json(const Verdict& v) {
    json j;
    j["kind"] = to_string(v.kind);
    switch (v.result) {
        case Verdict::Result::Member: j["result"] = "Member"; break;
        case Verdict::Result::NotMember: j["result"] = "NotMember"; break;
        case Verdict::Result::Undecided: j["result"] = "Undecided"; break;
    }
    json c;
    if (const auto* a = std::get_if<Verdict::AlreadyInIdeal>(&v.certificate)) {
        c["type"] = "already_in_ideal";
        c["dominated_generator"] = exponents_to_json(a->dominated_generator);
    } else if (const auto* iw = std::get_if<Verdict::InteriorWitness>(&v.certificate)) {
        c["type"] = "interior_witness";
        c["location"] = location_to_json(iw->location);
        if (iw->power) c["power_witness"] = power_witness_to_json(*iw->power);
    } else if (const auto* be = std::get_if<Verdict::BoundaryExclusion>(&v.certificate)) {
        c["type"] = "boundary_exclusion";
        c["normal"] = integers_to_json(be->normal.normal);
        c["degree"] = be->normal.degree.str();
        c["substitution"] = be->substitution;
        c["substituted_tau"] = exponents_to_json(be->substituted_tau);
        json fill = json::array();
        for (const auto& f : be->fill) fill.push_back(exponents_to_json(f));
        c["fill"] = fill;
        c["transcript"] = equal_degree_to_json(be->transcript);
    } else if (const auto* oh = std::get_if<Verdict::OutsideHull>(&v.certificate)) {
        c["type"] = "outside_hull";
        c["separating_facet"] = facet_to_json(oh->separating_facet);
    } else if (const auto* sc = std::get_if<Verdict::SpanCoefficients>(&v.certificate)) {
        c["type"] = "span_coefficients";
        c["coefficients"] = qvec_to_json(sc->coefficients);
    } else if (const auto* nc = std::get_if<Verdict::NoCertificate>(&v.certificate)) {
        c["type"] = "no_certificate";
        c["reason"] = nc->reason;
    }
    j["certificate"] = c;
    return j;
}

json witness_report_to_json(const WitnessReport& rep) {
    json j = {{"construction", rep.construction},
              {"seed", rep.seed},
              {"sample_count", rep.sample_count},
              {"max_residual", rep.max_residual},
              {"max_abs_f", rep.max_abs_f}};
    if (!rep.sphere_sups.empty()) {
        json sups = json::array();
        for (const auto& s : rep.sphere_sups) sups.push_back({{"radius", s.radius}, {"sup", s.sup}});
        j["sphere_sups"] = sups;
        j["sup_ratios"] = rep.sup_ratios;
        j["expected_ratio"] = rep.expected_ratio;
        j["decay_consistent"] = rep.decay_consistent;
    }
    if (!rep.probes.empty()) {
        json probes = json::array();
        for (const auto& p : rep.probes) {
            json pj = {{"phi_index", p.phi_index}, {"consistent", p.consistent}};
            json limits = json::array();
            for (const auto& l : p.path_limits) limits.push_back({l.real(), l.imag()});
            pj["path_limits"] = limits;
            pj["path_converged"] = p.path_converged;
            if (p.consistent) pj["limit"] = {p.limit.real(), p.limit.imag()};
            else pj["witness_paths"] = {p.witness_paths.first, p.witness_paths.second};
            probes.push_back(pj);
        }
        j["probes"] = probes;
    }
    if (rep.construction == "psi") j["alt_cutoff_max_residual"] = rep.alt_cutoff_max_residual;
    return j;
}

json power_representation_to_json(const PowerRepresentation& rep) {
    json gens = json::array();
    for (const auto& g : rep.gens) gens.push_back(polynomial_to_json(g));
    json coeffs = json::array();
    for (const auto& [alpha, c] : rep.coefficients)
        coeffs.push_back({{"alpha", alpha}, {"coefficient", polynomial_to_json(c)}});
    return {{"f", polynomial_to_json(rep.f)},
            {"gens", gens},
            {"n", rep.n},
            {"theta", rep.theta},
            {"coefficients", coeffs}};
}

PowerRepresentation power_representation_from_json(const json& j) {
    PowerRepresentation rep;
    rep.f = polynomial_from_json(j.at("f"));
    for (const auto& g : j.at("gens")) rep.gens.push_back(polynomial_from_json(g));
    rep.n = j.at("n").get<std::int64_t>();
    rep.theta = j.at("theta").get<std::int64_t>();
    for (const auto& c : j.at("coefficients"))
        rep.coefficients.emplace_back(c.at("alpha").get<std::vector<std::int64_t>>(),
                                      polynomial_from_json(c.at("coefficient")));
    return rep;
}

json member_document(const MonomialIdeal& ideal, const ExponentVector& tau, ClosureKind kind,
                     const std::vector<std::string>& vars, const Verdict& verdict) {
    json v = verdict_to_json(verdict);
    json doc;
    doc["command"] = "member";
    doc["input"] = {{"ideal", ideal_to_json(ideal)},
                    {"candidate", exponents_to_json(tau)},
                    {"kind", to_string(kind)},
                    {"vars", vars}};
    doc["verdict"] = {{"kind", v.at("kind")}, {"result", v.at("result")}};
    doc["certificate"] = v.at("certificate");
    doc["version"] = kEngineVersion;
    return doc;
}

json equal_degree_document(const Polynomial& candidate, const std::vector<Polynomial>& gens,
                           ClosureKind kind, const std::vector<std::string>& vars,
                           const Verdict& verdict, const EqualDegreeResult& result) {
    json gj = json::array();
    for (const auto& g : gens) gj.push_back(polynomial_to_json(g));
    json v = verdict_to_json(verdict);
    json doc;
    doc["command"] = "member";
    doc["input"] = {{"equal_degree_ideal", gj},
                    {"candidate_polynomial", polynomial_to_json(candidate)},
                    {"kind", to_string(kind)},
                    {"vars", vars}};
    doc["verdict"] = {{"kind", v.at("kind")}, {"result", v.at("result")}};
    doc["certificate"] = v.at("certificate");
    doc["transcript"] = equal_degree_to_json(result);
    doc["version"] = kEngineVersion;
    return doc;
}

json closure_document(const MonomialIdeal& ideal, const MonomialIdeal& closed,
                      const std::vector<std::string>& vars,
                      const std::vector<std::pair<ExponentVector, PointLocation>>& new_gens) {
    json gens = json::array();
    for (const auto& g : closed.generators()) gens.push_back(exponents_to_json(g));
    json cert_gens = json::array();
    for (const auto& [tau, loc] : new_gens)
        cert_gens.push_back(
            {{"tau", exponents_to_json(tau)}, {"location", location_to_json(loc)}});
    json doc;
    doc["command"] = "closure";
    doc["input"] = {{"ideal", ideal_to_json(ideal)}, {"vars", vars}};
    doc["generators"] = gens;
    doc["certificate"] = {{"type", "closure_enumeration"}, {"new_generators", cert_gens}};
    doc["version"] = kEngineVersion;
    return doc;
}

json witness_document(const json& input_echo, const WitnessReport& report) {
    json doc;
    doc["command"] = "witness";
    doc["input"] = input_echo;
    doc["report"] = witness_report_to_json(report);
    doc["version"] = kEngineVersion;
    return doc;
}

namespace {

// ---- replay ---------------------------------------------------------------

void replay_hull_decomposition(VerifyOutcome& out, const MonomialIdeal& ideal,
                               const ExponentVector& tau, const PointLocation& loc,
                               bool require_interior) {
    bool ok = loc.lambda.size() == ideal.generators().size() && loc.mu.size() == tau.size();
    Rational lsum = 0;
    for (const auto& l : loc.lambda) {
        ok = ok && l >= 0;
        lsum += l;
    }
    ok = ok && lsum == 1;
    for (const auto& m : loc.mu) ok = ok && m >= 0;
    if (ok) {
        for (std::size_t j = 0; j < tau.size(); ++j) {
            Rational coord = loc.epsilon + loc.mu[j];
            for (std::size_t i = 0; i < loc.lambda.size(); ++i)
                coord += loc.lambda[i] * Rational(ideal.generators()[i][j]);
            ok = ok && coord == Rational(tau[j]);
        }
    }
    out.add("hull-decomposition", ok,
            "tau = sum lambda_i gamma_i + mu + eps*1 with lambda >= 0, sum lambda = 1, mu >= 0");
    if (require_interior)
        out.add("interior-epsilon", loc.epsilon > 0, "eps = " + to_string(loc.epsilon));
    else
        out.add("epsilon-nonnegative", loc.epsilon >= 0, "eps = " + to_string(loc.epsilon));
}

void replay_member_certificate(VerifyOutcome& out, const MonomialIdeal& ideal,
                               const ExponentVector& tau, ClosureKind kind,
                               const std::string& claimed_result, const json& cert) {
    const std::string type = cert.at("type").get<std::string>();

    if (type == "already_in_ideal") {
        ExponentVector g = exponents_from_json(cert.at("dominated_generator"));
        bool is_gen = false;
        for (const auto& h : ideal.generators()) is_gen = is_gen || h == g;
        out.add("generator-listed", is_gen);
        out.add("dominates-generator", tau.dominates(g));
        out.add("result-consistent", claimed_result == "Member");
        return;
    }

    if (type == "interior_witness") {
        PointLocation loc = location_from_json(cert.at("location"));
        // Hull membership only proves the integral kind; axes/continuous
        // member verdicts need strict interiority (eps > 0).
        bool need_interior = kind != ClosureKind::Integral;
        replay_hull_decomposition(out, ideal, tau, loc, need_interior);
        if (need_interior)
            out.add("location-tag-interior", loc.tag == PointLocation::Tag::Interior);
        if (cert.contains("power_witness")) {
            PowerWitness w = power_witness_from_json(cert.at("power_witness"));
            out.add("power-witness", check_power_witness(ideal, tau, w),
                    "x^{n tau} in I^theta with n < theta, by exponent arithmetic");
        }
        out.add("result-consistent", claimed_result == "Member");
        return;
    }

    if (type == "outside_hull") {
        Facet f = facet_from_json(cert.at("separating_facet"));
        bool valid = f.normal.size() == tau.size();
        if (valid)
            for (const auto& a : f.normal) valid = valid && a >= 0;
        if (valid)
            for (const auto& g : ideal.generators()) valid = valid && f.evaluate(g) >= 0;
        out.add("facet-valid-on-generators", valid);
        out.add("facet-violated-at-tau", valid && f.evaluate(tau) < 0);
        out.add("result-consistent", claimed_result == "NotMember");
        return;
    }

    if (type == "boundary_exclusion") {
        std::vector<Integer> normal = integers_from_json(cert.at("normal"));
        Integer degree(cert.at("degree").get<std::string>());
        bool normal_ok = normal.size() == tau.size();
        if (normal_ok) {
            Integer at_tau = 0;
            for (std::size_t j = 0; j < tau.size(); ++j) {
                normal_ok = normal_ok && normal[j] > 0;
                at_tau += normal[j] * tau[j];
            }
            normal_ok = normal_ok && at_tau == degree;
            for (const auto& g : ideal.generators()) {
                Integer v = 0;
                for (std::size_t j = 0; j < tau.size(); ++j) v += normal[j] * g[j];
                normal_ok = normal_ok && v >= degree;
            }
        }
        out.add("supporting-normal", normal_ok,
                "a > 0 with a.gamma >= d on generators and a.tau = d");
        if (!normal_ok) return;

        std::vector<std::int64_t> delta = cert.at("substitution").get<std::vector<std::int64_t>>();
        bool delta_ok = delta.size() == tau.size();
        for (std::size_t j = 0; delta_ok && j < delta.size(); ++j)
            delta_ok = Integer(delta[j]) == normal[j];
        ExponentVector tau_sub = exponents_from_json(cert.at("substituted_tau"));
        delta_ok = delta_ok && tau_sub == tau.scaled(delta);
        out.add("substitution", delta_ok, "delta = a and tau' = delta applied to tau");
        if (!delta_ok) return;

        const std::int64_t d = degree.convert_to<std::int64_t>();
        std::vector<ExponentVector> fill;
        for (const auto& f : cert.at("fill")) fill.push_back(exponents_from_json(f));
        std::vector<ExponentVector> expected_fill;
        for (const auto& mono : monomials_of_degree(tau.size(), d))
            if (mono != tau_sub) expected_fill.push_back(mono);
        out.add("fill-set", fill == expected_fill,
                "all degree-d monomials except the substituted candidate");

        bool covered = true;
        for (const auto& g : ideal.generators()) {
            ExponentVector gs = g.scaled(delta);
            bool hit = false;
            for (const auto& mono : fill) hit = hit || gs.dominates(mono);
            covered = covered && hit;
        }
        out.add("substituted-ideal-covered", covered,
                "every substituted generator is a multiple of a fill monomial");

        const json& tr = cert.at("transcript");
        bool witness_ok = tr.contains("infeasibility_witness") && !tr.at("member").get<bool>();
        if (witness_ok) {
            QVec y = qvec_from_json(tr.at("infeasibility_witness"));
            std::vector<ExponentVector> basis;
            for (const auto& b : tr.at("basis")) basis.push_back(exponents_from_json(b));
            witness_ok = y.size() == basis.size();
            for (const auto& mono : fill) {
                Rational s = 0;
                for (std::size_t i = 0; witness_ok && i < basis.size(); ++i)
                    if (basis[i] == mono) s += y[i];
                witness_ok = witness_ok && s == 0;
            }
            Rational sf = 0;
            for (std::size_t i = 0; witness_ok && i < basis.size(); ++i)
                if (basis[i] == tau_sub) sf += y[i];
            witness_ok = witness_ok && sf != 0;
        }
        out.add("span-infeasibility-witness", witness_ok,
                "y kills every fill monomial and hits the candidate");

        std::vector<Polynomial> fill_polys;
        for (const auto& mono : fill) fill_polys.push_back(Polynomial::monomial(mono));
        EqualDegreeResult replay =
            equal_degree_membership(Polynomial::monomial(tau_sub), fill_polys, d);
        out.add("equal-degree-replay", !replay.member,
                "span solve and axes homomorphism both exclude");
        out.add("result-consistent",
                claimed_result == "NotMember" &&
                    (kind == ClosureKind::Axes || kind == ClosureKind::Continuous));
        return;
    }

    if (type == "no_certificate") {
        out.add("result-consistent", claimed_result == "Undecided",
                cert.value("reason", std::string()));
        return;
    }

    throw std::invalid_argument("unknown certificate type '" + type + "'");
}

void verify_member(VerifyOutcome& out, const json& doc) {
    const json& input = doc.at("input");
    const std::string claimed = doc.at("verdict").at("result").get<std::string>();
    ClosureKind kind = kind_from_string(input.at("kind").get<std::string>());

    if (input.contains("equal_degree_ideal")) {
        std::vector<Polynomial> gens;
        for (const auto& g : input.at("equal_degree_ideal"))
            gens.push_back(polynomial_from_json(g));
        Polynomial f = polynomial_from_json(input.at("candidate_polynomial"));
        const json& cert = doc.at("certificate");
        if (cert.at("type") == "span_coefficients") {
            QVec c = qvec_from_json(cert.at("coefficients"));
            bool ok = c.size() == gens.size();
            if (ok) {
                Polynomial sum(f.num_vars());
                for (std::size_t i = 0; i < gens.size(); ++i) sum = sum + gens[i] * c[i];
                ok = sum == f;
            }
            out.add("span-check", ok, "sum c_i f_i = f exactly");
            out.add("result-consistent", claimed == "Member");
        } else {
            EqualDegreeResult r = equal_degree_membership(f, gens, f.total_degree().value());
            out.add("equal-degree-replay", !r.member);
            out.add("result-consistent", claimed == "NotMember");
        }
        return;
    }

    MonomialIdeal ideal = ideal_from_json(input.at("ideal"));
    ExponentVector tau = exponents_from_json(input.at("candidate"));
    replay_member_certificate(out, ideal, tau, kind, claimed, doc.at("certificate"));
}

void verify_closure(VerifyOutcome& out, const json& doc) {
    MonomialIdeal ideal = ideal_from_json(doc.at("input").at("ideal"));
    std::vector<ExponentVector> claimed;
    for (const auto& g : doc.at("generators")) claimed.push_back(exponents_from_json(g));
    MonomialIdeal recomputed = closure_generators(ideal);
    out.add("closure-recompute", recomputed.generators() == claimed,
            "deterministic enumeration reproduces the generator list");
    for (const auto& item : doc.at("certificate").at("new_generators")) {
        ExponentVector tau = exponents_from_json(item.at("tau"));
        PointLocation loc = location_from_json(item.at("location"));
        replay_hull_decomposition(out, ideal, tau, loc, /*require_interior=*/true);
    }
}

void verify_representation(VerifyOutcome& out, const json& doc) {
    PowerRepresentation rep = power_representation_from_json(doc.at("input").at("representation"));
    PowerRepStatus status = verify_power_representation(rep);
    std::string claimed = doc.at("verdict").at("result").get<std::string>();
    std::string got = status == PowerRepStatus::ValidContMember   ? "ValidContMember"
                      : status == PowerRepStatus::ValidNoConclusion ? "ValidNoConclusion"
                                                                    : "Invalid";
    out.add("representation-expansion", status != PowerRepStatus::Invalid,
            "f^n - sum c_alpha gens^alpha expands to zero");
    out.add("result-consistent", got == claimed, "recomputed " + got);
}

void verify_witness(VerifyOutcome& out, const json& doc) {
    const json& input = doc.at("input");
    SampleSpec spec;
    spec.count = input.at("samples").get<std::size_t>();
    spec.seed = input.at("seed").get<std::uint64_t>();
    if (input.contains("sphere_points"))
        spec.sphere_points = input.at("sphere_points").get<std::size_t>();
    if (input.contains("sphere_levels")) spec.sphere_levels = input.at("sphere_levels").get<int>();
    const std::string construction = input.at("construction").get<std::string>();
    WitnessReport rep;
    if (construction == "homogeneous") {
        std::vector<Polynomial> gens;
        for (const auto& g : input.at("ideal")) gens.push_back(polynomial_from_json(g));
        rep = homogeneous_witness(polynomial_from_json(input.at("candidate")), gens, spec);
    } else if (construction == "psi") {
        rep = psi_witness(input.at("e").get<std::int64_t>(), input.at("r").get<std::int64_t>(),
                          input.at("s").get<std::int64_t>(), spec);
    } else if (construction == "phi-probe") {
        std::vector<Polynomial> gens;
        for (const auto& g : input.at("ideal")) gens.push_back(polynomial_from_json(g));
        std::vector<ProbePath> paths;
        for (const auto& p : input.at("paths")) {
            ProbePath path;
            path.label = p.at("label").get<std::string>();
            for (const auto& c : p.at("coords")) path.coords.push_back(polynomial_from_json(c));
            paths.push_back(std::move(path));
        }
        rep = phi_probe(polynomial_from_json(input.at("candidate")), gens, paths, spec);
    } else {
        throw std::invalid_argument("unknown construction '" + construction + "'");
    }
    out.add("witness-recompute", witness_report_to_json(rep) == doc.at("report"),
            "same seed reproduces the report byte for byte");
}

}  // namespace

VerifyOutcome verify_document(const json& doc) {
    VerifyOutcome out;
    const std::string command = doc.at("command").get<std::string>();
    if (command == "member") verify_member(out, doc);
    else if (command == "closure") verify_closure(out, doc);
    else if (command == "power_representation") verify_representation(out, doc);
    else if (command == "witness") verify_witness(out, doc);
    else throw std::invalid_argument("unknown command '" + command + "' in document");
    return out;
}

}  // namespace contclose::jsonio
