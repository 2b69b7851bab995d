#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "contclose/json_io.hpp"
#include "contclose/parser.hpp"
#include "test_util.hpp"

using namespace contclose;
using namespace contclose::jsonio;
using testutil::ev;

namespace {
const std::vector<std::string> ZW = {"z", "w"};
Polynomial p2(const std::string& s) { return parse_polynomial(s, ZW); }
}  // namespace

TEST_CASE("rational and polynomial json round trips") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        Polynomial p = testutil::random_polynomial(rng, 3, 5, 5);
        CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
    }
    Rational q = make_rational(-7, 12);
    CHECK(rational_from_json(rational_to_json(q)) == q);
}

TEST_CASE("member documents replay: interior with power witness") {
    MonomialIdeal cube(2, {ev({3, 0}), ev({0, 3})});
    Verdict v = monomial_membership(cube, ev({2, 2}), ClosureKind::Continuous);
    json doc = member_document(cube, ev({2, 2}), ClosureKind::Continuous, ZW, v);
    VerifyOutcome out = verify_document(doc);
    CHECK(out.pass);

    // Tampering with the witness multiplicities must fail the replay.
    json bad = doc;
    bad["certificate"]["power_witness"]["alpha"] = {1, 3};
    CHECK_FALSE(verify_document(bad).pass);
}

TEST_CASE("member documents replay: boundary exclusion") {
    MonomialIdeal sq(2, {ev({2, 0}), ev({0, 2})});
    Verdict v = monomial_membership(sq, ev({1, 1}), ClosureKind::Axes);
    json doc = member_document(sq, ev({1, 1}), ClosureKind::Axes, ZW, v);
    VerifyOutcome out = verify_document(doc);
    CHECK(out.pass);

    json bad = doc;
    // Corrupt the span infeasibility witness.
    bad["certificate"]["transcript"]["infeasibility_witness"][0] = "5/3";
    VerifyOutcome tampered = verify_document(bad);
    CHECK_FALSE(tampered.pass);
    bool witness_step_failed = false;
    for (const auto& s : tampered.steps)
        if (s.name == "span-infeasibility-witness" && !s.pass) witness_step_failed = true;
    CHECK(witness_step_failed);

    json bad2 = doc;
    bad2["certificate"]["normal"] = {"1", "2"};
    CHECK_FALSE(verify_document(bad2).pass);
}

TEST_CASE("member documents replay: outside and in-ideal") {
    MonomialIdeal cube(2, {ev({3, 0}), ev({0, 3})});
    Verdict out_v = monomial_membership(cube, ev({1, 1}), ClosureKind::Continuous);
    CHECK(verify_document(member_document(cube, ev({1, 1}), ClosureKind::Continuous, ZW, out_v))
              .pass);
    Verdict in_v = monomial_membership(cube, ev({3, 2}), ClosureKind::Continuous);
    CHECK(verify_document(member_document(cube, ev({3, 2}), ClosureKind::Continuous, ZW, in_v))
              .pass);
    Verdict hull_v = monomial_membership(MonomialIdeal(2, {ev({2, 0}), ev({0, 2})}), ev({1, 1}),
                                         ClosureKind::Integral);
    CHECK(verify_document(member_document(MonomialIdeal(2, {ev({2, 0}), ev({0, 2})}), ev({1, 1}),
                                          ClosureKind::Integral, ZW, hull_v))
              .pass);
}

TEST_CASE("a boundary location cannot impersonate a continuous member") {
    // Forge a cont-Member document whose witness is only a hull (boundary)
    // decomposition: the replay must reject it.
    MonomialIdeal sq(2, {ev({2, 0}), ev({0, 2})});
    Verdict hull = monomial_membership(sq, ev({1, 1}), ClosureKind::Integral);
    json forged = member_document(sq, ev({1, 1}), ClosureKind::Integral, ZW, hull);
    CHECK(verify_document(forged).pass);
    forged["input"]["kind"] = "cont";
    forged["verdict"]["kind"] = "cont";
    CHECK_FALSE(verify_document(forged).pass);
}

TEST_CASE("closure documents replay and detect tampering") {
    MonomialIdeal cube(2, {ev({3, 0}), ev({0, 3})});
    MonomialIdeal closed = closure_generators(cube);
    NewtonPolyhedron p = NewtonPolyhedron::build(cube);
    std::vector<std::pair<ExponentVector, PointLocation>> new_gens;
    for (const auto& g : closed.generators())
        if (!cube.contains(g)) new_gens.emplace_back(g, locate(p, cube, g));
    json doc = closure_document(cube, closed, ZW, new_gens);
    CHECK(verify_document(doc).pass);

    json bad = doc;
    bad["generators"].erase(1);
    CHECK_FALSE(verify_document(bad).pass);
}

TEST_CASE("power representation documents verify") {
    PowerRepresentation rep;
    rep.f = p2("z^2*w^2");
    rep.gens = {p2("z^3"), p2("w^3")};
    rep.n = 3;
    rep.theta = 4;
    rep.coefficients = {{{2, 2}, p2("1")}};
    json doc;
    doc["command"] = "power_representation";
    doc["input"]["representation"] = power_representation_to_json(rep);
    doc["verdict"]["result"] = "ValidContMember";
    doc["version"] = kEngineVersion;
    CHECK(verify_document(doc).pass);

    json bad = doc;
    bad["input"]["representation"]["coefficients"][0]["coefficient"]["terms"][0]["coefficient"] =
        "2";
    CHECK_FALSE(verify_document(bad).pass);
}

TEST_CASE("witness documents recompute deterministically") {
    SampleSpec spec;
    spec.count = 200;
    spec.seed = 99;
    spec.sphere_points = 300;
    spec.sphere_levels = 4;
    WitnessReport rep = homogeneous_witness(p2("z^2*w^2"), {p2("z^3"), p2("w^3")}, spec);
    json input;
    input["construction"] = "homogeneous";
    input["samples"] = spec.count;
    input["seed"] = spec.seed;
    input["sphere_points"] = spec.sphere_points;
    input["sphere_levels"] = spec.sphere_levels;
    input["vars"] = ZW;
    input["ideal"] = {polynomial_to_json(p2("z^3")), polynomial_to_json(p2("w^3"))};
    input["candidate"] = polynomial_to_json(p2("z^2*w^2"));
    json doc = witness_document(input, rep);
    CHECK(verify_document(doc).pass);

    json bad = doc;
    bad["report"]["max_residual"] = 0.5;
    CHECK_FALSE(verify_document(bad).pass);
}

TEST_CASE("equal-degree documents carry span certificates") {
    std::vector<Polynomial> gens = {p2("z^3"), p2("w^3")};
    Polynomial f = p2("z^3 + w^3");
    EqualDegreeResult r = equal_degree_membership(f, gens, 3);
    Verdict v;
    v.kind = ClosureKind::Axes;
    v.result = Verdict::Result::Member;
    v.certificate = Verdict::SpanCoefficients{r.coefficients};
    json doc = equal_degree_document(f, gens, ClosureKind::Axes, ZW, v, r);
    CHECK(verify_document(doc).pass);

    json bad = doc;
    bad["certificate"]["coefficients"][0] = "2";
    CHECK_FALSE(verify_document(bad).pass);
}
