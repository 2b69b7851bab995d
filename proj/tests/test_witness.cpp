#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "contclose/parser.hpp"
#include "contclose/witness_numeric.hpp"

using namespace contclose;
using Complex = std::complex<double>;

namespace {
const std::vector<std::string> ZW = {"z", "w"};
Polynomial p2(const std::string& s) { return parse_polynomial(s, ZW); }
}  // namespace

TEST_CASE("homogeneous witness for z^2 w^2 over (z^3, w^3)") {
    SampleSpec spec;
    spec.count = 1000;
    spec.seed = 42;
    spec.sphere_points = 10000;
    spec.sphere_levels = 9;
    WitnessReport rep = homogeneous_witness(p2("z^2*w^2"), {p2("z^3"), p2("w^3")}, spec);
    CHECK(rep.sample_count == 1000);
    CHECK(rep.max_residual < 1e-9 * std::max(1.0, rep.max_abs_f));
    // d - max d_i = 1: sups halve per radius halving.
    CHECK(rep.expected_ratio == 0.5);
    REQUIRE(rep.sup_ratios.size() == 8);
    for (double r : rep.sup_ratios) CHECK(std::abs(r - 0.5) <= 0.1);
    CHECK(rep.decay_consistent);
}

TEST_CASE("homogeneous witness rejects the flat degree case") {
    SampleSpec spec;
    CHECK_THROWS_AS(homogeneous_witness(p2("z^3"), {p2("z^3"), p2("w^3")}, spec),
                    std::invalid_argument);
    CHECK_THROWS_AS(homogeneous_witness(p2("z^2 + w"), {p2("z"), p2("w")}, spec),
                    std::invalid_argument);
}

TEST_CASE("q values vanish on the axes and solve the forcing equation") {
    Polynomial f = p2("z^2*w^2");
    std::vector<Polynomial> gens = {p2("z^3"), p2("w^3")};
    // On (1, 0): f and both q_i f_i terms vanish or cancel to residual 0.
    std::vector<Complex> axis = {Complex(1), Complex(0)};
    auto q = homogeneous_q_values(f, gens, axis);
    Complex sum = q[0] * Complex(1) + q[1] * Complex(0);
    CHECK(std::abs(sum - f.evaluate(std::span<const Complex>(axis))) == 0);

    std::vector<Complex> z = {Complex(0.3, 0.2), Complex(-0.4, 0.55)};
    auto qz = homogeneous_q_values(f, gens, z);
    Complex total = qz[0] * gens[0].evaluate(std::span<const Complex>(z)) +
                    qz[1] * gens[1].evaluate(std::span<const Complex>(z));
    CHECK(std::abs(total - f.evaluate(std::span<const Complex>(z))) < 1e-14);
}

TEST_CASE("homogeneity law |q_i(t z)| = t^{d-d_i} |q_i(z)|") {
    Polynomial f = p2("z^2*w^2");
    std::vector<Polynomial> gens = {p2("z^3"), p2("w^3")};
    std::vector<Complex> z = {Complex(0.37, -0.11), Complex(0.2, 0.73)};
    auto q1 = homogeneous_q_values(f, gens, z);
    for (double t : {0.5, 0.25, 2.0}) {
        std::vector<Complex> tz = z;
        for (auto& c : tz) c *= t;
        auto qt = homogeneous_q_values(f, gens, tz);
        for (std::size_t i = 0; i < q1.size(); ++i)
            CHECK(std::abs(std::abs(qt[i]) - t * std::abs(q1[i])) < 1e-9);
    }
}

TEST_CASE("phi probe: the (z, w) | z no-limit instance") {
    SampleSpec spec;
    std::vector<ProbePath> paths = {
        {"(t, 0)", {parse_polynomial("t", {"t"}), parse_polynomial("0", {"t"})}},
        {"(0, t)", {parse_polynomial("0", {"t"}), parse_polynomial("t", {"t"})}},
    };
    WitnessReport rep = phi_probe(p2("z"), {p2("z"), p2("w")}, paths, spec);
    REQUIRE(rep.probes.size() == 2);
    const ProbeVerdict& phi1 = rep.probes[0];
    CHECK_FALSE(phi1.consistent);
    CHECK(std::abs(phi1.path_limits[0] - Complex(1)) < 1e-6);
    CHECK(std::abs(phi1.path_limits[1] - Complex(0)) < 1e-6);
    CHECK(phi1.witness_paths == std::pair<std::size_t, std::size_t>{0, 1});
    // phi_2 = z conj(w) / (|z|^2 + |w|^2) tends to 0 along both paths.
    CHECK(rep.probes[1].consistent);
    CHECK(std::abs(rep.probes[1].limit) < 1e-6);
}

TEST_CASE("phi probe: diagonal limit for z^2 w^2 over (z^3, w^3) is 0") {
    SampleSpec spec;
    std::vector<ProbePath> paths = {
        {"(t, t)", {parse_polynomial("t", {"t"}), parse_polynomial("t", {"t"})}},
        {"(t, 0)", {parse_polynomial("t", {"t"}), parse_polynomial("0", {"t"})}},
        {"(0, t)", {parse_polynomial("0", {"t"}), parse_polynomial("t", {"t"})}},
    };
    WitnessReport rep = phi_probe(p2("z^2*w^2"), {p2("z^3"), p2("w^3")}, paths, spec);
    for (const auto& probe : rep.probes) {
        CHECK(probe.consistent);
        CHECK(std::abs(probe.limit) < 1e-6);
    }
}

TEST_CASE("phi probe: constant 1 along the axis when f is the generator") {
    SampleSpec spec;
    std::vector<ProbePath> paths = {
        {"(t, 0)", {parse_polynomial("t", {"t"}), parse_polynomial("0", {"t"})}},
    };
    WitnessReport rep = phi_probe(p2("z^3"), {p2("z^3"), p2("w^3")}, paths, spec);
    CHECK(rep.probes[0].consistent);
    CHECK(std::abs(rep.probes[0].limit - Complex(1)) < 1e-12);
}

TEST_CASE("phi probe rejects paths through the zero locus") {
    SampleSpec spec;
    std::vector<ProbePath> paths = {
        {"origin", {parse_polynomial("0", {"t"}), parse_polynomial("0", {"t"})}},
    };
    CHECK_THROWS_AS(phi_probe(p2("z"), {p2("z"), p2("w")}, paths, spec), std::runtime_error);
}

TEST_CASE("psi witness: (e, r, s) = (3, 2, 2)") {
    SampleSpec spec;
    spec.count = 1000;
    spec.seed = 7;
    WitnessReport rep = psi_witness(3, 2, 2, spec);
    CHECK(rep.max_residual < 1e-10);
    // Any continuous cutoff cancels identically; the alternative cutoff run
    // must agree.
    CHECK(rep.alt_cutoff_max_residual < 1e-10);
}

TEST_CASE("psi witness parameter checks") {
    SampleSpec spec;
    CHECK_THROWS_AS(psi_witness(3, 3, 2, spec), std::invalid_argument);  // r = e
    CHECK_THROWS_AS(psi_witness(3, 1, 1, spec), std::invalid_argument);  // r + s <= e
}

TEST_CASE("psi agrees with the closed formula where the cutoff is 1") {
    // v^e psi(v) + v^s = 1 for all |v| >= 1.
    const std::int64_t e = 3, s = 2;
    for (Complex v : {Complex(1.0), Complex(0.0, 1.5), Complex(-2.0, 0.3), Complex(0.6, -0.8)}) {
        if (std::abs(v) < 1.0) continue;
        Complex ve = 1, vs = 1;
        for (int i = 0; i < e; ++i) ve *= v;
        for (int i = 0; i < s; ++i) vs *= v;
        CHECK(std::abs(ve * psi_function_value(e, s, v) + vs - Complex(1)) < 1e-12);
    }
}

TEST_CASE("same seed gives identical reports") {
    SampleSpec spec;
    spec.count = 200;
    spec.seed = 777;
    spec.sphere_points = 500;
    WitnessReport a = homogeneous_witness(p2("z^2*w^2"), {p2("z^3"), p2("w^3")}, spec);
    WitnessReport b = homogeneous_witness(p2("z^2*w^2"), {p2("z^3"), p2("w^3")}, spec);
    CHECK(a.max_residual == b.max_residual);
    CHECK(a.residuals == b.residuals);
    REQUIRE(a.sphere_sups.size() == b.sphere_sups.size());
    for (std::size_t i = 0; i < a.sphere_sups.size(); ++i)
        CHECK(a.sphere_sups[i].sup == b.sphere_sups[i].sup);

    spec.seed = 778;
    WitnessReport c = homogeneous_witness(p2("z^2*w^2"), {p2("z^3"), p2("w^3")}, spec);
    CHECK(a.residuals != c.residuals);
}
