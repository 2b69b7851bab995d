#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "contclose/monomial_ideal.hpp"
#include "contclose/parser.hpp"
#include "contclose/polynomial.hpp"
#include "test_util.hpp"

using namespace contclose;
using testutil::ev;

namespace {
const std::vector<std::string> ZW = {"z", "w"};
}

TEST_CASE("parse single monomial") {
    Polynomial p = parse_polynomial("z^3", ZW);
    REQUIRE(p.term_count() == 1);
    CHECK(p.coefficient(ev({3, 0})) == 1);
}

TEST_CASE("parse mixed terms with constant") {
    Polynomial p = parse_polynomial("z^2*w^2 - 3", ZW);
    REQUIRE(p.term_count() == 2);
    CHECK(p.coefficient(ev({2, 2})) == 1);
    CHECK(p.coefficient(ev({0, 0})) == -3);
}

TEST_CASE("parse expands binomial square") {
    Polynomial p = parse_polynomial("(z+w)^2", ZW);
    REQUIRE(p.term_count() == 3);
    CHECK(p.coefficient(ev({2, 0})) == 1);
    CHECK(p.coefficient(ev({1, 1})) == 2);
    CHECK(p.coefficient(ev({0, 2})) == 1);
}

TEST_CASE("parse rational coefficients and whitespace") {
    Polynomial p = parse_polynomial("  3/2 * z -  w ", ZW);
    CHECK(p.coefficient(ev({1, 0})) == make_rational(3, 2));
    CHECK(p.coefficient(ev({0, 1})) == -1);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_polynomial("z^-1", ZW), ParseError);
    CHECK_THROWS_AS(parse_polynomial("z + y", ZW), ParseError);
    CHECK_THROWS_AS(parse_polynomial("z + ", ZW), ParseError);
    CHECK_THROWS_AS(parse_polynomial("(z + w", ZW), ParseError);
    try {
        parse_polynomial("z + y", ZW);
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("arithmetic on paper shapes") {
    Polynomial zw2 = parse_polynomial("z*w^2", ZW);
    CHECK(zw2.pow(2) == parse_polynomial("z^2*w^4", ZW));
    CHECK(parse_polynomial("z^3", ZW) * parse_polynomial("w^3", ZW) ==
          parse_polynomial("z^3*w^3", ZW));
    CHECK(parse_polynomial("z+w", ZW) * parse_polynomial("z-w", ZW) ==
          parse_polynomial("z^2-w^2", ZW));
}

TEST_CASE("substitute_powers multiplies exponents componentwise") {
    Polynomial f = parse_polynomial("z*w^3", ZW);
    Polynomial g = f.substitute_powers({5, 2});
    // Oracle: direct exponent multiplication.
    REQUIRE(g.term_count() == 1);
    CHECK(g.coefficient(ev({1 * 5, 3 * 2})) == 1);

    Polynomial any = parse_polynomial("2*z^2 - w + 1/3", ZW);
    CHECK(any.substitute_powers({1, 1}) == any);

    Polynomial h = parse_polynomial("z^2 + w^5", ZW).substitute_powers({5, 2});
    CHECK(h == parse_polynomial("z^10 + w^10", ZW));
    CHECK(h.is_homogeneous());
    CHECK(h.total_degree() == 10);
}

TEST_CASE("substitute_powers rejects nonpositive deltas") {
    CHECK_THROWS_AS(parse_polynomial("z", ZW).substitute_powers({0, 1}), std::invalid_argument);
}

TEST_CASE("rational evaluation") {
    auto at = [](const Polynomial& p, std::vector<Rational> pt) {
        return p.evaluate(std::span<const Rational>(pt));
    };
    CHECK(at(parse_polynomial("z^2*w^2", ZW), {1, 1}) == 1);
    CHECK(at(parse_polynomial("z^3 + 2*w^3", ZW), {2, 1}) == 10);
    CHECK(at(parse_polynomial("z", ZW), {0, 5}) == 0);
    CHECK_THROWS_AS(at(parse_polynomial("z", ZW), {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("monomial ideal containment") {
    MonomialIdeal cube(2, {ev({3, 0}), ev({0, 3})});
    CHECK(cube.contains(ev({3, 1})));
    CHECK_FALSE(cube.contains(ev({2, 2})));
    MonomialIdeal wk(2, {ev({3, 0}), ev({2, 1}), ev({0, 3})});
    CHECK_FALSE(wk.contains(ev({1, 2})));
}

TEST_CASE("antichain normalization drops dominated generators") {
    MonomialIdeal i(2, {ev({2, 0}), ev({2, 1}), ev({0, 5})});
    CHECK(i.generators() == std::vector<ExponentVector>{ev({2, 0}), ev({0, 5})});
    MonomialIdeal dup(2, {ev({1, 1}), ev({1, 1})});
    CHECK(dup.generators().size() == 1);
}

TEST_CASE("is_primary recognises pure powers of every variable") {
    CHECK(MonomialIdeal(2, {ev({3, 0}), ev({0, 3})}).is_primary());
    CHECK_FALSE(MonomialIdeal(2, {ev({3, 0}), ev({1, 1})}).is_primary());
    CHECK(MonomialIdeal(2, {ev({2, 0}), ev({2, 1}), ev({0, 5})}).is_primary());
    CHECK_FALSE(MonomialIdeal(2, {ev({0, 0})}).is_primary());  // unit ideal
}

TEST_CASE("print-parse round trip is identity on canonical forms") {
    std::mt19937_64 rng(20260809);
    const std::vector<std::string> vars3 = {"z", "w", "u"};
    for (int i = 0; i < 200; ++i) {
        Polynomial p = testutil::random_polynomial(rng, 3, 6, 6);
        Polynomial q = parse_polynomial(p.to_string(vars3), vars3);
        CHECK(p == q);
    }
}

TEST_CASE("ring axioms hold exactly on random polynomials") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        Polynomial f = testutil::random_polynomial(rng, 2, 4, 4);
        Polynomial g = testutil::random_polynomial(rng, 2, 4, 4);
        Polynomial h = testutil::random_polynomial(rng, 2, 4, 4);
        CHECK((f + g) * h == f * h + g * h);
        CHECK(f * g == g * f);
    }
}

TEST_CASE("substitute_powers is multiplicative") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        Polynomial f = testutil::random_polynomial(rng, 2, 4, 4);
        Polynomial g = testutil::random_polynomial(rng, 2, 4, 4);
        std::vector<std::int64_t> delta = {1 + static_cast<std::int64_t>(rng() % 4),
                                           1 + static_cast<std::int64_t>(rng() % 4)};
        CHECK((f * g).substitute_powers(delta) ==
              f.substitute_powers(delta) * g.substitute_powers(delta));
    }
}

TEST_CASE("ideal membership is upward closed") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
        MonomialIdeal ideal = testutil::random_primary_ideal(rng, 3, 5);
        for (int t = 0; t < 20; ++t) {
            std::vector<std::int64_t> e = {static_cast<std::int64_t>(rng() % 7),
                                           static_cast<std::int64_t>(rng() % 7),
                                           static_cast<std::int64_t>(rng() % 7)};
            ExponentVector tau(e);
            if (!ideal.contains(tau)) continue;
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(ideal.contains(tau + ExponentVector::axis(3, j)));
        }
    }
}
