#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "contclose/newton_polyhedron.hpp"
#include "test_util.hpp"

using namespace contclose;
using testutil::ev;

namespace {

Facet facet(std::vector<long long> normal, long long offset) {
    Facet f;
    for (auto x : normal) f.normal.emplace_back(x);
    f.offset = offset;
    return f;
}

bool has_facet(const NewtonPolyhedron& p, const Facet& f) {
    for (const auto& g : p.facets())
        if (g == f) return true;
    return false;
}

// Independent power-witness search: top-down memoized max theta.
std::int64_t max_theta_oracle(const std::vector<ExponentVector>& gens,
                              std::vector<std::int64_t> budget,
                              std::map<std::vector<std::int64_t>, std::int64_t>& memo) {
    auto it = memo.find(budget);
    if (it != memo.end()) return it->second;
    std::int64_t best = 0;
    for (const auto& g : gens) {
        bool fits = true;
        std::vector<std::int64_t> rest = budget;
        for (std::size_t j = 0; j < budget.size(); ++j) {
            rest[j] -= g[j];
            if (rest[j] < 0) fits = false;
        }
        if (fits) best = std::max(best, 1 + max_theta_oracle(gens, rest, memo));
    }
    memo[budget] = best;
    return best;
}

std::optional<std::int64_t> smallest_witness_n_oracle(const MonomialIdeal& ideal,
                                                      const ExponentVector& tau,
                                                      std::int64_t n_max) {
    for (std::int64_t n = 1; n <= n_max; ++n) {
        std::vector<std::int64_t> budget(tau.size());
        for (std::size_t j = 0; j < tau.size(); ++j) budget[j] = n * tau[j];
        std::map<std::vector<std::int64_t>, std::int64_t> memo;
        if (max_theta_oracle(ideal.generators(), budget, memo) >= n + 1) return n;
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("hand-checked 2D hulls") {
    NewtonPolyhedron p1 = NewtonPolyhedron::build(MonomialIdeal(2, {ev({3, 0}), ev({0, 3})}));
    REQUIRE(p1.facets().size() == 3);
    CHECK(has_facet(p1, facet({1, 0}, 0)));
    CHECK(has_facet(p1, facet({0, 1}, 0)));
    CHECK(has_facet(p1, facet({1, 1}, 3)));

    // Collinear middle generator: same hull.
    NewtonPolyhedron p2 =
        NewtonPolyhedron::build(MonomialIdeal(2, {ev({3, 0}), ev({2, 1}), ev({0, 3})}));
    REQUIRE(p2.facets().size() == 3);
    CHECK(has_facet(p2, facet({1, 1}, 3)));

    NewtonPolyhedron p3 = NewtonPolyhedron::build(MonomialIdeal(2, {ev({2, 0}), ev({0, 5})}));
    REQUIRE(p3.facets().size() == 3);
    CHECK(has_facet(p3, facet({5, 2}, 10)));
}

TEST_CASE("three-variable hull verifies") {
    MonomialIdeal i(3, {ev({2, 0, 0}), ev({0, 3, 0}), ev({0, 0, 4}), ev({1, 1, 1})});
    NewtonPolyhedron p = NewtonPolyhedron::build(i);
    p.verify();
    CHECK(p.facets().size() >= 4);
}

TEST_CASE("higher-dimensional hulls stay consistent") {
    // m = 5, pure powers: hull of the simplex with vertices d_j e_j.
    std::vector<ExponentVector> gens;
    std::vector<std::int64_t> powers = {2, 3, 4, 2, 3};
    for (std::size_t j = 0; j < 5; ++j) gens.push_back(ExponentVector::axis(5, j, powers[j]));
    MonomialIdeal ideal(5, gens);
    NewtonPolyhedron p = NewtonPolyhedron::build(ideal);
    p.verify();
    // 5 coordinate facets plus the simplex facet 6x1+4x2+3x3+6x4+4x5 >= 12.
    CHECK(p.facets().size() == 6);
    CHECK(locate(p, ideal, ev({1, 1, 1, 1, 1})).tag == PointLocation::Tag::Interior);
    CHECK(locate(p, ideal, ev({1, 0, 0, 0, 0})).tag == PointLocation::Tag::Outside);
    CHECK(locate(p, ideal, ev({1, 1, 0, 1, 0})).tag == PointLocation::Tag::Boundary);

    // m = 4 with a mixed generator.
    MonomialIdeal mixed(4, {ExponentVector({2, 0, 0, 0}), ExponentVector({0, 2, 0, 0}),
                            ExponentVector({0, 0, 2, 0}), ExponentVector({0, 0, 0, 2}),
                            ExponentVector({1, 1, 1, 1})});
    NewtonPolyhedron q = NewtonPolyhedron::build(mixed);
    q.verify();
    CHECK(locate(q, mixed, ev({1, 1, 1, 0})).tag == PointLocation::Tag::Boundary);
}

TEST_CASE("locate classifies the hand-checked points") {
    MonomialIdeal cube3(2, {ev({3, 0}), ev({0, 3})});
    NewtonPolyhedron p3 = NewtonPolyhedron::build(cube3);
    CHECK(locate(p3, cube3, ev({2, 2})).tag == PointLocation::Tag::Interior);
    CHECK(locate(p3, cube3, ev({1, 1})).tag == PointLocation::Tag::Outside);
    CHECK(locate(p3, cube3, ev({3, 1})).tag == PointLocation::Tag::InIdeal);

    MonomialIdeal sq(2, {ev({2, 0}), ev({0, 2})});
    NewtonPolyhedron psq = NewtonPolyhedron::build(sq);
    PointLocation loc = locate(psq, sq, ev({1, 1}));
    REQUIRE(loc.tag == PointLocation::Tag::Boundary);
    REQUIRE(loc.tight_facets.size() == 1);
    CHECK(psq.facets()[loc.tight_facets[0]] == facet({1, 1}, 2));

    MonomialIdeal zw5(2, {ev({2, 0}), ev({0, 5})});
    NewtonPolyhedron pz = NewtonPolyhedron::build(zw5);
    CHECK(locate(pz, zw5, ev({1, 3})).tag == PointLocation::Tag::Interior);

    MonomialIdeal wk(2, {ev({3, 0}), ev({2, 1}), ev({0, 3})});
    NewtonPolyhedron pw = NewtonPolyhedron::build(wk);
    CHECK(locate(pw, wk, ev({1, 2})).tag == PointLocation::Tag::Boundary);
}

TEST_CASE("interior decompositions replay by exact arithmetic") {
    MonomialIdeal zw5(2, {ev({2, 0}), ev({0, 5})});
    NewtonPolyhedron p = NewtonPolyhedron::build(zw5);
    PointLocation loc = locate(p, zw5, ev({1, 3}));
    REQUIRE(loc.tag == PointLocation::Tag::Interior);
    CHECK(loc.epsilon > 0);
    Rational lsum = 0;
    for (const auto& l : loc.lambda) {
        CHECK(l >= 0);
        lsum += l;
    }
    CHECK(lsum == 1);
    for (std::size_t j = 0; j < 2; ++j) {
        Rational coord = loc.epsilon + loc.mu[j];
        for (std::size_t i = 0; i < loc.lambda.size(); ++i)
            coord += loc.lambda[i] * Rational(zw5.generators()[i][j]);
        CHECK(coord == Rational(ev({1, 3})[j]));
        CHECK(loc.mu[j] >= 0);
    }
}

TEST_CASE("facet and epsilon-LP classifications agree on random points") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t m = 1 + rng() % 3;
        MonomialIdeal ideal = testutil::random_primary_ideal(rng, m, 8);
        NewtonPolyhedron p = NewtonPolyhedron::build(ideal);
        p.verify();
        for (int t = 0; t < 15; ++t) {
            std::vector<std::int64_t> e(m);
            for (auto& x : e) x = static_cast<std::int64_t>(rng() % 10);
            ExponentVector tau(e);
            detail::GeoClass by_facets = detail::classify_by_facets(p, tau);
            detail::LpClassification by_lp = detail::classify_by_lp(p.generators(), tau);
            CHECK(by_facets == by_lp.cls);
            locate(p, ideal, tau);  // also runs the built-in agreement check
        }
    }
}

TEST_CASE("closure generators on hand-checked ideals") {
    MonomialIdeal cube3(2, {ev({3, 0}), ev({0, 3})});
    CHECK(closure_generators(cube3) ==
          MonomialIdeal(2, {ev({3, 0}), ev({2, 2}), ev({0, 3})}));

    MonomialIdeal sq(2, {ev({2, 0}), ev({0, 2})});
    CHECK(closure_generators(sq) == sq);

    MonomialIdeal zw5(2, {ev({2, 0}), ev({0, 5})});
    CHECK(closure_generators(zw5) == MonomialIdeal(2, {ev({2, 0}), ev({1, 3}), ev({0, 5})}));

    MonomialIdeal wk(2, {ev({3, 0}), ev({2, 1}), ev({0, 3})});
    CHECK(closure_generators(wk) == wk);

    CHECK_THROWS_AS(closure_generators(MonomialIdeal(2, {ev({3, 0}), ev({1, 1})})),
                    NonPrimaryError);
}

namespace {

MonomialIdeal closure_oracle(const MonomialIdeal& ideal) {
    const std::size_t m = ideal.num_vars();
    NewtonPolyhedron p = NewtonPolyhedron::build(ideal);
    std::vector<std::int64_t> bounds(m);
    for (std::size_t j = 0; j < m; ++j) bounds[j] = ideal.max_exponent(j) + 1;
    std::vector<ExponentVector> found;
    std::vector<std::int64_t> pt(m, 0);
    for (;;) {
        ExponentVector tau(pt);
        if (ideal.contains(tau) ||
            locate(p, ideal, tau).tag == PointLocation::Tag::Interior)
            found.push_back(tau);
        std::size_t j = 0;
        while (j < m && pt[j] == bounds[j]) pt[j++] = 0;
        if (j == m) break;
        ++pt[j];
    }
    return MonomialIdeal(m, std::move(found));
}

}  // namespace

TEST_CASE("closure matches the brute-force lattice oracle on random primary ideals") {
    std::mt19937_64 rng(20260810);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t m = 1 + rng() % 3;
        MonomialIdeal ideal = testutil::random_primary_ideal(rng, m, 6);
        CHECK(closure_generators(ideal) == closure_oracle(ideal));
    }
}

TEST_CASE("closure is inflationary, idempotent, monotone and scaling invariant") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t m = 1 + rng() % 2;
        MonomialIdeal ideal = testutil::random_primary_ideal(rng, m, 5);
        MonomialIdeal closed = closure_generators(ideal);
        for (const auto& g : ideal.generators()) CHECK(closed.contains(g));
        CHECK(closure_generators(closed) == closed);

        // Monotone: membership propagates upward.
        for (const auto& g : closed.generators())
            for (std::size_t j = 0; j < m; ++j)
                CHECK(closed.contains(g + ExponentVector::axis(m, j)));

        // Scaling: tau in closure(G) iff delta*tau in closure(delta*G).
        std::vector<std::int64_t> delta(m);
        for (auto& d : delta) d = 1 + static_cast<std::int64_t>(rng() % 3);
        std::vector<ExponentVector> scaled_gens;
        for (const auto& g : ideal.generators()) scaled_gens.push_back(g.scaled(delta));
        MonomialIdeal scaled(m, std::move(scaled_gens));
        MonomialIdeal scaled_closed = closure_generators(scaled);
        for (int t = 0; t < 10; ++t) {
            std::vector<std::int64_t> e(m);
            for (auto& x : e) x = static_cast<std::int64_t>(rng() % 8);
            ExponentVector tau(e);
            CHECK(closed.contains(tau) == scaled_closed.contains(tau.scaled(delta)));
        }
    }
}

TEST_CASE("power witness search matches hand-checked examples and the oracle") {
    MonomialIdeal cube3(2, {ev({3, 0}), ev({0, 3})});
    auto w = power_witness(cube3, ev({2, 2}), 12);
    REQUIRE(w.has_value());
    CHECK(w->n == 3);
    CHECK(w->theta == 4);
    CHECK(w->alpha == std::vector<std::int64_t>{2, 2});
    CHECK(check_power_witness(cube3, ev({2, 2}), *w));
    CHECK(smallest_witness_n_oracle(cube3, ev({2, 2}), 12) == 3);

    MonomialIdeal zw5(2, {ev({2, 0}), ev({0, 5})});
    auto w2 = power_witness(zw5, ev({1, 3}), 16);
    REQUIRE(w2.has_value());
    CHECK(w2->n == 10);
    CHECK(w2->theta == 11);
    CHECK(w2->alpha == std::vector<std::int64_t>{5, 6});
    CHECK(smallest_witness_n_oracle(zw5, ev({1, 3}), 16) == 10);

    MonomialIdeal sq(2, {ev({2, 0}), ev({0, 2})});
    CHECK_FALSE(power_witness(sq, ev({1, 1}), 64).has_value());
}

TEST_CASE("power witness existence implies interior location") {
    std::mt19937_64 rng(59);
    int witnesses = 0;
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t m = 2 + rng() % 2;
        MonomialIdeal ideal = testutil::random_primary_ideal(rng, m, 5);
        NewtonPolyhedron p = NewtonPolyhedron::build(ideal);
        // New closure generators are interior non-ideal points, so the
        // theory promises each a witness; random points cover the converse.
        MonomialIdeal closed = closure_generators(ideal);
        for (const auto& tau : closed.generators()) {
            if (ideal.contains(tau)) continue;
            auto w = power_witness(ideal, tau, 64);
            REQUIRE(w.has_value());
            ++witnesses;
            CHECK(check_power_witness(ideal, tau, *w));
            CHECK(locate(p, ideal, tau).tag == PointLocation::Tag::Interior);
        }
        for (int t = 0; t < 5; ++t) {
            std::vector<std::int64_t> e(m);
            for (auto& x : e) x = static_cast<std::int64_t>(rng() % 7);
            ExponentVector tau(e);
            if (ideal.contains(tau)) continue;
            auto w = power_witness(ideal, tau, 16);
            if (!w) continue;
            CHECK(check_power_witness(ideal, tau, *w));
            CHECK(locate(p, ideal, tau).tag == PointLocation::Tag::Interior);
        }
    }
    CHECK(witnesses > 10);
}

TEST_CASE("supporting normals on hand-checked boundary points") {
    MonomialIdeal sq(2, {ev({2, 0}), ev({0, 2})});
    auto sn = supporting_normal(NewtonPolyhedron::build(sq), ev({1, 1}));
    REQUIRE(sn.has_value());
    CHECK(sn->normal == std::vector<Integer>{1, 1});
    CHECK(sn->degree == 2);

    MonomialIdeal wk(2, {ev({3, 0}), ev({2, 1}), ev({0, 3})});
    auto sn2 = supporting_normal(NewtonPolyhedron::build(wk), ev({1, 2}));
    REQUIRE(sn2.has_value());
    CHECK(sn2->normal == std::vector<Integer>{1, 1});
    CHECK(sn2->degree == 3);

    MonomialIdeal zw5(2, {ev({2, 0}), ev({0, 5})});
    CHECK_THROWS_AS(supporting_normal(NewtonPolyhedron::build(zw5), ev({1, 3})),
                    std::invalid_argument);
}
