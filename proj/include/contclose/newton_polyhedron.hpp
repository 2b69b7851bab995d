#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "contclose/linalg.hpp"
#include "contclose/monomial_ideal.hpp"
#include "contclose/rational.hpp"

namespace contclose {

/// Thrown when an operation requiring a primary monomial ideal gets a
/// non-primary one.
struct NonPrimaryError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Inequality normal . x >= offset with a componentwise nonnegative,
/// primitive integer normal.
struct Facet {
    std::vector<Integer> normal;
    Integer offset;

    Rational evaluate(const ExponentVector& x) const {
        Rational s = 0;
        for (std::size_t j = 0; j < normal.size(); ++j) s += Rational(normal[j]) * x[j];
        return s - Rational(offset);
    }

    bool operator==(const Facet&) const = default;
};

/// Newton polyhedron conv(G) + R_+^m of a monomial ideal, held in both
/// V-representation (the generator antichain) and H-representation (facets).
/// The H-representation is computed exactly by the double description method
/// on the cone of valid inequalities; build() verifies V/H consistency.
class NewtonPolyhedron {
public:
    static NewtonPolyhedron build(const MonomialIdeal& ideal);

    std::size_t dim() const { return dim_; }
    const std::vector<ExponentVector>& generators() const { return generators_; }
    const std::vector<Facet>& facets() const { return facets_; }

    /// Checks every generator satisfies every facet, every facet is tight at
    /// a generator, and every facet's face affinely spans dimension m-1.
    /// Throws std::logic_error on violation.
    void verify() const;

private:
    NewtonPolyhedron(std::size_t dim, std::vector<ExponentVector> gens, std::vector<Facet> facets)
        : dim_(dim), generators_(std::move(gens)), facets_(std::move(facets)) {}

    std::size_t dim_;
    std::vector<ExponentVector> generators_;
    std::vector<Facet> facets_;
};

/// Location of a lattice point relative to the ideal and its polyhedron.
struct PointLocation {
    enum class Tag { InIdeal, Outside, Boundary, Interior };
    Tag tag;

    /// Indices of facets tight at tau (Boundary only).
    std::vector<std::size_t> tight_facets;
    /// Index of a violated facet (Outside only).
    std::optional<std::size_t> violated_facet;
    /// Largest epsilon with tau - epsilon*1 in P (Interior; 0 on Boundary).
    Rational epsilon;
    /// Exact decomposition tau = sum_i lambda_i gamma_i + mu + epsilon*1 with
    /// lambda >= 0, sum lambda = 1, mu >= 0 (Boundary and Interior only).
    QVec lambda, mu;
};

namespace detail {

enum class GeoClass { Outside, Boundary, Interior };

/// Facet-strictness classification (ignores ideal membership).
GeoClass classify_by_facets(const NewtonPolyhedron& p, const ExponentVector& tau,
                            std::vector<std::size_t>* tight_out = nullptr,
                            std::optional<std::size_t>* violated_out = nullptr);

struct LpClassification {
    GeoClass cls;
    Rational epsilon;
    QVec lambda, mu;
};

/// Epsilon-LP classification: maximize eps s.t. tau - eps*1 = sum lambda_i
/// gamma_i + mu, lambda >= 0, sum lambda = 1, mu >= 0. Infeasible = Outside,
/// optimum 0 = Boundary, optimum > 0 = Interior.
LpClassification classify_by_lp(const std::vector<ExponentVector>& gens,
                                const ExponentVector& tau);

}  // namespace detail

/// Full trichotomy for tau. Both classification paths are always run and
/// must agree; disagreement throws std::logic_error.
PointLocation locate(const NewtonPolyhedron& p, const MonomialIdeal& ideal,
                     const ExponentVector& tau);

/// Minimal generators of the ideal generated by Gamma together with the
/// interior lattice points of its Newton polyhedron. Requires a primary
/// ideal; the result is idempotent and contains the input.
MonomialIdeal closure_generators(const MonomialIdeal& ideal);

/// Certificate that x^{n tau} lies in I^theta with n < theta.
struct PowerWitness {
    std::int64_t n = 0;
    std::int64_t theta = 0;
    std::vector<std::int64_t> alpha;  // multiplicity per generator, |alpha| = theta

    bool operator==(const PowerWitness&) const = default;
};

/// Exact re-check of a witness: |alpha| = theta, n < theta, and
/// sum alpha_i gamma_i <= n tau componentwise.
bool check_power_witness(const MonomialIdeal& ideal, const ExponentVector& tau,
                         const PowerWitness& w);

/// Smallest n <= n_max admitting theta > n and alpha with |alpha| = theta and
/// sum alpha_i gamma_i <= n tau; theta is the largest value attainable for
/// that n. Returns nullopt when no n within the bound works.
std::optional<PowerWitness> power_witness(const MonomialIdeal& ideal, const ExponentVector& tau,
                                          std::int64_t n_max = 64);

/// Strictly positive primitive integer normal supporting P at a boundary
/// point tau, with its integer degree d = a . tau; nullopt when every
/// supporting normal has a zero entry.
struct SupportingNormal {
    std::vector<Integer> normal;
    Integer degree;
};

std::optional<SupportingNormal> supporting_normal(const NewtonPolyhedron& p,
                                                  const ExponentVector& tau);

}  // namespace contclose
