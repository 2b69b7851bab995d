#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "contclose/axes_ring.hpp"
#include "contclose/monomial_ideal.hpp"
#include "contclose/newton_polyhedron.hpp"
#include "contclose/polynomial.hpp"

namespace contclose {

enum class ClosureKind { Integral, Axes, Continuous };

std::string to_string(ClosureKind kind);

/// All exponent vectors in m variables of total degree exactly d, in
/// descending lexicographic order.
std::vector<ExponentVector> monomials_of_degree(std::size_t m, std::int64_t d);
std::vector<ExponentVector> monomials_up_to_degree(std::size_t m, std::int64_t d);

/// Lattice evaluation points on which vanishing of a polynomial of degree
/// <= d forces the zero polynomial; the evaluation matrix rank is verified
/// exactly at construction.
struct EvaluationSet {
    std::int64_t degree = 0;
    std::size_t dimension = 0;
    std::vector<QVec> points;
    std::size_t verified_rank = 0;

    std::size_t size() const { return points.size(); }
};

/// The principal lattice {alpha in N^m : |alpha| <= d}, with exact rank
/// verification; falls back to the full grid {0..d}^m if the rank check
/// ever failed.
EvaluationSet principal_lattice_points(std::size_t m, std::int64_t d);

/// Decision of f in K-span(gens) for forms of equal degree d, by exact
/// linear algebra and, independently, by the evaluation homomorphism into a
/// ring of axes. The two paths must agree.
struct EqualDegreeResult {
    bool member = false;
    QVec coefficients;            // over gens, when member
    QVec infeasibility_witness;   // over the degree-d monomial basis, when not
    std::vector<ExponentVector> basis;

    EvaluationSet points;
    bool axes_path_member = false;
    AxesMembership axes_result;
};

EqualDegreeResult equal_degree_membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                                          std::int64_t d);

/// Machine-checkable conclusion about closure membership.
struct Verdict {
    enum class Result { Member, NotMember, Undecided };

    struct AlreadyInIdeal {
        ExponentVector dominated_generator;
    };
    struct InteriorWitness {
        PointLocation location;
        std::optional<PowerWitness> power;
    };
    struct BoundaryExclusion {
        SupportingNormal normal;
        std::vector<std::int64_t> substitution;  // delta = the normal entries
        ExponentVector substituted_tau = ExponentVector::zero(1);
        std::vector<ExponentVector> fill;  // all degree-d monomials except tau'
        EqualDegreeResult transcript;
    };
    struct OutsideHull {
        Facet separating_facet;
    };
    struct SpanCoefficients {
        QVec coefficients;
    };
    struct NoCertificate {
        std::string reason;
    };

    using Certificate = std::variant<AlreadyInIdeal, InteriorWitness, BoundaryExclusion,
                                     OutsideHull, SpanCoefficients, NoCertificate>;

    ClosureKind kind = ClosureKind::Continuous;
    Result result = Result::Undecided;
    Certificate certificate = NoCertificate{};
};

/// Membership of the monomial z^tau in the chosen closure of a monomial
/// ideal. Axes/continuous kinds require a primary ideal; the integral kind
/// is plain Newton-polyhedron membership.
Verdict monomial_membership(const MonomialIdeal& ideal, const ExponentVector& tau,
                            ClosureKind kind, std::int64_t n_max = 64);

/// A claimed identity f^n = sum_{|alpha| = theta} c_alpha prod_i gens_i^{alpha_i}.
struct PowerRepresentation {
    Polynomial f;
    std::vector<Polynomial> gens;
    std::int64_t n = 0;
    std::int64_t theta = 0;
    std::vector<std::pair<std::vector<std::int64_t>, Polynomial>> coefficients;

    PowerRepresentation() : f(1) {}
};

enum class PowerRepStatus {
    ValidContMember,  // identity holds and n < theta: f in I^cont (and I^ax)
    ValidNoConclusion,  // identity holds but n >= theta
    Invalid,
};

/// Expands the claimed identity exactly.
PowerRepStatus verify_power_representation(const PowerRepresentation& rep);

}  // namespace contclose
