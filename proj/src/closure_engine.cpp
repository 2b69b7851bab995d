#include "contclose/closure_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace contclose {

std::string to_string(ClosureKind kind) {
    switch (kind) {
        case ClosureKind::Integral: return "integral";
        case ClosureKind::Axes: return "ax";
        case ClosureKind::Continuous: return "cont";
    }
    return "?";
}

namespace {

void collect_monomials(std::size_t m, std::int64_t d, bool exact, std::size_t j,
                       std::vector<std::int64_t>& cur, std::vector<ExponentVector>& out) {
    if (j + 1 == m) {
        if (exact) {
            cur[j] = d;
            out.emplace_back(cur);
        } else {
            for (std::int64_t e = 0; e <= d; ++e) {
                cur[j] = e;
                out.emplace_back(cur);
            }
        }
        return;
    }
    for (std::int64_t e = 0; e <= d; ++e) {
        cur[j] = e;
        collect_monomials(m, d - e, exact, j + 1, cur, out);
    }
}

}  // namespace

std::vector<ExponentVector> monomials_of_degree(std::size_t m, std::int64_t d) {
    std::vector<ExponentVector> out;
    std::vector<std::int64_t> cur(m, 0);
    collect_monomials(m, d, /*exact=*/true, 0, cur, out);
    std::sort(out.begin(), out.end(), std::greater<ExponentVector>());
    return out;
}

std::vector<ExponentVector> monomials_up_to_degree(std::size_t m, std::int64_t d) {
    std::vector<ExponentVector> out;
    std::vector<std::int64_t> cur(m, 0);
    collect_monomials(m, d, /*exact=*/false, 0, cur, out);
    std::sort(out.begin(), out.end(), std::greater<ExponentVector>());
    return out;
}

namespace {

// Rank of the evaluation matrix of all monomials of degree <= d at the points.
std::size_t evaluation_rank(const std::vector<QVec>& points, std::size_t m, std::int64_t d) {
    std::vector<ExponentVector> basis = monomials_up_to_degree(m, d);
    QMat e(points.size(), QVec(basis.size()));
    for (std::size_t r = 0; r < points.size(); ++r)
        for (std::size_t c = 0; c < basis.size(); ++c) {
            Rational v = 1;
            for (std::size_t j = 0; j < m; ++j)
                for (std::int64_t k = 0; k < basis[c][j]; ++k) v *= points[r][j];
            e[r][c] = v;
        }
    return matrix_rank(std::move(e));
}

}  // namespace

EvaluationSet principal_lattice_points(std::size_t m, std::int64_t d) {
    if (m < 1 || d < 0) throw std::invalid_argument("principal_lattice_points: bad arguments");
    EvaluationSet es;
    es.degree = d;
    es.dimension = m;
    for (const auto& alpha : monomials_up_to_degree(m, d)) {
        QVec p(m);
        for (std::size_t j = 0; j < m; ++j) p[j] = Rational(alpha[j]);
        es.points.push_back(std::move(p));
    }
    const std::size_t want = es.points.size();  // C(m+d, m) = # monomials <= d
    es.verified_rank = evaluation_rank(es.points, m, d);
    if (es.verified_rank == want) return es;

    // The principal lattice is poised for total-degree interpolation, so this
    // branch is unreachable in exact arithmetic; the grid keeps the contract.
    es.points.clear();
    std::vector<std::int64_t> cur(m, 0);
    for (;;) {
        QVec p(m);
        for (std::size_t j = 0; j < m; ++j) p[j] = Rational(cur[j]);
        es.points.push_back(std::move(p));
        std::size_t j = 0;
        while (j < m && cur[j] == d) cur[j++] = 0;
        if (j == m) break;
        ++cur[j];
    }
    es.verified_rank = evaluation_rank(es.points, m, d);
    if (es.verified_rank != want)
        throw std::logic_error("evaluation points fail the injectivity rank check");
    return es;
}

EqualDegreeResult equal_degree_membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                                          std::int64_t d) {
    if (gens.empty()) throw std::invalid_argument("equal_degree_membership needs generators");
    const std::size_t m = f.num_vars();
    auto check_form = [&](const Polynomial& p) {
        if (p.num_vars() != m) throw std::invalid_argument("variable count mismatch");
        if (p.is_zero() || !p.is_homogeneous() || p.total_degree() != d)
            throw std::invalid_argument("inputs must be homogeneous of degree exactly d");
    };
    check_form(f);
    for (const auto& g : gens) check_form(g);

    EqualDegreeResult out;
    out.basis = monomials_of_degree(m, d);

    // Path (a): exact linear algebra on coefficient vectors.
    QMat a(out.basis.size(), QVec(gens.size()));
    QVec b(out.basis.size());
    for (std::size_t r = 0; r < out.basis.size(); ++r) {
        for (std::size_t i = 0; i < gens.size(); ++i) a[r][i] = gens[i].coefficient(out.basis[r]);
        b[r] = f.coefficient(out.basis[r]);
    }
    LinearSolveResult solved = solve_linear(a, b);
    out.member = solved.solution.has_value();
    if (solved.solution) out.coefficients = *solved.solution;
    if (solved.infeasibility_witness) out.infeasibility_witness = *solved.infeasibility_witness;

    // Path (b): z_j -> sum_r P_{r,j} x_r into the ring of axes on the
    // verified evaluation set, then exact ideal membership there.
    out.points = principal_lattice_points(m, d);
    const std::size_t k = out.points.size();
    std::vector<AxesElement> var_images;
    for (std::size_t j = 0; j < m; ++j) {
        AxesElement im(k);
        for (std::size_t r = 0; r < k; ++r) {
            if (out.points.points[r][j] != 0) im.add_term(r, 1, out.points.points[r][j]);
        }
        var_images.push_back(std::move(im));
    }
    auto image_of = [&](const Polynomial& p) {
        AxesElement im = polynomial_image(p, var_images);
        // A degree-d form g must land on sum_r g(P_r) x_r^d.
        AxesElement expected(k);
        for (std::size_t r = 0; r < k; ++r)
            expected.add_term(r, d, p.evaluate(std::span<const Rational>(out.points.points[r])));
        if (!(im == expected))
            throw std::logic_error("axes image disagrees with point-evaluation form");
        return im;
    };
    std::vector<AxesElement> gen_images;
    for (const auto& g : gens) gen_images.push_back(image_of(g));
    CanonicalFormResult cf = canonical_form(gen_images);
    out.axes_result = ideal_membership(image_of(f), cf.ideal);
    out.axes_path_member = out.axes_result.member;

    if (out.axes_path_member != out.member)
        throw std::logic_error("equal-degree membership paths disagree");
    return out;
}

Verdict monomial_membership(const MonomialIdeal& ideal, const ExponentVector& tau,
                            ClosureKind kind, std::int64_t n_max) {
    if (tau.size() != ideal.num_vars())
        throw std::invalid_argument("monomial_membership: dimension mismatch");
    if (kind != ClosureKind::Integral && !ideal.is_primary())
        throw NonPrimaryError("axes/continuous closure requires a primary monomial ideal");

    Verdict v;
    v.kind = kind;
    if (ideal.contains(tau)) {
        for (const auto& g : ideal.generators())
            if (tau.dominates(g)) {
                v.result = Verdict::Result::Member;
                v.certificate = Verdict::AlreadyInIdeal{g};
                return v;
            }
    }

    NewtonPolyhedron p = NewtonPolyhedron::build(ideal);
    PointLocation loc = locate(p, ideal, tau);
    switch (loc.tag) {
        case PointLocation::Tag::InIdeal:
            throw std::logic_error("unreachable: ideal membership handled above");
        case PointLocation::Tag::Outside:
            v.result = Verdict::Result::NotMember;
            v.certificate = Verdict::OutsideHull{p.facets()[loc.violated_facet.value()]};
            return v;
        case PointLocation::Tag::Interior:
            v.result = Verdict::Result::Member;
            v.certificate = Verdict::InteriorWitness{loc, power_witness(ideal, tau, n_max)};
            return v;
        case PointLocation::Tag::Boundary:
            break;
    }

    if (kind == ClosureKind::Integral) {
        // On the boundary of the polyhedron: in the hull, so integrally closed
        // membership holds; the location carries the convex decomposition.
        v.result = Verdict::Result::Member;
        v.certificate = Verdict::InteriorWitness{loc, std::nullopt};
        return v;
    }

    std::optional<SupportingNormal> sn = supporting_normal(p, tau);
    if (!sn) {
        v.result = Verdict::Result::Undecided;
        v.certificate = Verdict::NoCertificate{
            "boundary point: no strictly positive supporting normal, "
            "no equal-degree certificate constructed"};
        return v;
    }

    Verdict::BoundaryExclusion be;
    be.normal = *sn;
    const std::size_t m = tau.size();
    be.substitution.resize(m);
    for (std::size_t j = 0; j < m; ++j)
        be.substitution[j] = sn->normal[j].convert_to<std::int64_t>();
    be.substituted_tau = tau.scaled(be.substitution);
    const std::int64_t d = sn->degree.convert_to<std::int64_t>();
    if (be.substituted_tau.total_degree() != d)
        throw std::logic_error("substituted candidate misses the supporting degree");

    for (const auto& mono : monomials_of_degree(m, d))
        if (mono != be.substituted_tau) be.fill.push_back(mono);

    // The filled ideal must contain the substituted ideal, or exclusion in
    // the bigger ideal would say nothing about the smaller one.
    for (const auto& g : ideal.generators()) {
        ExponentVector gs = g.scaled(be.substitution);
        bool covered = false;
        for (const auto& mono : be.fill) covered = covered || gs.dominates(mono);
        if (!covered) throw std::logic_error("substituted generator escapes the filled ideal");
    }

    std::vector<Polynomial> fill_polys;
    for (const auto& mono : be.fill) fill_polys.push_back(Polynomial::monomial(mono));
    EqualDegreeResult eq =
        equal_degree_membership(Polynomial::monomial(be.substituted_tau), fill_polys, d);
    if (eq.member)
        throw std::logic_error("a single missing monomial cannot lie in the span of the rest");
    be.transcript = std::move(eq);

    v.result = Verdict::Result::NotMember;
    v.certificate = std::move(be);
    return v;
}

PowerRepStatus verify_power_representation(const PowerRepresentation& rep) {
    if (rep.n < 1 || rep.theta < 1) return PowerRepStatus::Invalid;
    const std::size_t g = rep.gens.size();
    for (const auto& [alpha, c] : rep.coefficients) {
        if (alpha.size() != g) throw std::invalid_argument("multi-index length mismatch");
        std::int64_t total = 0;
        for (auto e : alpha) {
            if (e < 0) throw std::invalid_argument("negative multi-index entry");
            total += e;
        }
        if (total != rep.theta) throw std::invalid_argument("multi-index degree != theta");
    }

    Polynomial sum(rep.f.num_vars());
    for (const auto& [alpha, c] : rep.coefficients) {
        Polynomial term = c;
        for (std::size_t i = 0; i < g; ++i)
            if (alpha[i] > 0) term = term * rep.gens[i].pow(static_cast<std::uint64_t>(alpha[i]));
        sum = sum + term;
    }
    Polynomial diff = rep.f.pow(static_cast<std::uint64_t>(rep.n)) - sum;
    if (!diff.is_zero()) return PowerRepStatus::Invalid;
    return rep.n < rep.theta ? PowerRepStatus::ValidContMember : PowerRepStatus::ValidNoConclusion;
}

}  // namespace contclose
