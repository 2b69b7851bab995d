#include "contclose/newton_polyhedron.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "contclose/simplex.hpp"

namespace contclose {

namespace {

// Scales a rational vector to a primitive integer vector, keeping direction.
QVec primitive(const QVec& v) {
    Integer den = common_denominator(v);
    std::vector<Integer> iv(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        iv[i] = numerator(v[i] * Rational(den));
        g = gcd(g, iv[i]);
    }
    if (g == 0) return QVec(v.size(), Rational(0));
    QVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(iv[i] / g);
    return out;
}

bool is_zero_vec(const QVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// Incremental double description for a cone {y : a . y >= 0 for all rows a}.
// Constraints that cut the lineality space are absorbed by projection; once
// the cone is pointed, new rays come from adjacent (+,-) pairs with the
// combinatorial adjacency test.
class DoubleDescription {
public:
    explicit DoubleDescription(std::size_t dim) : dim_(dim) {
        for (std::size_t i = 0; i < dim; ++i) {
            QVec e(dim, Rational(0));
            e[i] = 1;
            lineality_.push_back(std::move(e));
        }
    }

    void add_constraint(const QVec& a) {
        std::size_t cut = lineality_.size();
        for (std::size_t i = 0; i < lineality_.size(); ++i)
            if (dot(a, lineality_[i]) != 0) {
                cut = i;
                break;
            }
        if (cut < lineality_.size()) {
            QVec pivot = lineality_[cut];
            Rational pv = dot(a, pivot);
            if (pv < 0) {
                for (auto& x : pivot) x = -x;
                pv = -pv;
            }
            std::vector<QVec> new_lin;
            for (std::size_t i = 0; i < lineality_.size(); ++i) {
                if (i == cut) continue;
                new_lin.push_back(project(lineality_[i], a, pivot, pv));
            }
            for (auto& r : rays_) r = primitive(project(r, a, pivot, pv));
            rays_.push_back(primitive(pivot));
            lineality_ = std::move(new_lin);
            dedupe_rays();
        } else {
            std::vector<QVec> plus, zero, minus;
            for (const auto& r : rays_) {
                Rational v = dot(a, r);
                (v > 0 ? plus : v < 0 ? minus : zero).push_back(r);
            }
            std::vector<QVec> next = plus;
            next.insert(next.end(), zero.begin(), zero.end());
            for (const auto& p : plus)
                for (const auto& n : minus)
                    if (adjacent(p, n)) {
                        QVec combo(dim_);
                        Rational ap = dot(a, p), an = dot(a, n);
                        for (std::size_t j = 0; j < dim_; ++j)
                            combo[j] = ap * n[j] - an * p[j];
                        next.push_back(primitive(combo));
                    }
            rays_ = std::move(next);
            dedupe_rays();
        }
        processed_.push_back(a);
    }

    /// Extreme rays only: tight constraints of an extreme ray span a
    /// (dim-1)-dimensional space. Requires the final cone to be pointed.
    std::vector<QVec> extreme_rays() const {
        if (!lineality_.empty()) throw std::logic_error("cone is not pointed");
        std::vector<QVec> out;
        for (const auto& r : rays_) {
            if (is_zero_vec(r)) continue;
            QMat tight;
            for (const auto& a : processed_)
                if (dot(a, r) == 0) tight.push_back(a);
            if (matrix_rank(std::move(tight)) == dim_ - 1) out.push_back(r);
        }
        return out;
    }

private:
    static QVec project(const QVec& v, const QVec& a, const QVec& pivot, const Rational& pv) {
        Rational f = dot(a, v) / pv;
        QVec out(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) out[j] = v[j] - f * pivot[j];
        return out;
    }

    std::vector<bool> tight_set(const QVec& r) const {
        std::vector<bool> t(processed_.size());
        for (std::size_t i = 0; i < processed_.size(); ++i) t[i] = dot(processed_[i], r) == 0;
        return t;
    }

    bool adjacent(const QVec& p, const QVec& n) const {
        std::vector<bool> tp = tight_set(p), tn = tight_set(n);
        std::vector<bool> common(processed_.size());
        for (std::size_t i = 0; i < processed_.size(); ++i) common[i] = tp[i] && tn[i];
        for (const auto& r : rays_) {
            if (r == p || r == n) continue;
            std::vector<bool> tr = tight_set(r);
            bool contains_common = true;
            for (std::size_t i = 0; i < processed_.size(); ++i)
                if (common[i] && !tr[i]) contains_common = false;
            if (contains_common) return false;
        }
        return true;
    }

    void dedupe_rays() {
        std::sort(rays_.begin(), rays_.end());
        rays_.erase(std::unique(rays_.begin(), rays_.end()), rays_.end());
        rays_.erase(std::remove_if(rays_.begin(), rays_.end(), is_zero_vec), rays_.end());
    }

    std::size_t dim_;
    std::vector<QVec> rays_;
    std::vector<QVec> lineality_;
    std::vector<QVec> processed_;
};

}  // namespace

NewtonPolyhedron NewtonPolyhedron::build(const MonomialIdeal& ideal) {
    const std::size_t m = ideal.num_vars();
    // Valid inequalities a . x >= b for conv(G) + R_+^m form the cone
    // {(a, b) : a >= 0, a . gamma - b >= 0}; its extreme rays are exactly the
    // facets plus the trivial ray (0, -1).
    DoubleDescription dd(m + 1);
    for (std::size_t j = 0; j < m; ++j) {
        QVec row(m + 1, Rational(0));
        row[j] = 1;
        dd.add_constraint(row);
    }
    for (const auto& g : ideal.generators()) {
        QVec row(m + 1, Rational(0));
        for (std::size_t j = 0; j < m; ++j) row[j] = Rational(g[j]);
        row[m] = -1;
        dd.add_constraint(row);
    }

    std::vector<Facet> facets;
    for (const auto& ray : dd.extreme_rays()) {
        bool nontrivial = false;
        for (std::size_t j = 0; j < m; ++j) nontrivial = nontrivial || ray[j] != 0;
        if (!nontrivial) continue;  // the trivial inequality 0 >= -1
        Facet f;
        f.normal.resize(m);
        for (std::size_t j = 0; j < m; ++j) {
            if (ray[j] < 0) throw std::logic_error("facet normal with negative entry");
            f.normal[j] = numerator(ray[j]);
        }
        f.offset = numerator(ray[m]);
        if (f.offset < 0) throw std::logic_error("facet with negative offset");
        facets.push_back(std::move(f));
    }
    std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
        return a.normal != b.normal ? a.normal > b.normal : a.offset < b.offset;
    });

    NewtonPolyhedron p(m, ideal.generators(), std::move(facets));
    p.verify();
    return p;
}

void NewtonPolyhedron::verify() const {
    for (const auto& g : generators_)
        for (const auto& f : facets_)
            if (f.evaluate(g) < 0) throw std::logic_error("generator violates a facet");
    for (const auto& f : facets_) {
        std::vector<const ExponentVector*> tight;
        for (const auto& g : generators_)
            if (f.evaluate(g) == 0) tight.push_back(&g);
        if (tight.empty()) throw std::logic_error("facet tight at no generator");
        // Directions within the face: generator differences plus the
        // coordinate recession directions orthogonal to the normal.
        QMat dirs;
        for (std::size_t i = 1; i < tight.size(); ++i) {
            QVec d(dim_);
            for (std::size_t j = 0; j < dim_; ++j)
                d[j] = Rational((*tight[i])[j] - (*tight[0])[j]);
            dirs.push_back(std::move(d));
        }
        for (std::size_t j = 0; j < dim_; ++j)
            if (f.normal[j] == 0) {
                QVec d(dim_, Rational(0));
                d[j] = 1;
                dirs.push_back(std::move(d));
            }
        if (matrix_rank(std::move(dirs)) != dim_ - 1)
            throw std::logic_error("facet face does not span dimension m-1");
    }
}

namespace detail {

GeoClass classify_by_facets(const NewtonPolyhedron& p, const ExponentVector& tau,
                            std::vector<std::size_t>* tight_out,
                            std::optional<std::size_t>* violated_out) {
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < p.facets().size(); ++i) {
        Rational v = p.facets()[i].evaluate(tau);
        if (v < 0) {
            if (violated_out) *violated_out = i;
            return GeoClass::Outside;
        }
        if (v == 0) tight.push_back(i);
    }
    if (tight_out) *tight_out = tight;
    return tight.empty() ? GeoClass::Interior : GeoClass::Boundary;
}

LpClassification classify_by_lp(const std::vector<ExponentVector>& gens,
                                const ExponentVector& tau) {
    const std::size_t m = tau.size(), g = gens.size();
    // Variables: eps, lambda_1..lambda_g, mu_1..mu_m.
    const std::size_t nv = 1 + g + m;
    std::vector<LinearConstraint> cons;
    for (std::size_t j = 0; j < m; ++j) {
        LinearConstraint c{QVec(nv, Rational(0)), Relation::Eq, Rational(tau[j])};
        c.coeffs[0] = 1;
        for (std::size_t i = 0; i < g; ++i) c.coeffs[1 + i] = Rational(gens[i][j]);
        c.coeffs[1 + g + j] = 1;
        cons.push_back(std::move(c));
    }
    LinearConstraint sum{QVec(nv, Rational(0)), Relation::Eq, Rational(1)};
    for (std::size_t i = 0; i < g; ++i) sum.coeffs[1 + i] = 1;
    cons.push_back(std::move(sum));

    QVec objective(nv, Rational(0));
    objective[0] = 1;
    LpResult r = lp_maximize(objective, cons);
    if (r.status == LpStatus::Unbounded) throw std::logic_error("epsilon-LP cannot be unbounded");
    LpClassification out;
    if (r.status == LpStatus::Infeasible) {
        out.cls = GeoClass::Outside;
        return out;
    }
    out.cls = r.objective > 0 ? GeoClass::Interior : GeoClass::Boundary;
    out.epsilon = r.objective;
    out.lambda.assign(r.solution.begin() + 1, r.solution.begin() + 1 + static_cast<long>(g));
    out.mu.assign(r.solution.begin() + 1 + static_cast<long>(g), r.solution.end());
    return out;
}

}  // namespace detail

PointLocation locate(const NewtonPolyhedron& p, const MonomialIdeal& ideal,
                     const ExponentVector& tau) {
    if (tau.size() != p.dim()) throw std::invalid_argument("locate: dimension mismatch");
    PointLocation loc;
    if (ideal.contains(tau)) {
        loc.tag = PointLocation::Tag::InIdeal;
        return loc;
    }
    std::vector<std::size_t> tight;
    std::optional<std::size_t> violated;
    detail::GeoClass by_facets = detail::classify_by_facets(p, tau, &tight, &violated);
    detail::LpClassification by_lp = detail::classify_by_lp(p.generators(), tau);
    if (by_facets != by_lp.cls)
        throw std::logic_error("facet and epsilon-LP point classifications disagree");
    switch (by_facets) {
        case detail::GeoClass::Outside:
            loc.tag = PointLocation::Tag::Outside;
            loc.violated_facet = violated;
            break;
        case detail::GeoClass::Boundary:
            loc.tag = PointLocation::Tag::Boundary;
            loc.tight_facets = std::move(tight);
            loc.epsilon = 0;
            loc.lambda = std::move(by_lp.lambda);
            loc.mu = std::move(by_lp.mu);
            break;
        case detail::GeoClass::Interior:
            loc.tag = PointLocation::Tag::Interior;
            loc.epsilon = by_lp.epsilon;
            loc.lambda = std::move(by_lp.lambda);
            loc.mu = std::move(by_lp.mu);
            break;
    }
    return loc;
}

namespace {

// Iterates all lattice points of the box [0, bounds_1] x ... x [0, bounds_m].
template <typename F>
void for_each_lattice_point(const std::vector<std::int64_t>& bounds, F&& fn) {
    std::vector<std::int64_t> point(bounds.size(), 0);
    for (;;) {
        fn(point);
        std::size_t j = 0;
        while (j < bounds.size() && point[j] == bounds[j]) point[j++] = 0;
        if (j == bounds.size()) return;
        ++point[j];
    }
}

}  // namespace

MonomialIdeal closure_generators(const MonomialIdeal& ideal) {
    if (!ideal.is_primary())
        throw NonPrimaryError("closure_generators requires a primary monomial ideal");
    const std::size_t m = ideal.num_vars();
    NewtonPolyhedron p = NewtonPolyhedron::build(ideal);

    std::vector<std::int64_t> bounds(m);
    for (std::size_t j = 0; j < m; ++j) bounds[j] = ideal.max_exponent(j) + 1;

    for (;;) {
        std::vector<ExponentVector> found = ideal.generators();
        for_each_lattice_point(bounds, [&](const std::vector<std::int64_t>& pt) {
            ExponentVector tau(pt);
            if (ideal.contains(tau)) return;
            if (locate(p, ideal, tau).tag == PointLocation::Tag::Interior) found.push_back(tau);
        });
        MonomialIdeal result(m, std::move(found));

        // Saturation: a minimal generator on the outer slab of the box means
        // the box may have clipped the generator set; enlarge and retry.
        bool saturated = true;
        for (const auto& g : result.generators())
            for (std::size_t j = 0; j < m; ++j)
                if (g[j] >= bounds[j]) saturated = false;
        if (saturated) return result;
        for (auto& b : bounds) ++b;
    }
}

bool check_power_witness(const MonomialIdeal& ideal, const ExponentVector& tau,
                         const PowerWitness& w) {
    const auto& gens = ideal.generators();
    if (w.alpha.size() != gens.size() || w.n <= 0 || w.theta <= w.n) return false;
    std::int64_t total = 0;
    std::vector<std::int64_t> sum(tau.size(), 0);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (w.alpha[i] < 0) return false;
        total += w.alpha[i];
        for (std::size_t j = 0; j < tau.size(); ++j) sum[j] += w.alpha[i] * gens[i][j];
    }
    if (total != w.theta) return false;
    for (std::size_t j = 0; j < tau.size(); ++j)
        if (sum[j] > w.n * tau[j]) return false;
    return true;
}

namespace {

using LatticeVec = std::vector<std::int64_t>;

struct LevelEntry {
    LatticeVec parent;
    std::size_t gen_index;
};

// One BFS level: componentwise-minimal reachable sums with a parent link.
using Level = std::map<LatticeVec, LevelEntry>;

Level advance_level(const Level& prev, const std::vector<ExponentVector>& gens,
                    const LatticeVec& cap) {
    Level next;
    for (const auto& [u, entry] : prev) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            LatticeVec v = u;
            bool ok = true;
            for (std::size_t j = 0; j < v.size(); ++j) {
                v[j] += gens[i][j];
                if (v[j] > cap[j]) ok = false;
            }
            if (ok) next.emplace(std::move(v), LevelEntry{u, i});
        }
    }
    // Keep only componentwise-minimal points; dominated sums never help.
    Level pruned;
    for (const auto& [v, e] : next) {
        bool dominated = false;
        for (const auto& [w, e2] : next) {
            if (w == v) continue;
            bool le = true;
            for (std::size_t j = 0; j < v.size(); ++j) le = le && w[j] <= v[j];
            if (le) dominated = true;
        }
        if (!dominated) pruned.emplace(v, e);
    }
    return pruned;
}

}  // namespace

std::optional<PowerWitness> power_witness(const MonomialIdeal& ideal, const ExponentVector& tau,
                                          std::int64_t n_max) {
    const auto& gens = ideal.generators();
    const std::size_t m = tau.size(), g = gens.size();
    if (m != ideal.num_vars()) throw std::invalid_argument("power_witness: dimension mismatch");

    for (std::int64_t n = 1; n <= n_max; ++n) {
        // Cheap relaxation: max sum(alpha) s.t. sum alpha_i gamma_i <= n tau.
        std::vector<LinearConstraint> cons;
        for (std::size_t j = 0; j < m; ++j) {
            LinearConstraint c{QVec(g, Rational(0)), Relation::LessEq, Rational(n * tau[j])};
            for (std::size_t i = 0; i < g; ++i) c.coeffs[i] = Rational(gens[i][j]);
            cons.push_back(std::move(c));
        }
        QVec objective(g, Rational(1));
        LpResult bound = lp_maximize(objective, cons);
        bool unbounded = bound.status == LpStatus::Unbounded;
        if (bound.status == LpStatus::Optimal && bound.objective < Rational(n + 1)) continue;

        LatticeVec cap(m);
        for (std::size_t j = 0; j < m; ++j) cap[j] = n * tau[j];
        std::vector<Level> levels;
        levels.push_back(Level{{LatticeVec(m, 0), LevelEntry{}}});
        while (!levels.back().empty()) {
            if (unbounded && static_cast<std::int64_t>(levels.size()) > n + 1) break;
            levels.push_back(advance_level(levels.back(), gens, cap));
        }
        if (levels.back().empty()) levels.pop_back();
        std::int64_t theta = static_cast<std::int64_t>(levels.size()) - 1;
        if (theta < n + 1) continue;

        PowerWitness w;
        w.n = n;
        w.theta = theta;
        w.alpha.assign(g, 0);
        LatticeVec cur = levels.back().begin()->first;
        for (std::int64_t k = theta; k > 0; --k) {
            const LevelEntry& e = levels[static_cast<std::size_t>(k)].at(cur);
            ++w.alpha[e.gen_index];
            cur = e.parent;
        }
        if (!check_power_witness(ideal, tau, w))
            throw std::logic_error("power witness search produced an invalid witness");
        return w;
    }
    return std::nullopt;
}

std::optional<SupportingNormal> supporting_normal(const NewtonPolyhedron& p,
                                                  const ExponentVector& tau) {
    if (detail::classify_by_facets(p, tau) != detail::GeoClass::Boundary)
        throw std::invalid_argument("supporting_normal requires a boundary point");
    const std::size_t m = p.dim();
    // Variables: a_1..a_m, t; maximize t = min margin over the coordinates.
    const std::size_t nv = m + 1;
    std::vector<LinearConstraint> cons;
    LinearConstraint norm{QVec(nv, Rational(0)), Relation::Eq, Rational(1)};
    for (std::size_t j = 0; j < m; ++j) norm.coeffs[j] = 1;
    cons.push_back(std::move(norm));
    for (const auto& gamma : p.generators()) {
        LinearConstraint c{QVec(nv, Rational(0)), Relation::GreaterEq, Rational(0)};
        for (std::size_t j = 0; j < m; ++j) c.coeffs[j] = Rational(gamma[j] - tau[j]);
        cons.push_back(std::move(c));
    }
    for (std::size_t j = 0; j < m; ++j) {
        LinearConstraint c{QVec(nv, Rational(0)), Relation::GreaterEq, Rational(0)};
        c.coeffs[j] = 1;
        c.coeffs[m] = -1;
        cons.push_back(std::move(c));
    }
    QVec objective(nv, Rational(0));
    objective[m] = 1;
    LpResult r = lp_maximize(objective, cons);
    if (r.status != LpStatus::Optimal)
        throw std::logic_error("supporting-normal LP must have an optimum");
    if (r.objective == 0) return std::nullopt;

    QVec a(r.solution.begin(), r.solution.begin() + static_cast<long>(m));
    QVec prim = primitive(a);
    SupportingNormal out;
    out.normal.resize(m);
    out.degree = 0;
    for (std::size_t j = 0; j < m; ++j) {
        out.normal[j] = numerator(prim[j]);
        out.degree += out.normal[j] * tau[j];
    }
    return out;
}

}  // namespace contclose
