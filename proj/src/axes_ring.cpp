#include "contclose/axes_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace contclose {

bool AxesElement::is_zero() const {
    if (constant_ != 0) return false;
    for (const auto& p : parts_)
        if (!p.empty()) return false;
    return true;
}

AxesElement AxesElement::operator+(const AxesElement& other) const {
    check_same_axes(other);
    AxesElement out = *this;
    out.constant_ += other.constant_;
    for (std::size_t j = 0; j < axes(); ++j)
        for (const auto& [d, c] : other.parts_[j]) out.add_term(j, d, c);
    return out;
}

AxesElement AxesElement::operator-(const AxesElement& other) const { return *this + (-other); }

AxesElement AxesElement::operator-() const {
    AxesElement out(axes());
    out.constant_ = -constant_;
    for (std::size_t j = 0; j < axes(); ++j)
        for (const auto& [d, c] : parts_[j]) out.parts_[j].emplace(d, -c);
    return out;
}

AxesElement AxesElement::operator*(const AxesElement& other) const {
    check_same_axes(other);
    // (c + sum p_j)(c' + sum p'_j) = c c' + sum_j (c p'_j + c' p_j + p_j p'_j);
    // cross terms x_i x_j vanish in the ring of axes.
    AxesElement out(axes());
    out.constant_ = constant_ * other.constant_;
    for (std::size_t j = 0; j < axes(); ++j) {
        for (const auto& [d, c] : other.parts_[j]) out.add_term(j, d, constant_ * c);
        for (const auto& [d, c] : parts_[j]) out.add_term(j, d, other.constant_ * c);
        for (const auto& [d1, c1] : parts_[j])
            for (const auto& [d2, c2] : other.parts_[j]) out.add_term(j, d1 + d2, c1 * c2);
    }
    return out;
}

AxesElement AxesElement::operator*(const Rational& c) const {
    AxesElement out(axes());
    if (c == 0) return out;
    out.constant_ = constant_ * c;
    for (std::size_t j = 0; j < axes(); ++j)
        for (const auto& [d, k] : parts_[j]) out.parts_[j].emplace(d, k * c);
    return out;
}

AxesElement AxesElement::pow(std::uint64_t n) const {
    AxesElement result = constant(axes(), 1);
    AxesElement base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = (n >>= 1) ? base * base : base;
    }
    return result;
}

std::string AxesElement::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rational& c, std::size_t j, std::int64_t d) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (d == 0) {
            os << contclose::to_string(a);
            return;
        }
        if (a != 1) os << contclose::to_string(a) << "*";
        os << "x" << (j + 1);
        if (d > 1) os << "^" << d;
    };
    if (constant_ != 0) emit(constant_, 0, 0);
    for (std::size_t j = 0; j < axes(); ++j)
        for (const auto& [d, c] : parts_[j]) emit(c, j, d);
    return os.str();
}

AxesElement CanonicalAxesIdeal::pivot_generator(std::size_t i) const {
    const std::size_t k = axes();
    std::size_t pa = pivot_axes_.at(i);
    AxesElement g = AxesElement::axis_power(k, pa, *orders_[pa]);
    for (std::size_t c = 0; c < free_axes_.size(); ++c) {
        std::size_t fa = free_axes_[c];
        g.add_term(fa, *orders_[fa], lambda_[i][c]);
    }
    return g;
}

AxesElement CanonicalAxesIdeal::order_plus_one_generator(std::size_t j) const {
    if (!orders_.at(j).has_value())
        throw std::invalid_argument("axis has infinite order, no x^{t+1} generator");
    return AxesElement::axis_power(axes(), j, *orders_[j] + 1);
}

struct CanonicalFormBuilder {
    static CanonicalFormResult run(const std::vector<AxesElement>& gens) {
        if (gens.empty()) throw std::invalid_argument("canonical_form needs >= 1 generator");
        const std::size_t k = gens[0].axes();
        for (const auto& g : gens)
            if (g.axes() != k) throw std::invalid_argument("axis count mismatch");

        CanonicalFormResult out;
        out.ideal.orders_.assign(k, std::nullopt);

        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i].is_unit()) {
                out.ideal.unit_ = true;
                out.ideal.orders_.assign(k, AxisValuation(0));
                out.certificate.unit_input = i;
                return out;
            }

        // Orders t_j = min generator valuation per axis.
        for (std::size_t j = 0; j < k; ++j) {
            AxisValuation t;
            for (const auto& g : gens) {
                AxisValuation v = g.valuation(j);
                if (v && (!t || *v < *t)) t = v;
            }
            out.ideal.orders_[j] = t;
            if (t) out.ideal.finite_axes_.push_back(j);
        }
        const auto& finite = out.ideal.finite_axes_;

        // Witness of exact order per finite axis, for the x_j^{t_j+1} layer.
        for (std::size_t j : finite) {
            std::size_t w = gens.size();
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (gens[i].valuation(j) == out.ideal.orders_[j]) {
                    w = i;
                    break;
                }
            out.certificate.order_witness.push_back(w);
        }

        // Leading-coefficient rows, augmented with identity to record the
        // combinations Gauss elimination takes.
        QMat rows(gens.size(), QVec(finite.size() + gens.size(), Rational(0)));
        for (std::size_t i = 0; i < gens.size(); ++i) {
            for (std::size_t c = 0; c < finite.size(); ++c)
                rows[i][c] = gens[i].coefficient(finite[c], *out.ideal.orders_[finite[c]]);
            rows[i][finite.size() + i] = 1;
        }
        // Eliminate over the leading-coefficient block only.
        std::vector<std::size_t> pivot_cols;
        std::size_t r = 0;
        for (std::size_t c = 0; c < finite.size() && r < rows.size(); ++c) {
            std::size_t p = r;
            while (p < rows.size() && rows[p][c] == 0) ++p;
            if (p == rows.size()) continue;
            std::swap(rows[p], rows[r]);
            Rational inv = rows[r][c];
            for (auto& x : rows[r]) x /= inv;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == r || rows[i][c] == 0) continue;
                Rational f = rows[i][c];
                for (std::size_t jj = 0; jj < rows[i].size(); ++jj) rows[i][jj] -= f * rows[r][jj];
            }
            pivot_cols.push_back(c);
            ++r;
        }

        for (std::size_t i = 0; i < pivot_cols.size(); ++i)
            out.ideal.pivot_axes_.push_back(finite[pivot_cols[i]]);
        for (std::size_t c = 0; c < finite.size(); ++c)
            if (std::find(pivot_cols.begin(), pivot_cols.end(), c) == pivot_cols.end())
                out.ideal.free_axes_.push_back(finite[c]);

        out.ideal.lambda_.assign(pivot_cols.size(), QVec(out.ideal.free_axes_.size()));
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            std::size_t c_out = 0;
            for (std::size_t c = 0; c < finite.size(); ++c)
                if (std::find(pivot_cols.begin(), pivot_cols.end(), c) == pivot_cols.end())
                    out.ideal.lambda_[i][c_out++] = rows[i][c];
        }

        // Certificate layer: pivot generator = combination of inputs minus a
        // remainder of per-axis order > t_j.
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            QVec combo(rows[i].begin() + static_cast<long>(finite.size()), rows[i].end());
            AxesElement sum(k);
            for (std::size_t g = 0; g < gens.size(); ++g) sum = sum + gens[g] * combo[g];
            out.certificate.pivot_combinations.push_back(std::move(combo));
            out.certificate.pivot_remainders.push_back(sum - out.ideal.pivot_generator(i));
        }
        return out;
    }
};

CanonicalFormResult canonical_form(const std::vector<AxesElement>& generators) {
    return CanonicalFormBuilder::run(generators);
}

bool check_canonical_form(const std::vector<AxesElement>& gens, const CanonicalFormResult& res) {
    const CanonicalAxesIdeal& ideal = res.ideal;
    const CanonicalFormCertificate& cert = res.certificate;
    if (ideal.is_unit())
        return cert.unit_input && *cert.unit_input < gens.size() &&
               gens[*cert.unit_input].is_unit();
    const std::size_t k = ideal.axes();

    // Layer 2: x_j * g = x_j^{t_j+1} * u with u(0) != 0 certifies
    // x_j^{t_j+1} in the ideal for every finite axis.
    const auto& finite = ideal.finite_axes();
    if (cert.order_witness.size() != finite.size()) return false;
    for (std::size_t c = 0; c < finite.size(); ++c) {
        std::size_t j = finite[c];
        const AxesElement& g = gens.at(cert.order_witness[c]);
        std::int64_t t = *ideal.orders()[j];
        if (g.valuation(j) != AxisValuation(t)) return false;
        AxesElement u(k);
        for (const auto& [d, coef] : g.axis_part(j)) {
            if (d - t == 0)
                u.add_constant(coef);
            else
                u.add_term(j, d - t, coef);
        }
        if (!u.is_unit()) return false;
        AxesElement lhs = AxesElement::axis_power(k, j, 1) * g;
        AxesElement rhs = AxesElement::axis_power(k, j, t + 1) * u;
        if (!(lhs == rhs)) return false;
    }

    // Layer 1: each pivot generator equals its recorded input combination up
    // to a remainder absorbed by the x_j^{t_j+1} generators.
    if (cert.pivot_combinations.size() != ideal.pivot_axes().size()) return false;
    for (std::size_t i = 0; i < cert.pivot_combinations.size(); ++i) {
        const QVec& combo = cert.pivot_combinations[i];
        if (combo.size() != gens.size()) return false;
        AxesElement sum(k);
        for (std::size_t g = 0; g < gens.size(); ++g) sum = sum + gens[g] * combo[g];
        AxesElement rem = cert.pivot_remainders.at(i);
        if (!(sum == ideal.pivot_generator(i) + rem)) return false;
        if (rem.constant_term() != 0) return false;
        for (std::size_t j = 0; j < k; ++j) {
            AxisValuation v = rem.valuation(j);
            if (!v) continue;
            AxisValuation t = ideal.orders()[j];
            if (!t || *v <= *t) return false;
        }
    }
    return true;
}

AxesMembership ideal_membership(const AxesElement& f, const CanonicalAxesIdeal& ideal) {
    if (f.axes() != ideal.axes()) throw std::invalid_argument("axis count mismatch");
    AxesMembership out;
    const std::size_t k = ideal.axes();
    if (ideal.is_unit()) {
        out.member = true;
        out.combination.clear();
        return out;
    }

    // (ii) f must vanish identically on infinite-order axes.
    if (f.is_unit()) {
        // A unit is a member only of the unit ideal; some axis must reject it.
        // Orders are >= 1 on finite axes and the constant shows on every axis.
        for (std::size_t j = 0; j < k; ++j) {
            if (!ideal.orders()[j]) {
                out.reason = AxesMembership::FailReason::NonzeroOnInfiniteAxis;
                out.failing_axis = j;
                return out;
            }
        }
        out.reason = AxesMembership::FailReason::ValuationBelowOrder;
        out.failing_axis = 0;
        return out;
    }
    for (std::size_t j = 0; j < k; ++j) {
        if (ideal.orders()[j]) continue;
        if (f.valuation(j)) {
            out.reason = AxesMembership::FailReason::NonzeroOnInfiniteAxis;
            out.failing_axis = j;
            return out;
        }
    }

    // (i) per-axis valuations meet the orders.
    bool all_strict = true;
    for (std::size_t j : ideal.finite_axes()) {
        std::int64_t t = *ideal.orders()[j];
        AxisValuation v = f.valuation(j);
        if (v && *v < t) {
            out.reason = AxesMembership::FailReason::ValuationBelowOrder;
            out.failing_axis = j;
            return out;
        }
        if (v && *v == t) all_strict = false;
    }

    // Leading coefficients across the finite axes.
    const auto& pivots = ideal.pivot_axes();
    const auto& free = ideal.free_axes();
    QVec beta_pivot(pivots.size()), beta_free(free.size());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        beta_pivot[i] = f.coefficient(pivots[i], *ideal.orders()[pivots[i]]);
    for (std::size_t c = 0; c < free.size(); ++c)
        beta_free[c] = f.coefficient(free[c], *ideal.orders()[free[c]]);

    if (all_strict) {
        // Strict valuations everywhere: membership holds outright, with the
        // zero combination and pure remainders.
        out.member = true;
        out.strict_valuation_fast_path = true;
        out.combination.assign(pivots.size(), Rational(0));
    } else {
        // (iii) beta_free must match the lambda-combination forced by the
        // pivot coefficients.
        for (std::size_t c = 0; c < free.size(); ++c) {
            Rational expected = 0;
            for (std::size_t i = 0; i < pivots.size(); ++i)
                expected += beta_pivot[i] * ideal.lambda()[i][c];
            if (expected != beta_free[c]) {
                out.reason = AxesMembership::FailReason::LeadingCoefficientMismatch;
                out.failing_axis = free[c];
                out.expected = expected;
                out.actual = beta_free[c];
                return out;
            }
        }
        out.member = true;
        out.combination = beta_pivot;
    }

    // Remainders: r = f - sum c_i pivot_gen_i has order > t_j everywhere and
    // splits as sum_j x_j^{t_j+1} h_j.
    AxesElement r = f;
    for (std::size_t i = 0; i < pivots.size(); ++i)
        r = r - ideal.pivot_generator(i) * out.combination[i];
    for (std::size_t j : ideal.finite_axes()) {
        std::int64_t t = *ideal.orders()[j];
        AxesElement h(k);
        for (const auto& [d, c] : r.axis_part(j)) {
            if (d <= t) throw std::logic_error("membership remainder below order bound");
            if (d - (t + 1) == 0)
                h.add_constant(c);
            else
                h.add_term(j, d - (t + 1), c);
        }
        if (!h.is_zero()) out.remainders.emplace_back(j, std::move(h));
    }
    return out;
}

bool check_membership_certificate(const AxesElement& f, const CanonicalAxesIdeal& ideal,
                                  const AxesMembership& cert) {
    if (!cert.member) return false;
    if (ideal.is_unit()) return true;
    if (cert.combination.size() != ideal.pivot_axes().size()) return false;
    AxesElement sum(ideal.axes());
    for (std::size_t i = 0; i < cert.combination.size(); ++i)
        sum = sum + ideal.pivot_generator(i) * cert.combination[i];
    for (const auto& [j, h] : cert.remainders) {
        if (!ideal.orders()[j]) return false;
        sum = sum + ideal.order_plus_one_generator(j) * h;
    }
    return sum == f;
}

AxesElement polynomial_image(const Polynomial& f, const std::vector<AxesElement>& images) {
    if (images.size() != f.num_vars())
        throw std::invalid_argument("one image per variable required");
    const std::size_t k = images.empty() ? 1 : images[0].axes();
    for (const auto& im : images)
        if (im.axes() != k) throw std::invalid_argument("axis count mismatch among images");
    AxesElement out(k);
    for (const auto& [e, c] : f.terms()) {
        AxesElement term = AxesElement::constant(k, c);
        for (std::size_t j = 0; j < images.size(); ++j)
            if (e[j] > 0) term = term * images[j].pow(static_cast<std::uint64_t>(e[j]));
        out = out + term;
    }
    return out;
}

}  // namespace contclose
