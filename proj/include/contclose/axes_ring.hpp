#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "contclose/linalg.hpp"
#include "contclose/polynomial.hpp"
#include "contclose/rational.hpp"

namespace contclose {

/// Valuation on one axis; nullopt means the element vanishes there (order
/// infinity).
using AxisValuation = std::optional<std::int64_t>;

/// Element of the ring of axes K[x_1..x_k]/(x_i x_j, i != j), stored in its
/// unique normal form: a constant plus one univariate polynomial without
/// constant term per axis. Products of terms on different axes vanish.
class AxesElement {
public:
    using AxisPart = std::map<std::int64_t, Rational>;  // degree >= 1 -> coefficient

    explicit AxesElement(std::size_t axes) : parts_(axes) {
        if (axes == 0) throw std::invalid_argument("ring of axes needs >= 1 axis");
    }

    static AxesElement constant(std::size_t axes, const Rational& c) {
        AxesElement e(axes);
        e.constant_ = c;
        return e;
    }

    /// c * x_j^degree with degree >= 1.
    static AxesElement axis_power(std::size_t axes, std::size_t j, std::int64_t degree,
                                  const Rational& c = 1) {
        AxesElement e(axes);
        e.add_term(j, degree, c);
        return e;
    }

    std::size_t axes() const { return parts_.size(); }
    const Rational& constant_term() const { return constant_; }
    const AxisPart& axis_part(std::size_t j) const { return parts_.at(j); }

    Rational coefficient(std::size_t j, std::int64_t degree) const {
        if (degree == 0) return constant_;
        auto it = parts_.at(j).find(degree);
        return it == parts_.at(j).end() ? Rational(0) : it->second;
    }

    void add_constant(const Rational& c) { constant_ += c; }

    void add_term(std::size_t j, std::int64_t degree, const Rational& c) {
        if (degree < 1) throw std::invalid_argument("axis term degree must be >= 1");
        if (c == 0) return;
        auto& part = parts_.at(j);
        auto [it, inserted] = part.emplace(degree, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) part.erase(it);
        }
    }

    bool is_zero() const;
    /// Units of the completed local ring: nonzero constant term.
    bool is_unit() const { return constant_ != 0; }

    /// Order of c + p_j(x_j): 0 for units, nullopt when the restriction to
    /// axis j is identically zero.
    AxisValuation valuation(std::size_t j) const {
        if (constant_ != 0) return 0;
        const auto& part = parts_.at(j);
        if (part.empty()) return std::nullopt;
        return part.begin()->first;
    }

    AxesElement operator+(const AxesElement& other) const;
    AxesElement operator-(const AxesElement& other) const;
    AxesElement operator-() const;
    AxesElement operator*(const AxesElement& other) const;
    AxesElement operator*(const Rational& c) const;
    AxesElement pow(std::uint64_t n) const;

    bool operator==(const AxesElement& other) const = default;

    std::string to_string() const;

private:
    void check_same_axes(const AxesElement& other) const {
        if (other.axes() != axes()) throw std::invalid_argument("axis count mismatch");
    }

    Rational constant_ = 0;
    std::vector<AxisPart> parts_;
};

/// Ideal of the completed ring of axes in the canonical generator form of
/// Gauss elimination on leading axis coefficients: pivot generators
/// x_{p_i}^{t_{p_i}} + sum_j lambda_{i,j} x_{f_j}^{t_{f_j}} together with
/// x_j^{t_j + 1} for every finite-order axis j.
class CanonicalAxesIdeal {
public:
    std::size_t axes() const { return orders_.size(); }
    bool is_unit() const { return unit_; }
    const std::vector<AxisValuation>& orders() const { return orders_; }
    const std::vector<std::size_t>& finite_axes() const { return finite_axes_; }
    const std::vector<std::size_t>& pivot_axes() const { return pivot_axes_; }
    const std::vector<std::size_t>& free_axes() const { return free_axes_; }
    const QMat& lambda() const { return lambda_; }

    AxesElement pivot_generator(std::size_t i) const;
    /// x_j^{t_j + 1} for a finite-order axis j (original index).
    AxesElement order_plus_one_generator(std::size_t j) const;

    friend struct CanonicalFormBuilder;

private:
    bool unit_ = false;
    std::vector<AxisValuation> orders_;       // t_j per original axis
    std::vector<std::size_t> finite_axes_;    // axes with finite order
    std::vector<std::size_t> pivot_axes_;     // subset of finite_axes_, one per pivot row
    std::vector<std::size_t> free_axes_;      // finite non-pivot axes
    QMat lambda_;                             // pivot_axes_.size() x free_axes_.size()
};

/// Witnesses that the canonical form generates the same ideal as the input:
/// each pivot generator is an exact rational combination of the inputs up to
/// a remainder of per-axis order > t_j, and each x_j^{t_j+1} arises from an
/// input of exact order t_j via the polynomial identity x_j g = x_j^{t_j+1} u
/// with u(0) != 0.
struct CanonicalFormCertificate {
    std::optional<std::size_t> unit_input;                  // set iff unit ideal
    QMat pivot_combinations;                                // row i: coefficients over inputs
    std::vector<AxesElement> pivot_remainders;              // remainder of row i
    std::vector<std::size_t> order_witness;                 // per finite axis: input index
};

struct CanonicalFormResult {
    CanonicalAxesIdeal ideal;
    CanonicalFormCertificate certificate;
};

/// Computes orders, pivots and the lambda matrix per the reduction of
/// generator leading coefficients; records the replayable certificate.
CanonicalFormResult canonical_form(const std::vector<AxesElement>& generators);

/// Re-checks a CanonicalFormResult against its inputs by exact arithmetic.
bool check_canonical_form(const std::vector<AxesElement>& generators,
                          const CanonicalFormResult& result);

struct AxesMembership {
    enum class FailReason {
        None,
        NonzeroOnInfiniteAxis,
        ValuationBelowOrder,
        LeadingCoefficientMismatch,
    };

    bool member = false;
    bool strict_valuation_fast_path = false;

    // Member data: f = sum_i combination[i] * pivot_generator(i)
    //                + sum_j x_j^{t_j+1} * remainder for finite axes j.
    QVec combination;
    std::vector<std::pair<std::size_t, AxesElement>> remainders;

    // Non-member data.
    FailReason reason = FailReason::None;
    std::size_t failing_axis = 0;
    Rational expected, actual;  // for LeadingCoefficientMismatch
};

/// Membership of f in the ideal, with a certificate either way: order and
/// vanishing conditions per axis plus the leading-coefficient linear system.
AxesMembership ideal_membership(const AxesElement& f, const CanonicalAxesIdeal& ideal);

/// Re-checks a Member certificate by expanding the claimed combination.
bool check_membership_certificate(const AxesElement& f, const CanonicalAxesIdeal& ideal,
                                  const AxesMembership& cert);

/// Evaluates a polynomial at axes-ring elements, one per variable.
AxesElement polynomial_image(const Polynomial& f, const std::vector<AxesElement>& images);

}  // namespace contclose
