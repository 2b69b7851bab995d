#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "contclose/exponent_vector.hpp"
#include "contclose/rational.hpp"

namespace contclose {

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept in descending lexicographic exponent order and never
/// store a zero coefficient, so equal polynomials compare equal as maps.
class Polynomial {
public:
    using TermMap = std::map<ExponentVector, Rational, std::greater<ExponentVector>>;

    explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {
        if (num_vars == 0) throw std::invalid_argument("polynomial needs >= 1 variable");
    }

    static Polynomial constant(std::size_t num_vars, const Rational& c) {
        Polynomial p(num_vars);
        p.add_term(ExponentVector::zero(num_vars), c);
        return p;
    }

    static Polynomial monomial(const ExponentVector& e, const Rational& c = 1) {
        Polynomial p(e.size());
        p.add_term(e, c);
        return p;
    }

    std::size_t num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Single-term test; the zero polynomial is not a monomial.
    bool is_monomial() const { return terms_.size() == 1; }

    Rational coefficient(const ExponentVector& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Merges a term in, erasing the key if the coefficient cancels to zero.
    void add_term(const ExponentVector& e, const Rational& c);

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(std::uint64_t n) const;

    bool operator==(const Polynomial& other) const = default;

    /// Total degree; nullopt for the zero polynomial.
    std::optional<std::int64_t> total_degree() const;
    bool is_homogeneous() const;

    /// z_j -> z_j^{delta_j}: every exponent vector is scaled componentwise.
    Polynomial substitute_powers(const std::vector<std::int64_t>& delta) const;

    Rational evaluate(std::span<const Rational> point) const;
    std::complex<double> evaluate(std::span<const std::complex<double>> point) const;

    std::string to_string(std::span<const std::string> vars) const;

private:
    void check_same_vars(const Polynomial& other) const {
        if (other.num_vars_ != num_vars_)
            throw std::invalid_argument("polynomial variable count mismatch");
    }

    std::size_t num_vars_;
    TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

}  // namespace contclose
