#include "contclose/polynomial.hpp"

#include <sstream>

namespace contclose {

void Polynomial::add_term(const ExponentVector& e, const Rational& c) {
    if (e.size() != num_vars_) throw std::invalid_argument("term dimension mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    check_same_vars(other);
    Polynomial out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    check_same_vars(other);
    Polynomial out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, -c);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(num_vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_same_vars(other);
    Polynomial out(num_vars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_) out.add_term(e1 + e2, c1 * c2);
    return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial out(num_vars_);
    if (c == 0) return out;
    for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
    return out;
}

Polynomial Polynomial::pow(std::uint64_t n) const {
    Polynomial result = constant(num_vars_, 1);
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = (n >>= 1) ? base * base : base;
    }
    return result;
}

std::optional<std::int64_t> Polynomial::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    std::int64_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.total_degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::int64_t d = terms_.begin()->first.total_degree();
    for (const auto& [e, c] : terms_)
        if (e.total_degree() != d) return false;
    return true;
}

Polynomial Polynomial::substitute_powers(const std::vector<std::int64_t>& delta) const {
    Polynomial out(num_vars_);
    for (const auto& [e, c] : terms_) out.add_term(e.scaled(delta), c);
    return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != num_vars_) throw std::invalid_argument("evaluation dimension mismatch");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t j = 0; j < num_vars_; ++j) {
            Rational p = 1;
            for (std::int64_t k = 0; k < e[j]; ++k) p *= point[j];
            term *= p;
        }
        sum += term;
    }
    return sum;
}

std::complex<double> Polynomial::evaluate(std::span<const std::complex<double>> point) const {
    if (point.size() != num_vars_) throw std::invalid_argument("evaluation dimension mismatch");
    std::complex<double> sum = 0;
    for (const auto& [e, c] : terms_) {
        std::complex<double> term = c.convert_to<double>();
        for (std::size_t j = 0; j < num_vars_; ++j)
            for (std::int64_t k = 0; k < e[j]; ++k) term *= point[j];
        sum += term;
    }
    return sum;
}

std::string Polynomial::to_string(std::span<const std::string> vars) const {
    if (vars.size() != num_vars_) throw std::invalid_argument("variable name count mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
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
        bool any_var = e.total_degree() > 0;
        if (!any_var || a != 1) {
            os << contclose::to_string(a);
            if (any_var) os << "*";
        }
        bool first_var = true;
        for (std::size_t j = 0; j < num_vars_; ++j) {
            if (e[j] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << vars[j];
            if (e[j] > 1) os << "^" << e[j];
        }
    }
    return os.str();
}

}  // namespace contclose
