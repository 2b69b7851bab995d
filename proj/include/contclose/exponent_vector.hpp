#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace contclose {

/// Exponent tuple of a monomial in m variables. Entries are nonnegative.
class ExponentVector {
public:
    explicit ExponentVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw std::invalid_argument("exponent vector must have length >= 1");
        for (auto e : entries_)
            if (e < 0) throw std::invalid_argument("negative exponent");
    }

    static ExponentVector zero(std::size_t m) {
        return ExponentVector(std::vector<std::int64_t>(m, 0));
    }

    /// c * e_j.
    static ExponentVector axis(std::size_t m, std::size_t j, std::int64_t c = 1) {
        std::vector<std::int64_t> v(m, 0);
        v.at(j) = c;
        return ExponentVector(std::move(v));
    }

    std::size_t size() const { return entries_.size(); }
    std::int64_t operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<std::int64_t>& entries() const { return entries_; }

    std::int64_t total_degree() const {
        return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
    }

    /// Componentwise >=.
    bool dominates(const ExponentVector& other) const {
        check_same_size(other);
        for (std::size_t i = 0; i < size(); ++i)
            if (entries_[i] < other.entries_[i]) return false;
        return true;
    }

    ExponentVector operator+(const ExponentVector& other) const {
        check_same_size(other);
        std::vector<std::int64_t> v(size());
        for (std::size_t i = 0; i < size(); ++i) v[i] = entries_[i] + other.entries_[i];
        return ExponentVector(std::move(v));
    }

    ExponentVector operator*(std::int64_t c) const {
        if (c < 0) throw std::invalid_argument("negative scale");
        std::vector<std::int64_t> v(size());
        for (std::size_t i = 0; i < size(); ++i) v[i] = entries_[i] * c;
        return ExponentVector(std::move(v));
    }

    /// Componentwise product (z_j -> z_j^{delta_j} on exponents).
    ExponentVector scaled(const std::vector<std::int64_t>& delta) const {
        if (delta.size() != size()) throw std::invalid_argument("scaling dimension mismatch");
        std::vector<std::int64_t> v(size());
        for (std::size_t i = 0; i < size(); ++i) {
            if (delta[i] <= 0) throw std::invalid_argument("scaling exponents must be positive");
            v[i] = entries_[i] * delta[i];
        }
        return ExponentVector(std::move(v));
    }

    auto operator<=>(const ExponentVector&) const = default;

private:
    void check_same_size(const ExponentVector& other) const {
        if (other.size() != size()) throw std::invalid_argument("exponent dimension mismatch");
    }

    std::vector<std::int64_t> entries_;
};

}  // namespace contclose
