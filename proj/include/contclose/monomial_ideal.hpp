#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "contclose/exponent_vector.hpp"

namespace contclose {

/// Monomial ideal stored as the antichain of minimal generator exponents.
/// Dominated generators are dropped on construction; the order is
/// descending lexicographic, which fixes a canonical generator list.
class MonomialIdeal {
public:
    MonomialIdeal(std::size_t num_vars, std::vector<ExponentVector> generators)
        : num_vars_(num_vars) {
        if (generators.empty()) throw std::invalid_argument("monomial ideal needs >= 1 generator");
        for (const auto& g : generators)
            if (g.size() != num_vars_) throw std::invalid_argument("generator dimension mismatch");
        std::sort(generators.begin(), generators.end(), std::greater<ExponentVector>());
        generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
        for (const auto& g : generators) {
            bool dominated = false;
            for (const auto& h : generators)
                if (h != g && g.dominates(h)) dominated = true;
            if (!dominated) generators_.push_back(g);
        }
    }

    std::size_t num_vars() const { return num_vars_; }
    const std::vector<ExponentVector>& generators() const { return generators_; }

    /// True iff tau dominates some generator, i.e. z^tau is in the ideal.
    bool contains(const ExponentVector& tau) const {
        if (tau.size() != num_vars_) throw std::invalid_argument("dimension mismatch");
        for (const auto& g : generators_)
            if (tau.dominates(g)) return true;
        return false;
    }

    /// Unit ideal: the zero exponent vector is a generator.
    bool is_unit() const {
        for (const auto& g : generators_)
            if (g.total_degree() == 0) return true;
        return false;
    }

    /// Primary to the maximal ideal: proper, and every variable appears
    /// as a pure power among the generators.
    bool is_primary() const {
        if (is_unit()) return false;
        for (std::size_t j = 0; j < num_vars_; ++j) {
            bool pure = false;
            for (const auto& g : generators_) {
                bool only_j = g[j] > 0;
                for (std::size_t i = 0; only_j && i < num_vars_; ++i)
                    if (i != j && g[i] != 0) only_j = false;
                pure = pure || only_j;
            }
            if (!pure) return false;
        }
        return true;
    }

    /// Max j-th coordinate over generators.
    std::int64_t max_exponent(std::size_t j) const {
        std::int64_t m = 0;
        for (const auto& g : generators_) m = std::max(m, g[j]);
        return m;
    }

    bool operator==(const MonomialIdeal& other) const {
        return num_vars_ == other.num_vars_ && generators_ == other.generators_;
    }

private:
    std::size_t num_vars_;
    std::vector<ExponentVector> generators_;
};

}  // namespace contclose
