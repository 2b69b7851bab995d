#pragma once

#include <vector>

#include "contclose/linalg.hpp"
#include "contclose/rational.hpp"

namespace contclose {

enum class Relation { LessEq, Eq, GreaterEq };

struct LinearConstraint {
    QVec coeffs;
    Relation rel;
    Rational rhs;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational objective;
    QVec solution;  // structural variables only, empty unless Optimal
};

/// Maximizes objective . x subject to the constraints and x >= 0, exactly.
/// Two-phase dense simplex with Bland's rule, so it terminates on every
/// input; all arithmetic is rational.
LpResult lp_maximize(const QVec& objective, const std::vector<LinearConstraint>& constraints);

}  // namespace contclose
