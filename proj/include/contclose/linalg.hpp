#pragma once

#include <optional>
#include <vector>

#include "contclose/rational.hpp"

namespace contclose {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref_in_place(QMat& m);

std::size_t matrix_rank(QMat m);

/// Outcome of solving A x = b exactly. Exactly one of the two fields is set:
/// either a solution, or a row combination y with y^T A = 0 and y^T b != 0
/// certifying that no solution exists.
struct LinearSolveResult {
    std::optional<QVec> solution;
    std::optional<QVec> infeasibility_witness;
};

LinearSolveResult solve_linear(const QMat& a, const QVec& b);

Rational dot(const QVec& a, const QVec& b);

}  // namespace contclose
