#include "contclose/linalg.hpp"

#include <stdexcept>

namespace contclose {

std::vector<std::size_t> rref_in_place(QMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = m[r][c];
        for (auto& x : m[r]) x /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t matrix_rank(QMat m) { return rref_in_place(m).size(); }

LinearSolveResult solve_linear(const QMat& a, const QVec& b) {
    const std::size_t rows = a.size();
    if (rows != b.size()) throw std::invalid_argument("solve_linear: row count mismatch");
    const std::size_t cols = rows == 0 ? 0 : a[0].size();

    // Augment with b and with an identity block recording the row operations,
    // so an inconsistent row directly yields its Farkas witness.
    QMat aug(rows, QVec(cols + 1 + rows, Rational(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
        aug[i][cols + 1 + i] = 1;
    }

    // Eliminate over the A|b part only; the identity block just tags along.
    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && aug[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(aug[p], aug[r]);
        Rational inv = aug[r][c];
        for (auto& x : aug[r]) x /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || aug[i][c] == 0) continue;
            Rational f = aug[i][c];
            for (std::size_t j = 0; j < aug[i].size(); ++j) aug[i][j] -= f * aug[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }

    for (std::size_t i = r; i < rows; ++i) {
        if (aug[i][cols] != 0) {
            QVec y(rows);
            for (std::size_t j = 0; j < rows; ++j) y[j] = aug[i][cols + 1 + j];
            return {.solution = std::nullopt, .infeasibility_witness = std::move(y)};
        }
    }

    QVec x(cols, Rational(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = aug[i][cols];
    return {.solution = std::move(x), .infeasibility_witness = std::nullopt};
}

Rational dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace contclose
