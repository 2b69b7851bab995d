#include "contclose/simplex.hpp"

#include <limits>
#include <stdexcept>

namespace contclose {

namespace {

// Dense tableau. Column layout: structural | slack/surplus | artificial | rhs.
// The z-row is stored so that optimality reads "all entries >= 0" and the
// rhs cell holds the current objective value.
class Tableau {
public:
    Tableau(const QVec& objective, std::vector<LinearConstraint> cons) : n_struct_(objective.size()) {
        for (auto& c : cons) {
            if (c.coeffs.size() != n_struct_)
                throw std::invalid_argument("lp constraint dimension mismatch");
            if (c.rhs < 0) {
                for (auto& x : c.coeffs) x = -x;
                c.rhs = -c.rhs;
                c.rel = c.rel == Relation::LessEq    ? Relation::GreaterEq
                        : c.rel == Relation::GreaterEq ? Relation::LessEq
                                                       : Relation::Eq;
            }
        }
        std::size_t n_slack = 0, n_art = 0;
        for (const auto& c : cons) {
            if (c.rel != Relation::Eq) ++n_slack;
            if (c.rel != Relation::LessEq) ++n_art;
        }
        n_total_ = n_struct_ + n_slack + n_art;
        art_begin_ = n_struct_ + n_slack;
        const std::size_t m = cons.size();
        rows_.assign(m, QVec(n_total_ + 1, Rational(0)));
        basis_.assign(m, 0);
        std::size_t slack = n_struct_, art = art_begin_;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n_struct_; ++j) rows_[i][j] = cons[i].coeffs[j];
            rows_[i][n_total_] = cons[i].rhs;
            switch (cons[i].rel) {
                case Relation::LessEq:
                    rows_[i][slack] = 1;
                    basis_[i] = slack++;
                    break;
                case Relation::GreaterEq:
                    rows_[i][slack] = -1;
                    ++slack;
                    rows_[i][art] = 1;
                    basis_[i] = art++;
                    break;
                case Relation::Eq:
                    rows_[i][art] = 1;
                    basis_[i] = art++;
                    break;
            }
        }
        objective_ = objective;
    }

    LpResult run() {
        // Phase 1: maximize -(sum of artificials).
        if (art_begin_ < n_total_) {
            z_.assign(n_total_ + 1, Rational(0));
            for (std::size_t j = art_begin_; j < n_total_; ++j) z_[j] = 1;
            for (std::size_t i = 0; i < rows_.size(); ++i)
                if (basis_[i] >= art_begin_) subtract_row(z_, rows_[i], Rational(1));
            if (!pivot_loop(/*allow_artificial=*/false))
                throw std::logic_error("phase-1 LP cannot be unbounded");
            if (z_[n_total_] != 0) return LpResult{LpStatus::Infeasible, Rational(0), {}};
            evict_artificials();
        }

        // Phase 2 on the original objective.
        z_.assign(n_total_ + 1, Rational(0));
        for (std::size_t j = 0; j < n_struct_; ++j) z_[j] = -objective_[j];
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (z_[basis_[i]] != 0) subtract_row(z_, rows_[i], z_[basis_[i]]);
        if (!pivot_loop(/*allow_artificial=*/false)) return LpResult{LpStatus::Unbounded, Rational(0), {}};

        LpResult out;
        out.status = LpStatus::Optimal;
        out.objective = z_[n_total_];
        out.solution.assign(n_struct_, Rational(0));
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (basis_[i] < n_struct_) out.solution[basis_[i]] = rows_[i][n_total_];
        return out;
    }

private:
    // factor is taken by value: callers pass an entry of target itself.
    static void subtract_row(QVec& target, const QVec& row, Rational factor) {
        for (std::size_t j = 0; j < target.size(); ++j) target[j] -= factor * row[j];
    }

    void pivot(std::size_t r, std::size_t c) {
        Rational inv = rows_[r][c];
        for (auto& x : rows_[r]) x /= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (i != r && rows_[i][c] != 0) subtract_row(rows_[i], rows_[r], rows_[i][c]);
        if (z_[c] != 0) subtract_row(z_, rows_[r], z_[c]);
        basis_[r] = c;
    }

    // Bland's rule; returns false on unboundedness.
    bool pivot_loop(bool allow_artificial) {
        const std::size_t col_limit = allow_artificial ? n_total_ : art_begin_;
        for (;;) {
            std::size_t enter = n_total_;
            for (std::size_t j = 0; j < col_limit; ++j)
                if (z_[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == n_total_) return true;
            std::size_t leave = rows_.size();
            Rational best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (rows_[i][enter] <= 0) continue;
                Rational ratio = rows_[i][n_total_] / rows_[i][enter];
                if (leave == rows_.size() || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows_.size()) return false;
            pivot(leave, enter);
        }
    }

    // After a feasible phase 1, pivot any artificial still basic (at value 0)
    // onto a real column, or drop its row as redundant.
    void evict_artificials() {
        for (std::size_t i = 0; i < rows_.size();) {
            if (basis_[i] < art_begin_) {
                ++i;
                continue;
            }
            std::size_t c = art_begin_;
            for (std::size_t j = 0; j < art_begin_; ++j)
                if (rows_[i][j] != 0) {
                    c = j;
                    break;
                }
            if (c < art_begin_) {
                pivot(i, c);
                ++i;
            } else {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    std::size_t n_struct_, n_total_ = 0, art_begin_ = 0;
    QMat rows_;
    QVec z_;
    QVec objective_;
    std::vector<std::size_t> basis_;
};

}  // namespace

LpResult lp_maximize(const QVec& objective, const std::vector<LinearConstraint>& constraints) {
    if (constraints.empty()) {
        for (const auto& c : objective)
            if (c > 0) return LpResult{LpStatus::Unbounded, Rational(0), {}};
        LpResult out;
        out.status = LpStatus::Optimal;
        out.objective = 0;
        out.solution.assign(objective.size(), Rational(0));
        return out;
    }
    return Tableau(objective, constraints).run();
}

}  // namespace contclose
