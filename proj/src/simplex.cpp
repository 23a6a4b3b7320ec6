#include "coopgame/simplex.hpp"

#include <cstddef>

#include "coopgame/errors.hpp"

namespace coopgame {

namespace {

class Tableau {
public:
    Tableau(std::vector<std::vector<Rat>> A, std::vector<Rat> b)
        : m_(A.size()), nv_(A.empty() ? 0 : A[0].size()), rows_(std::move(A)), rhs_(std::move(b)) {
        // append the artificial identity; artificial i is column nv_ + i
        for (std::size_t i = 0; i < m_; ++i) {
            if (rhs_[i] < 0) {
                rhs_[i] = -rhs_[i];
                row_sign_.push_back(-1);
                for (Rat& a : rows_[i]) a = -a;
            } else {
                row_sign_.push_back(1);
            }
            rows_[i].resize(nv_ + m_, Rat(0));
            rows_[i][nv_ + i] = 1;
            basis_.push_back(static_cast<int>(nv_ + i));
        }
    }

    std::size_t rows() const { return m_; }
    std::size_t structural() const { return nv_; }
    bool is_artificial(int col) const { return col >= static_cast<int>(nv_); }

    // One simplex phase: minimize cost over the current basis. `cost` has
    // an entry per column (structural + artificial). Returns false on
    // unboundedness.
    bool run(const std::vector<Rat>& cost, bool allow_artificial_entering) {
        while (true) {
            std::vector<Rat> y(m_);
            for (std::size_t i = 0; i < m_; ++i) y[i] = cost[basis_[i]];

            int entering = -1;
            const std::size_t limit = allow_artificial_entering ? nv_ + m_ : nv_;
            for (std::size_t j = 0; j < limit; ++j) {
                if (in_basis(static_cast<int>(j))) continue;
                Rat rc = cost[j];
                for (std::size_t i = 0; i < m_; ++i)
                    if (y[i] != 0) rc -= y[i] * rows_[i][j];
                if (rc < 0) {
                    entering = static_cast<int>(j);
                    break;  // Bland: smallest improving index
                }
            }
            if (entering < 0) return true;

            int leaving = -1;
            Rat best_ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                if (rows_[i][entering] <= 0) continue;
                Rat ratio = rhs_[i] / rows_[i][entering];
                if (leaving < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leaving])) {
                    leaving = static_cast<int>(i);
                    best_ratio = ratio;
                }
            }
            if (leaving < 0) return false;
            pivot(static_cast<std::size_t>(leaving), entering);
        }
    }

    // Degenerate pivots that remove zero-level artificials from the
    // basis wherever a structural entry allows it. Rows that stay
    // artificial-basic are identically zero on structural columns and
    // never change again.
    void drive_out_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (!is_artificial(basis_[i])) continue;
            for (std::size_t j = 0; j < nv_; ++j) {
                if (rows_[i][j] != 0 && !in_basis(static_cast<int>(j))) {
                    pivot(i, static_cast<int>(j));
                    break;
                }
            }
        }
    }

    Rat objective(const std::vector<Rat>& cost) const {
        Rat obj = 0;
        for (std::size_t i = 0; i < m_; ++i) obj += cost[basis_[i]] * rhs_[i];
        return obj;
    }

    std::vector<Rat> solution() const {
        std::vector<Rat> x(nv_, Rat(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (!is_artificial(basis_[i])) x[basis_[i]] = rhs_[i];
        return x;
    }

    // pi = c_B B^-1, read from the artificial columns, undoing any row
    // negations applied at setup.
    std::vector<Rat> prices(const std::vector<Rat>& cost) const {
        std::vector<Rat> pi(m_, Rat(0));
        for (std::size_t r = 0; r < m_; ++r) {
            Rat p = 0;
            for (std::size_t i = 0; i < m_; ++i) {
                const Rat& cb = cost[basis_[i]];
                if (cb != 0) p += cb * rows_[i][nv_ + r];
            }
            pi[r] = row_sign_[r] * p;
        }
        return pi;
    }

private:
    bool in_basis(int col) const {
        for (int b : basis_)
            if (b == col) return true;
        return false;
    }

    void pivot(std::size_t r, int c) {
        Rat inv = 1 / rows_[r][c];
        for (Rat& a : rows_[r]) a *= inv;
        rhs_[r] *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || rows_[i][c] == 0) continue;
            Rat factor = rows_[i][c];
            for (std::size_t j = 0; j < nv_ + m_; ++j)
                if (rows_[r][j] != 0) rows_[i][j] -= factor * rows_[r][j];
            rhs_[i] -= factor * rhs_[r];
        }
        basis_[r] = c;
    }

    std::size_t m_, nv_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<Rat> rhs_;
    std::vector<int> basis_;
    std::vector<int> row_sign_;
};

}  // namespace

LpSolution solve_standard_lp(std::vector<std::vector<Rat>> A, std::vector<Rat> b,
                             std::vector<Rat> c) {
    const std::size_t m = A.size();
    const std::size_t nv = c.size();
    for (const auto& row : A)
        if (row.size() != nv) throw error("simplex: ragged constraint matrix");
    if (b.size() != m) throw error("simplex: rhs size mismatch");

    Tableau tab(std::move(A), std::move(b));

    std::vector<Rat> phase1_cost(nv + m, Rat(0));
    for (std::size_t i = 0; i < m; ++i) phase1_cost[nv + i] = 1;
    if (!tab.run(phase1_cost, true)) throw error("simplex: phase 1 unbounded");
    if (tab.objective(phase1_cost) != 0) return {LpStatus::Infeasible, Rat(0), {}, {}};
    tab.drive_out_artificials();

    std::vector<Rat> phase2_cost(nv + m, Rat(0));
    for (std::size_t j = 0; j < nv; ++j) phase2_cost[j] = c[j];
    if (!tab.run(phase2_cost, false)) return {LpStatus::Unbounded, Rat(0), {}, {}};

    LpSolution sol;
    sol.status = LpStatus::Optimal;
    sol.objective = tab.objective(phase2_cost);
    sol.x = tab.solution();
    sol.prices = tab.prices(phase2_cost);
    return sol;
}

}  // namespace coopgame
