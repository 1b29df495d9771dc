#include "pgq/simplex.hpp"

#include <optional>
#include <stdexcept>

namespace pgq {
namespace {

// Dense tableau over exact rationals.  Free variables are split x = x+ - x-,
// every >= row gets a surplus column, and phase 1 starts from an artificial
// basis.  Bland's rule guarantees termination.
class Tableau {
  public:
    Tableau(std::size_t numVars, const std::vector<LpRow>& rows) : k_(numVars) {
        std::size_t surplus = 0;
        for (const auto& r : rows)
            if (!r.equality) ++surplus;
        ncols_ = 2 * k_ + surplus;
        std::size_t art0 = ncols_;
        std::size_t si = 0;
        for (const auto& r : rows) {
            std::vector<Rat> row(ncols_ + rows.size() + 1, Rat(0));
            for (std::size_t j = 0; j < k_; ++j) {
                row[j] = r.a[j];
                row[k_ + j] = -r.a[j];
            }
            if (!r.equality) row[2 * k_ + si++] = -1;  // a^T x - s = b
            row[cols_total(rows.size())] = r.b;
            if (r.b < 0)
                for (auto& v : row) v = -v;
            rows_.push_back(std::move(row));
        }
        nart_ = rows.size();
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            rows_[i][art0 + i] = 1;
            basis_.push_back(art0 + i);
        }
        allcols_ = ncols_ + nart_;
    }

    // Returns false when infeasible.
    bool phase1() {
        std::vector<Rat> cost(allcols_, Rat(0));
        for (std::size_t j = ncols_; j < allcols_; ++j) cost[j] = 1;
        run(cost, allcols_);
        if (objective_value() != 0) return false;
        drive_out_artificials();
        return true;
    }

    // Requires a feasible basis; returns nullopt when unbounded.
    std::optional<Rat> phase2(const std::vector<Rat>& c) {
        std::vector<Rat> cost(allcols_, Rat(0));
        for (std::size_t j = 0; j < k_; ++j) {
            cost[j] = c[j];
            cost[k_ + j] = -c[j];
        }
        if (!run(cost, ncols_)) return std::nullopt;
        return objective_value();
    }

  private:
    std::size_t cols_total(std::size_t nrows) const { return ncols_ + nrows; }

    Rat objective_value() const { return -obj_.back(); }

    void make_objective(const std::vector<Rat>& cost) {
        obj_.assign(allcols_ + 1, Rat(0));
        for (std::size_t j = 0; j < allcols_; ++j) obj_[j] = cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rat cb = cost[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j <= allcols_; ++j) obj_[j] -= cb * rows_[i][j];
        }
    }

    // Minimizes cost over columns [0, usable); false = unbounded.
    bool run(const std::vector<Rat>& cost, std::size_t usable) {
        make_objective(cost);
        for (;;) {
            std::size_t enter = usable;
            for (std::size_t j = 0; j < usable; ++j)
                if (obj_[j] < 0) {
                    enter = j;
                    break;  // Bland: smallest index
                }
            if (enter == usable) return true;
            std::size_t leave = rows_.size();
            Rat best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (rows_[i][enter] <= 0) continue;
                Rat ratio = rows_[i].back() / rows_[i][enter];
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

    void pivot(std::size_t r, std::size_t e) {
        Rat p = rows_[r][e];
        for (auto& v : rows_[r]) v /= p;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == r || rows_[i][e] == 0) continue;
            Rat f = rows_[i][e];
            for (std::size_t j = 0; j <= allcols_; ++j) rows_[i][j] -= f * rows_[r][j];
        }
        if (obj_[e] != 0) {
            Rat f = obj_[e];
            for (std::size_t j = 0; j <= allcols_; ++j) obj_[j] -= f * rows_[r][j];
        }
        basis_[r] = e;
    }

    void drive_out_artificials() {
        for (std::size_t i = 0; i < rows_.size();) {
            if (basis_[i] < ncols_) {
                ++i;
                continue;
            }
            std::size_t j = 0;
            while (j < ncols_ && rows_[i][j] == 0) ++j;
            if (j < ncols_) {
                pivot(i, j);
                ++i;
            } else {
                // redundant row
                rows_.erase(rows_.begin() + static_cast<long>(i));
                basis_.erase(basis_.begin() + static_cast<long>(i));
            }
        }
    }

    std::size_t k_, ncols_ = 0, nart_ = 0, allcols_ = 0;
    std::vector<std::vector<Rat>> rows_;
    std::vector<std::size_t> basis_;
    std::vector<Rat> obj_;
};

}  // namespace

LpResult lp_minimize(std::size_t numVars, const std::vector<LpRow>& rows, const std::vector<Rat>& c) {
    for (const auto& r : rows)
        if (r.a.size() != numVars) throw std::invalid_argument("lp row arity mismatch");
    if (c.size() != numVars) throw std::invalid_argument("lp objective arity mismatch");
    Tableau t(numVars, rows);
    if (!t.phase1()) return {LpStatus::Infeasible, Rat(0)};
    auto v = t.phase2(c);
    if (!v) return {LpStatus::Unbounded, Rat(0)};
    return {LpStatus::Optimal, *v};
}

LpResult lp_maximize(std::size_t numVars, const std::vector<LpRow>& rows, const std::vector<Rat>& c) {
    std::vector<Rat> neg(c);
    for (auto& v : neg) v = -v;
    LpResult r = lp_minimize(numVars, rows, neg);
    r.value = -r.value;
    return r;
}

}  // namespace pgq
