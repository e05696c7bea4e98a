#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freelift/config.hpp"
#include "freelift/errors.hpp"
#include "freelift/linalg.hpp"
#include "freelift/scalar.hpp"

namespace freelift {

enum class Rel { le, eq, ge };
enum class Sense { minimize, maximize };
enum class LpStatus { optimal, infeasible, unbounded };

inline const char* to_string(LpStatus s) {
    switch (s) {
        case LpStatus::optimal: return "optimal";
        case LpStatus::infeasible: return "infeasible";
        case LpStatus::unbounded: return "unbounded";
    }
    return "?";
}

template <class T>
struct LpConstraint {
    Vec<T> coeffs;
    Rel rel = Rel::le;
    T rhs = Num<T>::zero();
};

// General-form LP: objective with sense, relational rows, per-variable bounds
// (nullopt = unbounded side). Variables default to free.
template <class T>
struct LpProblem {
    Sense sense = Sense::minimize;
    Vec<T> objective;
    std::vector<LpConstraint<T>> rows;
    std::vector<std::optional<T>> lower, upper;

    int num_vars() const { return int(objective.size()); }

    static LpProblem make(Sense s, Vec<T> c) {
        LpProblem p;
        p.sense = s;
        p.objective = std::move(c);
        p.lower.assign(p.objective.size(), std::nullopt);
        p.upper.assign(p.objective.size(), std::nullopt);
        return p;
    }
    void add_row(Vec<T> coeffs, Rel rel, T rhs) {
        rows.push_back({std::move(coeffs), rel, std::move(rhs)});
    }
    void set_lower(int j, T v) { lower[j] = std::move(v); }
    void set_upper(int j, T v) { upper[j] = std::move(v); }
    void set_nonnegative(int j) { lower[j] = Num<T>::zero(); }
    void all_nonnegative() {
        for (auto& l : lower) l = Num<T>::zero();
    }

    void validate() const {
        if (objective.empty()) throw ValidationError("lp: at least one variable required");
        if (lower.size() != objective.size() || upper.size() != objective.size())
            throw ValidationError("lp: bound vectors must match variable count");
        for (const auto& r : rows)
            if (r.coeffs.size() != objective.size())
                throw ValidationError("lp: row dimension mismatch");
    }
};

// Optimal solutions carry the full certificate: primal point, row duals,
// recomputed row slacks and reduced costs. Duals follow the natural sign
// convention of the problem's own sense.
template <class T>
struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    Vec<T> primal;
    Vec<T> dual;
    T objective_value = Num<T>::zero();
    Vec<T> row_slacks;      // rhs_i - a_i . x
    Vec<T> reduced_costs;   // c - A^T y
};

namespace lp_detail {

// Bounded-variable dual objective: sum y.b plus the bound contribution of each
// reduced cost. Returns nullopt when a reduced cost points at a missing bound.
template <class T>
std::optional<T> dual_objective(const LpProblem<T>& p, const Vec<T>& y, const Vec<T>& d) {
    const bool maximize = p.sense == Sense::maximize;
    T g = Num<T>::zero();
    for (int i = 0; i < int(p.rows.size()); ++i) g += y[i] * p.rows[i].rhs;
    for (int j = 0; j < p.num_vars(); ++j) {
        if (Num<T>::is_zero(d[j])) continue;
        // minimize: inf over [l,u] of d*x; maximize: sup.
        const bool wants_lower = maximize ? Num<T>::lt(d[j], Num<T>::zero())
                                          : Num<T>::lt(Num<T>::zero(), d[j]);
        if (wants_lower) {
            if (!p.lower[j]) return std::nullopt;
            g += d[j] * *p.lower[j];
        } else {
            if (!p.upper[j]) return std::nullopt;
            g += d[j] * *p.upper[j];
        }
    }
    return g;
}

template <class T>
bool dual_signs_ok(const LpProblem<T>& p, const Vec<T>& y) {
    const bool maximize = p.sense == Sense::maximize;
    for (int i = 0; i < int(p.rows.size()); ++i) {
        switch (p.rows[i].rel) {
            case Rel::le:
                if (maximize ? Num<T>::lt(y[i], Num<T>::zero()) : Num<T>::lt(Num<T>::zero(), y[i]))
                    return false;
                break;
            case Rel::ge:
                if (maximize ? Num<T>::lt(Num<T>::zero(), y[i]) : Num<T>::lt(y[i], Num<T>::zero()))
                    return false;
                break;
            case Rel::eq: break;
        }
    }
    return true;
}

template <class T>
Vec<T> reduced_costs_of(const LpProblem<T>& p, const Vec<T>& y) {
    Vec<T> d = p.objective;
    for (int i = 0; i < int(p.rows.size()); ++i) {
        if (Num<T>::is_zero(y[i])) continue;
        for (int j = 0; j < p.num_vars(); ++j) d[j] -= y[i] * p.rows[i].coeffs[j];
    }
    return d;
}

template <class T>
Vec<T> row_slacks_of(const LpProblem<T>& p, const Vec<T>& x) {
    Vec<T> s(p.rows.size(), Num<T>::zero());
    for (int i = 0; i < int(p.rows.size()); ++i) {
        T lhs = Num<T>::zero();
        for (int j = 0; j < p.num_vars(); ++j) lhs += p.rows[i].coeffs[j] * x[j];
        s[i] = p.rows[i].rhs - lhs;
    }
    return s;
}

template <class T>
bool primal_feasible(const LpProblem<T>& p, const Vec<T>& x) {
    if (int(x.size()) != p.num_vars()) return false;
    for (const auto& row : p.rows) {
        T lhs = Num<T>::zero();
        for (int j = 0; j < p.num_vars(); ++j) lhs += row.coeffs[j] * x[j];
        switch (row.rel) {
            case Rel::le:
                if (!Num<T>::leq(lhs, row.rhs)) return false;
                break;
            case Rel::ge:
                if (!Num<T>::leq(row.rhs, lhs)) return false;
                break;
            case Rel::eq:
                if (!Num<T>::eq(lhs, row.rhs)) return false;
                break;
        }
    }
    for (int j = 0; j < p.num_vars(); ++j) {
        if (p.lower[j] && !Num<T>::leq(*p.lower[j], x[j])) return false;
        if (p.upper[j] && !Num<T>::leq(x[j], *p.upper[j])) return false;
    }
    return true;
}

// Two-phase dense tableau simplex on min c.x, Ax = b, x >= 0, b >= 0.
// Bland's rule in exact mode; float mode starts with Dantzig pricing and
// falls back to Bland after a degenerate stall.
template <class T>
class Tableau {
  public:
    Tableau(Matrix<T> a, Vec<T> b, Vec<T> c, std::vector<int> init_basis_cols, int structural)
        : m_(a.rows()),
          structural_(structural),
          art_begin_(a.cols()),
          c_(std::move(c)) {
        // Append one artificial column per row lacking an initial basis column.
        int n_art = 0;
        for (int i = 0; i < m_; ++i)
            if (init_basis_cols[i] < 0) ++n_art;
        n_ = a.cols() + n_art;
        const std::int64_t cells = std::int64_t(m_) * (n_ + 1);
        if (cells > caps().lp_tableau_cells)
            throw CapacityError("lp: tableau of " + std::to_string(cells) +
                                " cells exceeds cap " + std::to_string(caps().lp_tableau_cells));
        tab_ = Matrix<T>(m_, n_ + 1);
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < a.cols(); ++j) tab_(i, j) = a(i, j);
            tab_(i, n_) = b[i];
        }
        basis_.resize(m_);
        init_basis_col_.resize(m_);
        int art = art_begin_;
        for (int i = 0; i < m_; ++i) {
            if (init_basis_cols[i] >= 0) {
                basis_[i] = init_basis_cols[i];
            } else {
                tab_(i, art) = Num<T>::one();
                basis_[i] = art++;
            }
            init_basis_col_[i] = basis_[i];
        }
        c_.resize(n_, Num<T>::zero());
    }

    bool has_artificials() const { return n_ > art_begin_; }
    bool is_artificial(int col) const { return col >= art_begin_; }

    // Phase 1: returns the artificial infeasibility sum.
    T phase1() {
        Vec<T> cost(n_, Num<T>::zero());
        for (int j = art_begin_; j < n_; ++j) cost[j] = Num<T>::one();
        set_cost(cost);
        run(cost);
        T z = objective_value(cost);
        if (is_feasible_phase1(z)) drive_out_artificials();
        return z;
    }

    // Phase 2: true when optimal, false when unbounded.
    bool phase2() {
        set_cost(c_);
        return run(c_);
    }

    Vec<T> primal() const {
        Vec<T> x(art_begin_, Num<T>::zero());
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < art_begin_) x[basis_[i]] = tab_(i, n_);
        return x;
    }

    // y = c_B B^{-1}, read from the columns that formed the initial identity.
    Vec<T> duals() const {
        Vec<T> y(m_, Num<T>::zero());
        for (int i = 0; i < m_; ++i) {
            T s = Num<T>::zero();
            for (int k = 0; k < m_; ++k) {
                const T& cb = c_[basis_[k]];
                if (!Num<T>::is_zero(cb)) s += cb * tab_(k, init_basis_col_[i]);
            }
            y[i] = s;
        }
        return y;
    }

    T objective_value(const Vec<T>& cost) const {
        T z = Num<T>::zero();
        for (int i = 0; i < m_; ++i) {
            if (!Num<T>::is_zero(cost[basis_[i]])) z += cost[basis_[i]] * tab_(i, n_);
        }
        return z;
    }

    static bool is_feasible_phase1(const T& z) {
        if constexpr (Num<T>::exact) {
            return Num<T>::is_zero(z);
        } else {
            return z <= float_tolerance() * 1e3 * (1.0 + Num<T>::abs(z));
        }
    }

  private:
    static constexpr int kStallLimit = 64;

    bool entry_negative(const T& v) const {
        if constexpr (Num<T>::exact) {
            return sgn(v) < 0;
        } else {
            return v < -pivot_tol_;
        }
    }
    bool entry_positive(const T& v) const {
        if constexpr (Num<T>::exact) {
            return sgn(v) > 0;
        } else {
            return v > pivot_tol_;
        }
    }

    // Reduced-cost row (with obj_[n_] = -z), recomputed from scratch at each
    // phase switch and maintained incrementally by pivots.
    void set_cost(const Vec<T>& cost) {
        obj_.assign(n_ + 1, Num<T>::zero());
        for (int j = 0; j < n_; ++j) obj_[j] = cost[j];
        for (int i = 0; i < m_; ++i) {
            const T& cb = cost[basis_[i]];
            if (Num<T>::is_zero(cb)) continue;
            if constexpr (std::is_same_v<T, double>) {
                kernels::axpy(obj_.data(), tab_.row_ptr(i), -cb, std::size_t(n_ + 1));
            } else {
                for (int j = 0; j <= n_; ++j) obj_[j] -= cb * tab_(i, j);
            }
        }
        for (int i = 0; i < m_; ++i) obj_[basis_[i]] = Num<T>::zero();
    }

    void pivot(int row, int col) {
        const T piv = tab_(row, col);
        T* prow = tab_.row_ptr(row);
        if constexpr (std::is_same_v<T, double>) {
            kernels::scale(prow, 1.0 / piv, std::size_t(n_ + 1));
        } else {
            for (int j = 0; j <= n_; ++j) prow[j] /= piv;
        }
        prow[col] = Num<T>::one();
        for (int i = 0; i < m_; ++i) {
            if (i == row) continue;
            const T f = tab_(i, col);
            if (Num<T>::is_zero(f)) continue;
            if constexpr (std::is_same_v<T, double>) {
                kernels::axpy(tab_.row_ptr(i), prow, -f, std::size_t(n_ + 1));
            } else {
                T* irow = tab_.row_ptr(i);
                for (int j = 0; j <= n_; ++j) irow[j] -= f * prow[j];
            }
            tab_(i, col) = Num<T>::zero();
        }
        const T fo = obj_[col];
        if (!Num<T>::is_zero(fo)) {
            if constexpr (std::is_same_v<T, double>) {
                kernels::axpy(obj_.data(), prow, -fo, std::size_t(n_ + 1));
            } else {
                for (int j = 0; j <= n_; ++j) obj_[j] -= fo * prow[j];
            }
            obj_[col] = Num<T>::zero();
        }
        basis_[row] = col;
    }

    // Ratio test with Bland tie-breaking on the leaving basic index.
    int leaving_row(int col) const {
        int row = -1;
        T best = Num<T>::zero();
        for (int i = 0; i < m_; ++i) {
            const T& a = tab_(i, col);
            if (!entry_positive(a)) continue;
            T ratio = tab_(i, n_) / a;
            if (row < 0 || Num<T>::lt(ratio, best) ||
                (!Num<T>::lt(best, ratio) && basis_[i] < basis_[row])) {
                row = i;
                best = ratio;
            }
        }
        return row;
    }

    // Returns true on optimality, false on unboundedness. Artificial columns
    // never enter: phase 1 starts on them and phase 2 must not revisit them.
    bool run(const Vec<T>& cost) {
        bool bland = Num<T>::exact;
        int stall = 0;
        T last_z = objective_value(cost);
        const std::int64_t max_iters = 20000 + 64LL * (m_ + n_);
        for (std::int64_t iter = 0;; ++iter) {
            if (iter > max_iters) throw InvariantFailure("lp: simplex iteration limit hit");
            int col = -1;
            if (bland) {
                for (int j = 0; j < art_begin_; ++j) {
                    if (entry_negative(obj_[j])) {
                        col = j;
                        break;
                    }
                }
            } else {
                T best = Num<T>::zero();
                for (int j = 0; j < art_begin_; ++j) {
                    if (entry_negative(obj_[j]) && Num<T>::lt(obj_[j], best)) {
                        best = obj_[j];
                        col = j;
                    }
                }
            }
            if (col < 0) return true;
            int row = leaving_row(col);
            if (row < 0) return false;
            pivot(row, col);
            if constexpr (!Num<T>::exact) {
                T z = objective_value(cost);
                if (!(z < last_z - pivot_tol_)) {
                    if (++stall > kStallLimit) bland = true;
                } else {
                    stall = 0;
                }
                last_z = z;
            }
        }
    }

    // After phase 1, replace basic artificials by structural columns where
    // possible; rows without any eligible column are redundant and keep their
    // artificial basic at level zero.
    void drive_out_artificials() {
        for (int i = 0; i < m_; ++i) {
            if (!is_artificial(basis_[i])) continue;
            int col = -1;
            for (int j = 0; j < art_begin_; ++j) {
                if constexpr (Num<T>::exact) {
                    if (!Num<T>::is_zero(tab_(i, j))) {
                        col = j;
                        break;
                    }
                } else {
                    if (Num<T>::abs(tab_(i, j)) > pivot_tol_) {
                        col = j;
                        break;
                    }
                }
            }
            if (col >= 0) pivot(i, col);
        }
        entered_artificials_forbidden_ = true;
    }

    int m_, n_ = 0, structural_, art_begin_;
    Matrix<T> tab_;
    Vec<T> c_;
    std::vector<int> basis_, init_basis_col_;
    bool entered_artificials_forbidden_ = false;
    double pivot_tol_ = 1e-11;
};

// A variable of the general form mapped into standard form.
template <class T>
struct VarMap {
    enum class Kind { shifted, mirrored, split } kind;
    int col = -1, col2 = -1;  // col2 used by split
    T offset = Num<T>::zero();
};

}  // namespace lp_detail

template <class T>
LpSolution<T> solve_lp(const LpProblem<T>& p) {
    using N = Num<T>;
    p.validate();
    const int n = p.num_vars();
    LpSolution<T> sol;

    // Contradictory bounds mean an empty feasible set.
    for (int j = 0; j < n; ++j)
        if (p.lower[j] && p.upper[j] && N::lt(*p.upper[j], *p.lower[j])) {
            sol.status = LpStatus::infeasible;
            return sol;
        }

    // Variable transforms to x >= 0 form. Two-sided bounds add a capacity row.
    std::vector<lp_detail::VarMap<T>> vmap(n);
    int sf_cols = 0;
    for (int j = 0; j < n; ++j) {
        if (p.lower[j]) {
            vmap[j] = {lp_detail::VarMap<T>::Kind::shifted, sf_cols++, -1, *p.lower[j]};
        } else if (p.upper[j]) {
            vmap[j] = {lp_detail::VarMap<T>::Kind::mirrored, sf_cols++, -1, *p.upper[j]};
        } else {
            vmap[j] = {lp_detail::VarMap<T>::Kind::split, sf_cols, sf_cols + 1, N::zero()};
            sf_cols += 2;
        }
    }

    struct SfRow {
        Vec<T> coeffs;
        Rel rel;
        T rhs;
        int orig = -1;  // index into p.rows, or -1 for a bound row
    };
    std::vector<SfRow> sf_rows;
    sf_rows.reserve(p.rows.size() + n);
    auto transform_row = [&](const Vec<T>& coeffs, Rel rel, const T& rhs, int orig) {
        SfRow r;
        r.coeffs.assign(sf_cols, N::zero());
        r.rel = rel;
        r.rhs = rhs;
        r.orig = orig;
        for (int j = 0; j < n; ++j) {
            const T& a = coeffs[j];
            if (N::is_zero(a)) continue;
            switch (vmap[j].kind) {
                case lp_detail::VarMap<T>::Kind::shifted:
                    r.coeffs[vmap[j].col] += a;
                    r.rhs -= a * vmap[j].offset;
                    break;
                case lp_detail::VarMap<T>::Kind::mirrored:
                    r.coeffs[vmap[j].col] -= a;
                    r.rhs -= a * vmap[j].offset;
                    break;
                case lp_detail::VarMap<T>::Kind::split:
                    r.coeffs[vmap[j].col] += a;
                    r.coeffs[vmap[j].col2] -= a;
                    break;
            }
        }
        sf_rows.push_back(std::move(r));
    };
    for (int i = 0; i < int(p.rows.size()); ++i)
        transform_row(p.rows[i].coeffs, p.rows[i].rel, p.rows[i].rhs, i);
    for (int j = 0; j < n; ++j) {
        if (p.lower[j] && p.upper[j]) {
            Vec<T> unit(n, N::zero());
            unit[j] = N::one();
            transform_row(unit, Rel::le, *p.upper[j], -1);
        }
    }

    // Standard form: slack/surplus columns, b >= 0, initial basis choices.
    const int m = int(sf_rows.size());
    int slack_cols = 0;
    for (const auto& r : sf_rows)
        if (r.rel != Rel::eq) ++slack_cols;
    Matrix<T> a(m, sf_cols + slack_cols);
    Vec<T> b(m, N::zero());
    std::vector<int> init_basis(m, -1);
    std::vector<int> row_sign(m, 1);
    int next_slack = sf_cols;
    for (int i = 0; i < m; ++i) {
        auto& r = sf_rows[i];
        int slack = -1;
        T slack_coeff = N::one();
        if (r.rel == Rel::le) {
            slack = next_slack++;
        } else if (r.rel == Rel::ge) {
            slack = next_slack++;
            slack_coeff = -N::one();
        }
        bool flip = N::lt(r.rhs, N::zero());
        if (flip) row_sign[i] = -1;
        for (int j = 0; j < sf_cols; ++j) a(i, j) = flip ? T(-r.coeffs[j]) : r.coeffs[j];
        b[i] = flip ? T(-r.rhs) : r.rhs;
        if (slack >= 0) {
            T c = flip ? T(-slack_coeff) : slack_coeff;
            a(i, slack) = c;
            if (c == N::one()) init_basis[i] = slack;
        }
    }

    // Minimization objective over standard-form columns.
    Vec<T> c_sf(sf_cols + slack_cols, N::zero());
    for (int j = 0; j < n; ++j) {
        T cj = p.objective[j];
        if (p.sense == Sense::maximize) cj = -cj;
        if (N::is_zero(cj)) continue;
        switch (vmap[j].kind) {
            case lp_detail::VarMap<T>::Kind::shifted: c_sf[vmap[j].col] += cj; break;
            case lp_detail::VarMap<T>::Kind::mirrored: c_sf[vmap[j].col] -= cj; break;
            case lp_detail::VarMap<T>::Kind::split:
                c_sf[vmap[j].col] += cj;
                c_sf[vmap[j].col2] -= cj;
                break;
        }
    }

    lp_detail::Tableau<T> tab(std::move(a), std::move(b), std::move(c_sf), init_basis, sf_cols);
    if (tab.has_artificials()) {
        T z1 = tab.phase1();
        if (!lp_detail::Tableau<T>::is_feasible_phase1(z1)) {
            sol.status = LpStatus::infeasible;
            return sol;
        }
    }
    if (!tab.phase2()) {
        sol.status = LpStatus::unbounded;
        return sol;
    }

    // Map the standard-form optimum back to the general form.
    Vec<T> xs = tab.primal();
    sol.primal.assign(n, N::zero());
    for (int j = 0; j < n; ++j) {
        switch (vmap[j].kind) {
            case lp_detail::VarMap<T>::Kind::shifted:
                sol.primal[j] = vmap[j].offset + xs[vmap[j].col];
                break;
            case lp_detail::VarMap<T>::Kind::mirrored:
                sol.primal[j] = vmap[j].offset - xs[vmap[j].col];
                break;
            case lp_detail::VarMap<T>::Kind::split:
                sol.primal[j] = xs[vmap[j].col] - xs[vmap[j].col2];
                break;
        }
    }
    Vec<T> ys = tab.duals();
    sol.dual.assign(p.rows.size(), N::zero());
    for (int i = 0; i < m; ++i) {
        int orig = sf_rows[i].orig;
        if (orig < 0) continue;  // internal bound row
        T y = row_sign[i] < 0 ? T(-ys[i]) : ys[i];
        sol.dual[orig] = p.sense == Sense::maximize ? T(-y) : y;
    }
    sol.status = LpStatus::optimal;
    T obj = N::zero();
    for (int j = 0; j < n; ++j) obj += p.objective[j] * sol.primal[j];
    sol.objective_value = obj;
    sol.row_slacks = lp_detail::row_slacks_of(p, sol.primal);
    sol.reduced_costs = lp_detail::reduced_costs_of(p, sol.dual);
    return sol;
}

// Re-checks an optimality claim from raw data: primal feasibility, dual
// feasibility (signs and bound finiteness), and objective equality, all at the
// arithmetic mode of T. Independent of how the solution was produced.
template <class T>
bool verify_certificate(const LpProblem<T>& p, const LpSolution<T>& sol) {
    using N = Num<T>;
    if (sol.status != LpStatus::optimal) return false;
    if (int(sol.primal.size()) != p.num_vars()) return false;
    if (sol.dual.size() != p.rows.size()) return false;
    if (!lp_detail::primal_feasible(p, sol.primal)) return false;
    if (!lp_detail::dual_signs_ok(p, sol.dual)) return false;
    Vec<T> d = lp_detail::reduced_costs_of(p, sol.dual);
    if constexpr (!N::exact) {
        // Tiny reduced costs are dual-degenerate noise; zero them before the
        // bound-finiteness test.
        for (auto& v : d)
            if (N::is_zero(v)) v = N::zero();
    }
    auto g = lp_detail::dual_objective(p, sol.dual, d);
    if (!g) return false;
    T primal_obj = N::zero();
    for (int j = 0; j < p.num_vars(); ++j) primal_obj += p.objective[j] * sol.primal[j];
    if (!N::eq(primal_obj, *g)) return false;
    if (!N::eq(primal_obj, sol.objective_value)) return false;
    return true;
}

// Explicit dual of a bound-free problem. Use bounds_to_rows first when the
// problem carries variable bounds.
template <class T>
LpProblem<T> dual_of(const LpProblem<T>& p) {
    using N = Num<T>;
    p.validate();
    for (int j = 0; j < p.num_vars(); ++j)
        if (p.lower[j] || p.upper[j])
            throw ValidationError("dual_of: fold variable bounds into rows first");
    const bool maximize = p.sense == Sense::maximize;
    const int m = int(p.rows.size());
    Vec<T> c(m);
    for (int i = 0; i < m; ++i) c[i] = p.rows[i].rhs;
    LpProblem<T> d = LpProblem<T>::make(maximize ? Sense::minimize : Sense::maximize, std::move(c));
    for (int j = 0; j < p.num_vars(); ++j) {
        Vec<T> col(m);
        for (int i = 0; i < m; ++i) col[i] = p.rows[i].coeffs[j];
        d.add_row(std::move(col), Rel::eq, p.objective[j]);
    }
    for (int i = 0; i < m; ++i) {
        switch (p.rows[i].rel) {
            case Rel::le:
                if (maximize)
                    d.set_lower(i, N::zero());
                else
                    d.set_upper(i, N::zero());
                break;
            case Rel::ge:
                if (maximize)
                    d.set_upper(i, N::zero());
                else
                    d.set_lower(i, N::zero());
                break;
            case Rel::eq: break;
        }
    }
    return d;
}

// Clone with every finite variable bound rewritten as an explicit row.
template <class T>
LpProblem<T> bounds_to_rows(const LpProblem<T>& p) {
    using N = Num<T>;
    LpProblem<T> q = p;
    for (int j = 0; j < p.num_vars(); ++j) {
        Vec<T> unit(p.num_vars(), N::zero());
        unit[j] = N::one();
        if (p.lower[j]) q.add_row(unit, Rel::ge, *p.lower[j]);
        if (p.upper[j]) q.add_row(unit, Rel::le, *p.upper[j]);
        q.lower[j] = std::nullopt;
        q.upper[j] = std::nullopt;
    }
    return q;
}

}  // namespace freelift
