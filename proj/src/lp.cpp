#include "quasinet/lp.hpp"

#include <algorithm>
#include <limits>

namespace quasinet {

std::string_view status_name(LpStatus status) {
    switch (status) {
        case LpStatus::Feasible: return "FEASIBLE";
        case LpStatus::Infeasible: return "INFEASIBLE";
        case LpStatus::Optimal: return "OPTIMAL";
        case LpStatus::Unbounded: return "UNBOUNDED";
    }
    return "UNKNOWN";
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::vector<LpRow> expanded_rows(const LpProblem& p) {
    const std::size_t n = p.num_vars();
    if (!p.upper.empty() && p.upper.size() != n) throw Error("upper bound list must match the variable count");
    for (const auto& row : p.rows) {
        if (row.coeffs.size() != n) throw Error("constraint row length does not match the variable count");
    }
    std::vector<LpRow> rows = p.rows;
    for (std::size_t j = 0; j < p.upper.size(); ++j) {
        if (!p.upper[j]) continue;
        LpRow bound{std::vector<Rational>(n, Rational(0)), Relation::LessEqual, *p.upper[j]};
        bound.coeffs[j] = 1;
        rows.push_back(std::move(bound));
    }
    return rows;
}

std::vector<Rational> min_objective(const LpProblem& p) {
    std::vector<Rational> c = p.objective;
    if (p.sense == Sense::Maximize) {
        for (auto& v : c) v = -v;
    }
    return c;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) total += a[i] * b[i];
    }
    return total;
}

struct RankFilter {
    std::vector<bool> redundant;
    std::vector<Rational> farkas;  // non-empty iff the equalities are inconsistent
};

// Gaussian elimination over the equality rows, tracking each reduced row as a
// combination of the original rows so an inconsistency yields a certificate.
RankFilter filter_equalities(const std::vector<LpRow>& rows, std::size_t n) {
    struct Reduced {
        std::vector<Rational> coeffs;
        Rational rhs;
        std::vector<Rational> combo;
        std::size_t pivot;
    };
    const std::size_t m = rows.size();
    RankFilter out;
    out.redundant.assign(m, false);
    std::vector<Reduced> basis;
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].relation != Relation::Equal) continue;
        Reduced r{rows[i].coeffs, rows[i].rhs, std::vector<Rational>(m, Rational(0)), kNone};
        r.combo[i] = 1;
        for (const auto& b : basis) {
            if (r.coeffs[b.pivot] == 0) continue;
            const Rational f = r.coeffs[b.pivot] / b.coeffs[b.pivot];
            for (std::size_t k = 0; k < n; ++k) {
                if (b.coeffs[k] != 0) r.coeffs[k] -= f * b.coeffs[k];
            }
            r.rhs -= f * b.rhs;
            for (std::size_t k = 0; k < m; ++k) {
                if (b.combo[k] != 0) r.combo[k] -= f * b.combo[k];
            }
        }
        auto nz = std::find_if(r.coeffs.begin(), r.coeffs.end(), [](const Rational& v) { return v != 0; });
        if (nz == r.coeffs.end()) {
            if (r.rhs == 0) {
                out.redundant[i] = true;
                continue;
            }
            if (r.rhs < 0) {
                for (auto& v : r.combo) v = -v;
            }
            out.farkas = std::move(r.combo);
            return out;
        }
        r.pivot = static_cast<std::size_t>(nz - r.coeffs.begin());
        basis.push_back(std::move(r));
    }
    return out;
}

class Tableau {
public:
    // Columns: [original n | slack per inequality row | artificial per row].
    Tableau(const std::vector<LpRow>& rows, const std::vector<std::size_t>& kept, std::size_t n)
        : n_(n), m_(kept.size()) {
        std::size_t slacks = 0;
        for (std::size_t r : kept) {
            if (rows[r].relation != Relation::Equal) ++slacks;
        }
        art_begin_ = n_ + slacks;
        width_ = art_begin_ + m_;
        t_.assign(m_, std::vector<Rational>(width_ + 1, Rational(0)));
        sign_.assign(m_, 1);
        basis_.assign(m_, kNone);
        std::size_t slack_col = n_;
        for (std::size_t i = 0; i < m_; ++i) {
            const LpRow& row = rows[kept[i]];
            sign_[i] = row.rhs < 0 ? -1 : 1;
            for (std::size_t j = 0; j < n_; ++j) t_[i][j] = sign_[i] * row.coeffs[j];
            t_[i][width_] = sign_[i] * row.rhs;
            std::size_t own_slack = kNone;
            if (row.relation != Relation::Equal) {
                const int s = row.relation == Relation::LessEqual ? 1 : -1;
                t_[i][slack_col] = s * sign_[i];
                own_slack = slack_col++;
            }
            t_[i][art_begin_ + i] = 1;
            basis_[i] = (own_slack != kNone && t_[i][own_slack] == 1) ? own_slack : art_begin_ + i;
        }
    }

    std::size_t rows() const { return m_; }
    int sign(std::size_t i) const { return sign_[i]; }
    bool is_artificial(std::size_t col) const { return col >= art_begin_; }

    // Runs Bland's rule on the cost vector (indexed by column). Returns the
    // entering column of an unbounded direction, or kNone at optimality.
    std::size_t optimize(const std::vector<Rational>& cost) {
        while (true) {
            std::size_t enter = kNone;
            for (std::size_t j = 0; j < art_begin_ && enter == kNone; ++j) {
                if (is_basic(j)) continue;
                if (reduced_cost(cost, j) < 0) enter = j;
            }
            if (enter == kNone) return kNone;
            std::size_t leave = kNone;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (t_[i][enter] <= 0) continue;
                Rational ratio = t_[i][width_] / t_[i][enter];
                if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == kNone) return enter;
            pivot(leave, enter);
        }
    }

    // Replaces basic artificials at level zero by structural columns.
    void expel_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (!is_artificial(basis_[i])) continue;
            for (std::size_t j = 0; j < art_begin_; ++j) {
                if (t_[i][j] != 0 && !is_basic(j)) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    Rational reduced_cost(const std::vector<Rational>& cost, std::size_t col) const {
        Rational d = cost[col];
        for (std::size_t i = 0; i < m_; ++i) {
            if (t_[i][col] != 0 && cost[basis_[i]] != 0) d -= cost[basis_[i]] * t_[i][col];
        }
        return d;
    }

    Rational objective(const std::vector<Rational>& cost) const {
        Rational v = 0;
        for (std::size_t i = 0; i < m_; ++i) v += cost[basis_[i]] * t_[i][width_];
        return v;
    }

    // y^T = c_B^T B^{-1}; B^{-1} sits in the artificial columns.
    std::vector<Rational> duals(const std::vector<Rational>& cost) const {
        std::vector<Rational> y(m_, Rational(0));
        for (std::size_t k = 0; k < m_; ++k) {
            for (std::size_t i = 0; i < m_; ++i) {
                const Rational& cb = cost[basis_[i]];
                if (cb != 0 && t_[i][art_begin_ + k] != 0) y[k] += cb * t_[i][art_begin_ + k];
            }
        }
        return y;
    }

    std::vector<Rational> primal() const {
        std::vector<Rational> x(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) x[basis_[i]] = t_[i][width_];
        }
        return x;
    }

    std::vector<Rational> ray(std::size_t enter) const {
        std::vector<Rational> d(n_, Rational(0));
        if (enter < n_) d[enter] = 1;
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) d[basis_[i]] = -t_[i][enter];
        }
        return d;
    }

    std::size_t width() const { return width_; }

private:
    bool is_basic(std::size_t col) const { return std::find(basis_.begin(), basis_.end(), col) != basis_.end(); }

    void pivot(std::size_t r, std::size_t c) {
        auto& prow = t_[r];
        const Rational inv = 1 / prow[c];
        std::vector<std::size_t> nz;
        for (std::size_t k = 0; k <= width_; ++k) {
            if (prow[k] != 0) {
                prow[k] *= inv;
                nz.push_back(k);
            }
        }
        Rational f;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || t_[i][c] == 0) continue;
            f = t_[i][c];
            for (std::size_t k : nz) t_[i][k] -= f * prow[k];
        }
        basis_[r] = c;
    }

    std::size_t n_;
    std::size_t m_;
    std::size_t art_begin_ = 0;
    std::size_t width_ = 0;
    std::vector<std::vector<Rational>> t_;
    std::vector<int> sign_;
    std::vector<std::size_t> basis_;
};

}  // namespace

LpResult simplex_solve(const LpProblem& problem) {
    const std::size_t n = problem.num_vars();
    const std::vector<LpRow> rows = expanded_rows(problem);
    const std::size_t m = rows.size();
    LpResult result;

    RankFilter filter = filter_equalities(rows, n);
    for (std::size_t i = 0; i < m; ++i) {
        if (filter.redundant[i]) result.redundant_rows.push_back(i);
    }
    if (!filter.farkas.empty()) {
        result.status = LpStatus::Infeasible;
        result.farkas = std::move(filter.farkas);
        return result;
    }

    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < m; ++i) {
        if (!filter.redundant[i]) kept.push_back(i);
    }
    Tableau tab(rows, kept, n);

    auto to_original = [&](const std::vector<Rational>& y) {
        std::vector<Rational> w(m, Rational(0));
        for (std::size_t i = 0; i < kept.size(); ++i) w[kept[i]] = tab.sign(i) * y[i];
        return w;
    };

    std::vector<Rational> phase1(tab.width(), Rational(0));
    for (std::size_t col = 0; col < tab.width(); ++col) {
        if (tab.is_artificial(col)) phase1[col] = 1;
    }
    tab.optimize(phase1);
    if (tab.objective(phase1) > 0) {
        result.status = LpStatus::Infeasible;
        result.farkas = to_original(tab.duals(phase1));
        return result;
    }
    tab.expel_artificials();

    const std::vector<Rational> c = min_objective(problem);
    std::vector<Rational> phase2(tab.width(), Rational(0));
    std::copy(c.begin(), c.end(), phase2.begin());
    const std::size_t unbounded_col = tab.optimize(phase2);

    result.primal = tab.primal();
    result.objective_value = dot(problem.objective, result.primal);
    if (unbounded_col != kNone) {
        result.status = LpStatus::Unbounded;
        result.ray = tab.ray(unbounded_col);
        return result;
    }
    const bool pure_feasibility =
        std::all_of(c.begin(), c.end(), [](const Rational& v) { return v == 0; });
    result.status = pure_feasibility ? LpStatus::Feasible : LpStatus::Optimal;
    result.dual = to_original(tab.duals(phase2));
    return result;
}

bool verify_certificate(const LpProblem& problem, const LpResult& result) {
    const std::size_t n = problem.num_vars();
    const std::vector<LpRow> rows = expanded_rows(problem);
    const std::size_t m = rows.size();
    const std::vector<Rational> c = min_objective(problem);

    auto primal_feasible = [&](const std::vector<Rational>& x) {
        if (x.size() != n) return false;
        if (std::any_of(x.begin(), x.end(), [](const Rational& v) { return v < 0; })) return false;
        for (const auto& row : rows) {
            const Rational lhs = dot(row.coeffs, x);
            if (row.relation == Relation::Equal && lhs != row.rhs) return false;
            if (row.relation == Relation::LessEqual && lhs > row.rhs) return false;
            if (row.relation == Relation::GreaterEqual && lhs < row.rhs) return false;
        }
        return true;
    };
    auto sign_ok = [&](const std::vector<Rational>& w) {
        if (w.size() != m) return false;
        for (std::size_t i = 0; i < m; ++i) {
            if (rows[i].relation == Relation::GreaterEqual && w[i] < 0) return false;
            if (rows[i].relation == Relation::LessEqual && w[i] > 0) return false;
        }
        return true;
    };
    auto column = [&](const std::vector<Rational>& w, std::size_t j) {
        Rational total = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (w[i] != 0 && rows[i].coeffs[j] != 0) total += w[i] * rows[i].coeffs[j];
        }
        return total;
    };

    switch (result.status) {
        case LpStatus::Feasible:
            return primal_feasible(result.primal);
        case LpStatus::Optimal: {
            if (!primal_feasible(result.primal) || !sign_ok(result.dual)) return false;
            if (result.objective_value != dot(problem.objective, result.primal)) return false;
            for (std::size_t j = 0; j < n; ++j) {
                if (c[j] - column(result.dual, j) < 0) return false;
            }
            Rational by = 0;
            for (std::size_t i = 0; i < m; ++i) by += rows[i].rhs * result.dual[i];
            return by == dot(c, result.primal);
        }
        case LpStatus::Infeasible: {
            if (!sign_ok(result.farkas)) return false;
            for (std::size_t j = 0; j < n; ++j) {
                if (column(result.farkas, j) > 0) return false;
            }
            Rational bw = 0;
            for (std::size_t i = 0; i < m; ++i) bw += rows[i].rhs * result.farkas[i];
            return bw > 0;
        }
        case LpStatus::Unbounded: {
            if (!primal_feasible(result.primal) || result.ray.size() != n) return false;
            if (std::any_of(result.ray.begin(), result.ray.end(), [](const Rational& v) { return v < 0; })) {
                return false;
            }
            for (const auto& row : rows) {
                const Rational ad = dot(row.coeffs, result.ray);
                if (row.relation == Relation::Equal && ad != 0) return false;
                if (row.relation == Relation::LessEqual && ad > 0) return false;
                if (row.relation == Relation::GreaterEqual && ad < 0) return false;
            }
            return dot(c, result.ray) < 0;
        }
    }
    return false;
}

}  // namespace quasinet
