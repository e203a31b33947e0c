#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "quasinet/rational.hpp"

namespace quasinet {

enum class Relation { LessEqual, GreaterEqual, Equal };
enum class Sense { Minimize, Maximize };

struct LpRow {
    std::vector<Rational> coeffs;
    Relation relation = Relation::Equal;
    Rational rhs;
};

/// Optimize objective . x subject to rows, x >= 0, and x_j <= upper[j]
/// where an upper bound is given. An all-zero objective makes it a pure
/// feasibility problem.
struct LpProblem {
    Sense sense = Sense::Minimize;
    std::vector<Rational> objective;
    std::vector<LpRow> rows;
    std::vector<std::optional<Rational>> upper;

    std::size_t num_vars() const { return objective.size(); }
};

enum class LpStatus { Feasible, Infeasible, Optimal, Unbounded };

std::string_view status_name(LpStatus status);

/// Certificates refer to the constraint list rows ++ (one LessEqual row per
/// finite upper bound, in variable order).
///
/// - Feasible / Optimal: `primal` satisfies every constraint. For Optimal,
///   `dual` y has sign y_i >= 0 on GreaterEqual and <= 0 on LessEqual rows
///   (minimization form, i.e. after negating a Maximize objective), reduced
///   costs c - A^T y are >= 0, and b.y equals the objective value.
/// - Infeasible: `farkas` w has w_i >= 0 on GreaterEqual, <= 0 on LessEqual,
///   w^T A <= 0 columnwise, and w.b > 0.
/// - Unbounded: `primal` is feasible and `ray` d >= 0 keeps every row
///   satisfied (A d relation 0) while improving the objective strictly.
struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> primal;
    Rational objective_value;
    std::vector<Rational> dual;
    std::vector<Rational> farkas;
    std::vector<Rational> ray;
    /// Equality rows dropped as linearly dependent before pivoting.
    std::vector<std::size_t> redundant_rows;
};

/// Exact two-phase tableau simplex with Bland's rule.
LpResult simplex_solve(const LpProblem& problem);

/// Re-checks the certificate carried by `result` with exact arithmetic.
bool verify_certificate(const LpProblem& problem, const LpResult& result);

}  // namespace quasinet
