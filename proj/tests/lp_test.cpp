#include <gtest/gtest.h>

#include <array>
#include <optional>
#include <random>

#include "quasinet/lp.hpp"

using namespace quasinet;

namespace {

LpRow row(std::vector<Rational> coeffs, Relation rel, Rational rhs) { return {std::move(coeffs), rel, std::move(rhs)}; }

// Best objective over all vertices of {x >= 0, rows} in two variables. Every
// vertex is the intersection of two tight constraints.
std::optional<Rational> vertex_oracle(const LpProblem& p) {
    std::vector<std::array<Rational, 3>> lines;  // a x + b y = c
    for (const auto& r : p.rows) lines.push_back({r.coeffs[0], r.coeffs[1], r.rhs});
    lines.push_back({Rational(1), Rational(0), Rational(0)});
    lines.push_back({Rational(0), Rational(1), Rational(0)});
    std::optional<Rational> best;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const auto& [a1, b1, c1] = lines[i];
            const auto& [a2, b2, c2] = lines[j];
            const Rational det = a1 * b2 - a2 * b1;
            if (det == 0) continue;
            const Rational x = (c1 * b2 - c2 * b1) / det;
            const Rational y = (a1 * c2 - a2 * c1) / det;
            if (x < 0 || y < 0) continue;
            bool ok = true;
            for (const auto& r : p.rows) {
                const Rational lhs = r.coeffs[0] * x + r.coeffs[1] * y;
                if (r.relation == Relation::LessEqual && lhs > r.rhs) ok = false;
                if (r.relation == Relation::GreaterEqual && lhs < r.rhs) ok = false;
                if (r.relation == Relation::Equal && lhs != r.rhs) ok = false;
            }
            if (!ok) continue;
            const Rational v = p.objective[0] * x + p.objective[1] * y;
            if (!best || (p.sense == Sense::Maximize ? v > *best : v < *best)) best = v;
        }
    }
    return best;
}

}  // namespace

TEST(Simplex, MaximizeSingleBound) {
    LpProblem p;
    p.sense = Sense::Maximize;
    p.objective = {Rational(1)};
    p.rows = {row({Rational(1)}, Relation::LessEqual, Rational(3))};
    const auto r = simplex_solve(p);
    EXPECT_EQ(r.status, LpStatus::Optimal);
    EXPECT_EQ(r.objective_value, 3);
    EXPECT_EQ(r.primal, std::vector<Rational>{Rational(3)});
    EXPECT_TRUE(verify_certificate(p, r));
}

TEST(Simplex, InfeasiblePairHasFarkasCertificate) {
    LpProblem p;
    p.objective = {Rational(0)};
    p.rows = {row({Rational(1)}, Relation::GreaterEqual, Rational(1)),
              row({Rational(1)}, Relation::LessEqual, Rational(0))};
    const auto r = simplex_solve(p);
    EXPECT_EQ(r.status, LpStatus::Infeasible);
    ASSERT_EQ(r.farkas.size(), 2u);
    EXPECT_TRUE(verify_certificate(p, r));
    auto forged = r;
    forged.farkas = {Rational(0), Rational(0)};
    EXPECT_FALSE(verify_certificate(p, forged));
}

TEST(Simplex, InconsistentEqualities) {
    LpProblem p;
    p.objective = {Rational(0), Rational(0)};
    p.rows = {row({Rational(1), Rational(1)}, Relation::Equal, Rational(1)),
              row({Rational(2), Rational(2)}, Relation::Equal, Rational(3))};
    const auto r = simplex_solve(p);
    EXPECT_EQ(r.status, LpStatus::Infeasible);
    EXPECT_TRUE(verify_certificate(p, r));
}

TEST(Simplex, RedundantEqualitiesAreDropped) {
    LpProblem p;
    p.objective = {Rational(1), Rational(2)};
    p.rows = {row({Rational(1), Rational(1)}, Relation::Equal, Rational(1)),
              row({Rational(2), Rational(2)}, Relation::Equal, Rational(2))};
    const auto r = simplex_solve(p);
    EXPECT_EQ(r.status, LpStatus::Optimal);
    EXPECT_EQ(r.objective_value, 1);
    EXPECT_EQ(r.redundant_rows, std::vector<std::size_t>{1});
    EXPECT_TRUE(verify_certificate(p, r));
}

TEST(Simplex, UnboundedHasRay) {
    LpProblem p;
    p.sense = Sense::Maximize;
    p.objective = {Rational(1), Rational(1)};
    p.rows = {row({Rational(1), Rational(-1)}, Relation::LessEqual, Rational(2))};
    const auto r = simplex_solve(p);
    EXPECT_EQ(r.status, LpStatus::Unbounded);
    EXPECT_TRUE(verify_certificate(p, r));
}

TEST(Simplex, UpperBoundsAreHonoured) {
    LpProblem p;
    p.sense = Sense::Maximize;
    p.objective = {Rational(1), Rational(1)};
    p.rows = {row({Rational(1), Rational(-1)}, Relation::LessEqual, Rational(2))};
    p.upper = {Rational(5), std::nullopt};
    const auto r = simplex_solve(p);
    EXPECT_EQ(r.status, LpStatus::Unbounded);
    p.upper = {Rational(5), Rational(7, 2)};
    const auto bounded = simplex_solve(p);
    EXPECT_EQ(bounded.status, LpStatus::Optimal);
    EXPECT_EQ(bounded.objective_value, Rational(17, 2));
    EXPECT_EQ(bounded.dual.size(), 3u);
    EXPECT_TRUE(verify_certificate(p, bounded));
}

TEST(Simplex, FeasibilityOnlyProblem) {
    LpProblem p;
    p.objective = {Rational(0), Rational(0), Rational(0)};
    p.rows = {row({Rational(1), Rational(1), Rational(1)}, Relation::Equal, Rational(1)),
              row({Rational(1), Rational(-1), Rational(0)}, Relation::Equal, Rational(1, 2))};
    const auto r = simplex_solve(p);
    EXPECT_EQ(r.status, LpStatus::Feasible);
    EXPECT_TRUE(verify_certificate(p, r));
}

TEST(Simplex, DeterministicAcrossRuns) {
    LpProblem p;
    p.objective = {Rational(1), Rational(1), Rational(1)};
    p.rows = {row({Rational(1), Rational(1), Rational(0)}, Relation::GreaterEqual, Rational(1)),
              row({Rational(0), Rational(1), Rational(1)}, Relation::GreaterEqual, Rational(1))};
    const auto a = simplex_solve(p);
    const auto b = simplex_solve(p);
    EXPECT_EQ(a.primal, b.primal);
    EXPECT_EQ(a.dual, b.dual);
    EXPECT_EQ(a.objective_value, 1);
}

TEST(Simplex, RandomTwoVariableProgramsMatchVertexEnumeration) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> coef(-5, 6), rhs(-3, 12);
    int optimal = 0, infeasible = 0;
    for (int trial = 0; trial < 300; ++trial) {
        LpProblem p;
        p.sense = trial % 2 ? Sense::Maximize : Sense::Minimize;
        p.objective = {Rational(coef(rng)), Rational(coef(rng))};
        const int k = 1 + trial % 4;
        for (int i = 0; i < k; ++i) {
            const Relation rel = (i + trial) % 3 == 0 ? Relation::GreaterEqual : Relation::LessEqual;
            p.rows.push_back(row({Rational(coef(rng)), Rational(coef(rng))}, rel, Rational(rhs(rng))));
        }
        // Box keeps the region bounded so the vertex oracle is exact.
        p.rows.push_back(row({Rational(1), Rational(0)}, Relation::LessEqual, Rational(10)));
        p.rows.push_back(row({Rational(0), Rational(1)}, Relation::LessEqual, Rational(10)));
        const auto r = simplex_solve(p);
        ASSERT_TRUE(verify_certificate(p, r)) << "trial " << trial;
        const auto best = vertex_oracle(p);
        if (!best) {
            ASSERT_EQ(r.status, LpStatus::Infeasible) << "trial " << trial;
            ++infeasible;
            continue;
        }
        ASSERT_NE(r.status, LpStatus::Infeasible) << "trial " << trial;
        ASSERT_NE(r.status, LpStatus::Unbounded) << "trial " << trial;
        ASSERT_EQ(r.objective_value, *best) << "trial " << trial;
        ++optimal;
    }
    EXPECT_GT(optimal, 50);
    EXPECT_GT(infeasible, 5);
}
