#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quasinet/behavior.hpp"
#include "quasinet/lp.hpp"
#include "quasinet/qdist.hpp"

namespace quasinet {

/// Deterministic local strategy: bit k of `alice` set means Alice outputs -1
/// on setting k (likewise for Bob and Charlie).
struct DeterministicStrategy {
    std::uint32_t alice = 0;
    std::uint32_t bob = 0;
    std::uint32_t charlie = 0;

    int output_a(std::size_t x) const { return ((alice >> x) & 1U) ? -1 : 1; }
    int output_b(std::size_t y) const { return ((bob >> y) & 1U) ? -1 : 1; }
    int output_c(std::size_t z) const { return ((charlie >> z) & 1U) ? -1 : 1; }

    /// "+-|--|-+": one sign per setting for each party.
    std::string label(const Dims& dims) const;
    Behavior behavior(const Dims& dims) const;

    friend bool operator==(const DeterministicStrategy&, const DeterministicStrategy&) = default;
};

/// All 2^(|X|+|Y|+|Z|) strategies; index = alice | bob << |X| | charlie << (|X|+|Y|).
std::vector<DeterministicStrategy> enumerate_strategies(const Dims& dims);

/// Outcome of the deterministic-strategy LP.
struct LocalityCertificate {
    LpProblem problem;
    LpResult lp;
    std::vector<DeterministicStrategy> strategies;
    /// Feasible: weight of each strategy (sums to one).
    std::vector<Rational> weights;
    /// Infeasible: Bell-type functional W with W.P + offset > 0 on the input
    /// and W.D + offset <= 0 on every deterministic behavior D. `witness` has
    /// the behavior table layout.
    std::vector<Rational> witness;
    Rational witness_offset;

    bool local() const { return lp.status == LpStatus::Feasible; }
};

/// Feasibility of rho >= 0, sum rho = 1, sum_l rho(l) D_l = P.
LocalityCertificate locality_lp(const Behavior& behavior);

/// Re-checks the certificate against the behavior and the strategies.
bool verify_locality(const Behavior& behavior, const LocalityCertificate& cert);

struct NegativityCertificate {
    LpProblem problem;
    LpResult lp;
    /// Minimum of sum_x |q(x)| over every q reproducing the behavior.
    Rational optimum;
    QuasiDistribution optimizer;
};

/// Minimum-L1 quasi-distribution over joint_variables(dims) whose marginals
/// reproduce the behavior (split q = q+ - q-).
NegativityCertificate min_negativity_lp(const Behavior& behavior);

bool verify_min_negativity(const Behavior& behavior, const NegativityCertificate& cert);

}  // namespace quasinet
