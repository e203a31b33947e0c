#pragma once

#include <cstdint>
#include <random>

#include "quasinet/qdist.hpp"
#include "quasinet/qproc.hpp"

namespace quasinet {

/// Generators of random exact instances for property checks. Weights are
/// small integers normalized by their sum, so denominators stay modest.
class InstanceGenerator {
public:
    explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

    /// Nonnegative distribution; some entries may be zero.
    QuasiDistribution distribution(const VariableSet& vars);
    /// Signed distribution with at least one negative entry when possible.
    QuasiDistribution quasi_distribution(const VariableSet& vars);
    /// Column-stochastic kernel.
    QuasiStochasticProcess stochastic(const VariableSet& in, const VariableSet& out);
    /// Kernel with signed entries whose columns still sum to one.
    QuasiStochasticProcess quasi_stochastic(const VariableSet& in, const VariableSet& out);

    Rational unit_rational(std::int64_t max_den = 64);
    std::mt19937_64& engine() { return rng_; }

private:
    std::vector<Rational> normalized(std::size_t count, std::int64_t lo, std::int64_t hi);

    std::mt19937_64 rng_;
};

}  // namespace quasinet
