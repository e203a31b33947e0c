#include "quasinet/random.hpp"

namespace quasinet {

std::vector<Rational> InstanceGenerator::normalized(std::size_t count, std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> pick(lo, hi);
    std::vector<std::int64_t> raw(count);
    std::int64_t total = 0;
    do {
        total = 0;
        for (auto& r : raw) {
            r = pick(rng_);
            total += r;
        }
    } while (total <= 0);
    std::vector<Rational> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = ratio(raw[i], total);
    }
    return out;
}

QuasiDistribution InstanceGenerator::distribution(const VariableSet& vars) {
    return QuasiDistribution(vars, normalized(std::size_t{1} << vars.size(), 0, 9));
}

QuasiDistribution InstanceGenerator::quasi_distribution(const VariableSet& vars) {
    return QuasiDistribution(vars, normalized(std::size_t{1} << vars.size(), -4, 9));
}

QuasiStochasticProcess InstanceGenerator::stochastic(const VariableSet& in, const VariableSet& out) {
    const std::size_t rows = std::size_t{1} << out.size();
    std::vector<Rational> kernel;
    for (std::size_t c = 0; c < (std::size_t{1} << in.size()); ++c) {
        auto col = normalized(rows, 0, 9);
        kernel.insert(kernel.end(), col.begin(), col.end());
    }
    return QuasiStochasticProcess(in, out, std::move(kernel));
}

QuasiStochasticProcess InstanceGenerator::quasi_stochastic(const VariableSet& in, const VariableSet& out) {
    const std::size_t rows = std::size_t{1} << out.size();
    std::vector<Rational> kernel;
    for (std::size_t c = 0; c < (std::size_t{1} << in.size()); ++c) {
        auto col = normalized(rows, -5, 9);
        kernel.insert(kernel.end(), col.begin(), col.end());
    }
    return QuasiStochasticProcess(in, out, std::move(kernel));
}

Rational InstanceGenerator::unit_rational(std::int64_t max_den) {
    std::uniform_int_distribution<std::int64_t> den(1, max_den);
    const std::int64_t d = den(rng_);
    std::uniform_int_distribution<std::int64_t> num(0, d);
    return ratio(num(rng_), d);
}

}  // namespace quasinet
