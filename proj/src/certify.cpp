#include "quasinet/certify.hpp"

namespace quasinet {

std::string DeterministicStrategy::label(const Dims& dims) const {
    auto signs = [](std::uint32_t bits, std::size_t count) {
        std::string s;
        for (std::size_t k = 0; k < count; ++k) s += ((bits >> k) & 1U) ? '-' : '+';
        return s;
    };
    return signs(alice, dims.x) + "|" + signs(bob, dims.y) + "|" + signs(charlie, dims.z);
}

Behavior DeterministicStrategy::behavior(const Dims& dims) const {
    Behavior b(dims);
    for (std::size_t x = 0; x < dims.x; ++x) {
        for (std::size_t y = 0; y < dims.y; ++y) {
            for (std::size_t z = 0; z < dims.z; ++z) {
                b.set(x, y, z, Behavior::outcome_index(output_a(x), output_b(y), output_c(z)), 1);
            }
        }
    }
    return b;
}

std::vector<DeterministicStrategy> enumerate_strategies(const Dims& dims) {
    const std::size_t bits = dims.x + dims.y + dims.z;
    if (bits > 20) throw Error("strategy enumeration is capped at 2^20 strategies");
    const std::uint32_t count = std::uint32_t{1} << bits;
    std::vector<DeterministicStrategy> out;
    out.reserve(count);
    const std::uint32_t amask = (1U << dims.x) - 1, bmask = (1U << dims.y) - 1;
    for (std::uint32_t l = 0; l < count; ++l) {
        out.push_back({l & amask, (l >> dims.x) & bmask, l >> (dims.x + dims.y)});
    }
    return out;
}

LocalityCertificate locality_lp(const Behavior& behavior) {
    behavior.validate();
    const Dims& dims = behavior.dims();
    LocalityCertificate cert;
    cert.strategies = enumerate_strategies(dims);
    const std::size_t k = cert.strategies.size();
    const std::size_t cells = behavior.table().size();

    LpProblem& p = cert.problem;
    p.objective.assign(k, Rational(0));
    // Row 0 normalizes rho; row 1 + cell matches behavior cell `cell`.
    p.rows.push_back({std::vector<Rational>(k, Rational(1)), Relation::Equal, Rational(1)});
    for (std::size_t cell = 0; cell < cells; ++cell) {
        p.rows.push_back({std::vector<Rational>(k, Rational(0)), Relation::Equal, behavior.table()[cell]});
    }
    for (std::size_t l = 0; l < k; ++l) {
        const auto& s = cert.strategies[l];
        for (std::size_t x = 0; x < dims.x; ++x) {
            for (std::size_t y = 0; y < dims.y; ++y) {
                for (std::size_t z = 0; z < dims.z; ++z) {
                    const std::size_t cell =
                        behavior.index(x, y, z, Behavior::outcome_index(s.output_a(x), s.output_b(y), s.output_c(z)));
                    p.rows[1 + cell].coeffs[l] = 1;
                }
            }
        }
    }

    cert.lp = simplex_solve(p);
    if (cert.lp.status == LpStatus::Feasible) {
        cert.weights = cert.lp.primal;
    } else if (cert.lp.status == LpStatus::Infeasible) {
        cert.witness_offset = cert.lp.farkas[0];
        cert.witness.assign(cert.lp.farkas.begin() + 1, cert.lp.farkas.end());
    } else {
        throw Error("locality LP returned an unexpected status");
    }
    return cert;
}

bool verify_locality(const Behavior& behavior, const LocalityCertificate& cert) {
    if (!verify_certificate(cert.problem, cert.lp)) return false;
    const Dims& dims = behavior.dims();
    if (cert.local()) {
        // Re-expand the local model and compare with the input table.
        std::vector<Rational> table(behavior.table().size(), Rational(0));
        Rational total = 0;
        for (std::size_t l = 0; l < cert.strategies.size(); ++l) {
            const Rational& w = cert.weights[l];
            if (w < 0) return false;
            total += w;
            if (w == 0) continue;
            const auto d = cert.strategies[l].behavior(dims);
            for (std::size_t c = 0; c < table.size(); ++c) table[c] += w * d.table()[c];
        }
        return total == 1 && table == behavior.table();
    }
    if (cert.witness.size() != behavior.table().size()) return false;
    auto evaluate = [&](const std::vector<Rational>& t) {
        Rational v = cert.witness_offset;
        for (std::size_t c = 0; c < t.size(); ++c) v += cert.witness[c] * t[c];
        return v;
    };
    if (evaluate(behavior.table()) <= 0) return false;
    for (const auto& s : cert.strategies) {
        if (evaluate(s.behavior(dims).table()) > 0) return false;
    }
    return true;
}

NegativityCertificate min_negativity_lp(const Behavior& behavior) {
    behavior.validate();
    const Dims& dims = behavior.dims();
    const VariableSet vars = joint_variables(dims);
    const std::size_t size = std::size_t{1} << vars.size();
    const std::size_t cells = behavior.table().size();

    LpProblem p;
    p.objective.assign(2 * size, Rational(1));
    p.rows.assign(cells, LpRow{std::vector<Rational>(2 * size, Rational(0)), Relation::Equal, Rational(0)});
    for (std::size_t cell = 0; cell < cells; ++cell) p.rows[cell].rhs = behavior.table()[cell];
    for (AssignmentIndex v = 0; v < size; ++v) {
        for (std::size_t x = 0; x < dims.x; ++x) {
            for (std::size_t y = 0; y < dims.y; ++y) {
                for (std::size_t z = 0; z < dims.z; ++z) {
                    const std::size_t o = ((v >> x) & 1U) | (((v >> (dims.x + y)) & 1U) << 1) |
                                          (((v >> (dims.x + dims.y + z)) & 1U) << 2);
                    auto& row = p.rows[behavior.index(x, y, z, o)].coeffs;
                    row[v] = 1;
                    row[size + v] = -1;
                }
            }
        }
    }

    LpResult lp = simplex_solve(p);
    if (lp.status != LpStatus::Optimal) throw Error("minimum-negativity LP did not reach an optimum");
    std::vector<Rational> q(size);
    for (std::size_t v = 0; v < size; ++v) q[v] = lp.primal[v] - lp.primal[size + v];
    Rational optimum = lp.objective_value;
    return {std::move(p), std::move(lp), std::move(optimum), QuasiDistribution(vars, std::move(q))};
}

bool verify_min_negativity(const Behavior& behavior, const NegativityCertificate& cert) {
    if (!verify_certificate(cert.problem, cert.lp)) return false;
    if (cert.lp.status != LpStatus::Optimal) return false;
    if (negativity(cert.optimizer) != cert.optimum) return false;
    return behavior_of(cert.optimizer, behavior.dims()).table() == behavior.table();
}

}  // namespace quasinet
