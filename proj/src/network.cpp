#include "quasinet/network.hpp"

#include <cmath>

namespace quasinet {

namespace {

// 2^-4 [1 + mu (l0 r0 + l0 r1 + l1 r0 - l1 r1)] over (l0, l1, r0, r1).
QuasiDistribution chsh_source(const Rational& mu, VariableSet vars) {
    if (mu < 0) throw Error("source strength must be nonnegative");
    if (mu > 1) throw Error("source strength " + to_string(mu) + " > 1 yields negative observable marginals");
    std::vector<Rational> w(16);
    for (AssignmentIndex x = 0; x < 16; ++x) {
        const int l0 = spin(x, 0), l1 = spin(x, 1), r0 = spin(x, 2), r1 = spin(x, 3);
        const int chsh = l0 * r0 + l0 * r1 + l1 * r0 - l1 * r1;
        w[x] = (1 + mu * chsh) / 16;
    }
    return QuasiDistribution(std::move(vars), std::move(w));
}

// b0 (a0+a1)(c0+c1) + b1 (a0-a1)(c0-c1) at a canonical assignment.
int bilocal_pattern(AssignmentIndex x) {
    const int a0 = spin(x, 0), a1 = spin(x, 1), b0 = spin(x, 2), b1 = spin(x, 3), c0 = spin(x, 4), c1 = spin(x, 5);
    return b0 * (a0 + a1) * (c0 + c1) + b1 * (a0 - a1) * (c0 - c1);
}

void require_canonical(const QuasiDistribution& r) {
    if (!(r.vars() == canonical_vars())) {
        throw Error("expected a distribution over (a0, a1, b0, b1, c0, c1) in canonical order");
    }
}

std::string party_letter(std::size_t k) {
    if (k >= 26) throw Error("chain has too many parties");
    return std::string(1, static_cast<char>('a' + k));
}

}  // namespace

const VariableSet& canonical_vars() {
    static const VariableSet vars{"a0", "a1", "b0", "b1", "c0", "c1"};
    return vars;
}

const VariableSet& source_ab_vars() {
    static const VariableSet vars{"a0", "a1", "beta0", "beta1"};
    return vars;
}

const VariableSet& source_bc_vars() {
    static const VariableSet vars{"betap0", "betap1", "c0", "c1"};
    return vars;
}

std::string_view region_name(Region region) {
    switch (region) {
        case Region::Bilocal: return "BILOCAL";
        case Region::Biquantum: return "BIQUANTUM";
        case Region::BeyondBiquantum: return "BEYOND_BQ";
        case Region::Unphysical: return "UNPHYSICAL";
    }
    return "UNKNOWN";
}

Region parse_region(std::string_view name) {
    for (Region r : {Region::Bilocal, Region::Biquantum, Region::BeyondBiquantum, Region::Unphysical}) {
        if (region_name(r) == name) return r;
    }
    throw Error("unknown region '" + std::string(name) + "'");
}

QuasiDistribution source_family(const Rational& mu, Side side) {
    return chsh_source(mu, side == Side::AB ? source_ab_vars() : source_bc_vars());
}

BilocalScenario parametric_scenario(const BilocalParams& params) {
    return {source_family(params.mu1, Side::AB), source_family(params.mu2, Side::BC), coupler(params.eta)};
}

QuasiDistribution compose_bilocal(const BilocalScenario& s) {
    if (!s.q_ab.vars().same_members(source_ab_vars())) throw Error("q_AB must be over (a0, a1, beta0, beta1)");
    if (!s.q_bc.vars().same_members(source_bc_vars())) throw Error("q_BC must be over (betap0, betap1, c0, c1)");
    const VariableSet bob_in{"beta0", "beta1", "betap0", "betap1"};
    if (!s.processor.in_vars().same_members(bob_in)) throw Error("processor must read (beta0, beta1, betap0, betap1)");
    if (!s.processor.out_vars().same_members(VariableSet{"b0", "b1"})) throw Error("processor must write (b0, b1)");
    return apply(s.processor, tensor(s.q_ab, s.q_bc)).reorder(canonical_vars());
}

QuasiDistribution compose_bilocal(const BilocalParams& params) { return compose_bilocal(parametric_scenario(params)); }

QuasiDistribution closed_form(const Rational& t, bool allow_unphysical) {
    if (t < 0) throw Error("t must be nonnegative");
    if (t > 1 && !allow_unphysical) throw Error("t = " + to_string(t) + " lies outside [0, 1]");
    std::vector<Rational> w(64);
    for (AssignmentIndex x = 0; x < 64; ++x) w[x] = (1 + t * bilocal_pattern(x)) / 64;
    return QuasiDistribution(canonical_vars(), std::move(w));
}

Rational correlator_i(const QuasiDistribution& r) {
    require_canonical(r);
    Rational total = 0;
    for (const char* a : {"a0", "a1"}) {
        for (const char* c : {"c0", "c1"}) total += expectation(r, std::vector<std::string>{a, "b0", c});
    }
    return total / 4;
}

Rational correlator_j(const QuasiDistribution& r) {
    require_canonical(r);
    Rational total = 0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Rational e = expectation(r, std::vector<std::string>{"a" + std::to_string(i), "b1", "c" + std::to_string(j)});
            if ((i + j) % 2 == 0) {
                total += e;
            } else {
                total -= e;
            }
        }
    }
    return total / 4;
}

double bilocal_value(const QuasiDistribution& r) {
    return std::sqrt(std::fabs(to_double(correlator_i(r)))) + std::sqrt(std::fabs(to_double(correlator_j(r))));
}

bool bilocal_value_at_most(const Rational& i, const Rational& j, const Rational& bound_squared) {
    const Rational ai = abs(i), aj = abs(j);
    const Rational slack = bound_squared - ai - aj;
    return slack >= 0 && slack * slack >= 4 * ai * aj;
}

bool satisfies_bilocal_inequality(const Rational& i, const Rational& j) { return bilocal_value_at_most(i, j, 1); }

Region classify(const Rational& t) {
    if (t < 0) throw Error("t must be nonnegative");
    if (t <= Rational(1, 4)) return Region::Bilocal;
    if (t <= Rational(1, 2)) return Region::Biquantum;
    if (t <= 1) return Region::BeyondBiquantum;
    return Region::Unphysical;
}

Region classify_distribution(const QuasiDistribution& r) {
    if (!observable_marginals(r).behavior.nonnegative()) return Region::Unphysical;
    const Rational i = correlator_i(r), j = correlator_j(r);
    if (bilocal_value_at_most(i, j, 1)) return Region::Bilocal;
    if (bilocal_value_at_most(i, j, 2)) return Region::Biquantum;
    if (bilocal_value_at_most(i, j, 4)) return Region::BeyondBiquantum;
    return Region::Unphysical;
}

BilocalReport bilocal_report(const BilocalScenario& scenario) {
    const auto r = compose_bilocal(scenario);
    BilocalReport rep;
    rep.i = correlator_i(r);
    rep.j = correlator_j(r);
    rep.bilocal_value = bilocal_value(r);
    rep.region = classify_distribution(r);
    rep.negativity_sources = {negativity(scenario.q_ab), negativity(scenario.q_bc)};
    rep.negativity_process = column_negativity(scenario.processor);
    return rep;
}

QuasiDistribution make_rbq() { return closed_form(Rational(1, 2)); }

QuasiDistribution make_rbq_noisy(const Rational& visibility) {
    if (visibility < 0 || visibility > 1) throw Error("visibility must lie in [0, 1]");
    std::vector<Rational> w(64);
    const Rational strength = visibility / 2;
    for (AssignmentIndex x = 0; x < 64; ++x) w[x] = (1 + strength * bilocal_pattern(x)) / 64;
    return QuasiDistribution(canonical_vars(), std::move(w));
}

QuasiDistribution make_rbq_plus() {
    // The a0 a1 c0 c1 term carries weight 1: the smallest coefficient that
    // lifts every negative entry of make_rbq() to zero, and the largest that
    // keeps the zero-pattern entries nonnegative.
    std::vector<Rational> w(64);
    for (AssignmentIndex x = 0; x < 64; ++x) {
        const int a0a1c0c1 = spin(x, 0) * spin(x, 1) * spin(x, 4) * spin(x, 5);
        w[x] = (1 + Rational(1, 2) * bilocal_pattern(x) + a0a1c0c1) / 64;
    }
    return QuasiDistribution(canonical_vars(), std::move(w));
}

ObservableTables observable_marginals(const QuasiDistribution& r) {
    require_canonical(r);
    auto joint = [&](int x, int z) {
        return marginalize(r, std::vector<std::string>{"a" + std::to_string(x), "b0", "b1", "c" + std::to_string(z)});
    };
    return {behavior_of(r, Dims{2, 2, 2}), BobJointTable{joint(0, 0), joint(0, 1), joint(1, 0), joint(1, 1)}};
}

bool bob_joint_marginals_check(const QuasiDistribution& r) {
    for (const auto& m : observable_marginals(r).bob_joint) {
        if (!is_nonnegative(m)) return false;
    }
    return true;
}

QuasiDistribution compose_chain(const ChainNetwork& net) {
    if (net.sources.empty()) throw Error("chain needs at least one source");
    if (net.processors.size() + 1 != net.sources.size()) {
        throw Error("chain with " + std::to_string(net.sources.size()) + " sources needs " +
                    std::to_string(net.sources.size() - 1) + " processors");
    }
    std::size_t total = 0;
    for (const auto& s : net.sources) total += s.vars().size();
    if (total > max_vars()) throw Error("chain sources exceed the variable cap");

    for (std::size_t k = 0; k < net.processors.size(); ++k) {
        const auto& in = net.processors[k].in_vars();
        bool left = false, right = false;
        for (const auto& name : in.names()) {
            if (net.sources[k].vars().contains(name)) {
                left = true;
            } else if (net.sources[k + 1].vars().contains(name)) {
                right = true;
            } else {
                throw Error("processor " + std::to_string(k) + " reads '" + name +
                            "', which is not shared by its adjacent sources");
            }
        }
        if (!left || !right) throw Error("processor " + std::to_string(k) + " must read from both adjacent sources");
    }

    QuasiDistribution joint = net.sources.front();
    for (std::size_t k = 1; k < net.sources.size(); ++k) joint = tensor(joint, net.sources[k]);
    for (const auto& p : net.processors) joint = apply(p, joint);
    return joint;
}

ChainNetwork parametric_chain(const std::vector<Rational>& mus, const std::vector<Rational>& etas) {
    if (mus.empty()) throw Error("chain needs at least one source");
    if (etas.size() + 1 != mus.size()) throw Error("chain needs one coupler per intermediate party");
    const std::size_t n = mus.size();
    ChainNetwork net;
    for (std::size_t k = 0; k < n; ++k) {
        const std::string lp = party_letter(k), rp = party_letter(k + 1);
        const std::string l0 = k == 0 ? lp + "0" : lp + "R0";
        const std::string l1 = k == 0 ? lp + "1" : lp + "R1";
        const std::string r0 = k + 1 == n ? rp + "0" : rp + "L0";
        const std::string r1 = k + 1 == n ? rp + "1" : rp + "L1";
        // Orient each source so its CHSH pattern reads (left, right) as in the
        // Alice-Bob source.
        net.sources.push_back(chsh_source(mus[k], VariableSet({l0, l1, r0, r1})));
    }
    for (std::size_t k = 0; k < etas.size(); ++k) {
        const std::string p = party_letter(k + 1);
        CouplerWiring w{p + "L0", p + "L1", p + "R0", p + "R1", p + "0", p + "1"};
        net.processors.push_back(coupler(etas[k], w));
    }
    return net;
}

}  // namespace quasinet
