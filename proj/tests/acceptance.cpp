// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "quasinet/certify.hpp"
#include "quasinet/network.hpp"
#include "quasinet/random.hpp"
#include "quasinet/scan.hpp"

using namespace quasinet;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void criterion(const char* id, const char* title, double budget_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("threw: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && elapsed >= budget_seconds) {
        o.ok = false;
        o.detail += (o.detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    char timing[64];
    if (budget_seconds > 0) {
        std::snprintf(timing, sizeof timing, "%.3fs < %gs", elapsed, budget_seconds);
    } else {
        std::snprintf(timing, sizeof timing, "%.3fs", elapsed);
    }
    std::printf("[%s] %s %s (%s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, timing, o.detail.empty() ? "" : ": ",
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failures;
}

Outcome fail(std::string why) { return {false, std::move(why)}; }

Rational grid(int k, const Rational& hi) { return hi * ratio(k, 9); }

Outcome ac1() {
    for (int e = 0; e < 10; ++e) {
        for (int m = 0; m < 10; ++m) {
            const Rational eta = grid(e, Rational(3, 2)), mu = grid(m, Rational(1));
            const Rational t = eta * mu * mu;
            const auto r = compose_bilocal(BilocalParams{mu, mu, eta});
            if (r.weights() != closed_form(t, true).weights()) return fail("mismatch at eta=" + to_string(eta));
            if (correlator_i(r) != t || correlator_j(r) != t) return fail("I/J mismatch at eta=" + to_string(eta));
        }
    }
    return {true, "100 grid points exact"};
}

Outcome ac2() {
    InstanceGenerator gen(20240101);
    const VariableSet bob_in{"beta0", "beta1", "betap0", "betap1"}, bob_out{"b0", "b1"};
    int trials = 0;
    for (; trials < 10000; ++trials) {
        const BilocalScenario s{gen.distribution(source_ab_vars()), gen.distribution(source_bc_vars()),
                                gen.stochastic(bob_in, bob_out)};
        const auto r = compose_bilocal(s);
        if (!satisfies_bilocal_inequality(correlator_i(r), correlator_j(r))) {
            return fail("violated at trial " + std::to_string(trials));
        }
    }
    return {true, std::to_string(trials) + " trials"};
}

Outcome ac3() {
    const Rational eps(1, 1000);
    if (classify(Rational(1, 4)) != Region::Bilocal) return fail("t=1/4");
    if (classify(Rational(1, 2)) != Region::Biquantum) return fail("t=1/2");
    if (classify(Rational(1)) != Region::BeyondBiquantum) return fail("t=1");
    if (classify(1 + eps) != Region::Unphysical) return fail("t=1+eps");
    if (!observable_marginals(closed_form(Rational(1))).behavior.nonnegative()) return fail("t=1 marginals");
    if (observable_marginals(closed_form(1 + eps, true)).behavior.nonnegative()) return fail("t=1+eps marginals");
    return {};
}

Outcome ac4() {
    // Direct enumeration of the 64 entries from the defining formula.
    const auto entries = oracle::tabulate(6, [](const std::vector<int>& s) -> Rational {
        const int a0 = s[0], a1 = s[1], b0 = s[2], b1 = s[3], c0 = s[4], c1 = s[5];
        return (1 + Rational(1, 2) * (b0 * (a0 + a1) * (c0 + c1) + b1 * (a0 - a1) * (c0 - c1))) / 64;
    });
    Rational n = 0;
    for (const auto& w : entries) n += abs(w);
    if (n != Rational(3, 2) || negativity(make_rbq()) != n) return fail("N(r_BQ) = " + to_string(negativity(make_rbq())));
    if (make_rbq().weights() != entries) return fail("r_BQ entries");

    const auto plus = make_rbq_plus();
    if (!is_nonnegative(plus)) return fail("r_BQ+ negative");
    const auto om_plus = observable_marginals(plus), om = observable_marginals(make_rbq());
    if (!(om_plus.behavior == om.behavior) || om_plus.bob_joint != om.bob_joint) return fail("r_BQ+ marginals differ");
    const std::vector<std::string> ac{"a0", "a1", "c0", "c1"};
    if (separability_check(marginalize(plus, ac), {"a0", "a1"}, {"c0", "c1"})) return fail("r_BQ+ separable");

    auto bilocal = [](const Rational& v) {
        const auto r = make_rbq_noisy(v);
        return satisfies_bilocal_inequality(correlator_i(r), correlator_j(r));
    };
    if (!bilocal(Rational(1, 2))) return fail("V=1/2 not bilocal");
    if (bilocal(Rational(1, 2) + Rational(1, 1000))) return fail("V=1/2+1/1000 bilocal");
    return {};
}

Outcome ac5() {
    InstanceGenerator gen(55);
    const VariableSet vars{"x0", "x1", "x2", "x3"};
    const VariableSet in{"x1", "x3"}, out{"y0", "y1"};
    for (int k = 0; k < 10000; ++k) {
        const auto q = gen.quasi_distribution(vars);
        const auto s = gen.stochastic(in, out);
        if (negativity(apply(s, q)) > negativity(q)) return fail("stochastic trial " + std::to_string(k));
    }
    for (int k = 0; k < 10000; ++k) {
        const auto q = gen.quasi_distribution(vars);
        const auto s = gen.quasi_stochastic(in, out);
        if (negativity(apply(s, q)) > column_negativity(s) * negativity(q)) {
            return fail("quasi-stochastic trial " + std::to_string(k));
        }
    }
    return {true, "2 x 10000 pairs"};
}

Outcome ac6() {
    std::ostringstream note;
    for (const Rational& t : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 5), Rational(4, 5), Rational(1)}) {
        const bool expect_local = t <= Rational(1, 2);
        const auto b = observable_marginals(closed_form(t)).behavior;
        const auto loc = locality_lp(b);
        if (loc.local() != expect_local) return fail("locality verdict at t=" + to_string(t));
        if (!verify_locality(b, loc)) return fail("locality certificate at t=" + to_string(t));
        const auto neg = min_negativity_lp(b);
        if (expect_local ? neg.optimum != 1 : neg.optimum <= 1) return fail("min negativity at t=" + to_string(t));
        if (!verify_min_negativity(b, neg)) return fail("negativity certificate at t=" + to_string(t));
        if (!expect_local) note << " N*(" << to_string(t) << ")=" << to_string(neg.optimum);
    }
    return {true, "verified;" + note.str()};
}

Outcome ac7() {
    for (const Rational& t : {Rational(0), Rational(1, 8), Rational(1, 4), Rational(1, 2)}) {
        if (!bob_joint_marginals_check(closed_form(t))) return fail("t=" + to_string(t));
    }
    if (bob_joint_marginals_check(closed_form(Rational(3, 4)))) return fail("t=3/4");
    return {};
}

Outcome ac8() {
    for (const Rational& eta : {Rational(0), Rational(1, 2), Rational(1), Rational(6, 5)}) {
        const auto w = nebit_decompose(eta);
        if (w.w_and != (1 + eta) / 2 || w.w_nand != (1 - eta) / 2) return fail("weights at eta=" + to_string(eta));
        CouplerWiring wire;
        const auto bit0 = affine_combination(parity_map(wire.left0, wire.right0, wire.out0),
                                             flipped_parity_map(wire.left0, wire.right0, wire.out0), w.w_and);
        const auto bit1 = affine_combination(parity_map(wire.left1, wire.right1, wire.out1),
                                             flipped_parity_map(wire.left1, wire.right1, wire.out1), w.w_and);
        const auto rebuilt = product(bit0, bit1);
        const auto s = coupler(eta);
        // product() orders inputs (left0, right0, left1, right1); coupler uses (left0, left1, right0, right1).
        for (AssignmentIndex in = 0; in < 16; ++in) {
            const AssignmentIndex p = (in & 1U) | ((in >> 2) & 1U) << 1 | ((in >> 1) & 1U) << 2 | ((in >> 3) & 1U) << 3;
            for (AssignmentIndex o = 0; o < 4; ++o) {
                if (s(o, in) != rebuilt(o, p)) return fail("entry mismatch at eta=" + to_string(eta));
            }
        }
    }
    return {};
}

Outcome ac9() {
    ScanConfig config;  // 101 x 101 over eta in [0, 3/2], mu in [0, 1]
    const auto rows = run_scan(config);
    if (rows.size() != 101u * 101u) return fail("row count " + std::to_string(rows.size()));
    std::size_t k = 0, spot = 0;
    int mechanisms[4] = {0, 0, 0, 0};
    for (std::size_t e = 0; e < 101; ++e) {
        for (std::size_t m = 0; m < 101; ++m, ++k) {
            const auto& r = rows[k];
            const Rational eta = Rational(3, 2) * ratio(static_cast<long>(e), 100);
            const Rational mu = ratio(static_cast<long>(m), 100);
            const Rational t = eta * mu * mu;
            if (r.eta != eta || r.mu1 != mu || r.t != t) return fail("grid order at row " + std::to_string(k));
            const Region expected = t <= Rational(1, 4)   ? Region::Bilocal
                                    : t <= Rational(1, 2) ? Region::Biquantum
                                    : t <= 1              ? Region::BeyondBiquantum
                                                          : Region::Unphysical;
            if (r.region != expected) return fail("region at row " + std::to_string(k));
            if (r.source_neg != (mu > Rational(1, 2)) || r.process_neg != (eta > 1)) {
                return fail("flags at row " + std::to_string(k));
            }
            const bool violates = t > Rational(1, 4);
            if (violates) ++mechanisms[(r.source_neg ? 1 : 0) + (r.process_neg ? 2 : 0)];
            // Recompute the region from the composed distribution on a subsample.
            if (k % 97 == 0 && t <= 1) {
                ++spot;
                if (classify_distribution(compose_bilocal(BilocalParams{mu, mu, eta})) != expected) {
                    return fail("recomputed region at row " + std::to_string(k));
                }
            }
        }
    }
    // Violations with both resources nonnegative would contradict the bilocal bound.
    if (mechanisms[0] != 0) return fail("violation without any negativity");
    if (mechanisms[1] == 0 || mechanisms[2] == 0 || mechanisms[3] == 0) return fail("a mechanism region is empty");

    std::ostringstream a, b;
    write_csv(a, config, rows);
    write_csv(b, config, run_scan(config));
    if (a.str() != b.str()) return fail("CSV not deterministic");
    std::ostringstream note;
    note << "10201 rows; violations by source/process/both = " << mechanisms[1] << "/" << mechanisms[2] << "/"
         << mechanisms[3] << "; " << spot << " spot checks";
    return {true, note.str()};
}

}  // namespace

int main() {
    criterion("AC1", "closed-form identity on a 10x10 grid", 1.0, ac1);
    criterion("AC2", "bilocal inequality on random nonnegative models", 60.0, ac2);
    criterion("AC3", "region bounds and marginal positivity", 0, ac3);
    criterion("AC4", "named distributions", 0, ac4);
    criterion("AC5", "negativity contraction", 0, ac5);
    criterion("AC6", "locality and minimum negativity LPs", 10.0, ac6);
    criterion("AC7", "Bob joint-marginal positivity", 0, ac7);
    criterion("AC8", "nebit decomposition of the coupler", 0, ac8);
    criterion("AC9", "101x101 scan reproduction", 30.0, ac9);
    std::printf("%s\n", failures == 0 ? "acceptance: all criteria passed" : "acceptance: FAILED");
    return failures == 0 ? 0 : 1;
}
