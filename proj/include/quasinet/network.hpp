#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "quasinet/behavior.hpp"
#include "quasinet/qdist.hpp"
#include "quasinet/qproc.hpp"

namespace quasinet {

/// Output variables of the composed three-party distribution, in canonical
/// order a0, a1, b0, b1, c0, c1.
const VariableSet& canonical_vars();
/// Alice-Bob source variables (a0, a1, beta0, beta1).
const VariableSet& source_ab_vars();
/// Bob-Charlie source variables (betap0, betap1, c0, c1).
const VariableSet& source_bc_vars();

struct BilocalParams {
    Rational mu1;
    Rational mu2;
    Rational eta;

    Rational t() const { return eta * mu1 * mu2; }
};

struct BilocalScenario {
    QuasiDistribution q_ab;
    QuasiDistribution q_bc;
    QuasiStochasticProcess processor;
};

enum class Region { Bilocal, Biquantum, BeyondBiquantum, Unphysical };

std::string_view region_name(Region region);
Region parse_region(std::string_view name);

struct BilocalReport {
    Rational i;
    Rational j;
    /// sqrt|I| + sqrt|J|, for display only; regions are decided exactly.
    double bilocal_value = 0.0;
    Region region = Region::Bilocal;
    std::array<Rational, 2> negativity_sources;
    Rational negativity_process;
};

enum class Side { AB, BC };

/// Source with CHSH-type pair correlators of strength mu in [0, 1]; a proper
/// distribution iff mu <= 1/2.
QuasiDistribution source_family(const Rational& mu, Side side);

/// Parametric scenario: two source_family sources and coupler(eta).
BilocalScenario parametric_scenario(const BilocalParams& params);

/// Checks the wiring and returns apply(S, q_ab (x) q_bc) in canonical order.
QuasiDistribution compose_bilocal(const BilocalScenario& scenario);
QuasiDistribution compose_bilocal(const BilocalParams& params);

/// 2^-6 [1 + t {b0 (a0+a1)(c0+c1) + b1 (a0-a1)(c0-c1)}]. t must lie in
/// [0, 1] unless `allow_unphysical` is set, in which case any t >= 0 is
/// accepted (observable marginals then go negative for t > 1).
QuasiDistribution closed_form(const Rational& t, bool allow_unphysical = false);

Rational correlator_i(const QuasiDistribution& r);
Rational correlator_j(const QuasiDistribution& r);
double bilocal_value(const QuasiDistribution& r);

/// Exact test of sqrt|I| + sqrt|J| <= sqrt(bound_squared) without square
/// roots: s = |I|+|J| <= K and (K - s)^2 >= 4|I||J|.
bool bilocal_value_at_most(const Rational& i, const Rational& j, const Rational& bound_squared);
/// The bilocal inequality sqrt|I| + sqrt|J| <= 1.
bool satisfies_bilocal_inequality(const Rational& i, const Rational& j);

/// Region of t = eta*mu1*mu2, boundaries inclusive at 1/4, 1/2, 1.
Region classify(const Rational& t);
/// Distribution-level counterpart: Unphysical if any observable marginal is
/// negative, otherwise the bilocal value against 1, sqrt 2 and 2.
Region classify_distribution(const QuasiDistribution& r);

BilocalReport bilocal_report(const BilocalScenario& scenario);

QuasiDistribution make_rbq();
/// 2^-6 [1 + (V/2) {...}], V in [0, 1].
QuasiDistribution make_rbq_noisy(const Rational& visibility);
/// Proper distribution sharing every observable marginal with make_rbq().
QuasiDistribution make_rbq_plus();

/// r(a_x, b0, b1, c_z) for (x, z) in {0,1}^2, indexed x * 2 + z.
using BobJointTable = std::array<QuasiDistribution, 4>;

struct ObservableTables {
    Behavior behavior;
    BobJointTable bob_joint;
};

ObservableTables observable_marginals(const QuasiDistribution& r);
bool bob_joint_marginals_check(const QuasiDistribution& r);

/// Sources in order; source k links party k and k+1. processors[k] sits at
/// party k+1 and reads only variables of sources k and k+1.
struct ChainNetwork {
    std::vector<QuasiDistribution> sources;
    std::vector<QuasiStochasticProcess> processors;
};

/// Tensor of all sources followed by every processor in order.
QuasiDistribution compose_chain(const ChainNetwork& net);

/// Parametric chain with N = mus.size() sources and N - 1 couplers.
/// Parties are lettered a, b, c, ...; the endpoint outputs are "a0","a1" and
/// "<last>0","<last>1"; intermediate party p reads "<p>L0","<p>L1" (left
/// source) and "<p>R0","<p>R1" (right source) and writes "<p>0","<p>1".
ChainNetwork parametric_chain(const std::vector<Rational>& mus, const std::vector<Rational>& etas);

}  // namespace quasinet
