#pragma once

#include <string>
#include <vector>

#include "quasinet/qdist.hpp"

namespace quasinet {

/// Signed transition kernel S(out | in) whose columns each sum to one.
///
/// Storage is dense and column-major: the entry for input assignment `i`
/// and output assignment `o` lives at `i * 2^|out| + o`.
class QuasiStochasticProcess {
public:
    QuasiStochasticProcess(VariableSet in_vars, VariableSet out_vars, std::vector<Rational> kernel);

    const VariableSet& in_vars() const { return in_vars_; }
    const VariableSet& out_vars() const { return out_vars_; }
    const std::vector<Rational>& kernel() const { return kernel_; }
    std::size_t in_size() const { return std::size_t{1} << in_vars_.size(); }
    std::size_t out_size() const { return std::size_t{1} << out_vars_.size(); }

    const Rational& operator()(AssignmentIndex out, AssignmentIndex in) const { return kernel_[in * out_size() + out]; }

    friend bool operator==(const QuasiStochasticProcess&, const QuasiStochasticProcess&) = default;

private:
    VariableSet in_vars_;
    VariableSet out_vars_;
    std::vector<Rational> kernel_;
};

struct ProcessReport {
    bool is_stochastic = false;
    /// max over columns of sum_out |S(out|in)|.
    Rational column_negativity;
};

/// Labels of the four inputs and two outputs of Bob's coupler.
struct CouplerWiring {
    std::string left0 = "beta0";
    std::string left1 = "beta1";
    std::string right0 = "betap0";
    std::string right1 = "betap1";
    std::string out0 = "b0";
    std::string out1 = "b1";
};

struct NebitWeights {
    Rational w_and;
    Rational w_nand;
};

/// Identity map; `out_vars` renames `in_vars` positionally.
QuasiStochasticProcess identity_process(const VariableSet& in_vars, const VariableSet& out_vars);

/// Deterministic process writing `fn(in)` to the outputs.
template <typename Fn>
QuasiStochasticProcess deterministic_process(const VariableSet& in_vars, const VariableSet& out_vars, Fn fn) {
    const std::size_t in_size = std::size_t{1} << in_vars.size();
    const std::size_t out_size = std::size_t{1} << out_vars.size();
    std::vector<Rational> kernel(in_size * out_size, Rational(0));
    for (AssignmentIndex in = 0; in < in_size; ++in) {
        AssignmentIndex out = fn(in);
        if (out >= out_size) throw Error("deterministic map produced an out-of-range output");
        kernel[in * out_size + out] = 1;
    }
    return QuasiStochasticProcess(in_vars, out_vars, std::move(kernel));
}

/// One-bit coupler S(b | beta, beta') = (1 + eta * b * beta * beta') / 2.
QuasiStochasticProcess bit_coupler(const Rational& eta, const std::string& left, const std::string& right,
                                   const std::string& out);

/// Two-bit coupler: product of the bit couplers (left0, right0) -> out0 and
/// (left1, right1) -> out1. Stochastic iff eta <= 1.
QuasiStochasticProcess coupler(const Rational& eta, const CouplerWiring& wiring = {});

/// Deterministic parity map b = beta * beta' (the eta = 1 coupler).
QuasiStochasticProcess parity_map(const std::string& left, const std::string& right, const std::string& out);
/// Output-flipped parity map b = -beta * beta'.
QuasiStochasticProcess flipped_parity_map(const std::string& left, const std::string& right, const std::string& out);

/// ((1+eta)/2, (1-eta)/2); the second weight is negative iff eta > 1.
NebitWeights nebit_decompose(const Rational& eta);

/// Entrywise w*S1 + (1-w)*S2 for any rational w (columns still sum to one).
QuasiStochasticProcess affine_combination(const QuasiStochasticProcess& s1, const QuasiStochasticProcess& s2,
                                          const Rational& w);

/// Tensor product acting on in1 ++ in2 and producing out1 ++ out2.
QuasiStochasticProcess product(const QuasiStochasticProcess& s1, const QuasiStochasticProcess& s2);

/// r(rest, out) = sum_in S(out|in) q(rest, in). The result lists the
/// untouched variables of q first, then S's outputs.
QuasiDistribution apply(const QuasiStochasticProcess& s, const QuasiDistribution& q);

bool is_stochastic(const QuasiStochasticProcess& s);
Rational column_negativity(const QuasiStochasticProcess& s);
ProcessReport report(const QuasiStochasticProcess& s);

}  // namespace quasinet
