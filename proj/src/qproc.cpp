#include "quasinet/qproc.hpp"

#include <algorithm>

namespace quasinet {

QuasiStochasticProcess::QuasiStochasticProcess(VariableSet in_vars, VariableSet out_vars, std::vector<Rational> kernel)
    : in_vars_(std::move(in_vars)), out_vars_(std::move(out_vars)), kernel_(std::move(kernel)) {
    if (!in_vars_.disjoint_from(out_vars_)) throw Error("process inputs and outputs must use distinct labels");
    if (in_vars_.size() + out_vars_.size() > max_vars()) throw Error("process kernel exceeds the variable cap");
    if (kernel_.size() != in_size() * out_size()) {
        throw Error("kernel needs " + std::to_string(in_size() * out_size()) + " entries, got " +
                    std::to_string(kernel_.size()));
    }
    for (std::size_t in = 0; in < in_size(); ++in) {
        Rational total = 0;
        for (std::size_t out = 0; out < out_size(); ++out) total += kernel_[in * out_size() + out];
        if (total != 1) {
            throw Error("kernel column " + std::to_string(in) + " sums to " +
                        to_string(total) + ", not 1");
        }
    }
}

QuasiStochasticProcess identity_process(const VariableSet& in_vars, const VariableSet& out_vars) {
    if (in_vars.size() != out_vars.size()) throw Error("identity needs as many outputs as inputs");
    return deterministic_process(in_vars, out_vars, [](AssignmentIndex in) { return in; });
}

QuasiStochasticProcess bit_coupler(const Rational& eta, const std::string& left, const std::string& right,
                                   const std::string& out) {
    if (eta < 0) throw Error("coupler strength must be nonnegative");
    // in index bit 0 = left, bit 1 = right; column-major over 2 outputs.
    std::vector<Rational> kernel(8);
    for (AssignmentIndex in = 0; in < 4; ++in) {
        const int product = spin(in, 0) * spin(in, 1);
        for (AssignmentIndex b = 0; b < 2; ++b) {
            kernel[in * 2 + b] = (1 + eta * (spin(b, 0) * product)) / 2;
        }
    }
    return QuasiStochasticProcess(VariableSet({left, right}), VariableSet({out}), std::move(kernel));
}

QuasiStochasticProcess coupler(const Rational& eta, const CouplerWiring& w) {
    auto bit0 = bit_coupler(eta, w.left0, w.right0, w.out0);
    auto bit1 = bit_coupler(eta, w.left1, w.right1, w.out1);
    auto joint = product(bit0, bit1);
    // Present inputs as (left0, left1, right0, right1).
    const VariableSet in_order({w.left0, w.left1, w.right0, w.right1});
    std::vector<std::size_t> src_bit(4);
    for (std::size_t i = 0; i < 4; ++i) src_bit[i] = joint.in_vars().index_of(in_order[i]);
    std::vector<Rational> kernel(joint.kernel().size());
    for (AssignmentIndex in = 0; in < 16; ++in) {
        AssignmentIndex src = 0;
        for (std::size_t i = 0; i < 4; ++i) src |= ((in >> i) & 1U) << src_bit[i];
        for (AssignmentIndex out = 0; out < 4; ++out) kernel[in * 4 + out] = joint(out, src);
    }
    return QuasiStochasticProcess(in_order, joint.out_vars(), std::move(kernel));
}

QuasiStochasticProcess parity_map(const std::string& left, const std::string& right, const std::string& out) {
    return deterministic_process(VariableSet({left, right}), VariableSet({out}),
                                 [](AssignmentIndex in) { return ((in >> 0) ^ (in >> 1)) & 1U; });
}

QuasiStochasticProcess flipped_parity_map(const std::string& left, const std::string& right, const std::string& out) {
    return deterministic_process(VariableSet({left, right}), VariableSet({out}),
                                 [](AssignmentIndex in) { return (((in >> 0) ^ (in >> 1)) & 1U) ^ 1U; });
}

NebitWeights nebit_decompose(const Rational& eta) {
    if (eta < 0) throw Error("coupler strength must be nonnegative");
    return {(1 + eta) / 2, (1 - eta) / 2};
}

QuasiStochasticProcess affine_combination(const QuasiStochasticProcess& s1, const QuasiStochasticProcess& s2,
                                          const Rational& w) {
    if (!(s1.in_vars() == s2.in_vars()) || !(s1.out_vars() == s2.out_vars())) {
        throw Error("affine combination needs processes over identical variables");
    }
    const Rational rest = 1 - w;
    std::vector<Rational> kernel(s1.kernel().size());
    for (std::size_t i = 0; i < kernel.size(); ++i) kernel[i] = w * s1.kernel()[i] + rest * s2.kernel()[i];
    return QuasiStochasticProcess(s1.in_vars(), s1.out_vars(), std::move(kernel));
}

QuasiStochasticProcess product(const QuasiStochasticProcess& s1, const QuasiStochasticProcess& s2) {
    if (!s1.in_vars().disjoint_from(s2.in_vars()) || !s1.out_vars().disjoint_from(s2.out_vars())) {
        throw Error("product requires disjoint input and output labels");
    }
    VariableSet in = s1.in_vars().concat(s2.in_vars());
    VariableSet out = s1.out_vars().concat(s2.out_vars());
    const std::size_t n_in1 = s1.in_vars().size();
    const std::size_t n_out1 = s1.out_vars().size();
    const std::size_t out_size = std::size_t{1} << out.size();
    std::vector<Rational> kernel((std::size_t{1} << in.size()) * out_size);
    for (AssignmentIndex i2 = 0; i2 < s2.in_size(); ++i2) {
        for (AssignmentIndex i1 = 0; i1 < s1.in_size(); ++i1) {
            const AssignmentIndex col = i1 | (i2 << n_in1);
            for (AssignmentIndex o2 = 0; o2 < s2.out_size(); ++o2) {
                for (AssignmentIndex o1 = 0; o1 < s1.out_size(); ++o1) {
                    kernel[col * out_size + (o1 | (o2 << n_out1))] = s1(o1, i1) * s2(o2, i2);
                }
            }
        }
    }
    return QuasiStochasticProcess(std::move(in), std::move(out), std::move(kernel));
}

QuasiDistribution apply(const QuasiStochasticProcess& s, const QuasiDistribution& q) {
    for (const auto& name : s.in_vars().names()) {
        if (!q.vars().contains(name)) throw Error("process input '" + name + "' is not a variable of the distribution");
    }
    const VariableSet rest = q.vars().without(s.in_vars());
    if (!rest.disjoint_from(s.out_vars())) throw Error("process outputs collide with spectator variables");
    VariableSet result_vars = rest.concat(s.out_vars());
    if (result_vars.size() > max_vars()) throw Error("result exceeds the variable cap");

    std::vector<std::size_t> in_bit(s.in_vars().size());
    for (std::size_t i = 0; i < in_bit.size(); ++i) in_bit[i] = q.vars().index_of(s.in_vars()[i]);
    std::vector<std::size_t> rest_bit(rest.size());
    for (std::size_t i = 0; i < rest_bit.size(); ++i) rest_bit[i] = q.vars().index_of(rest[i]);

    const std::size_t rest_count = rest.size();
    std::vector<Rational> out(std::size_t{1} << result_vars.size(), Rational(0));
    Rational term;
    for (AssignmentIndex x = 0; x < q.size(); ++x) {
        if (q[x] == 0) continue;
        AssignmentIndex in = 0;
        for (std::size_t i = 0; i < in_bit.size(); ++i) in |= ((x >> in_bit[i]) & 1U) << i;
        AssignmentIndex r = 0;
        for (std::size_t i = 0; i < rest_bit.size(); ++i) r |= ((x >> rest_bit[i]) & 1U) << i;
        for (AssignmentIndex b = 0; b < s.out_size(); ++b) {
            const Rational& k = s(b, in);
            if (k == 0) continue;
            term = k * q[x];
            out[r | (b << rest_count)] += term;
        }
    }
    return QuasiDistribution(std::move(result_vars), std::move(out));
}

bool is_stochastic(const QuasiStochasticProcess& s) {
    return std::all_of(s.kernel().begin(), s.kernel().end(), [](const Rational& k) { return k >= 0; });
}

Rational column_negativity(const QuasiStochasticProcess& s) {
    Rational worst = 0;
    for (std::size_t in = 0; in < s.in_size(); ++in) {
        Rational total = 0;
        for (std::size_t out = 0; out < s.out_size(); ++out) total += abs(s.kernel()[in * s.out_size() + out]);
        if (total > worst) worst = total;
    }
    return worst;
}

ProcessReport report(const QuasiStochasticProcess& s) { return {is_stochastic(s), column_negativity(s)}; }

}  // namespace quasinet
