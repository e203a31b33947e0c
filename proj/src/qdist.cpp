#include "quasinet/qdist.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace quasinet {

std::size_t max_vars() {
    constexpr std::size_t kDefault = 24;
    const char* env = std::getenv("QUASINET_MAX_VARS");
    if (env == nullptr || *env == '\0') return kDefault;
    char* end = nullptr;
    unsigned long value = std::strtoul(env, &end, 10);
    if (*end != '\0' || value == 0 || value > 30) {
        throw Error("QUASINET_MAX_VARS must be an integer in [1, 30], got '" + std::string(env) + "'");
    }
    return value;
}

namespace {

void check_cap(std::size_t n) {
    if (n > max_vars()) {
        throw Error("variable count " + std::to_string(n) + " exceeds cap " + std::to_string(max_vars()));
    }
}

// In-place Walsh-Hadamard butterfly: out[T] = sum_x chi_T(x) in[x].
void walsh_hadamard(std::vector<Rational>& v) {
    Rational tmp;
    for (std::size_t half = 1; half < v.size(); half <<= 1) {
        for (std::size_t block = 0; block < v.size(); block += 2 * half) {
            for (std::size_t i = block; i < block + half; ++i) {
                tmp = v[i + half];
                v[i + half] = v[i] - tmp;
                v[i] += tmp;
            }
        }
    }
}

}  // namespace

// ---------------------------------------------------------------- VariableSet

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& name : names_) {
        if (name.empty()) throw Error("variable labels must be non-empty");
        if (name.find('.') != std::string::npos) throw Error("variable label '" + name + "' contains '.'");
        if (!seen.insert(name).second) throw Error("duplicate variable label '" + name + "'");
    }
    if (names_.size() > 30) throw Error("more than 30 variables cannot be indexed");
}

VariableSet::VariableSet(std::initializer_list<const char*> names)
    : VariableSet(std::vector<std::string>(names.begin(), names.end())) {}

bool VariableSet::contains(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::size_t VariableSet::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw Error("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - names_.begin());
}

SubsetMask VariableSet::mask_of(const std::vector<std::string>& labels) const {
    SubsetMask mask = 0;
    for (const auto& label : labels) mask |= SubsetMask{1} << index_of(label);
    return mask;
}

std::string VariableSet::subset_label(SubsetMask subset) const {
    std::string out;
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if ((subset >> i) & 1U) {
            if (!out.empty()) out += '.';
            out += names_[i];
        }
    }
    return out;
}

SubsetMask VariableSet::parse_subset_label(const std::string& label) const {
    if (label.empty()) return 0;
    std::vector<std::string> parts;
    std::stringstream ss(label);
    std::string part;
    while (std::getline(ss, part, '.')) parts.push_back(part);
    if (label.back() == '.') parts.emplace_back();
    SubsetMask mask = 0;
    for (const auto& p : parts) {
        SubsetMask bit = SubsetMask{1} << index_of(p);
        if (mask & bit) throw Error("subset label '" + label + "' repeats '" + p + "'");
        mask |= bit;
    }
    return mask;
}

VariableSet VariableSet::without(const VariableSet& other) const {
    std::vector<std::string> rest;
    for (const auto& name : names_) {
        if (!other.contains(name)) rest.push_back(name);
    }
    return VariableSet(std::move(rest));
}

VariableSet VariableSet::concat(const VariableSet& other) const {
    std::vector<std::string> all = names_;
    all.insert(all.end(), other.names_.begin(), other.names_.end());
    return VariableSet(std::move(all));
}

bool VariableSet::disjoint_from(const VariableSet& other) const {
    return std::none_of(names_.begin(), names_.end(), [&](const std::string& n) { return other.contains(n); });
}

bool VariableSet::same_members(const VariableSet& other) const {
    return size() == other.size() &&
           std::all_of(names_.begin(), names_.end(), [&](const std::string& n) { return other.contains(n); });
}

// ---------------------------------------------------------- QuasiDistribution

QuasiDistribution::QuasiDistribution(VariableSet vars, std::vector<Rational> weights)
    : vars_(std::move(vars)), weights_(std::move(weights)) {
    check_cap(vars_.size());
    if (weights_.size() != (std::size_t{1} << vars_.size())) {
        throw Error("expected " + std::to_string(std::size_t{1} << vars_.size()) + " weights, got " +
                    std::to_string(weights_.size()));
    }
    Rational total = 0;
    for (const auto& w : weights_) total += w;
    if (total != 1) throw Error("weights sum to " + to_string(total) + ", not 1");
}

QuasiDistribution QuasiDistribution::reorder(const VariableSet& order) const {
    if (!order.same_members(vars_)) throw Error("reorder target must contain exactly the same variables");
    const std::size_t n = vars_.size();
    std::vector<std::size_t> target_bit(n);
    for (std::size_t i = 0; i < n; ++i) target_bit[i] = order.index_of(vars_[i]);
    std::vector<Rational> out(weights_.size());
    for (AssignmentIndex x = 0; x < weights_.size(); ++x) {
        AssignmentIndex y = 0;
        for (std::size_t i = 0; i < n; ++i) y |= ((x >> i) & 1U) << target_bit[i];
        out[y] = weights_[x];
    }
    return QuasiDistribution(order, std::move(out));
}

QuasiDistribution QuasiDistribution::relabel(const VariableSet& names) const {
    if (names.size() != vars_.size()) throw Error("relabel needs the same number of variables");
    return QuasiDistribution(names, weights_);
}

// ------------------------------------------------------------ CorrelatorTable

CorrelatorTable::CorrelatorTable(VariableSet vars) : vars_(std::move(vars)) {
    check_cap(vars_.size());
    coeffs_.assign(std::size_t{1} << vars_.size(), Rational(0));
    present_.assign(coeffs_.size(), false);
    coeffs_[0] = 1;
    present_[0] = true;
}

CorrelatorTable::CorrelatorTable(VariableSet vars, std::vector<Rational> coeffs)
    : CorrelatorTable(std::move(vars), std::move(coeffs), Unchecked{}) {
    for (std::size_t t = 1; t < coeffs_.size(); ++t) {
        if (abs(coeffs_[t]) > 1) {
            throw Error("correlator E[" + vars_.subset_label(static_cast<SubsetMask>(t)) + "] = " +
                        to_string(coeffs_[t]) + " violates |E| <= 1");
        }
    }
}

CorrelatorTable::CorrelatorTable(VariableSet vars, std::vector<Rational> coeffs, Unchecked)
    : vars_(std::move(vars)), coeffs_(std::move(coeffs)) {
    check_cap(vars_.size());
    if (coeffs_.size() != (std::size_t{1} << vars_.size())) throw Error("correlator table has the wrong size");
    if (coeffs_[0] != 1) throw Error("E of the empty subset must be 1");
    present_.assign(coeffs_.size(), true);
}

std::optional<Rational> CorrelatorTable::get(SubsetMask subset) const {
    if (subset >= coeffs_.size()) throw Error("subset mask out of range");
    if (!present_[subset]) return std::nullopt;
    return coeffs_[subset];
}

const Rational& CorrelatorTable::at(SubsetMask subset) const {
    if (subset >= coeffs_.size()) throw Error("subset mask out of range");
    if (!present_[subset]) throw Error("correlator E[" + vars_.subset_label(subset) + "] is absent");
    return coeffs_[subset];
}

void CorrelatorTable::set(SubsetMask subset, const Rational& value) {
    if (subset >= coeffs_.size()) throw Error("subset mask out of range");
    if (subset == 0) {
        if (value != 1) throw Error("E of the empty subset is fixed at 1");
        return;
    }
    if (abs(value) > 1) {
        throw Error("correlator E[" + vars_.subset_label(subset) + "] = " + to_string(value) + " violates |E| <= 1");
    }
    coeffs_[subset] = value;
    present_[subset] = true;
}

bool CorrelatorTable::complete() const {
    return std::all_of(present_.begin(), present_.end(), [](bool b) { return b; });
}

bool CorrelatorTable::bounded() const {
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
        if (present_[t] && abs(coeffs_[t]) > 1) return false;
    }
    return true;
}

// ----------------------------------------------------------------- operations

QuasiDistribution uniform(const VariableSet& vars) {
    check_cap(vars.size());
    const std::size_t size = std::size_t{1} << vars.size();
    return QuasiDistribution(vars, std::vector<Rational>(size, Rational(1, size)));
}

QuasiDistribution point_mass(const VariableSet& vars, AssignmentIndex x) {
    check_cap(vars.size());
    std::vector<Rational> w(std::size_t{1} << vars.size(), Rational(0));
    if (x >= w.size()) throw Error("assignment index out of range");
    w[x] = 1;
    return QuasiDistribution(vars, std::move(w));
}

CorrelatorTable to_correlators(const QuasiDistribution& q) {
    std::vector<Rational> coeffs = q.weights();
    walsh_hadamard(coeffs);
    return CorrelatorTable(q.vars(), std::move(coeffs), CorrelatorTable::Unchecked{});
}

QuasiDistribution from_correlators(const CorrelatorTable& table, FillPolicy policy) {
    if (policy == FillPolicy::Reject && !table.complete()) {
        throw Error("correlator table is incomplete and the fill policy rejects missing entries");
    }
    std::vector<Rational> v(table.size());
    for (SubsetMask t = 0; t < v.size(); ++t) {
        auto e = table.get(t);
        v[t] = e ? *e : Rational(0);
    }
    walsh_hadamard(v);
    const Rational scale(1, v.size());
    for (auto& w : v) w *= scale;
    return QuasiDistribution(table.vars(), std::move(v));
}

QuasiDistribution marginalize(const QuasiDistribution& q, const std::vector<std::string>& keep) {
    const SubsetMask keep_mask = q.vars().mask_of(keep);
    std::vector<std::string> kept;
    std::vector<std::size_t> kept_bits;
    for (std::size_t i = 0; i < q.vars().size(); ++i) {
        if ((keep_mask >> i) & 1U) {
            kept.push_back(q.vars()[i]);
            kept_bits.push_back(i);
        }
    }
    std::vector<Rational> out(std::size_t{1} << kept.size(), Rational(0));
    for (AssignmentIndex x = 0; x < q.size(); ++x) {
        AssignmentIndex y = 0;
        for (std::size_t j = 0; j < kept_bits.size(); ++j) y |= ((x >> kept_bits[j]) & 1U) << j;
        out[y] += q[x];
    }
    return QuasiDistribution(VariableSet(std::move(kept)), std::move(out));
}

QuasiDistribution marginalize(const QuasiDistribution& q, const VariableSet& keep) {
    return marginalize(q, keep.names());
}

QuasiDistribution tensor(const QuasiDistribution& q1, const QuasiDistribution& q2) {
    if (!q1.vars().disjoint_from(q2.vars())) throw Error("tensor requires disjoint variable sets");
    VariableSet vars = q1.vars().concat(q2.vars());
    check_cap(vars.size());
    const std::size_t n1 = q1.vars().size();
    std::vector<Rational> out(q1.size() * q2.size());
    for (AssignmentIndex y = 0; y < q2.size(); ++y) {
        for (AssignmentIndex x = 0; x < q1.size(); ++x) out[x | (y << n1)] = q1[x] * q2[y];
    }
    return QuasiDistribution(std::move(vars), std::move(out));
}

QuasiDistribution mix(const QuasiDistribution& q1, const QuasiDistribution& q2, const Rational& w) {
    if (!(q1.vars() == q2.vars())) throw Error("mix requires identical variable sets");
    if (w < 0 || w > 1) throw Error("mixing weight " + to_string(w) + " outside [0,1]");
    const Rational rest = 1 - w;
    std::vector<Rational> out(q1.size());
    for (AssignmentIndex x = 0; x < q1.size(); ++x) out[x] = w * q1[x] + rest * q2[x];
    return QuasiDistribution(q1.vars(), std::move(out));
}

Rational negativity(const QuasiDistribution& q) {
    Rational total = 0;
    for (const auto& w : q.weights()) total += abs(w);
    return total;
}

bool is_nonnegative(const QuasiDistribution& q) {
    return std::all_of(q.weights().begin(), q.weights().end(), [](const Rational& w) { return w >= 0; });
}

Rational expectation(const QuasiDistribution& q, SubsetMask subset) {
    if (subset > q.vars().full_mask()) throw Error("subset mask out of range");
    Rational total = 0;
    for (AssignmentIndex x = 0; x < q.size(); ++x) {
        if (parity(x, subset) > 0) {
            total += q[x];
        } else {
            total -= q[x];
        }
    }
    return total;
}

Rational expectation(const QuasiDistribution& q, const std::vector<std::string>& subset) {
    return expectation(q, q.vars().mask_of(subset));
}

bool separability_check(const QuasiDistribution& q, const std::vector<std::string>& set_a,
                        const std::vector<std::string>& set_c) {
    const SubsetMask a = q.vars().mask_of(set_a);
    const SubsetMask c = q.vars().mask_of(set_c);
    if ((a & c) != 0 || (a | c) != q.vars().full_mask() ||
        __builtin_popcount(a) != static_cast<int>(set_a.size()) ||
        __builtin_popcount(c) != static_cast<int>(set_c.size())) {
        throw Error("separability partition must split the variables into two disjoint blocks");
    }
    auto product = tensor(marginalize(q, set_a), marginalize(q, set_c));
    return product.reorder(q.vars()) == q;
}

}  // namespace quasinet
