#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quasinet/rational.hpp"

namespace quasinet {

/// Bitmask over the canonical variable order of a VariableSet; bit i set
/// means variable i belongs to the subset.
using SubsetMask = std::uint32_t;

/// Assignment index in [0, 2^n). Bit i = 0 encodes variable i = +1 and
/// bit i = 1 encodes variable i = -1.
using AssignmentIndex = std::uint32_t;

inline int spin(AssignmentIndex x, std::size_t bit) { return ((x >> bit) & 1U) ? -1 : +1; }

/// Parity character chi_T(x) = prod_{j in T} x_j under the bit encoding.
inline int parity(AssignmentIndex x, SubsetMask subset) {
    return (__builtin_popcount(x & subset) & 1) ? -1 : +1;
}

/// Largest variable count a dense distribution may hold. Defaults to 24;
/// the QUASINET_MAX_VARS environment variable overrides it.
std::size_t max_vars();

/// Ordered list of distinct dichotomic variable labels.
class VariableSet {
public:
    VariableSet() = default;
    VariableSet(std::vector<std::string> names);
    VariableSet(std::initializer_list<const char*> names);

    std::size_t size() const { return names_.size(); }
    bool empty() const { return names_.empty(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& operator[](std::size_t i) const { return names_[i]; }

    bool contains(const std::string& name) const;
    /// Throws Error for labels that are not in the set.
    std::size_t index_of(const std::string& name) const;
    SubsetMask mask_of(const std::vector<std::string>& labels) const;
    SubsetMask full_mask() const { return names_.empty() ? 0U : static_cast<SubsetMask>((std::uint64_t{1} << names_.size()) - 1); }

    /// Dotted label ("a0.b1") of a subset; the empty subset is "".
    std::string subset_label(SubsetMask subset) const;
    SubsetMask parse_subset_label(const std::string& label) const;

    /// Variables of this set that are absent from `other`, in this set's order.
    VariableSet without(const VariableSet& other) const;
    VariableSet concat(const VariableSet& other) const;
    bool disjoint_from(const VariableSet& other) const;
    bool same_members(const VariableSet& other) const;

    friend bool operator==(const VariableSet&, const VariableSet&) = default;

private:
    std::vector<std::string> names_;
};

/// Signed measure over {+1,-1}^n with exact weights summing to one.
class QuasiDistribution {
public:
    /// Validates 2^n weights and exact normalization.
    QuasiDistribution(VariableSet vars, std::vector<Rational> weights);

    const VariableSet& vars() const { return vars_; }
    const std::vector<Rational>& weights() const { return weights_; }
    const Rational& operator[](AssignmentIndex x) const { return weights_[x]; }
    std::size_t size() const { return weights_.size(); }

    /// Same measure with variables permuted into `order` (same members).
    QuasiDistribution reorder(const VariableSet& order) const;
    /// Same measure with labels replaced positionally.
    QuasiDistribution relabel(const VariableSet& names) const;

    friend bool operator==(const QuasiDistribution&, const QuasiDistribution&) = default;

private:
    VariableSet vars_;
    std::vector<Rational> weights_;
};

/// How from_correlators treats subsets absent from a partial table.
enum class FillPolicy { Zero, Reject };

/// Parity coefficients E_T of a distribution, indexed by subset mask.
class CorrelatorTable {
public:
    /// Table holding only E_empty = 1; every other subset is absent.
    explicit CorrelatorTable(VariableSet vars);
    /// Complete table. coeffs[0] must equal 1.
    CorrelatorTable(VariableSet vars, std::vector<Rational> coeffs);

    const VariableSet& vars() const { return vars_; }
    std::size_t size() const { return coeffs_.size(); }

    bool has(SubsetMask subset) const { return present_[subset]; }
    std::optional<Rational> get(SubsetMask subset) const;
    const Rational& at(SubsetMask subset) const;
    const Rational& at(const std::vector<std::string>& labels) const { return at(vars_.mask_of(labels)); }

    /// Records E_T; rejects |value| > 1 and any change to E_empty.
    void set(SubsetMask subset, const Rational& value);
    void set(const std::vector<std::string>& labels, const Rational& value) { set(vars_.mask_of(labels), value); }

    bool complete() const;
    /// |E_T| <= 1 for every present entry.
    bool bounded() const;

    friend bool operator==(const CorrelatorTable&, const CorrelatorTable&) = default;

private:
    friend CorrelatorTable to_correlators(const QuasiDistribution& q);
    struct Unchecked {};
    CorrelatorTable(VariableSet vars, std::vector<Rational> coeffs, Unchecked);

    VariableSet vars_;
    std::vector<Rational> coeffs_;
    std::vector<bool> present_;
};

QuasiDistribution uniform(const VariableSet& vars);
/// Point mass on a single assignment.
QuasiDistribution point_mass(const VariableSet& vars, AssignmentIndex x);

/// E_T = sum_x chi_T(x) q(x) for all T, via an in-place Walsh-Hadamard butterfly.
CorrelatorTable to_correlators(const QuasiDistribution& q);
/// q(x) = 2^-n sum_T E_T chi_T(x).
QuasiDistribution from_correlators(const CorrelatorTable& table, FillPolicy policy = FillPolicy::Zero);

/// Sums out every variable not listed in `keep`; the result keeps the
/// parent's variable order.
QuasiDistribution marginalize(const QuasiDistribution& q, const std::vector<std::string>& keep);
QuasiDistribution marginalize(const QuasiDistribution& q, const VariableSet& keep);

/// Product measure over q1.vars followed by q2.vars.
QuasiDistribution tensor(const QuasiDistribution& q1, const QuasiDistribution& q2);

/// w*q1 + (1-w)*q2, w in [0,1].
QuasiDistribution mix(const QuasiDistribution& q1, const QuasiDistribution& q2, const Rational& w);

/// L1 norm of the weights; 1 iff q is a proper distribution.
Rational negativity(const QuasiDistribution& q);
bool is_nonnegative(const QuasiDistribution& q);
Rational expectation(const QuasiDistribution& q, const std::vector<std::string>& subset);
Rational expectation(const QuasiDistribution& q, SubsetMask subset);

/// True iff q equals the product of its marginals on the two blocks.
bool separability_check(const QuasiDistribution& q, const std::vector<std::string>& set_a,
                        const std::vector<std::string>& set_c);

}  // namespace quasinet
