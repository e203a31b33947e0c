#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "quasinet/qdist.hpp"

namespace quasinet {

/// Settings per party (|X|, |Y|, |Z|); outcomes are always +1/-1.
struct Dims {
    std::size_t x = 2;
    std::size_t y = 2;
    std::size_t z = 2;

    std::size_t setting_triples() const { return x * y * z; }
    friend bool operator==(const Dims&, const Dims&) = default;
};

/// Observable table P(a,b,c | x,y,z) of a three-party scenario.
///
/// Outcome triples are encoded like assignments: bit 0 a, bit 1 b, bit 2 c,
/// with a set bit meaning -1.
class Behavior {
public:
    /// Zero-filled table. Fill it with set(), then call validate().
    explicit Behavior(Dims dims, bool allow_negative = false);

    const Dims& dims() const { return dims_; }
    bool allow_negative() const { return allow_negative_; }

    static std::size_t outcome_index(int a, int b, int c);
    std::size_t index(std::size_t x, std::size_t y, std::size_t z, std::size_t outcome) const;

    const Rational& at(std::size_t x, std::size_t y, std::size_t z, std::size_t outcome) const {
        return table_[index(x, y, z, outcome)];
    }
    const Rational& at(std::size_t x, std::size_t y, std::size_t z, int a, int b, int c) const {
        return at(x, y, z, outcome_index(a, b, c));
    }
    void set(std::size_t x, std::size_t y, std::size_t z, std::size_t outcome, const Rational& p) {
        table_[index(x, y, z, outcome)] = p;
    }
    const std::vector<Rational>& table() const { return table_; }

    bool normalized() const;
    bool no_signalling() const;
    bool nonnegative() const;
    /// Throws Error naming the first failing invariant.
    void validate() const;

    friend bool operator==(const Behavior&, const Behavior&) = default;

private:
    Dims dims_;
    bool allow_negative_;
    std::vector<Rational> table_;
};

/// Variables of the joint outcome space: a0..a{X-1}, b0.., c0...
VariableSet joint_variables(const Dims& dims);

/// Marginals of q onto (a_x, b_y, c_z) for every setting triple. q must be
/// over joint_variables(dims) (any order). Negative entries set the
/// allow_negative flag instead of failing.
Behavior behavior_of(const QuasiDistribution& q, const Dims& dims);

}  // namespace quasinet
