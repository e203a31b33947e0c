#include "quasinet/behavior.hpp"

#include <algorithm>

namespace quasinet {

Behavior::Behavior(Dims dims, bool allow_negative) : dims_(dims), allow_negative_(allow_negative) {
    if (dims_.x == 0 || dims_.y == 0 || dims_.z == 0) throw Error("every party needs at least one setting");
    if (dims_.x + dims_.y + dims_.z > 20) throw Error("too many settings for a dense behavior table");
    table_.assign(dims_.setting_triples() * 8, Rational(0));
}

std::size_t Behavior::outcome_index(int a, int b, int c) {
    auto bit = [](int v) -> std::size_t {
        if (v != 1 && v != -1) throw Error("outcomes must be +1 or -1");
        return v == -1 ? 1 : 0;
    };
    return bit(a) | (bit(b) << 1) | (bit(c) << 2);
}

std::size_t Behavior::index(std::size_t x, std::size_t y, std::size_t z, std::size_t outcome) const {
    if (x >= dims_.x || y >= dims_.y || z >= dims_.z || outcome >= 8) throw Error("behavior index out of range");
    return ((x * dims_.y + y) * dims_.z + z) * 8 + outcome;
}

bool Behavior::normalized() const {
    for (std::size_t s = 0; s < dims_.setting_triples(); ++s) {
        Rational total = 0;
        for (std::size_t o = 0; o < 8; ++o) total += table_[s * 8 + o];
        if (total != 1) return false;
    }
    return true;
}

bool Behavior::no_signalling() const {
    // Summing out one party's outcome must give a table that does not depend
    // on that party's setting.
    for (std::size_t party = 0; party < 3; ++party) {
        for (std::size_t x = 0; x < dims_.x; ++x) {
            for (std::size_t y = 0; y < dims_.y; ++y) {
                for (std::size_t z = 0; z < dims_.z; ++z) {
                    std::array<std::size_t, 3> s{x, y, z};
                    if (s[party] == 0) continue;
                    std::array<std::size_t, 3> ref = s;
                    ref[party] = 0;
                    for (std::size_t o = 0; o < 8; ++o) {
                        if ((o >> party) & 1U) continue;
                        const std::size_t partner = o | (std::size_t{1} << party);
                        Rational here = at(s[0], s[1], s[2], o) + at(s[0], s[1], s[2], partner);
                        Rational there = at(ref[0], ref[1], ref[2], o) + at(ref[0], ref[1], ref[2], partner);
                        if (here != there) return false;
                    }
                }
            }
        }
    }
    return true;
}

bool Behavior::nonnegative() const {
    return std::all_of(table_.begin(), table_.end(), [](const Rational& p) { return p >= 0; });
}

void Behavior::validate() const {
    if (!normalized()) throw Error("behavior is not normalized for every setting triple");
    if (!no_signalling()) throw Error("behavior violates no-signalling");
    if (!allow_negative_ && !nonnegative()) throw Error("behavior has negative entries but is not flagged");
}

VariableSet joint_variables(const Dims& dims) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dims.x; ++i) names.push_back("a" + std::to_string(i));
    for (std::size_t i = 0; i < dims.y; ++i) names.push_back("b" + std::to_string(i));
    for (std::size_t i = 0; i < dims.z; ++i) names.push_back("c" + std::to_string(i));
    return VariableSet(std::move(names));
}

Behavior behavior_of(const QuasiDistribution& q, const Dims& dims) {
    const VariableSet joint = joint_variables(dims);
    if (!q.vars().same_members(joint)) throw Error("distribution is not over the joint outcome variables");
    std::vector<Rational> table(dims.setting_triples() * 8);
    bool negative = false;
    for (std::size_t x = 0; x < dims.x; ++x) {
        for (std::size_t y = 0; y < dims.y; ++y) {
            for (std::size_t z = 0; z < dims.z; ++z) {
                const std::size_t ia = q.vars().index_of("a" + std::to_string(x));
                const std::size_t ib = q.vars().index_of("b" + std::to_string(y));
                const std::size_t ic = q.vars().index_of("c" + std::to_string(z));
                Rational* cell = &table[((x * dims.y + y) * dims.z + z) * 8];
                for (AssignmentIndex v = 0; v < q.size(); ++v) {
                    const std::size_t o = ((v >> ia) & 1U) | (((v >> ib) & 1U) << 1) | (((v >> ic) & 1U) << 2);
                    cell[o] += q[v];
                }
                for (std::size_t o = 0; o < 8; ++o) negative = negative || cell[o] < 0;
            }
        }
    }
    Behavior b(dims, negative);
    for (std::size_t s = 0; s < dims.setting_triples(); ++s) {
        for (std::size_t o = 0; o < 8; ++o) {
            b.set(s / (dims.y * dims.z), (s / dims.z) % dims.y, s % dims.z, o, table[s * 8 + o]);
        }
    }
    return b;
}

}  // namespace quasinet
