#include <gtest/gtest.h>

#include <cstdlib>

#include "oracles.hpp"
#include "quasinet/network.hpp"
#include "quasinet/qdist.hpp"
#include "quasinet/random.hpp"

using namespace quasinet;

namespace {

VariableSet vars_n(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    return VariableSet(std::move(names));
}

}  // namespace

TEST(VariableSet, RejectsDuplicatesAndUnknownLabels) {
    EXPECT_THROW((VariableSet{"a0", "a0"}), Error);
    EXPECT_THROW(VariableSet{"a.0"}, Error);
    VariableSet v{"a0", "b1", "c0"};
    EXPECT_EQ(v.index_of("b1"), 1u);
    EXPECT_THROW(v.index_of("z"), Error);
    EXPECT_EQ(v.mask_of({"a0", "c0"}), 0b101u);
    EXPECT_EQ(v.subset_label(0b101), "a0.c0");
    EXPECT_EQ(v.parse_subset_label("a0.c0"), 0b101u);
    EXPECT_EQ(v.parse_subset_label(""), 0u);
    EXPECT_THROW(v.parse_subset_label("a0.a0"), Error);
}

TEST(QuasiDistribution, RejectsUnnormalizedWeights) {
    EXPECT_THROW(QuasiDistribution(VariableSet{"x"}, {Rational(1, 2), Rational(1, 3)}), Error);
    EXPECT_THROW(QuasiDistribution(VariableSet{"x"}, {Rational(1)}), Error);
    EXPECT_NO_THROW(QuasiDistribution(VariableSet{"x"}, {Rational(3, 2), Rational(-1, 2)}));
}

TEST(QuasiDistribution, VariableCapFromEnvironment) {
    ::setenv("QUASINET_MAX_VARS", "3", 1);
    EXPECT_EQ(max_vars(), 3u);
    EXPECT_THROW(uniform(vars_n(4)), Error);
    EXPECT_NO_THROW(uniform(vars_n(3)));
    ::setenv("QUASINET_MAX_VARS", "zero", 1);
    EXPECT_THROW(max_vars(), Error);
    ::unsetenv("QUASINET_MAX_VARS");
    EXPECT_EQ(max_vars(), 24u);
}

TEST(Uniform, Weights) {
    auto one = uniform(VariableSet{"a0"});
    EXPECT_EQ(one[0], Rational(1, 2));
    EXPECT_EQ(one[1], Rational(1, 2));
    auto six = uniform(canonical_vars());
    for (const auto& w : six.weights()) EXPECT_EQ(w, Rational(1, 64));
    EXPECT_EQ(negativity(six), 1);
}

TEST(Correlators, UniformAndPointMass) {
    auto e = to_correlators(uniform(VariableSet{"x", "y"}));
    EXPECT_EQ(e.at(0), 1);
    for (SubsetMask t = 1; t < 4; ++t) EXPECT_EQ(e.at(t), 0);

    auto all_plus = to_correlators(point_mass(vars_n(4), 0));
    for (SubsetMask t = 0; t < 16; ++t) EXPECT_EQ(all_plus.at(t), 1);
}

TEST(Correlators, SourceFamilyPairTerms) {
    auto e = to_correlators(source_family(Rational(1, 2), Side::AB));
    EXPECT_EQ(e.at({"a0", "beta0"}), Rational(1, 2));
    EXPECT_EQ(e.at({"a1", "beta1"}), Rational(-1, 2));
}

TEST(Correlators, MatchesDefiningSumExhaustively) {
    // Every 0/+-1 weight pattern would be too many; use all point masses and
    // their pairwise signed combinations for n <= 4.
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto vars = vars_n(n);
        const std::size_t size = std::size_t{1} << n;
        for (AssignmentIndex x = 0; x < size; ++x) {
            for (AssignmentIndex y = 0; y < size; ++y) {
                std::vector<Rational> w(size, Rational(0));
                w[x] += Rational(5, 3);
                w[y] -= Rational(2, 3);
                QuasiDistribution q(vars, w);
                const auto expected = oracle::correlators(w, n);
                const auto table = to_correlators(q);
                for (SubsetMask t = 0; t < size; ++t) ASSERT_EQ(table.at(t), expected[t]);
                EXPECT_EQ(from_correlators(table), q);
            }
        }
    }
}

TEST(Correlators, RoundTripRandomized) {
    InstanceGenerator gen(7);
    for (std::size_t n = 1; n <= 10; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto q = gen.quasi_distribution(vars_n(n));
            EXPECT_EQ(from_correlators(to_correlators(q)), q) << "n=" << n;
        }
    }
}

TEST(FromCorrelators, FillPolicy) {
    CorrelatorTable partial(VariableSet{"x", "y"});
    EXPECT_FALSE(partial.complete());
    EXPECT_EQ(from_correlators(partial), uniform(VariableSet{"x", "y"}));
    EXPECT_THROW(from_correlators(partial, FillPolicy::Reject), Error);
    partial.set({"x", "y"}, Rational(1));
    auto q = from_correlators(partial);
    EXPECT_EQ(q[0], Rational(1, 2));
    EXPECT_EQ(q[1], 0);
    EXPECT_THROW(partial.set({"x"}, Rational(3, 2)), Error);
    EXPECT_THROW(partial.set(0, Rational(1, 2)), Error);
}

TEST(FromCorrelators, SourceTableAtFullStrength) {
    // Pair terms only.
    for (const Rational& mu : {Rational(1, 2), Rational(1)}) {
        CorrelatorTable t(source_ab_vars());
        t.set({"a0", "beta0"}, mu);
        t.set({"a0", "beta1"}, mu);
        t.set({"a1", "beta0"}, mu);
        t.set({"a1", "beta1"}, -mu);
        const auto q = from_correlators(t);
        const auto expected = oracle::tabulate(4, [&](const std::vector<int>& s) -> Rational {
            return (1 + mu * (s[0] * s[2] + s[0] * s[3] + s[1] * s[2] - s[1] * s[3])) / 16;
        });
        EXPECT_EQ(q.weights(), expected);
        for (const auto& w : q.weights()) {
            if (mu == Rational(1, 2)) {
                EXPECT_TRUE(w == 0 || w == Rational(1, 8));
            } else {
                EXPECT_TRUE(w == Rational(3, 16) || w == Rational(-1, 16));
            }
        }
    }
}

TEST(Marginalize, Examples) {
    EXPECT_EQ(marginalize(uniform(vars_n(3)), std::vector<std::string>{"v0"}), uniform(VariableSet{"v0"}));
    EXPECT_EQ(marginalize(source_family(Rational(3, 4), Side::AB), std::vector<std::string>{"a0", "a1"}), uniform(VariableSet{"a0", "a1"}));
    EXPECT_THROW(marginalize(uniform(vars_n(2)), std::vector<std::string>{"nope"}), Error);
}

TEST(Marginalize, KeepsCorrelatorsOfKeptSubsets) {
    InstanceGenerator gen(11);
    const auto vars = vars_n(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto q = gen.quasi_distribution(vars);
        const std::vector<std::string> keep{"v1", "v3", "v4"};
        const auto m = marginalize(q, keep);
        const auto parent = to_correlators(q);
        const auto child = to_correlators(m);
        for (SubsetMask t = 0; t < 8; ++t) {
            std::vector<std::string> labels;
            for (std::size_t j = 0; j < 3; ++j) {
                if ((t >> j) & 1U) labels.push_back(keep[j]);
            }
            ASSERT_EQ(child.at(t), parent.at(labels));
        }
    }
}

TEST(Tensor, ExamplesAndMultiplicativity) {
    EXPECT_EQ(tensor(uniform(VariableSet{"x"}), uniform(VariableSet{"y"})), uniform(VariableSet{"x", "y"}));
    EXPECT_THROW(tensor(uniform(VariableSet{"x"}), uniform(VariableSet{"x"})), Error);

    const Rational mu1(3, 5), mu2(2, 3);
    const auto joint = tensor(source_family(mu1, Side::AB), source_family(mu2, Side::BC));
    EXPECT_EQ(expectation(joint, std::vector<std::string>{"a0", "beta0", "betap0", "c0"}), mu1 * mu2);

    InstanceGenerator gen(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = gen.quasi_distribution(vars_n(3));
        const auto q = gen.quasi_distribution(VariableSet{"w0", "w1"});
        const auto pq = tensor(p, q);
        EXPECT_EQ(negativity(pq), negativity(p) * negativity(q));
        const auto ep = to_correlators(p), eq = to_correlators(q), epq = to_correlators(pq);
        for (SubsetMask t1 = 0; t1 < 8; ++t1) {
            for (SubsetMask t2 = 0; t2 < 4; ++t2) ASSERT_EQ(epq.at(t1 | (t2 << 3)), ep.at(t1) * eq.at(t2));
        }
    }
}

TEST(Mix, EndpointsAndAffinity) {
    InstanceGenerator gen(5);
    const auto vars = vars_n(3);
    const auto q1 = gen.quasi_distribution(vars);
    const auto q2 = gen.distribution(vars);
    EXPECT_EQ(mix(q1, q2, 1), q1);
    EXPECT_EQ(mix(q1, q2, 0), q2);
    const Rational w(2, 7);
    const auto m = mix(q1, q2, w);
    for (AssignmentIndex x = 0; x < 8; ++x) EXPECT_EQ(m[x], w * q1[x] + (1 - w) * q2[x]);
    EXPECT_THROW(mix(q1, q2, Rational(3, 2)), Error);
    EXPECT_THROW(mix(q1, uniform(vars_n(2)), w), Error);
}

TEST(Negativity, Examples) {
    EXPECT_EQ(negativity(make_rbq()), Rational(3, 2));
    EXPECT_EQ(negativity(make_rbq_plus()), 1);
    InstanceGenerator gen(9);
    EXPECT_EQ(negativity(gen.distribution(vars_n(4))), 1);
}

TEST(Negativity, BoundsEveryCorrelator) {
    InstanceGenerator gen(13);
    for (int trial = 0; trial < 30; ++trial) {
        const auto q = gen.quasi_distribution(vars_n(4));
        const auto n = negativity(q);
        const auto e = to_correlators(q);
        for (SubsetMask t = 0; t < 16; ++t) ASSERT_LE(abs(e.at(t)), n);
        const auto p = gen.distribution(vars_n(4));
        EXPECT_TRUE(to_correlators(p).bounded());
    }
}

TEST(Expectation, Examples) {
    EXPECT_EQ(expectation(uniform(vars_n(3)), std::vector<std::string>{"v0", "v2"}), 0);
    const Rational eta(4, 5), mu1(1, 2), mu2(3, 4);
    const auto r = compose_bilocal(BilocalParams{mu1, mu2, eta});
    EXPECT_EQ(expectation(r, std::vector<std::string>{"a0", "b0", "c0"}), eta * mu1 * mu2);
    EXPECT_FALSE(is_nonnegative(source_family(Rational(3, 4), Side::AB)));
    EXPECT_THROW(expectation(r, std::vector<std::string>{"d0"}), Error);
}

TEST(Separability, Examples) {
    InstanceGenerator gen(17);
    const auto p = gen.quasi_distribution(VariableSet{"a0", "a1"});
    const auto q = gen.distribution(VariableSet{"c0", "c1"});
    EXPECT_TRUE(separability_check(tensor(p, q), {"a0", "a1"}, {"c0", "c1"}));

    const std::vector<std::string> ac{"a0", "a1", "c0", "c1"};
    EXPECT_FALSE(separability_check(marginalize(make_rbq_plus(), ac), {"a0", "a1"}, std::vector<std::string>{"c0", "c1"}));
    EXPECT_TRUE(separability_check(marginalize(make_rbq(), ac), {"a0", "a1"}, std::vector<std::string>{"c0", "c1"}));
    EXPECT_THROW(separability_check(marginalize(make_rbq(), ac), {"a0"}, std::vector<std::string>{"c0", "c1"}), Error);
}
