#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "conefix/solid_space.hpp"

using namespace conefix;

TEST(OrderedVector, RejectsNonFiniteAndEmpty) {
    EXPECT_THROW(OrderedVector({1.0, std::numeric_limits<double>::quiet_NaN()}), InputError);
    EXPECT_THROW(OrderedVector({std::numeric_limits<double>::infinity()}), InputError);
    EXPECT_THROW(OrderedVector(Eigen::VectorXd()), InputError);
}

TEST(OrderedVector, ArithmeticOverflowIsNumericError) {
    const OrderedVector big{std::numeric_limits<double>::max()};
    EXPECT_THROW(big + big, NumericError);
    EXPECT_THROW(2.0 * big, NumericError);
}

TEST(SpaceSpec, BaseMustBeStrictlyPositive) {
    EXPECT_NO_THROW(SpaceSpec(OrderedVector{1.0, 2.0}));
    EXPECT_THROW(SpaceSpec(OrderedVector{1.0, 0.0}), InputError);
    EXPECT_THROW(SpaceSpec(OrderedVector{-1.0, 2.0}), InputError);
}

TEST(Leq, Examples) {
    EXPECT_TRUE(leq({0, 0}, {0, 0}));
    EXPECT_TRUE(leq({1, 2}, {2, 3}));
    EXPECT_FALSE(leq({1, 3}, {2, 2}));
    EXPECT_FALSE(leq({2, 2}, {1, 3}));
}

TEST(Lt, Examples) {
    EXPECT_TRUE(lt({0, 0}, {1, 1}));
    EXPECT_FALSE(lt({0, 0}, {0, 1}));
    EXPECT_FALSE(lt({1, 1}, {1, 1}));
}

TEST(Ordering, DimensionMismatchIsInputError) {
    EXPECT_THROW(leq({0, 0}, {0}), InputError);
    EXPECT_THROW(lt({0}, {0, 0}), InputError);
}

TEST(Cone, MembershipExamples) {
    EXPECT_TRUE(in_cone(OrderedVector{0, 0}));
    EXPECT_TRUE(in_cone(OrderedVector{1, 0}));
    EXPECT_FALSE(in_cone(OrderedVector{-1, 2}));
    EXPECT_TRUE(in_interior(OrderedVector{1, 1}));
    EXPECT_FALSE(in_interior(OrderedVector{1, 0}));
    EXPECT_FALSE(in_interior(OrderedVector{0, 0}));
}

TEST(Cone, ExactOnTinyDifferences) {
    // Subtraction of distinct doubles never rounds to zero, so the
    // correspondence holds even at the last ulp.
    const double a = 1.0;
    const double b = std::nextafter(1.0, 2.0);
    EXPECT_TRUE(lt({a}, {b}));
    EXPECT_FALSE(lt({b}, {a}));
    EXPECT_TRUE(leq({a}, {b}));
}

TEST(MinorantScale, Examples) {
    const SpaceSpec unit = SpaceSpec::unit(2);
    const std::vector<OrderedVector> a = {{1, 2}, {3, 0.5}};
    const double lambda = minorant_scale(a, unit);
    EXPECT_EQ(lambda, 0.25);
    for (const auto& x : a) EXPECT_TRUE(lt(lambda * unit.base(), x));

    const SpaceSpec b(OrderedVector{3.0, 7.0});
    const std::vector<OrderedVector> self = {b.base()};
    EXPECT_EQ(minorant_scale(self, b), 0.5);

    const SpaceSpec four(OrderedVector{4, 4});
    const std::vector<OrderedVector> twos = {{2, 2}};
    EXPECT_EQ(minorant_scale(twos, four), 0.25);
}

TEST(MinorantScale, RejectsBoundaryPoints) {
    const std::vector<OrderedVector> a = {{1, 0}};
    EXPECT_THROW(minorant_scale(a, SpaceSpec::unit(2)), PreconditionError);
    EXPECT_THROW(minorant_scale({}, SpaceSpec::unit(2)), InputError);
}

TEST(BoundingScale, Examples) {
    const SpaceSpec unit = SpaceSpec::unit(2);
    const std::vector<OrderedVector> a = {{2, -3}};
    EXPECT_EQ(bounding_scale(a, unit), 4.0);
    const std::vector<OrderedVector> zero = {OrderedVector::zero(2)};
    EXPECT_EQ(bounding_scale(zero, unit), 1.0);
    const std::vector<OrderedVector> axes = {{1, 0}, {0, 1}};
    EXPECT_EQ(bounding_scale(axes, unit), 2.0);
}

TEST(Witnesses, RandomSetsAlwaysVerify) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> pos(1e-3, 1e3);
    std::uniform_real_distribution<double> any(-1e3, 1e3);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + trial % 6;
        Eigen::VectorXd b(n);
        for (int i = 0; i < n; ++i) b[i] = pos(rng);
        const SpaceSpec spec{OrderedVector(b)};
        std::vector<OrderedVector> positive, mixed;
        for (int k = 0; k < 3; ++k) {
            Eigen::VectorXd p(n), m(n);
            for (int i = 0; i < n; ++i) {
                p[i] = pos(rng);
                m[i] = any(rng);
            }
            positive.emplace_back(p);
            mixed.emplace_back(m);
        }
        const double lo = minorant_scale(positive, spec);
        const double hi = bounding_scale(mixed, spec);
        for (const auto& x : positive) EXPECT_TRUE(lt(lo * spec.base(), x));
        for (const auto& x : mixed) {
            EXPECT_TRUE(lt(-hi * spec.base(), x));
            EXPECT_TRUE(lt(x, hi * spec.base()));
        }
    }
}

TEST(Cone, InteriorCriterionOnSamples) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const OrderedVector k{u(rng), 0.0, u(rng)};
        const OrderedVector ko{u(rng) + 1e-3, u(rng) + 1e-3, u(rng) + 1e-3};
        const double lambda = u(rng) + 1e-3;
        EXPECT_TRUE(in_interior(lambda * ko));
        EXPECT_TRUE(in_interior(k + ko));
    }
    EXPECT_FALSE(in_interior(OrderedVector::zero(3)));
}
