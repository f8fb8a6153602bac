#include <gtest/gtest.h>

#include "conefix/axioms.hpp"
#include "conefix/normality_demo.hpp"

using namespace conefix;

TEST(Axioms, StandardOrderingPasses) {
    AxiomOptions opts;
    opts.samples = 200;
    const AxiomReport report = run_axioms(opts);
    for (const auto& r : report.results) {
        EXPECT_TRUE(r.passed) << r.name << ": " << r.counterexample;
        EXPECT_GT(r.checked, 0u) << r.name;
    }
    EXPECT_TRUE(report.all_passed());
    for (const char* name : {"V1.translation", "S1.strict_implies_weak", "S10.addition", "S11.finite", "corr.leq_cone", "corr.lt_interior",
                             "gauge.bisection_oracle", "metric.plus.triangle", "transfer.scalarized"}) {
        EXPECT_NE(report.find(name), nullptr) << name;
    }
}

TEST(Axioms, StrictInPlaceOfNonStrictIsCaught) {
    AxiomOptions opts;
    opts.samples = 50;
    opts.ordering.leq = [](const OrderedVector& x, const OrderedVector& y) { return lt(x, y); };
    const AxiomReport report = run_axioms(opts);
    EXPECT_FALSE(report.all_passed());
    const AxiomResult* reflexive = report.find("order.reflexive");
    ASSERT_NE(reflexive, nullptr);
    EXPECT_FALSE(reflexive->passed);
    EXPECT_FALSE(reflexive->counterexample.empty());
}

TEST(Axioms, SumOrderBreaksAntisymmetry) {
    // x ⪯ y iff Σx <= Σy is a preorder, not a partial order, for n >= 2.
    AxiomOptions opts;
    opts.samples = 200;
    opts.min_dim = 2;
    opts.max_dim = 3;
    opts.ordering.leq = [](const OrderedVector& x, const OrderedVector& y) {
        return x.coords().sum() <= y.coords().sum();
    };
    const AxiomReport report = run_axioms(opts);
    const AxiomResult* anti = report.find("order.antisymmetric");
    ASSERT_NE(anti, nullptr);
    EXPECT_FALSE(anti->passed);
}

TEST(Axioms, DeterministicForFixedSeed) {
    AxiomOptions opts;
    opts.seed = 17;
    opts.samples = 20;
    opts.ordering.leq = [](const OrderedVector& x, const OrderedVector& y) { return lt(x, y); };
    const AxiomReport a = run_axioms(opts);
    const AxiomReport b = run_axioms(opts);
    ASSERT_EQ(a.results.size(), b.results.size());
    for (std::size_t i = 0; i < a.results.size(); ++i) {
        EXPECT_EQ(a.results[i].name, b.results[i].name);
        EXPECT_EQ(a.results[i].checked, b.results[i].checked);
        EXPECT_EQ(a.results[i].counterexample, b.results[i].counterexample);
    }
}

TEST(Axioms, SingleSampleAndBadOptions) {
    AxiomOptions opts;
    opts.samples = 1;
    EXPECT_TRUE(run_axioms(opts).all_passed());
    opts.samples = 0;
    EXPECT_THROW(run_axioms(opts), InputError);
    opts.samples = 1;
    opts.min_dim = 3;
    opts.max_dim = 2;
    EXPECT_THROW(run_axioms(opts), InputError);
}

TEST(Bisection, AgreesOnSimpleCases) {
    EXPECT_NEAR(gauge_by_bisection(OrderedVector{0.0, 0.0}, SpaceSpec::unit(2)), 0.0, 1e-12);
    EXPECT_NEAR(gauge_by_bisection(OrderedVector{-3.0}, SpaceSpec(OrderedVector{1.5})), 2.0, 1e-12);
}

TEST(NormalityDemo, Rows) {
    const auto rows = demo_normality(50);
    ASSERT_EQ(rows.size(), 50u);
    for (const auto& r : rows) {
        EXPECT_DOUBLE_EQ(r.norm_x, 1.0 + 1.0 / r.n);
        EXPECT_DOUBLE_EQ(r.norm_y, 1.0 / r.n);
        EXPECT_TRUE(r.order_holds);
    }
    EXPECT_EQ(rows.front().n, 1);
    EXPECT_DOUBLE_EQ(rows.front().norm_x, 2.0);
    EXPECT_THROW(demo_normality(0), InputError);
}
