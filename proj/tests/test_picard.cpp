#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "conefix/picard.hpp"

using namespace conefix;

namespace {

Problem<double> make_problem(Map<double> map, Point<double> x0, std::optional<double> lambda,
                             Domain<double> domain = WholeSpace{}) {
    const Index n = x0.size();
    return Problem<double>{
        .map = std::move(map),
        .domain = std::move(domain),
        .x0 = std::move(x0),
        .metric = ConeMetric::weighted(Eigen::VectorXd::Ones(n), Field::real),
        .gauge = GaugeNorm(SpaceSpec::unit(n)),
        .lambda = lambda,
        .mode = Mode::banach,
        .stop_c = OrderedVector::constant(n, 1e-10),
        .max_iter = 1000,
    };
}

Point<double> scalar_point(double v) { return Point<double>::Constant(1, v); }

Map<double> halve() {
    return [](const Point<double>& x) -> Point<double> { return 0.5 * x; };
}

Map<double> affine(Eigen::VectorXd diag, Eigen::VectorXd c) {
    return [diag, c](const Point<double>& x) -> Point<double> { return diag.cwiseProduct(x) + c; };
}

OrderedVector pad(const OrderedVector& v, double slack) { return v + OrderedVector::constant(v.size(), slack); }

} // namespace

TEST(Bounds, Apriori) {
    const OrderedVector d01{1.0, 2.0};
    EXPECT_EQ(apriori_bound(0, 0.5, d01), (OrderedVector{2.0, 4.0}));
    EXPECT_EQ(apriori_bound(0, 0.0, d01), d01);
    EXPECT_EQ(apriori_bound(1, 0.0, d01), OrderedVector::zero(2));
    EXPECT_EQ(apriori_bound(5, 0.0, d01), OrderedVector::zero(2));

    // Geometric tail Σ_{j>=3} λ^j d01, summed term by term.
    double tail = 0.0;
    for (int j = 3; j < 200; ++j) tail += std::pow(0.5, j);
    const OrderedVector bound = apriori_bound(3, 0.5, d01);
    EXPECT_EQ(bound, (OrderedVector{0.25, 0.5}));
    EXPECT_NEAR(bound[0], tail * d01[0], 1e-15);
    EXPECT_NEAR(bound[1], tail * d01[1], 1e-15);
}

TEST(Bounds, APosteriori) {
    EXPECT_EQ(apost_forward_bound(OrderedVector::zero(2), 0.3), OrderedVector::zero(2));
    EXPECT_EQ(apost_forward_bound(OrderedVector{1, 1}, 0.5), (OrderedVector{2, 2}));
    EXPECT_EQ(apost_forward_bound(OrderedVector{0.25, 3}, 0.0), (OrderedVector{0.25, 3}));

    EXPECT_EQ(apost_backward_bound(OrderedVector{1, 1}, 0.0), OrderedVector::zero(2));
    EXPECT_EQ(apost_backward_bound(OrderedVector{2, 2}, 0.5), (OrderedVector{2, 2}));
    const OrderedVector b = apost_backward_bound(OrderedVector{1, 0}, 0.9);
    EXPECT_NEAR(b[0], 9.0, 1e-12);
    EXPECT_EQ(b[1], 0.0);
}

TEST(Bounds, RejectInvalidLambda) {
    const OrderedVector d{1.0};
    EXPECT_THROW(apriori_bound(0, 1.0, d), InputError);
    EXPECT_THROW(apriori_bound(0, -0.1, d), InputError);
    EXPECT_THROW(apost_forward_bound(d, 1.0 - 1e-13), InputError);
    EXPECT_THROW(apost_backward_bound(d, 2.0), InputError);
    EXPECT_THROW(apost_forward_bound(OrderedVector{-1.0}, 0.5), InputError);
}

TEST(RunPicard, HalvingMap) {
    const auto p = make_problem(halve(), scalar_point(1.0), 0.5);
    const auto res = run_picard(p);
    ASSERT_TRUE(res.converged);
    ASSERT_TRUE(res.certificate.has_value());
    const Certificate& cert = *res.certificate;
    EXPECT_EQ(cert.radius_r, OrderedVector{1.0});
    EXPECT_EQ(cert.status, CertificateStatus::certified);
    EXPECT_EQ(cert.lambda_source, LambdaSource::given);
    for (const auto& x : res.trace.iterates) {
        EXPECT_TRUE(leq(p.metric.distance(x, p.x0), cert.radius_r));
    }
    // The returned point carries a guaranteed error below stop_c.
    EXPECT_TRUE(lt(p.metric.distance(*res.fixed_point, scalar_point(0.0)), p.stop_c));
    EXPECT_EQ(res.trace.iterates[1], scalar_point(0.5));
    EXPECT_EQ(res.trace.iterates[2], scalar_point(0.25));
    EXPECT_EQ(res.trace.in_domain.size(), res.trace.iterates.size());
}

TEST(RunPicard, IdentityHaltsImmediately) {
    const Point<double> x0 = (Point<double>(2) << 3.0, -1.0).finished();
    const auto p = make_problem([](const Point<double>& x) { return x; }, x0, 0.5);
    const auto res = run_picard(p);
    ASSERT_TRUE(res.converged);
    EXPECT_EQ(res.trace.step_dists.front(), OrderedVector::zero(2));
    EXPECT_EQ(res.certificate->radius_r, OrderedVector::zero(2));
    EXPECT_EQ(*res.fixed_point, x0);
}

TEST(RunPicard, DiagonalAffine) {
    const Eigen::Vector2d diag(0.5, 0.25), c(1.0, 1.0);
    // Closed form: (I - A)^{-1} c.
    const Point<double> xi = (Eigen::Vector2d::Ones() - diag).cwiseInverse().cwiseProduct(c);
    EXPECT_NEAR(xi[0], 2.0, 1e-15);
    EXPECT_NEAR(xi[1], 4.0 / 3.0, 1e-15);

    const auto p = make_problem(affine(diag, c), Point<double>::Zero(2), 0.5);
    const auto res = run_picard(p);
    ASSERT_TRUE(res.converged);
    EXPECT_NEAR(scalarize(p.metric, p.gauge, *res.fixed_point, xi), 0.0, 1e-10);

    const Certificate& cert = *res.certificate;
    for (std::size_t k = 0; k < res.trace.iterates.size(); ++k) {
        const OrderedVector err = p.metric.distance(res.trace.iterates[k], xi);
        EXPECT_TRUE(leq(err, pad(cert.apriori[k], 1e-10)));
        EXPECT_TRUE(leq(err, pad(cert.apost_forward[k], 1e-10)));
        if (k >= 1) EXPECT_TRUE(leq(err, pad(cert.apost_backward[k - 1], 1e-10)));
    }
    EXPECT_TRUE(rate_check(res.trace, xi, p, 1e-10));
    EXPECT_TRUE(cert.step_contraction_observed);
}

TEST(RunPicard, MaxIterGivesNoConvergence) {
    auto p = make_problem([](const Point<double>& x) -> Point<double> { return 2.0 * x + Point<double>::Ones(1); },
                          scalar_point(1.0), std::nullopt);
    p.max_iter = 20;
    const auto res = run_picard(p);
    EXPECT_FALSE(res.converged);
    EXPECT_FALSE(res.certificate.has_value());
    EXPECT_EQ(res.trace.iterates.size(), 21u);
}

TEST(RunPicard, DomainEscapeCarriesTrace) {
    const Ball<double> dom(scalar_point(0.0), OrderedVector{10.0}, true);
    const auto p = make_problem([](const Point<double>& x) -> Point<double> { return 3.0 * x; }, scalar_point(1.0),
                                std::nullopt, dom);
    try {
        run_picard(p);
        FAIL() << "expected DomainEscape";
    } catch (const DomainEscape<double>& e) {
        EXPECT_EQ(e.iteration(), 3u);
        EXPECT_EQ(e.trace().iterates.size(), 4u);
        EXPECT_FALSE(e.trace().in_domain.back());
    }
}

TEST(RunPicard, StartOutsideDomainIsInputError) {
    const Ball<double> dom(scalar_point(5.0), OrderedVector{1.0}, true);
    const auto p = make_problem(halve(), scalar_point(0.0), 0.5, dom);
    EXPECT_THROW(run_picard(p), InputError);
}

TEST(RunPicard, InvalidProblems) {
    auto p = make_problem(halve(), scalar_point(1.0), 1.0);
    EXPECT_THROW(run_picard(p), InputError);
    p = make_problem(halve(), scalar_point(1.0), 0.5);
    p.stop_c = OrderedVector{0.0};
    EXPECT_THROW(run_picard(p), InputError);
}

TEST(RunPicard, EstimatedLambdaIsHeuristic) {
    const auto p = make_problem(halve(), scalar_point(1.0), std::nullopt);
    const auto res = run_picard(p);
    ASSERT_TRUE(res.converged);
    ASSERT_TRUE(res.lambda_estimate.has_value());
    EXPECT_EQ(*res.lambda_estimate, 0.5);
    ASSERT_TRUE(res.certificate.has_value());
    EXPECT_EQ(res.certificate->status, CertificateStatus::heuristic);
    EXPECT_EQ(res.certificate->lambda_source, LambdaSource::estimated);
}

TEST(RunPicard, PredicateDomainIsConditional) {
    DomainPredicate<double> inside = [](const Point<double>& x) { return std::abs(x[0]) <= 2.0; };
    const auto p = make_problem(halve(), scalar_point(1.0), 0.5, inside);
    const auto res = run_picard(p);
    ASSERT_TRUE(res.certificate.has_value());
    EXPECT_EQ(res.certificate->domain, DomainStatus::conditional);
    EXPECT_EQ(res.certificate->status, CertificateStatus::conditional);
}

TEST(StepContraction, Examples) {
    const auto p = make_problem(halve(), scalar_point(1.0), 0.5);
    const auto res = run_picard(p);
    EXPECT_TRUE(verify_step_contraction(res.trace, 0.5));
    EXPECT_FALSE(verify_step_contraction(res.trace, 0.4));

    IterationTrace<double> constant;
    constant.iterates = {scalar_point(2.0), scalar_point(2.0), scalar_point(2.0)};
    constant.step_dists = {OrderedVector{0.0}, OrderedVector{0.0}};
    EXPECT_TRUE(verify_step_contraction(constant, 0.0));
    EXPECT_TRUE(verify_step_contraction(constant, 0.9));

    IterationTrace<double> one_step;
    one_step.step_dists = {OrderedVector{1.0}};
    EXPECT_THROW(verify_step_contraction(one_step, 0.5), InputError);
}

TEST(EstimateLambda, Examples) {
    const GaugeNorm g(SpaceSpec::unit(1));
    const std::vector<OrderedVector> halving = {{0.5}, {0.25}, {0.125}};
    EXPECT_EQ(estimate_lambda(halving, g), 0.5);

    const std::vector<OrderedVector> settles = {{1.0}, {0.0}, {0.0}};
    EXPECT_EQ(estimate_lambda(settles, g), 0.0);

    const std::vector<OrderedVector> expanding = {{1.0}, {2.0}, {4.0}};
    EXPECT_GE(estimate_lambda(expanding, g), 1.0);

    const std::vector<OrderedVector> zeros = {{0.0}, {0.0}};
    EXPECT_THROW(estimate_lambda(zeros, g), EstimateUndefined);
    const std::vector<OrderedVector> single = {{1.0}};
    EXPECT_THROW(estimate_lambda(single, g), EstimateUndefined);
}

TEST(DomainCondition, Examples) {
    const auto whole = make_problem(halve(), scalar_point(1.0), 0.5);
    const OrderedVector r{1.0};
    EXPECT_EQ(check_domain_condition(whole, r), DomainStatus::verified);

    const auto ball = make_problem(halve(), scalar_point(1.0), 0.5, Ball<double>(scalar_point(1.0), 2.0 * r, true));
    EXPECT_EQ(check_domain_condition(ball, r), DomainStatus::verified);
    EXPECT_EQ(check_domain_condition(ball, 3.0 * r), DomainStatus::conditional);

    const auto pred = make_problem(halve(), scalar_point(1.0), 0.5, DomainPredicate<double>([](const auto&) { return true; }));
    EXPECT_EQ(check_domain_condition(pred, r), DomainStatus::conditional);
}

TEST(Residual, Examples) {
    const auto p = make_problem(halve(), scalar_point(1.0), 0.5);
    EXPECT_EQ(residual_check(scalar_point(0.0), p), OrderedVector{0.0});
    EXPECT_EQ(residual_check(scalar_point(1e-9), p), OrderedVector{5e-10});

    const Eigen::Vector2d diag(0.5, 0.25), c(1.0, 1.0);
    const Point<double> xi = (Eigen::Vector2d::Ones() - diag).cwiseInverse().cwiseProduct(c);
    const auto q = make_problem(affine(diag, c), Point<double>::Zero(2), 0.5);
    const auto res = run_picard(q);
    // d(ξ̂, Tξ̂) ⪯ d(ξ̂, ξ) + d(Tξ, Tξ̂) ⪯ (1 + λ) d(ξ̂, ξ).
    const OrderedVector err = q.metric.distance(*res.fixed_point, xi);
    EXPECT_TRUE(leq(res.residual, pad(1.5 * err, 1e-15)));
    EXPECT_TRUE(leq(res.residual, pad(0.5 * res.trace.step_dists.back(), 1e-15)));
}

TEST(RateCheck, Examples) {
    const auto p = make_problem(halve(), scalar_point(1.0), 0.5);
    const auto res = run_picard(p);
    EXPECT_TRUE(rate_check(res.trace, scalar_point(0.0), p));

    auto tight = p;
    tight.lambda = 0.4;
    EXPECT_FALSE(rate_check(res.trace, scalar_point(0.0), tight));
}

TEST(Properties, ZeroToTheZero) {
    const OrderedVector d01{0.3, 7.0};
    EXPECT_EQ(apriori_bound(0, 0.0, d01), d01);
}

TEST(Properties, BoundSoundnessAndTightening) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> factor(0.0, 0.9);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 5;
        Eigen::VectorXd diag(n), c(n), x0(n);
        for (int i = 0; i < n; ++i) {
            diag[i] = factor(rng);
            c[i] = coord(rng);
            x0[i] = coord(rng);
        }
        const Point<double> xi = (Eigen::VectorXd::Ones(n) - diag).cwiseInverse().cwiseProduct(c);
        const auto p = make_problem(affine(diag, c), x0, diag.maxCoeff());
        const auto res = run_picard(p);
        ASSERT_TRUE(res.converged);
        const Certificate& cert = *res.certificate;
        for (std::size_t k = 0; k < res.trace.iterates.size(); ++k) {
            const OrderedVector err = p.metric.distance(res.trace.iterates[k], xi);
            ASSERT_TRUE(leq(err, pad(cert.apriori[k], 1e-10)));
            ASSERT_TRUE(leq(err, pad(cert.apost_forward[k], 1e-10)));
            if (k >= 1) ASSERT_TRUE(leq(err, pad(cert.apost_backward[k - 1], 1e-10)));
            ASSERT_TRUE(leq(p.metric.distance(res.trace.iterates[k], p.x0), pad(cert.radius_r, 1e-10)));
        }
        if (cert.step_contraction_observed) {
            for (std::size_t k = 0; k + 1 < cert.apost_forward.size(); ++k) {
                EXPECT_TRUE(leq(cert.apost_forward[k + 1], cert.apost_forward[k]));
            }
        }
    }
}

TEST(Properties, UniqueFixedPointFromManyStarts) {
    const Eigen::Vector3d diag(0.1, 0.5, 0.8), c(1.0, -2.0, 0.5);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> coord(-100.0, 100.0);
    std::vector<Point<double>> finals;
    for (int s = 0; s < 5; ++s) {
        const Point<double> x0 = Eigen::Vector3d(coord(rng), coord(rng), coord(rng));
        const auto res = run_picard(make_problem(affine(diag, c), x0, 0.8));
        ASSERT_TRUE(res.converged);
        finals.push_back(*res.fixed_point);
    }
    const auto p = make_problem(affine(diag, c), Point<double>::Zero(3), 0.8);
    for (const auto& a : finals)
        for (const auto& b : finals) EXPECT_LE(scalarize(p.metric, p.gauge, a, b), 1e-8);
}
