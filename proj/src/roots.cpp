#include "conefix/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace conefix {

Polynomial::Polynomial(std::vector<Complex> coefficients) : coeffs_(std::move(coefficients)) {
    for (const auto& c : coeffs_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw InputError("polynomial coefficient is not finite");
        }
    }
    while (!coeffs_.empty() && coeffs_.back() == Complex(0.0)) {
        coeffs_.pop_back();
    }
    if (coeffs_.size() < 2) {
        throw InputError("polynomial must have degree >= 1");
    }
}

Complex Polynomial::operator()(Complex z) const {
    Complex acc = coeffs_.back();
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

Polynomial Polynomial::monic() const {
    const Complex lead = coeffs_.back();
    std::vector<Complex> c(coeffs_.size());
    std::transform(coeffs_.begin(), coeffs_.end(), c.begin(), [&](Complex a) { return a / lead; });
    c.back() = 1.0;
    return Polynomial(std::move(c));
}

double Polynomial::coefficient_sum() const {
    double s = 0.0;
    for (const auto& c : coeffs_) s += std::abs(c);
    return s;
}

namespace {

bool lex_less(const Complex& a, const Complex& b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

} // namespace

RootVector weierstrass_step(const Polynomial& p, const RootVector& z) {
    const Polynomial q = p.monic();
    const Index n = z.size();
    if (n != q.degree()) {
        throw InputError("weierstrass_step: need exactly one approximation per root");
    }
    if (!z.allFinite()) {
        throw InputError("weierstrass_step: non-finite approximation");
    }

    std::vector<Complex> others;
    others.reserve(static_cast<std::size_t>(n));
    RootVector out(n);
    for (Index i = 0; i < n; ++i) {
        others.clear();
        for (Index j = 0; j < n; ++j) {
            if (j != i) others.push_back(z[j]);
        }
        std::sort(others.begin(), others.end(), lex_less);
        Complex denom(1.0);
        for (const auto& w : others) {
            const Complex diff = z[i] - w;
            if (diff == Complex(0.0)) {
                throw DivisionHazard("weierstrass_step: approximations " + std::to_string(i) + " coincide");
            }
            denom *= diff;
        }
        if (denom == Complex(0.0)) {
            throw DivisionHazard("weierstrass_step: product of differences underflowed");
        }
        out[i] = z[i] - q(z[i]) / denom;
    }
    if (!out.allFinite()) {
        throw NumericError("weierstrass_step: overflow");
    }
    return out;
}

RootVector default_start(const Polynomial& p) {
    const Polynomial q = p.monic();
    double max_coeff = 0.0;
    for (const auto& c : q.coefficients()) max_coeff = std::max(max_coeff, std::abs(c));
    const double radius = 1.0 + max_coeff;
    const int n = q.degree();
    RootVector z(n);
    const double offset = std::numbers::pi / (2.0 * n) + 0.1;
    for (int k = 0; k < n; ++k) {
        z[k] = std::polar(radius, 2.0 * std::numbers::pi * k / n + offset);
    }
    return z;
}

bool ComparisonReport::any_exceeds() const {
    return std::any_of(rows.begin(), rows.end(), [](const ComparisonRow& r) { return r.exceeds; });
}

bool ComparisonReport::strictly_tighter_somewhere() const {
    return std::any_of(rows.begin(), rows.end(), [](const ComparisonRow& r) {
        return (r.componentwise.coords().array() < r.scalar_broadcast.coords().array()).any();
    });
}

std::size_t contraction_tail_start(std::span<const OrderedVector> steps, const GaugeNorm& g) {
    std::size_t start = steps.size() == 0 ? 0 : steps.size() - 1;
    while (start > 0) {
        const double den = g(steps[start - 1]);
        const double num = g(steps[start]);
        const bool contracting = den > 0.0 ? num / den < 1.0 : num == 0.0;
        if (!contracting) break;
        --start;
    }
    return start;
}

Problem<Complex> weierstrass_problem(const Polynomial& p, const RootsOptions& opts) {
    const Index n = p.degree();
    RootVector z0 = opts.z0 ? *opts.z0 : default_start(p);
    if (z0.size() != n) {
        throw InputError("starting vector must have one entry per root");
    }
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            if (z0[i] == z0[j]) throw InputError("starting approximations must be pairwise distinct");
        }
    }
    Eigen::VectorXd weights = opts.weights ? *opts.weights : Eigen::VectorXd::Ones(n);
    if (weights.size() != n) {
        throw InputError("weights must have one entry per root");
    }
    OrderedVector stop_c = opts.stop_c ? *opts.stop_c : OrderedVector::constant(n, 1e-12);

    const Polynomial monic = p.monic();
    return Problem<Complex>{
        .map = [monic](const RootVector& z) { return weierstrass_step(monic, z); },
        .domain = WholeSpace{},
        .x0 = std::move(z0),
        .metric = ConeMetric::weighted(std::move(weights), Field::complex),
        .gauge = GaugeNorm(SpaceSpec::unit(n)),
        .lambda = opts.lambda,
        .mode = Mode::iterated,
        .stop_c = std::move(stop_c),
        .max_iter = opts.max_iter,
    };
}

RootsResult solve_roots(const Polynomial& p, const RootsOptions& opts) {
    const Problem<Complex> problem = weierstrass_problem(p, opts);

    RootsResult out;
    out.run = run_picard(problem);
    out.converged = out.run.converged;
    out.roots = out.run.trace.iterates.back();
    if (!out.converged) {
        return out;
    }

    if (opts.lambda) {
        out.certificate = out.run.certificate;
        out.tail_start = 0;
        out.comparison = compare_bounds(out.run.trace, problem.gauge, *opts.lambda, 0);
        return out;
    }

    // The Weierstrass map is not a global contraction: only the tail of the
    // trace on which the steps shrink supports a λ estimate.
    std::vector<OrderedVector> steps = out.run.trace.step_dists;
    steps.push_back(out.run.residual);
    out.tail_start = contraction_tail_start(steps, problem.gauge);
    if (steps.size() < out.tail_start + 2) {
        return out;
    }
    try {
        const double lambda = estimate_lambda(std::span<const OrderedVector>(steps), problem.gauge, out.tail_start);
        if (lambda <= kMaxLambda) {
            out.certificate = build_certificate(problem, out.run.trace, out.tail_start, lambda,
                                                LambdaSource::estimated, out.run.residual);
            out.comparison = compare_bounds(out.run.trace, problem.gauge, lambda, out.tail_start);
        }
    } catch (const EstimateUndefined&) {
        // the tail starts on a zero step: the start was already a fixed point
    }
    return out;
}

} // namespace conefix
