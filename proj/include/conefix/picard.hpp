#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "conefix/cone_metric.hpp"
#include "conefix/minkowski.hpp"
#include "conefix/solid_space.hpp"

/**
 * @file picard.hpp
 *
 * Picard iteration x_{n+1} = T x_n over a cone metric space with
 * vector-valued error certificates. For a contraction factor λ in [0, 1)
 * and d01 = d(x_0, T x_0) the certificate carries, per iterate,
 *
 *     a priori        d(x_n, ξ) ⪯ λ^n / (1 - λ) · d01
 *     a posteriori    d(x_n, ξ) ⪯ 1 / (1 - λ) · d(x_n, x_{n+1})
 *                     d(x_n, ξ) ⪯ λ / (1 - λ) · d(x_n, x_{n-1})     (n >= 1)
 *
 * and the radius r = d01 / (1 - λ) of the closed ball around x_0 which
 * contains every iterate.
 */

namespace conefix {

/// Largest admissible contraction factor; anything closer to 1 is treated as
/// non-contractive at double precision.
inline constexpr double kMaxLambda = 1.0 - 1e-12;

enum class Mode { iterated, banach };
enum class LambdaSource { given, estimated };
enum class CertificateStatus { certified, heuristic, conditional };
enum class DomainStatus { verified, conditional };

std::string to_string(Mode m);
std::string to_string(LambdaSource s);
std::string to_string(CertificateStatus s);
std::string to_string(DomainStatus s);

struct WholeSpace {};

template <typename Scalar>
using DomainPredicate = std::function<bool(const Point<Scalar>&)>;

template <typename Scalar>
using Domain = std::variant<WholeSpace, Ball<Scalar>, DomainPredicate<Scalar>>;

template <typename Scalar>
using Map = std::function<Point<Scalar>(const Point<Scalar>&)>;

template <typename Scalar>
struct Problem {
    Map<Scalar> map;
    Domain<Scalar> domain;
    Point<Scalar> x0;
    ConeMetric metric;
    GaugeNorm gauge;
    std::optional<double> lambda;
    Mode mode;
    OrderedVector stop_c;
    std::size_t max_iter;
};

template <typename Scalar>
struct IterationTrace {
    std::vector<Point<Scalar>> iterates;
    /// step_dists[k] = d(x_k, x_{k+1})
    std::vector<OrderedVector> step_dists;
    std::vector<bool> in_domain;
};

/**
 * @brief Error certificate for the iterates x_first, x_first+1, …
 *
 * apriori[k] and apost_forward[k] bound d(x_{first+k}, ξ);
 * apost_backward[k] bounds d(x_{first+k+1}, ξ), so it is one shorter.
 */
struct Certificate {
    double lambda_used = 0.0;
    LambdaSource lambda_source = LambdaSource::given;
    Mode mode = Mode::iterated;
    std::size_t first = 0;
    OrderedVector radius_r;
    std::vector<OrderedVector> apriori;
    std::vector<OrderedVector> apost_forward;
    std::vector<OrderedVector> apost_backward;
    DomainStatus domain = DomainStatus::verified;
    bool step_contraction_observed = false;
    CertificateStatus status = CertificateStatus::heuristic;
    OrderedVector residual;
};

template <typename Scalar>
struct PicardResult {
    IterationTrace<Scalar> trace;
    bool converged = false;
    std::optional<Point<Scalar>> fixed_point;
    std::optional<Certificate> certificate;
    /// d(ξ̂, T ξ̂) for the final iterate (also set without convergence).
    OrderedVector residual;
    /// Gauge-based estimate from the trace when λ was not supplied.
    std::optional<double> lambda_estimate;
};

/// Raised when an iterate leaves the problem domain; carries the trace so far.
template <typename Scalar>
class DomainEscape : public std::runtime_error {
public:
    DomainEscape(std::size_t iter, IterationTrace<Scalar> trace)
        : std::runtime_error("iterate " + std::to_string(iter) + " left the domain"), iter_(iter),
          trace_(std::move(trace)) {}

    std::size_t iteration() const { return iter_; }
    const IterationTrace<Scalar>& trace() const { return trace_; }

private:
    std::size_t iter_;
    IterationTrace<Scalar> trace_;
};

/// Throws InputError unless 0 <= λ <= kMaxLambda.
void require_lambda(double lambda);

/// (λ^n / (1 - λ)) · d01 with the convention 0^0 = 1.
OrderedVector apriori_bound(std::size_t n, double lambda, const OrderedVector& d01);

/// d_next / (1 - λ)
OrderedVector apost_forward_bound(const OrderedVector& d_next, double lambda);

/// (λ / (1 - λ)) · d_prev
OrderedVector apost_backward_bound(const OrderedVector& d_prev, double lambda);

/// d(T x, T² x) ⪯ λ d(x, T x) on every consecutive pair of recorded steps,
/// starting at step `from`.
bool verify_step_contraction(std::span<const OrderedVector> step_dists, double lambda, std::size_t from = 0);

template <typename Scalar>
bool verify_step_contraction(const IterationTrace<Scalar>& trace, double lambda, std::size_t from = 0) {
    return verify_step_contraction(std::span<const OrderedVector>(trace.step_dists), lambda, from);
}

/**
 * @brief max_k ‖d_{k+1}‖ / ‖d_k‖ over the steps from `from` on.
 *
 * Steps with zero gauge as denominator are skipped. Needs at least two steps
 * and a nonzero first step, otherwise EstimateUndefined. A value >= 1 means
 * no contraction was observed.
 */
double estimate_lambda(std::span<const OrderedVector> step_dists, const GaugeNorm& g, std::size_t from = 0);

template <typename Scalar>
double estimate_lambda(const IterationTrace<Scalar>& trace, const GaugeNorm& g, std::size_t from = 0) {
    return estimate_lambda(std::span<const OrderedVector>(trace.step_dists), g, from);
}

template <typename Scalar>
bool domain_contains(const Problem<Scalar>& p, const Point<Scalar>& x) {
    return std::visit(
        [&](const auto& dom) -> bool {
            using D = std::decay_t<decltype(dom)>;
            if constexpr (std::is_same_v<D, WholeSpace>) return true;
            else if constexpr (std::is_same_v<D, Ball<Scalar>>) return ball_contains(dom, p.metric, x);
            else return dom(x);
        },
        p.domain);
}

/**
 * @brief Whether the closed ball around `center` with radius r lies in the
 * domain.
 *
 * Whole space: verified. Closed-ball domain: verified iff
 * d(center, c_D) + r ⪯ r_D. Predicate domains can only be conditional.
 */
template <typename Scalar>
DomainStatus check_domain_condition(const Problem<Scalar>& p, const OrderedVector& r, const Point<Scalar>& center) {
    return std::visit(
        [&](const auto& dom) -> DomainStatus {
            using D = std::decay_t<decltype(dom)>;
            if constexpr (std::is_same_v<D, WholeSpace>) {
                return DomainStatus::verified;
            } else if constexpr (std::is_same_v<D, Ball<Scalar>>) {
                if (!dom.closed()) return DomainStatus::conditional;
                const OrderedVector reach = p.metric.distance(center, dom.center()) + r;
                return leq(reach, dom.radius()) ? DomainStatus::verified : DomainStatus::conditional;
            } else {
                return DomainStatus::conditional;
            }
        },
        p.domain);
}

template <typename Scalar>
DomainStatus check_domain_condition(const Problem<Scalar>& p, const OrderedVector& r) {
    return check_domain_condition(p, r, p.x0);
}

/// d(ξ̂, T ξ̂)
template <typename Scalar>
OrderedVector residual_check(const Point<Scalar>& xi_hat, const Problem<Scalar>& p) {
    const Point<Scalar> image = p.map(xi_hat);
    return p.metric.distance(xi_hat, image);
}

/**
 * @brief Rate of convergence towards a known fixed point ξ.
 *
 * Checks d(x_{n+1}, ξ) ⪯ λ d(x_n, ξ) and d(x_n, ξ) ⪯ λ^n d(x_0, ξ) at every
 * recorded iterate, each right-hand side widened by `slack` per coordinate.
 * Uses the problem's λ (InputError when absent).
 */
template <typename Scalar>
bool rate_check(const IterationTrace<Scalar>& trace, const Point<Scalar>& xi, const Problem<Scalar>& p,
                double slack = 0.0) {
    if (!p.lambda) {
        throw InputError("rate_check: problem has no contraction factor");
    }
    const double lambda = *p.lambda;
    require_lambda(lambda);
    if (trace.iterates.empty()) return true;
    const Index n = p.metric.value_dim();
    const OrderedVector pad = OrderedVector::constant(n, slack);
    const OrderedVector e0 = p.metric.distance(trace.iterates.front(), xi);
    OrderedVector prev = e0;
    for (std::size_t k = 0; k < trace.iterates.size(); ++k) {
        const OrderedVector e = p.metric.distance(trace.iterates[k], xi);
        if (k > 0 && !leq(e, lambda * prev + pad)) return false;
        if (!leq(e, std::pow(lambda, static_cast<double>(k)) * e0 + pad)) return false;
        prev = e;
    }
    return true;
}

/**
 * @brief Assemble the certificate for iterates `from` … end of the trace.
 *
 * `residual` is d(x_N, T x_N) for the final iterate and supplies its forward
 * bound. Status: certified only for a given λ with a verified domain
 * condition; conditional for a given λ otherwise; heuristic for an estimate.
 */
template <typename Scalar>
Certificate build_certificate(const Problem<Scalar>& p, const IterationTrace<Scalar>& trace, std::size_t from,
                              double lambda, LambdaSource source, const OrderedVector& residual) {
    require_lambda(lambda);
    const std::size_t count = trace.iterates.size();
    if (from >= count) {
        throw InputError("build_certificate: start index past the end of the trace");
    }
    auto forward_step = [&](std::size_t k) -> const OrderedVector& {
        return k < trace.step_dists.size() ? trace.step_dists[k] : residual;
    };

    Certificate cert;
    cert.lambda_used = lambda;
    cert.lambda_source = source;
    cert.mode = p.mode;
    cert.first = from;
    cert.residual = residual;

    const OrderedVector& d01 = forward_step(from);
    cert.radius_r = apriori_bound(0, lambda, d01);
    for (std::size_t k = from; k < count; ++k) {
        cert.apriori.push_back(apriori_bound(k - from, lambda, d01));
        cert.apost_forward.push_back(apost_forward_bound(forward_step(k), lambda));
        if (k + 1 < count) {
            cert.apost_backward.push_back(apost_backward_bound(trace.step_dists[k], lambda));
        }
    }

    cert.domain = check_domain_condition(p, cert.radius_r, trace.iterates[from]);
    cert.step_contraction_observed =
        trace.step_dists.size() >= from + 2 && verify_step_contraction(trace, lambda, from);
    if (source == LambdaSource::estimated) {
        cert.status = CertificateStatus::heuristic;
    } else {
        cert.status = cert.domain == DomainStatus::verified ? CertificateStatus::certified
                                                             : CertificateStatus::conditional;
    }
    return cert;
}

namespace detail {

template <typename Scalar>
void validate_problem(const Problem<Scalar>& p) {
    if (!p.map) throw InputError("problem has no map");
    if (p.max_iter < 1) throw InputError("max_iter must be positive");
    if (p.lambda) require_lambda(*p.lambda);
    if (p.stop_c.size() != p.metric.value_dim() || p.gauge.dim() != p.metric.value_dim()) {
        throw InputError("stop_c, gauge and metric must share the value dimension");
    }
    if (!in_interior(p.stop_c)) throw InputError("stop_c must be strictly positive");
    require_finite_point(p.x0);
}

} // namespace detail

/**
 * @brief Run the Picard iteration of a problem.
 *
 * Halting: with a given λ, stop as soon as the backward bound
 * (λ / (1 - λ)) d(x_n, x_{n-1}) ≺ stop_c; without λ, as soon as
 * d(x_n, x_{n+1}) ≺ stop_c. The final iterate is ξ̂. Exceeding max_iter
 * yields converged = false and no certificate. Leaving the domain throws
 * DomainEscape.
 */
template <typename Scalar>
PicardResult<Scalar> run_picard(const Problem<Scalar>& p) {
    detail::validate_problem(p);

    PicardResult<Scalar> out;
    auto& tr = out.trace;
    if (!domain_contains(p, p.x0)) {
        throw InputError("starting point is outside the domain");
    }
    tr.iterates.push_back(p.x0);
    tr.in_domain.push_back(true);

    for (std::size_t k = 0; k < p.max_iter; ++k) {
        Point<Scalar> next = p.map(tr.iterates.back());
        if (next.size() != p.x0.size() || !next.allFinite()) {
            throw NumericError("map produced an invalid iterate at step " + std::to_string(k + 1));
        }
        OrderedVector step = p.metric.distance(tr.iterates.back(), next);
        tr.iterates.push_back(std::move(next));
        tr.step_dists.push_back(step);
        const bool inside = domain_contains(p, tr.iterates.back());
        tr.in_domain.push_back(inside);
        if (!inside) {
            throw DomainEscape<Scalar>(k + 1, std::move(out.trace));
        }
        const OrderedVector gauge_bound = p.lambda ? apost_backward_bound(step, *p.lambda) : step;
        if (lt(gauge_bound, p.stop_c)) {
            out.converged = true;
            break;
        }
    }

    out.residual = residual_check(tr.iterates.back(), p);
    if (!out.converged) {
        return out;
    }
    out.fixed_point = tr.iterates.back();

    if (p.lambda) {
        out.certificate = build_certificate(p, tr, 0, *p.lambda, LambdaSource::given, out.residual);
        return out;
    }
    std::vector<OrderedVector> steps = tr.step_dists;
    steps.push_back(out.residual);
    try {
        const double est = estimate_lambda(std::span<const OrderedVector>(steps), p.gauge);
        out.lambda_estimate = est;
        if (est <= kMaxLambda) {
            out.certificate = build_certificate(p, tr, 0, est, LambdaSource::estimated, out.residual);
        }
    } catch (const EstimateUndefined&) {
        // a trace without any nonzero step carries no information on λ
    }
    return out;
}

} // namespace conefix
