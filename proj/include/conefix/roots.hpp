#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "conefix/picard.hpp"

/**
 * @file roots.hpp
 *
 * Simultaneous polynomial root-finding with the Weierstrass (Durand–Kerner)
 * operator, run through the Picard engine on C^n with the weighted cone
 * norm of the difference vector, so every root approximation gets its own
 * error bound.
 */

namespace conefix {

using Complex = std::complex<double>;
using RootVector = Eigen::VectorXcd;

/// Maximum degree accepted by the command-line front end.
inline constexpr int kMaxCliDegree = 12;

class Polynomial {
public:
    /// Coefficients with the constant term first; trailing zeros are trimmed.
    explicit Polynomial(std::vector<Complex> coefficients);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coefficients() const { return coeffs_; }

    /// Horner evaluation.
    Complex operator()(Complex z) const;

    /// Divided by the leading coefficient.
    Polynomial monic() const;

    /// Σ |c_k|
    double coefficient_sum() const;

private:
    std::vector<Complex> coeffs_;
};

/**
 * @brief z'_i = z_i - p(z_i) / ∏_{j≠i} (z_i - z_j), p made monic first.
 *
 * The factors of each product are multiplied in a canonical order, so the
 * step commutes exactly with permutations of z. Coincident entries throw
 * DivisionHazard; non-finite results throw NumericError.
 */
RootVector weierstrass_step(const Polynomial& p, const RootVector& z);

/// Equispaced points on the circle of radius 1 + max |c_k| of the monic
/// polynomial.
RootVector default_start(const Polynomial& p);

struct ComparisonRow {
    std::size_t iter = 0;
    /// d(x_n, x_{n+1}) / (1 - λ), one entry per component.
    OrderedVector componentwise;
    /// ‖d(x_n, x_{n+1})‖ / (1 - λ) · b, the scalar bound in component units.
    OrderedVector scalar_broadcast;
    bool exceeds = false;
};

struct ComparisonReport {
    double lambda = 0.0;
    std::vector<ComparisonRow> rows;

    bool any_exceeds() const;
    /// Some row has a component strictly below its broadcast scalar bound.
    bool strictly_tighter_somewhere() const;
};

/**
 * @brief Componentwise vs scalar a posteriori bounds on the same trace.
 *
 * One row per recorded step from `from` on; both pipelines use the same λ.
 */
template <typename Scalar>
ComparisonReport compare_bounds(const IterationTrace<Scalar>& trace, const GaugeNorm& g_scalar, double lambda,
                                std::size_t from = 0) {
    require_lambda(lambda);
    ComparisonReport report;
    report.lambda = lambda;
    for (std::size_t k = from; k < trace.step_dists.size(); ++k) {
        ComparisonRow row;
        row.iter = k;
        row.componentwise = apost_forward_bound(trace.step_dists[k], lambda);
        row.scalar_broadcast = apost_forward_bound(g_scalar(trace.step_dists[k]) * g_scalar.base(), lambda);
        row.exceeds = !leq(row.componentwise, row.scalar_broadcast);
        report.rows.push_back(std::move(row));
    }
    return report;
}

struct RootsOptions {
    std::optional<RootVector> z0;
    std::optional<Eigen::VectorXd> weights;
    std::optional<OrderedVector> stop_c;
    std::size_t max_iter = 500;
    std::optional<double> lambda;
};

struct RootsResult {
    RootVector roots;
    bool converged = false;
    PicardResult<Complex> run;
    /// First iterate of the tail on which the certificate and report are built.
    std::size_t tail_start = 0;
    std::optional<Certificate> certificate;
    ComparisonReport comparison;
};

/// Start of the longest suffix of `steps` on which every gauge ratio
/// ‖d_{k+1}‖ / ‖d_k‖ is below one.
std::size_t contraction_tail_start(std::span<const OrderedVector> steps, const GaugeNorm& g);

/**
 * @brief Find all roots of p simultaneously.
 *
 * Without a supplied λ the engine runs uncertified; λ is then estimated on
 * the contracting tail of the trace and the certificate (status heuristic)
 * covers that tail only.
 */
RootsResult solve_roots(const Polynomial& p, const RootsOptions& opts = {});

/// Problem description used by solve_roots, exposed for the CLI and tests.
Problem<Complex> weierstrass_problem(const Polynomial& p, const RootsOptions& opts);

} // namespace conefix
