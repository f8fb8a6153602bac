#include "conefix/cone_metric.hpp"

#include <cmath>

namespace conefix {

ConeMetric ConeMetric::weighted(Eigen::VectorXd alpha, Field field) {
    if (alpha.size() < 1) {
        throw InputError("weighted cone norm needs at least one weight");
    }
    if (!alpha.allFinite() || !(alpha.array() > 0.0).all()) {
        throw InputError("weighted cone norm weights must be positive and finite");
    }
    return ConeMetric(WeightedNorm{std::move(alpha), field});
}

ConeMetric ConeMetric::discrete(OrderedVector a) {
    if (a.empty() || !in_cone(a) || a == OrderedVector::zero(a.size())) {
        throw InputError("discrete cone metric needs a ⪰ 0 with a ≠ 0");
    }
    return ConeMetric(DiscreteMetric{std::move(a)});
}

ConeMetric ConeMetric::plus(Index dim) {
    if (dim < 1) {
        throw InputError("plus metric needs dimension >= 1");
    }
    return ConeMetric(PlusMetric{dim});
}

Index ConeMetric::value_dim() const {
    return std::visit(
        [](const auto& p) -> Index {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, WeightedNorm>) return p.alpha.size();
            else if constexpr (std::is_same_v<P, DiscreteMetric>) return p.a.size();
            else return p.dim;
        },
        params_);
}

bool cauchy_bound_check(std::span<const PairDistance> distances, std::span<const OrderedVector> bounds) {
    for (const auto& pd : distances) {
        if (pd.m < pd.n) {
            throw InputError("cauchy_bound_check: pair (" + std::to_string(pd.n) + ", " + std::to_string(pd.m) +
                             ") has m < n");
        }
        if (pd.n >= bounds.size()) {
            throw InputError("cauchy_bound_check: no bound b_" + std::to_string(pd.n));
        }
    }
    for (const auto& pd : distances) {
        if (!leq(pd.d, bounds[pd.n])) return false;
    }
    return true;
}

bool domination_check(std::span<const OrderedVector> dxn, std::span<const OrderedVector> bn, double alpha,
                      std::span<const OrderedVector> dyn, double beta, std::span<const OrderedVector> dzn) {
    if (!(alpha >= 0.0) || !(beta >= 0.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
        throw InputError("domination_check: alpha and beta must be nonnegative and finite");
    }
    const std::size_t len = dxn.size();
    const bool use_y = !(alpha == 0.0 && dyn.empty());
    const bool use_z = !(beta == 0.0 && dzn.empty());
    if (bn.size() != len || (use_y && dyn.size() != len) || (use_z && dzn.size() != len)) {
        throw InputError("domination_check: sequences have different lengths");
    }
    for (std::size_t k = 0; k < len; ++k) {
        OrderedVector rhs = bn[k];
        if (use_y) rhs = rhs + alpha * dyn[k];
        if (use_z) rhs = rhs + beta * dzn[k];
        if (!leq(dxn[k], rhs)) return false;
    }
    return true;
}

bool inequality_transfer_check(const OrderedVector& coeff0, std::span<const double> coeffs,
                               std::span<const OrderedVector> dpairs, const OrderedVector& d0, const GaugeNorm& g,
                               double tol) {
    if (coeffs.size() != dpairs.size()) {
        throw InputError("inequality_transfer_check: coefficient/distance count mismatch");
    }
    OrderedVector rhs = coeff0;
    double scalar_rhs = g(coeff0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (!(coeffs[i] >= 0.0) || !std::isfinite(coeffs[i])) {
            throw InputError("inequality_transfer_check: coefficients must be nonnegative");
        }
        if (!in_cone(dpairs[i])) {
            throw PreconditionError("inequality_transfer_check: distance " + std::to_string(i) + " not in the cone");
        }
        rhs = rhs + coeffs[i] * dpairs[i];
        scalar_rhs += coeffs[i] * g(dpairs[i]);
    }
    if (!in_cone(d0) || !leq(d0, rhs)) {
        throw PreconditionError("inequality_transfer_check: cone-level premise does not hold");
    }
    return g(d0) <= scalar_rhs + tol;
}

} // namespace conefix
