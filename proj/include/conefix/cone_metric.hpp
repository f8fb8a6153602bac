#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "conefix/minkowski.hpp"
#include "conefix/solid_space.hpp"

/**
 * @file cone_metric.hpp
 *
 * Cone metrics d : X × X → R^n valued in the solid space, cone balls, the
 * scalarized metric ρ(x, y) = ‖d(x, y)‖ and finite checkers for the
 * convergence and Cauchy criteria used by the fixed-point engine.
 *
 * Points are dense Eigen column vectors templated on the scalar type; the
 * weighted cone norm accepts real or complex scalars with the usual modulus
 * as absolute value.
 */

namespace conefix {

template <typename Scalar>
using Point = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};
template <typename T>
inline constexpr bool is_complex_v = is_complex<T>::value;

enum class Field { real, complex };

/// d(x, y) = (α_1 |x_1 - y_1|, …, α_n |x_n - y_n|).
struct WeightedNorm {
    Eigen::VectorXd alpha;
    Field field = Field::real;
};

/// d(x, y) = a for x ≠ y, 0 otherwise; a ⪰ 0, a ≠ 0.
struct DiscreteMetric {
    OrderedVector a;
};

/// On the positive cone: d(x, y) = x + y for x ≠ y, 0 otherwise.
struct PlusMetric {
    Index dim = 0;
};

enum class MetricKind { weighted_norm, discrete, plus_metric };

class ConeMetric {
public:
    static ConeMetric weighted(Eigen::VectorXd alpha, Field field);
    static ConeMetric discrete(OrderedVector a);
    static ConeMetric plus(Index dim);

    MetricKind kind() const { return static_cast<MetricKind>(params_.index()); }

    /// Dimension of the value space Y = R^n.
    Index value_dim() const;

    const WeightedNorm* as_weighted() const { return std::get_if<WeightedNorm>(&params_); }
    const DiscreteMetric* as_discrete() const { return std::get_if<DiscreteMetric>(&params_); }

    template <typename Scalar>
    OrderedVector distance(const Point<Scalar>& x, const Point<Scalar>& y) const;

private:
    using Params = std::variant<WeightedNorm, DiscreteMetric, PlusMetric>;
    explicit ConeMetric(Params p) : params_(std::move(p)) {}

    Params params_;
};

namespace detail {

template <typename Scalar>
void require_finite_point(const Point<Scalar>& x) {
    if (!x.allFinite()) {
        throw InputError("point has a non-finite entry");
    }
}

} // namespace detail

template <typename Scalar>
OrderedVector ConeMetric::distance(const Point<Scalar>& x, const Point<Scalar>& y) const {
    if (x.size() != y.size()) {
        throw InputError("distance: points of different dimension");
    }
    detail::require_finite_point(x);
    detail::require_finite_point(y);

    return std::visit(
        [&](const auto& p) -> OrderedVector {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, WeightedNorm>) {
                if ((p.field == Field::complex) != is_complex_v<Scalar>) {
                    throw InputError("distance: scalar field of points does not match the metric");
                }
                if (x.size() != p.alpha.size()) {
                    throw InputError("distance: point dimension does not match the weights");
                }
                Eigen::VectorXd d = p.alpha.cwiseProduct((x - y).cwiseAbs());
                if (!d.allFinite()) {
                    throw NumericError("distance overflowed");
                }
                return OrderedVector(std::move(d));
            } else if constexpr (std::is_same_v<P, DiscreteMetric>) {
                return x == y ? OrderedVector::zero(p.a.size()) : p.a;
            } else {
                if constexpr (is_complex_v<Scalar>) {
                    throw InputError("distance: the plus metric is defined on real points only");
                } else {
                    if (x.size() != p.dim) {
                        throw InputError("distance: point dimension does not match the plus metric");
                    }
                    if (!in_cone(x) || !in_cone(y)) {
                        throw InputError("distance: plus-metric points must lie in the positive cone");
                    }
                    if (x == y) return OrderedVector::zero(p.dim);
                    Eigen::VectorXd s = (x + y).template cast<double>();
                    if (!s.allFinite()) throw NumericError("distance overflowed");
                    return OrderedVector(std::move(s));
                }
            }
        },
        params_);
}

template <typename Scalar>
OrderedVector distance(const ConeMetric& inst, const Point<Scalar>& x, const Point<Scalar>& y) {
    return inst.distance(x, y);
}

/// ρ(x, y) = ‖d(x, y)‖, an ordinary metric generating the same topology.
template <typename Scalar>
double scalarize(const ConeMetric& inst, const GaugeNorm& g, const Point<Scalar>& x, const Point<Scalar>& y) {
    return g(inst.distance(x, y));
}

/// Closed ball {x : d(x, c) ⪯ r} or open ball {x : d(x, c) ≺ r}.
template <typename Scalar>
class Ball {
public:
    Ball(Point<Scalar> center, OrderedVector radius, bool closed)
        : center_(std::move(center)), radius_(std::move(radius)), closed_(closed) {
        detail::require_finite_point(center_);
        if (closed_ ? !in_cone(radius_) : !in_interior(radius_)) {
            throw InputError(closed_ ? "closed ball radius must lie in the cone"
                                     : "open ball radius must be strictly positive");
        }
    }

    const Point<Scalar>& center() const { return center_; }
    const OrderedVector& radius() const { return radius_; }
    bool closed() const { return closed_; }

private:
    Point<Scalar> center_;
    OrderedVector radius_;
    bool closed_;
};

template <typename Scalar>
bool ball_contains(const Ball<Scalar>& ball, const ConeMetric& inst, const Point<Scalar>& x) {
    const OrderedVector d = inst.distance(x, ball.center());
    return ball.closed() ? leq(d, ball.radius()) : lt(d, ball.radius());
}

/// One recorded pair distance d(x_n, x_m) with m >= n.
struct PairDistance {
    std::size_t n = 0;
    std::size_t m = 0;
    OrderedVector d;
};

/// True iff d(x_n, x_m) ⪯ b_n for every recorded pair.
bool cauchy_bound_check(std::span<const PairDistance> distances, std::span<const OrderedVector> bounds);

/**
 * @brief Termwise check of d(x_n, x) ⪯ b_n + α d(y_n, y) + β d(z_n, z).
 *
 * dyn (dzn) may be empty when alpha (beta) is zero.
 */
bool domination_check(std::span<const OrderedVector> dxn, std::span<const OrderedVector> bn, double alpha,
                      std::span<const OrderedVector> dyn, double beta, std::span<const OrderedVector> dzn);

/**
 * @brief Scalar image of a cone-level linear inequality.
 *
 * Premise (checked, PreconditionError if false): 0 ⪯ d0 ⪯ c0 + Σ c_i d_i
 * with c_i >= 0 and d_i ⪰ 0. Returns whether
 * ‖d0‖ <= ‖c0‖ + Σ c_i ‖d_i‖ + tol.
 */
bool inequality_transfer_check(const OrderedVector& coeff0, std::span<const double> coeffs,
                               std::span<const OrderedVector> dpairs, const OrderedVector& d0, const GaugeNorm& g,
                               double tol = 1e-12);

/**
 * @brief Finite probe of the nested closed ball property.
 *
 * Nesting of consecutive closed balls is verified through the sufficient
 * condition d(c_{k+1}, c_k) + r_{k+1} ⪯ r_k; a violation throws
 * PreconditionError. When the gauge of the radii decreases to below
 * `tol`, the last center is returned after checking it lies in every ball.
 * Otherwise no point is certified and the result is empty.
 */
template <typename Scalar>
std::optional<Point<Scalar>> nested_ball_probe(std::span<const Point<Scalar>> centers,
                                               std::span<const OrderedVector> radii, const ConeMetric& inst,
                                               const GaugeNorm& g, double tol = 1e-9) {
    if (centers.size() != radii.size() || centers.empty()) {
        throw InputError("nested_ball_probe: need equally many centers and radii, at least one");
    }
    for (std::size_t k = 0; k < radii.size(); ++k) {
        if (!in_cone(radii[k])) {
            throw InputError("nested_ball_probe: radius " + std::to_string(k) + " is not in the cone");
        }
    }
    for (std::size_t k = 0; k + 1 < centers.size(); ++k) {
        const OrderedVector reach = inst.distance(centers[k + 1], centers[k]) + radii[k + 1];
        if (!leq(reach, radii[k])) {
            throw PreconditionError("nested_ball_probe: ball " + std::to_string(k + 1) +
                                    " is not nested in ball " + std::to_string(k));
        }
        if (g(radii[k + 1]) > g(radii[k])) {
            throw PreconditionError("nested_ball_probe: radii gauge increases at " + std::to_string(k + 1));
        }
    }
    if (!(g(radii.back()) < tol)) {
        return std::nullopt;
    }
    const Point<Scalar>& candidate = centers.back();
    for (std::size_t k = 0; k < centers.size(); ++k) {
        if (!ball_contains(Ball<Scalar>(centers[k], radii[k], true), inst, candidate)) {
            return std::nullopt;
        }
    }
    return candidate;
}

} // namespace conefix
