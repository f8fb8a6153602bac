#pragma once

#include "conefix/solid_space.hpp"

namespace conefix {

/**
 * @brief Minkowski functional of the order interval [-b, b].
 *
 *     ‖x‖ = min{λ >= 0 : -λb ⪯ x ⪯ λb} = max_i |x_i| / b_i
 *
 * This is a monotone norm on R^n: 0 ⪯ x ⪯ y implies ‖x‖ <= ‖y‖.
 */
class GaugeNorm {
public:
    explicit GaugeNorm(SpaceSpec spec) : spec_(std::move(spec)) {}

    const SpaceSpec& spec() const { return spec_; }
    const OrderedVector& base() const { return spec_.base(); }
    Index dim() const { return spec_.dim(); }

    template <typename Derived>
    double operator()(const Eigen::MatrixBase<Derived>& x) const {
        if (x.size() != dim()) {
            throw InputError("gauge norm: dimension mismatch");
        }
        return (x.array().abs() / base().coords().array()).maxCoeff();
    }

    double operator()(const OrderedVector& x) const { return (*this)(x.coords()); }

private:
    SpaceSpec spec_;
};

inline double mink_norm(const OrderedVector& x, const GaugeNorm& g) { return g(x); }

/// -eps·b ≺ x ≺ eps·b, evaluated with the strict ordering. Agrees with
/// mink_norm(x) < eps.
bool strict_ball_test(const OrderedVector& x, double eps, const GaugeNorm& g);

} // namespace conefix
