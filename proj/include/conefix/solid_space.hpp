#pragma once

#include <initializer_list>
#include <span>
#include <string>

#include <Eigen/Dense>

#include "conefix/errors.hpp"

/**
 * @file solid_space.hpp
 *
 * The solid vector space R^n with the coordinatewise vector ordering and
 * strict vector ordering. The positive cone is {x : x_i >= 0} and its
 * interior is {x : x_i > 0}; both orderings are defined through membership
 * of the difference vector, so the order/cone correspondence holds by
 * construction.
 *
 * Comparisons are exact. No epsilon enters any ordering predicate.
 */

namespace conefix {

using Index = Eigen::Index;

/**
 * @brief An element of R^n with finite coordinates.
 *
 * Construction rejects NaN and infinities, so every predicate below is total
 * on valid values. Arithmetic re-validates its result and throws
 * NumericError on overflow.
 */
class OrderedVector {
public:
    /// Empty placeholder; not a valid element of any space.
    OrderedVector() = default;

    explicit OrderedVector(Eigen::VectorXd coords);
    OrderedVector(std::initializer_list<double> coords);

    static OrderedVector zero(Index n);
    static OrderedVector constant(Index n, double value);

    Index size() const { return coords_.size(); }
    bool empty() const { return coords_.size() == 0; }
    double operator[](Index i) const { return coords_[i]; }
    const Eigen::VectorXd& coords() const { return coords_; }

    friend bool operator==(const OrderedVector& a, const OrderedVector& b) {
        return a.coords_.size() == b.coords_.size() && a.coords_ == b.coords_;
    }

    friend OrderedVector operator+(const OrderedVector& a, const OrderedVector& b);
    friend OrderedVector operator-(const OrderedVector& a, const OrderedVector& b);
    friend OrderedVector operator-(const OrderedVector& a);
    friend OrderedVector operator*(double s, const OrderedVector& a);
    friend OrderedVector operator*(const OrderedVector& a, double s) { return s * a; }
    friend OrderedVector operator/(const OrderedVector& a, double s);

    std::string to_string() const;

private:
    Eigen::VectorXd coords_;
};

/// Throws InputError unless both vectors have the same dimension.
void require_same_dim(const OrderedVector& x, const OrderedVector& y, const char* what);

/**
 * @brief Dimension n together with a strictly positive base vector b.
 *
 * b fixes the order interval [-b, b] whose Minkowski functional is the
 * gauge norm of the space.
 */
class SpaceSpec {
public:
    explicit SpaceSpec(OrderedVector base);

    Index dim() const { return base_.size(); }
    const OrderedVector& base() const { return base_; }

    static SpaceSpec unit(Index n) { return SpaceSpec(OrderedVector::constant(n, 1.0)); }

private:
    OrderedVector base_;
};

// Cone predicates accept any Eigen column expression so that differences can
// be tested without materialising (and re-validating) a temporary.

template <typename Derived>
bool in_cone(const Eigen::MatrixBase<Derived>& x) {
    return (x.array() >= 0.0).all();
}

template <typename Derived>
bool in_interior(const Eigen::MatrixBase<Derived>& x) {
    return (x.array() > 0.0).all();
}

inline bool in_cone(const OrderedVector& x) { return in_cone(x.coords()); }
inline bool in_interior(const OrderedVector& x) { return in_interior(x.coords()); }

/// x ⪯ y, defined as y - x ∈ K.
bool leq(const OrderedVector& x, const OrderedVector& y);

/// x ≺ y, defined as y - x ∈ K°.
bool lt(const OrderedVector& x, const OrderedVector& y);

/**
 * @brief Scale witness λ > 0 with λ·b ≺ x for every x in A.
 *
 * Uses λ = ½ · min_{x, i} x_i / b_i. Every member of A must be strictly
 * positive (PreconditionError otherwise). The witness is re-checked with lt
 * before it is returned.
 */
double minorant_scale(std::span<const OrderedVector> points, const SpaceSpec& spec);

/**
 * @brief Scale witness λ > 0 with -λ·b ≺ x ≺ λ·b for every x in A.
 *
 * Uses λ = 1 + max_{x, i} |x_i| / b_i, re-checked with lt before returning.
 */
double bounding_scale(std::span<const OrderedVector> points, const SpaceSpec& spec);

} // namespace conefix
