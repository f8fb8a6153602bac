#include "conefix/solid_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace conefix {

namespace {

void require_finite(const Eigen::VectorXd& v) {
    if (!v.allFinite()) {
        throw NumericError("vector has a non-finite coordinate");
    }
}

} // namespace

OrderedVector::OrderedVector(Eigen::VectorXd coords) : coords_(std::move(coords)) {
    if (coords_.size() < 1) {
        throw InputError("ordered vector must have dimension >= 1");
    }
    if (!coords_.allFinite()) {
        throw InputError("ordered vector has a non-finite coordinate");
    }
}

OrderedVector::OrderedVector(std::initializer_list<double> coords)
    : OrderedVector(Eigen::Map<const Eigen::VectorXd>(coords.begin(), static_cast<Index>(coords.size()))) {}

OrderedVector OrderedVector::zero(Index n) { return OrderedVector(Eigen::VectorXd::Zero(n)); }

OrderedVector OrderedVector::constant(Index n, double value) {
    return OrderedVector(Eigen::VectorXd::Constant(n, value));
}

OrderedVector operator+(const OrderedVector& a, const OrderedVector& b) {
    require_same_dim(a, b, "addition");
    OrderedVector out;
    out.coords_ = a.coords_ + b.coords_;
    require_finite(out.coords_);
    return out;
}

OrderedVector operator-(const OrderedVector& a, const OrderedVector& b) {
    require_same_dim(a, b, "subtraction");
    OrderedVector out;
    out.coords_ = a.coords_ - b.coords_;
    require_finite(out.coords_);
    return out;
}

OrderedVector operator-(const OrderedVector& a) {
    OrderedVector out;
    out.coords_ = -a.coords_;
    return out;
}

OrderedVector operator*(double s, const OrderedVector& a) {
    if (!std::isfinite(s)) {
        throw InputError("scalar factor must be finite");
    }
    OrderedVector out;
    out.coords_ = s * a.coords_;
    require_finite(out.coords_);
    return out;
}

OrderedVector operator/(const OrderedVector& a, double s) {
    if (!std::isfinite(s) || s == 0.0) {
        throw InputError("divisor must be finite and nonzero");
    }
    OrderedVector out;
    out.coords_ = a.coords_ / s;
    require_finite(out.coords_);
    return out;
}

std::string OrderedVector::to_string() const {
    std::ostringstream os;
    os.precision(17);
    os << '(';
    for (Index i = 0; i < coords_.size(); ++i) {
        if (i != 0) os << ", ";
        os << coords_[i];
    }
    os << ')';
    return os.str();
}

void require_same_dim(const OrderedVector& x, const OrderedVector& y, const char* what) {
    if (x.size() != y.size()) {
        throw InputError(std::string(what) + ": dimension mismatch (" + std::to_string(x.size()) + " vs " +
                         std::to_string(y.size()) + ")");
    }
}

SpaceSpec::SpaceSpec(OrderedVector base) : base_(std::move(base)) {
    if (base_.empty()) {
        throw InputError("space base vector must have dimension >= 1");
    }
    if (!in_interior(base_)) {
        throw InputError("space base vector must be strictly positive");
    }
}

bool leq(const OrderedVector& x, const OrderedVector& y) {
    require_same_dim(x, y, "leq");
    return in_cone(y.coords() - x.coords());
}

bool lt(const OrderedVector& x, const OrderedVector& y) {
    require_same_dim(x, y, "lt");
    return in_interior(y.coords() - x.coords());
}

double minorant_scale(std::span<const OrderedVector> points, const SpaceSpec& spec) {
    if (points.empty()) {
        throw InputError("minorant_scale: empty set");
    }
    const auto& b = spec.base();
    double ratio = std::numeric_limits<double>::infinity();
    for (const auto& x : points) {
        require_same_dim(x, b, "minorant_scale");
        if (!in_interior(x)) {
            throw PreconditionError("minorant_scale: " + x.to_string() + " is not strictly positive");
        }
        ratio = std::min(ratio, (x.coords().array() / b.coords().array()).minCoeff());
    }
    const double lambda = 0.5 * ratio;
    if (!(lambda > 0.0)) {
        throw NumericError("minorant_scale: witness underflowed to zero");
    }
    const OrderedVector floor = lambda * b;
    for (const auto& x : points) {
        if (!lt(floor, x)) {
            throw NumericError("minorant_scale: witness failed verification at " + x.to_string());
        }
    }
    return lambda;
}

double bounding_scale(std::span<const OrderedVector> points, const SpaceSpec& spec) {
    if (points.empty()) {
        throw InputError("bounding_scale: empty set");
    }
    const auto& b = spec.base();
    double ratio = 0.0;
    for (const auto& x : points) {
        require_same_dim(x, b, "bounding_scale");
        ratio = std::max(ratio, (x.coords().array().abs() / b.coords().array()).maxCoeff());
    }
    const double lambda = 1.0 + ratio;
    if (!std::isfinite(lambda)) {
        throw NumericError("bounding_scale: witness overflowed");
    }
    const OrderedVector upper = lambda * b;
    const OrderedVector lower = -upper;
    for (const auto& x : points) {
        if (!lt(lower, x) || !lt(x, upper)) {
            throw NumericError("bounding_scale: witness failed verification at " + x.to_string());
        }
    }
    return lambda;
}

} // namespace conefix
