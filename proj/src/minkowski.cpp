#include "conefix/minkowski.hpp"

#include <cmath>

namespace conefix {

bool strict_ball_test(const OrderedVector& x, double eps, const GaugeNorm& g) {
    if (!(eps > 0.0) || !std::isfinite(eps)) {
        throw InputError("strict_ball_test: eps must be a positive finite number");
    }
    require_same_dim(x, g.base(), "strict_ball_test");
    const OrderedVector upper = eps * g.base();
    return lt(-upper, x) && lt(x, upper);
}

} // namespace conefix
