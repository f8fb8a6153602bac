#pragma once

#include <vector>

/**
 * @file normality_demo.hpp
 *
 * C¹[0,1] with the pointwise ordering is solid but not normal. With
 * x_n(t) = t^n / n and y_n(t) = 1 / n we have 0 ⪯ x_n ⪯ y_n and
 * ‖y_n‖ → 0, while ‖x_n‖ = sup|x_n| + sup|x_n'| = 1/n + 1 stays away from
 * zero. The table is scripted; C¹ functions are not first-class elements.
 */

namespace conefix {

struct NormalityRow {
    int n = 0;
    double sup_x = 0.0;       ///< sup |x_n| = 1/n, attained at t = 1
    double sup_dx = 0.0;      ///< sup |x_n'| = sup t^{n-1} = 1
    double norm_x = 0.0;      ///< ‖x_n‖_{C¹}
    double norm_y = 0.0;      ///< ‖y_n‖_{C¹} = 1/n
    bool order_holds = false; ///< 0 <= x_n(t) <= y_n(t) on the grid
};

/// Rows n = 1 … max_n; the order column is checked on `grid_points`
/// equispaced points of [0, 1].
std::vector<NormalityRow> demo_normality(int max_n = 50, int grid_points = 1001);

} // namespace conefix
