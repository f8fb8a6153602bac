#include "conefix/normality_demo.hpp"

#include <cmath>

#include "conefix/errors.hpp"

namespace conefix {

std::vector<NormalityRow> demo_normality(int max_n, int grid_points) {
    if (max_n < 1 || grid_points < 2) {
        throw InputError("demo_normality: need max_n >= 1 and at least two grid points");
    }
    std::vector<NormalityRow> rows;
    rows.reserve(static_cast<std::size_t>(max_n));
    for (int n = 1; n <= max_n; ++n) {
        NormalityRow row;
        row.n = n;
        row.sup_x = 1.0 / n;
        row.sup_dx = 1.0;
        row.norm_x = row.sup_x + row.sup_dx;
        row.norm_y = 1.0 / n;
        row.order_holds = true;
        for (int k = 0; k < grid_points; ++k) {
            const double t = static_cast<double>(k) / (grid_points - 1);
            const double x = std::pow(t, n) / n;
            const double y = 1.0 / n;
            row.order_holds = row.order_holds && 0.0 <= x && x <= y;
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace conefix
