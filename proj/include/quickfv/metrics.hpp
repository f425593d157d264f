/// @file metrics.hpp
/// @brief L1 truncation/discretization error norms and observed orders.
#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "quickfv/core.hpp"
#include "quickfv/residual.hpp"

namespace quickfv {

struct ErrorReport {
    int n_cells = 0;
    double h = 0.0;
    std::optional<double> te_point;
    std::optional<double> te_cellavg;
    std::optional<double> de_point;
    std::optional<double> de_cellavg;
};

struct OrderRow {
    double h_coarse = 0.0;
    double h_fine = 0.0;
    double error_coarse = 0.0;
    double error_fine = 0.0;
    double observed_order = 0.0;
};

/// One convergence series (a polyline in the log-log plots).
struct OrderTable {
    std::string label;
    std::vector<double> h;
    std::vector<double> error;
    std::vector<OrderRow> rows;
};

/// Richardson slope between two grids. Non-positive errors have no order;
/// returns NaN as the undefined-order sentinel.
inline double observed_order(double e_coarse, double e_fine, double h_coarse, double h_fine) {
    if (!(e_coarse > 0.0) || !(e_fine > 0.0) || !(h_coarse > 0.0) || !(h_fine > 0.0) ||
        h_coarse == h_fine)
        return std::numeric_limits<double>::quiet_NaN();
    return std::log(e_coarse / e_fine) / std::log(h_coarse / h_fine);
}

/// Least-squares slope of log(error) against log(h).
inline double least_squares_order(const std::vector<double>& h, const std::vector<double>& e) {
    const size_t n = h.size();
    if (n < 2 || e.size() != n) return std::numeric_limits<double>::quiet_NaN();
    double sx = 0.0, sy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        if (!(h[i] > 0.0) || !(e[i] > 0.0)) return std::numeric_limits<double>::quiet_NaN();
        sx += std::log(h[i]);
        sy += std::log(e[i]);
    }
    const double mx = sx / n, my = sy / n;
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double dx = std::log(h[i]) - mx;
        num += dx * (std::log(e[i]) - my);
        den += dx * dx;
    }
    return num / den;
}

inline OrderTable make_order_table(std::string label, std::vector<double> h,
                                   std::vector<double> error) {
    OrderTable t;
    t.label = std::move(label);
    t.h = std::move(h);
    t.error = std::move(error);
    for (size_t k = 1; k < t.h.size(); ++k)
        t.rows.push_back(OrderRow{t.h[k - 1], t.h[k], t.error[k - 1], t.error[k],
                                  observed_order(t.error[k - 1], t.error[k], t.h[k - 1], t.h[k])});
    return t;
}

/// L1 of the residual with the exact solution substituted: once with point
/// values (te_point) and once with exact cell averages (te_cellavg).
inline std::pair<double, double> truncation_error_norms(const Problem& problem,
                                                        const SchemeConfig& config,
                                                        const Grid& grid) {
    const double h = grid.h();
    State point = sample_cell_centers(grid, problem.exact_point);
    State cellavg(grid);
    for (int i = 1; i <= grid.n_cells(); ++i)
        cellavg.u(i) = problem.exact_cell_avg(grid.cell_center(i), h);

    const auto norm = [&](const State& s) {
        return interior_l1(assemble_residual(s, problem, config), grid);
    };
    return {norm(point), norm(cellavg)};
}

/// L1 solution errors against the exact point values and against the exact
/// cell averages (the numerical solution itself is never converted). Padded
/// grids average over the interior; periodic grids over all cells.
inline std::pair<double, double> discretization_error_norms(const State& solution,
                                                            const Problem& problem,
                                                            bool interior_only = true) {
    const Grid& g = solution.grid;
    const double h = g.h();
    const int lo = interior_only ? g.interior_begin() : 1;
    const int hi = interior_only ? g.interior_end() : g.n_cells();
    double ep = 0.0, ec = 0.0;
    for (int i = lo; i <= hi; ++i) {
        const double x = g.cell_center(i);
        ep += std::abs(solution.u(i) - problem.exact_point(x));
        ec += std::abs(solution.u(i) - problem.exact_cell_avg(x, h));
    }
    const double count = hi - lo + 1;
    return {ep / count, ec / count};
}

}  // namespace quickfv
