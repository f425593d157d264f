#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "quickfv/metrics.hpp"
#include "quickfv/problems.hpp"
#include "quickfv/time_march.hpp"

using namespace quickfv;
using Catch::Matchers::WithinAbs;

namespace {

// independent 5-point Gauss-Legendre cell average (distinct from the library's
// internal rule: nodes/weights written out from the closed forms)
double gauss5_cell_average(const std::function<double(double)>& f, double x, double h) {
    const double n1 = std::sqrt(5.0 - 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
    const double n2 = std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
    const double w0 = 128.0 / 225.0;
    const double w1 = (322.0 + 13.0 * std::sqrt(70.0)) / 900.0;
    const double w2 = (322.0 - 13.0 * std::sqrt(70.0)) / 900.0;
    const double nodes[5] = {0.0, n1, -n1, n2, -n2};
    const double weights[5] = {w0, w1, w1, w2, w2};
    double acc = 0.0;
    for (int k = 0; k < 5; ++k) acc += weights[k] * f(x + 0.5 * h * nodes[k]);
    return 0.5 * acc;
}

}  // namespace

TEST_CASE("closed-form cell averages match quadrature", "[problems]") {
    const Grid g = Grid::dirichlet_padded(31);
    for (const Problem& p : {steady_burgers(), steady_viscous_burgers()}) {
        for (int i = 1; i <= 31; ++i) {
            const double x = g.cell_center(i), h = g.h();
            CHECK_THAT(p.forcing_cell_avg(x, h),
                       WithinAbs(gauss5_cell_average(p.forcing_point, x, h), 1e-12));
            CHECK_THAT(p.exact_cell_avg(x, h),
                       WithinAbs(gauss5_cell_average(p.exact_point, x, h), 1e-12));
        }
    }
    const Problem lin = unsteady_linear();
    const Grid pg = Grid::periodic(32);
    for (int i = 1; i <= 32; ++i) {
        const double x = pg.cell_center(i), h = pg.h();
        CHECK_THAT(lin.exact_cell_avg(x, h),
                   WithinAbs(gauss5_cell_average(lin.exact_point, x, h), 1e-12));
    }
}

TEST_CASE("flux derivatives match finite differences", "[problems]") {
    const double eps = 1e-6;
    for (const FluxFunction& f : {burgers_flux(), linear_flux(0.75), linear_flux(-2.0)}) {
        for (int k = -10; k <= 10; ++k) {
            const double u = 0.37 * k;
            const double fd = (f.f(u + eps) - f.f(u - eps)) / (2.0 * eps);
            CHECK_THAT(f.df(u), WithinAbs(fd, 1e-8));
        }
    }
}

TEST_CASE("steady exact solutions satisfy their equations pointwise", "[problems]") {
    const Problem conv = steady_burgers();
    const Problem visc = steady_viscous_burgers();
    CHECK(conv.exact_point(0.0) == 0.0);
    for (int k = 0; k < 1000; ++k) {
        const double x = (k + 0.5) / 1000.0;
        const double u = std::sin(2.0 * x);
        const double ux = 2.0 * std::cos(2.0 * x);
        const double uxx = -4.0 * std::sin(2.0 * x);
        // f_x = u u_x for f = u^2/2
        CHECK_THAT(u * ux - conv.forcing_point(x), WithinAbs(0.0, 1e-12));
        CHECK_THAT(u * ux - visc.nu * uxx - visc.forcing_point(x), WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("viscous forcing reduces to the inviscid forcing as nu drops", "[problems]") {
    const Problem conv = steady_burgers();
    const Problem visc = steady_viscous_burgers();
    for (int k = 0; k < 100; ++k) {
        const double x = (k + 0.5) / 100.0;
        CHECK_THAT(visc.forcing_point(x) - conv.forcing_point(x),
                   WithinAbs(4.0 * visc.nu * std::sin(2.0 * x), 1e-13));
    }
}

TEST_CASE("cell average deviates from the point value at second order", "[problems]") {
    // exact_cell_avg - u = (h^2/24) u_xx + O(h^4) with u_xx = -4 sin(2x)
    const Problem p = steady_burgers();
    const double x = 0.3;
    double prev_residual = 0.0;
    for (int k = 0; k < 2; ++k) {
        const double h = (k == 0) ? 0.02 : 0.01;
        const double lead = -(h * h / 6.0) * std::sin(2.0 * x);
        const double residual = (p.exact_cell_avg(x, h) - p.exact_point(x)) - lead;
        if (k == 1) {
            // the remainder is O(h^4): halving h shrinks it about 16x
            const double ratio = prev_residual / residual;
            CHECK(ratio > 12.0);
            CHECK(ratio < 20.0);
        }
        prev_residual = residual;
    }
    // and the leading deviation itself shows slope 2
    const double d1 = std::abs(p.exact_cell_avg(x, 0.02) - p.exact_point(x));
    const double d2 = std::abs(p.exact_cell_avg(x, 0.01) - p.exact_point(x));
    CHECK_THAT(observed_order(d1, d2, 0.02, 0.01), WithinAbs(2.0, 0.05));
}

TEST_CASE("characteristic solution basics", "[problems]") {
    for (int k = 0; k <= 16; ++k) {
        const double x = k / 16.0;
        CHECK_THAT(burgers_characteristic_solution(x, 0.0),
                   WithinAbs(std::sin(2.0 * M_PI * x), 1e-13));
    }
    // stationary zeros of the initial profile stay zero
    CHECK_THAT(burgers_characteristic_solution(0.0, 0.105), WithinAbs(0.0, 1e-13));
    CHECK_THAT(burgers_characteristic_solution(0.5, 0.105), WithinAbs(0.0, 1e-13));

    const Problem p = unsteady_burgers();
    CHECK(p.final_time == 0.105);
    CHECK_THAT(p.initial(0.25), WithinAbs(1.0, 1e-15));
}

TEST_CASE("unsteady linear reference translates the initial profile", "[problems]") {
    const Problem p = unsteady_linear();
    for (int k = 0; k < 64; ++k) {
        const double x = (k + 0.5) / 64.0;
        double shifted = x - 0.75 * p.final_time;
        shifted -= std::floor(shifted);
        CHECK_THAT(p.exact_point(x), WithinAbs(p.initial(shifted), 1e-13));
    }
}

TEST_CASE("characteristics agree with a fine marched solution", "[problems][slow]") {
    // independent cross-check of the reference construction: a third-order
    // march on a fine grid (with dt scaled down for stability) must sit far
    // below the coarsest-grid discretization error
    const Problem p = unsteady_burgers();
    SchemeConfig cfg;
    cfg.kappa = 0.5;
    cfg.time_treatment = TimeTreatment::CoupledMass;

    const auto l1_vs_reference = [&](int n, double dt, long steps) {
        const Grid grid = Grid::periodic(n);
        const State u0 = sample_cell_centers(grid, p.initial);
        const State uf = march(u0, p, cfg, TimeMarchConfig{dt, steps});
        double acc = 0.0;
        for (int i = 1; i <= n; ++i)
            acc += std::abs(uf.u(i) - p.exact_point(grid.cell_center(i)));
        return acc / n;
    };

    const double coarse_error = l1_vs_reference(32, 0.000125, 840);
    const double fine_error = l1_vs_reference(4096, 0.0000625, 1680);
    CHECK(fine_error * 100.0 < coarse_error);
}
