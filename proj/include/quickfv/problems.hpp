/// @file problems.hpp
/// @brief The four experiment problems: exact solutions, exact cell averages,
///        and exactly integrated forcing terms.
#pragma once

#include <array>
#include <cmath>
#include <string>

#include "quickfv/core.hpp"

namespace quickfv {

/// Problem definition. exact_point is the comparison target: u(x) for steady
/// problems, u(x, t_final) for unsteady ones. Cell averages take (x_i, h).
struct Problem {
    std::string name;
    FluxFunction flux;
    double nu = 0.0;
    std::function<double(double)> exact_point;
    std::function<double(double, double)> exact_cell_avg;
    std::function<double(double)> forcing_point;
    std::function<double(double, double)> forcing_cell_avg;
    std::function<double(double)> initial;
    double final_time = 0.0;

    bool is_unsteady() const { return final_time > 0.0; }
};

inline FluxFunction burgers_flux() {
    return {[](double u) { return 0.5 * u * u; }, [](double u) { return u; }};
}

inline FluxFunction linear_flux(double a) {
    return {[a](double u) { return a * u; }, [a](double) { return a; }};
}

/// Pre-shock solution of u_t + (u^2/2)_x = 0 with u(x,0) = sin(2 pi x),
/// periodic on [0,1]: solves u = sin(2 pi (x - u t)) by Newton iteration.
inline double burgers_characteristic_solution(double x, double t, double tol = 1e-13) {
    double u = std::sin(2.0 * M_PI * x);
    for (int it = 0; it < 100; ++it) {
        const double arg = 2.0 * M_PI * (x - u * t);
        const double g = u - std::sin(arg);
        const double gp = 1.0 + 2.0 * M_PI * t * std::cos(arg);
        const double du = g / gp;
        u -= du;
        if (std::abs(du) <= tol) return u;
    }
    throw numerical_error("burgers_characteristic_solution: no convergence at x=" +
                          std::to_string(x) + ", t=" + std::to_string(t) +
                          " (wave breaking?)");
}

namespace detail {

// 5-point Gauss-Legendre rule on [-1, 1].
struct Gauss5 {
    static constexpr std::array<double, 5> x = {
        0.0, 0.5384693101056831, -0.5384693101056831, 0.9061798459386640,
        -0.9061798459386640};
    static constexpr std::array<double, 5> w = {
        0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
        0.2369268850561891, 0.2369268850561891};
};

/// Cell average of fn over [x_i - h/2, x_i + h/2] by 5-point Gauss quadrature.
inline double cell_average_quadrature(const std::function<double(double)>& fn, double x_i,
                                      double h) {
    double acc = 0.0;
    for (size_t k = 0; k < Gauss5::x.size(); ++k)
        acc += Gauss5::w[k] * fn(x_i + 0.5 * h * Gauss5::x[k]);
    return 0.5 * acc;
}

}  // namespace detail

/// Steady Burgers with forcing on [0,1]: f = u^2/2, s(x) = 2 sin(2x) cos(2x),
/// exact solution u = sin(2x). All integrals in closed form.
inline Problem steady_burgers() {
    Problem p;
    p.name = "steady_burgers";
    p.flux = burgers_flux();
    p.nu = 0.0;
    p.exact_point = [](double x) { return std::sin(2.0 * x); };
    p.exact_cell_avg = [](double x, double h) {
        return (std::cos(h - 2.0 * x) - std::cos(h + 2.0 * x)) / (2.0 * h);
    };
    p.forcing_point = [](double x) { return 2.0 * std::sin(2.0 * x) * std::cos(2.0 * x); };
    p.forcing_cell_avg = [](double x, double h) {
        const double cm = std::cos(h - 2.0 * x);
        const double cp = std::cos(h + 2.0 * x);
        return (cm * cm - cp * cp) / (2.0 * h);
    };
    p.initial = p.exact_point;
    return p;
}

/// Steady viscous Burgers, nu = 1: s(x) = 2 sin(2x) cos(2x) + 4 nu sin(2x),
/// same exact solution u = sin(2x).
inline Problem steady_viscous_burgers() {
    Problem p = steady_burgers();
    p.name = "steady_viscous_burgers";
    p.nu = 1.0;
    const double nu = p.nu;
    p.forcing_point = [nu](double x) {
        return 2.0 * std::sin(2.0 * x) * std::cos(2.0 * x) + 4.0 * nu * std::sin(2.0 * x);
    };
    p.forcing_cell_avg = [nu](double x, double h) {
        const double cm = std::cos(h - 2.0 * x);
        const double cp = std::cos(h + 2.0 * x);
        return (cm * cm - cp * cp) / (2.0 * h) + 2.0 * nu / h * (cm - cp);
    };
    return p;
}

/// Unsteady Burgers, periodic on [0,1], u(x,0) = sin(2 pi x), t_final = 0.105
/// (before wave breaking). Reference at t_final by characteristics; its cell
/// average by per-cell Gauss quadrature of the reference.
inline Problem unsteady_burgers() {
    Problem p;
    p.name = "unsteady_burgers";
    p.flux = burgers_flux();
    p.nu = 0.0;
    p.final_time = 0.105;
    const double tf = p.final_time;
    p.initial = [](double x) { return std::sin(2.0 * M_PI * x); };
    p.exact_point = [tf](double x) { return burgers_characteristic_solution(x, tf); };
    p.exact_cell_avg = [tf](double x, double h) {
        return detail::cell_average_quadrature(
            [tf](double xx) { return burgers_characteristic_solution(xx, tf); }, x, h);
    };
    p.forcing_point = [](double) { return 0.0; };
    p.forcing_cell_avg = [](double, double) { return 0.0; };
    return p;
}

/// Unsteady linear convection u_t + (a u)_x = 0, a = 0.75 by default, with the
/// same initial profile and periodic domain as the unsteady Burgers case.
inline Problem unsteady_linear(double a = 0.75) {
    Problem p;
    p.name = "unsteady_linear";
    p.flux = linear_flux(a);
    p.nu = 0.0;
    p.final_time = 0.105;
    const double tf = p.final_time;
    p.initial = [](double x) { return std::sin(2.0 * M_PI * x); };
    p.exact_point = [a, tf](double x) { return std::sin(2.0 * M_PI * (x - a * tf)); };
    p.exact_cell_avg = [a, tf](double x, double h) {
        const double lo = x - 0.5 * h - a * tf;
        const double hi = x + 0.5 * h - a * tf;
        return (std::cos(2.0 * M_PI * lo) - std::cos(2.0 * M_PI * hi)) / (2.0 * M_PI * h);
    };
    p.forcing_point = [](double) { return 0.0; };
    p.forcing_cell_avg = [](double, double) { return 0.0; };
    return p;
}

}  // namespace quickfv
