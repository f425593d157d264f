/// @file steady_solver.hpp
/// @brief Defect correction: the exact Jacobian of the first-order scheme
///        drives the high-order steady residual to the solve tolerance.
#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "quickfv/core.hpp"
#include "quickfv/residual.hpp"
#include "quickfv/tridiagonal.hpp"

namespace quickfv {

struct SteadySolveReport {
    long iterations = 0;
    double final_residual_l1 = 0.0;
    bool converged = false;
    std::vector<double> history;
};

/// |df| per face i+1/2 (index i-1), evaluated at the two-point face midpoint
/// of the first-order scheme.
inline std::vector<double> first_order_face_dissipation(const State& state,
                                                        const FluxFunction& flux) {
    const int n = state.grid.n_cells();
    std::vector<double> D(static_cast<size_t>(n > 0 ? n - 1 : 0));
    for (int i = 1; i < n; ++i)
        D[i - 1] = std::abs(flux.df(0.5 * (state.u(i) + state.u(i + 1))));
    return D;
}

/// First-order residual on a padded grid: u_L = u_i, u_R = u_{i+1}, two-point
/// diffusion. When frozen_D is given it replaces the per-face |df| (the
/// linearization the Jacobian below differentiates exactly).
inline std::vector<double> first_order_residual(const State& state, const Problem& problem,
                                                const SchemeConfig& config,
                                                const std::vector<double>* frozen_D = nullptr) {
    const Grid& g = state.grid;
    if (g.topology() != Topology::DirichletPadded)
        throw config_error("first_order_residual: padded grid required");
    const int n = g.n_cells();
    const double h = g.h();

    std::vector<double> F(static_cast<size_t>(n), 0.0);  // F[i-1] = flux at face i+1/2
    for (int i = 2; i <= n - 2; ++i) {
        const double uL = state.u(i);
        const double uR = state.u(i + 1);
        double Fc = 0.5 * (problem.flux.f(uL) + problem.flux.f(uR));
        if (config.dissipation) {
            const double D = frozen_D ? (*frozen_D)[i - 1]
                                      : std::abs(problem.flux.df(0.5 * (uL + uR)));
            Fc -= 0.5 * D * (uR - uL);
        }
        const double Fd = config.nu > 0.0 ? -config.nu * (uR - uL) / h : 0.0;
        F[i - 1] = Fc + Fd;
    }

    std::vector<double> res(static_cast<size_t>(n), 0.0);
    for (int i = 3; i <= n - 2; ++i) {
        const double x = g.cell_center(i);
        const double s = config.forcing_mode == ForcingMode::CellAveraged
                             ? problem.forcing_cell_avg(x, h)
                             : problem.forcing_point(x);
        res[i - 1] = (F[i - 1] - F[i - 2]) / h - s;
    }
    return res;
}

/// Tridiagonal Jacobian of the first-order residual with the face dissipation
/// frozen at the current state. Padded-cell rows are identity.
inline TridiagonalSystem first_order_jacobian(const State& state, const Problem& problem,
                                              const SchemeConfig& config) {
    const Grid& g = state.grid;
    if (g.topology() != Topology::DirichletPadded)
        throw config_error("first_order_jacobian: padded grid required");
    const int n = g.n_cells();
    const double h = g.h();
    const std::vector<double> D = first_order_face_dissipation(state, problem.flux);

    TridiagonalSystem J;
    J.lower.assign(static_cast<size_t>(n), 0.0);
    J.diag.assign(static_cast<size_t>(n), 1.0);
    J.upper.assign(static_cast<size_t>(n), 0.0);
    J.cyclic = false;

    const double nu_h2 = config.nu / (h * h);
    for (int i = 3; i <= n - 2; ++i) {
        const double Dp = config.dissipation ? D[i - 1] : 0.0;  // face i+1/2
        const double Dm = config.dissipation ? D[i - 2] : 0.0;  // face i-1/2
        J.lower[i - 1] = -(0.5 * problem.flux.df(state.u(i - 1)) + 0.5 * Dm) / h - nu_h2;
        J.diag[i - 1] = 0.5 * (Dp + Dm) / h + 2.0 * nu_h2;
        J.upper[i - 1] = (0.5 * problem.flux.df(state.u(i + 1)) - 0.5 * Dp) / h - nu_h2;
    }
    return J;
}

/// Defect correction with a pseudo-time ramp: solve (J1 + I/dtau) du =
/// -Res_high, starting at CFL 10 and doubling until the ramp term is dropped
/// (CFL > 1e6). Padded cells are never updated. Non-convergence returns a
/// report with converged = false rather than throwing.
inline std::pair<State, SteadySolveReport> solve_steady(const State& state0,
                                                        const Problem& problem,
                                                        const SchemeConfig& config,
                                                        double tol = 1e-12,
                                                        long max_iter = 10000) {
    const Grid& g = state0.grid;
    if (g.topology() != Topology::DirichletPadded)
        throw config_error("solve_steady: padded grid required");
    const int n = g.n_cells();
    const double h = g.h();

    State u = state0;
    SteadySolveReport report;
    double cfl = 10.0;

    for (long iter = 0; iter <= max_iter; ++iter) {
        ResidualVector res = assemble_residual(u, problem, config);
        const double l1 = interior_l1(res, g);
        report.history.push_back(l1);
        report.final_residual_l1 = l1;
        report.iterations = iter;
        if (!std::isfinite(l1)) break;
        if (l1 <= tol) {
            report.converged = true;
            break;
        }
        if (iter == max_iter) break;

        const TridiagonalSystem J = first_order_jacobian(u, problem, config);
        // global reference speed keeps the ramp active where the local wave
        // speed vanishes (e.g. a zero interior start for Burgers)
        double vmax = 0.0;
        for (int i = 1; i <= n; ++i)
            vmax = std::max(vmax, std::abs(problem.flux.df(u.u(i))));
        const double speed = vmax + 2.0 * config.nu / h;

        std::vector<double> rhs(static_cast<size_t>(n), 0.0);
        for (int i = 3; i <= n - 2; ++i) rhs[i - 1] = -res[i - 1];

        // an update that more than doubles the residual is rejected and
        // retried at half the CFL; accepted steps double it toward infinity
        State trial = u;
        for (int attempt = 0; attempt < 80; ++attempt) {
            TridiagonalSystem Jd = J;
            if (cfl <= 1e6 && speed > 0.0)
                for (int i = 3; i <= n - 2; ++i) Jd.diag[i - 1] += speed / (cfl * h);
            const std::vector<double> du = solve_tridiagonal(Jd, rhs);
            trial = u;
            for (int i = 3; i <= n - 2; ++i) trial.u(i) += du[i - 1];
            const double trial_l1 =
                interior_l1(assemble_residual(trial, problem, config), g);
            if ((std::isfinite(trial_l1) && trial_l1 <= 2.0 * l1) || cfl <= 1e-8) break;
            cfl *= 0.5;
        }
        u = trial;
        cfl = std::min(cfl * 2.0, 1e7);
    }
    return {u, report};
}

}  // namespace quickfv
