/// @file time_march.hpp
/// @brief SSP RK3 marching with the four time-derivative treatments: coupled
///        mass matrix, lumped mass, QUICKEST finite-difference form, and the
///        explicit two-sweep residual correction.
#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "quickfv/core.hpp"
#include "quickfv/residual.hpp"
#include "quickfv/tridiagonal.hpp"

namespace quickfv {

struct TimeMarchConfig {
    double dt = 0.0;
    long n_steps = 0;
};

namespace detail {

inline void require_periodic(const State& state, const char* who) {
    if (state.grid.topology() != Topology::Periodic)
        throw config_error(std::string(who) + ": periodic grid required");
}

}  // namespace detail

/// -M^{-1} Res(U): the cell-average rate coupling solved per evaluation.
inline std::vector<double> rhs_coupled(const State& state, const Problem& problem,
                                       const SchemeConfig& config) {
    detail::require_periodic(state, "rhs_coupled");
    ResidualVector res = assemble_residual(state, problem, config);
    const TridiagonalSystem m = mass_matrix(state.grid.n_cells(), true);
    std::vector<double> rhs = solve_tridiagonal(m, res);
    for (double& v : rhs) v = -v;
    return rhs;
}

/// -Res(U): mass matrix replaced by the identity.
inline std::vector<double> rhs_lumped(const State& state, const Problem& problem,
                                      const SchemeConfig& config) {
    detail::require_periodic(state, "rhs_lumped");
    ResidualVector res = assemble_residual(state, problem, config);
    for (double& v : res) v = -v;
    return res;
}

/// Finite-difference form: kappa = 1/3, pure convection, point-valued forcing.
inline std::vector<double> rhs_quickest(const State& state, const Problem& problem,
                                        const SchemeConfig& config) {
    detail::require_periodic(state, "rhs_quickest");
    if (config.kappa != 1.0 / 3.0)
        throw config_error("rhs_quickest: requires kappa = 1/3");
    if (config.nu != 0.0)
        throw config_error("rhs_quickest: diffusion not supported (nu must be 0)");
    SchemeConfig fd = config;
    fd.forcing_mode = ForcingMode::PointValue;
    ResidualVector res = assemble_residual(state, problem, fd);
    for (double& v : res) v = -v;
    return res;
}

/// Two-sweep explicit correction: Res_i = Res1_i - (Res1_{i+1} - 2 Res1_i +
/// Res1_{i-1})/24, with Res1 the plain spatial residual.
inline std::vector<double> rhs_vanleer(const State& state, const Problem& problem,
                                       const SchemeConfig& config) {
    detail::require_periodic(state, "rhs_vanleer");
    const ResidualVector r1 = assemble_residual(state, problem, config);
    const size_t n = r1.size();
    std::vector<double> rhs(n);
    for (size_t i = 0; i < n; ++i) {
        const double rp = r1[(i + 1) % n];
        const double rm = r1[(i + n - 1) % n];
        rhs[i] = -(r1[i] - (rp - 2.0 * r1[i] + rm) / 24.0);
    }
    return rhs;
}

/// du/dt selected by config.time_treatment.
inline std::vector<double> spatial_rhs(const State& state, const Problem& problem,
                                       const SchemeConfig& config) {
    switch (config.time_treatment) {
        case TimeTreatment::CoupledMass: return rhs_coupled(state, problem, config);
        case TimeTreatment::LumpedMass: return rhs_lumped(state, problem, config);
        case TimeTreatment::QuickestFD: return rhs_quickest(state, problem, config);
        case TimeTreatment::VanLeerExplicit: return rhs_vanleer(state, problem, config);
    }
    throw config_error("spatial_rhs: unknown time treatment");
}

/// One step of the three-stage SSP Runge-Kutta scheme.
inline State ssp_rk3_step(const State& state,
                          const std::function<std::vector<double>(const State&)>& rhs,
                          double dt) {
    if (!(dt > 0.0)) throw config_error("ssp_rk3_step: dt must be positive");
    const size_t n = state.values.size();

    State u1 = state;
    {
        const std::vector<double> r = rhs(state);
        for (size_t i = 0; i < n; ++i) u1.values[i] = state.values[i] + dt * r[i];
    }
    State u2 = state;
    {
        const std::vector<double> r = rhs(u1);
        for (size_t i = 0; i < n; ++i)
            u2.values[i] = 0.75 * state.values[i] + 0.25 * (u1.values[i] + dt * r[i]);
    }
    State out = state;
    {
        const std::vector<double> r = rhs(u2);
        for (size_t i = 0; i < n; ++i)
            out.values[i] =
                state.values[i] / 3.0 + 2.0 / 3.0 * (u2.values[i] + dt * r[i]);
    }
    return out;
}

/// March n_steps with the treatment-selected rhs. For unsteady problems the
/// step count must land on the problem's final time to within 1e-12. The
/// optional observer sees the initial state (step 0) and every step after.
inline State march(const State& state0, const Problem& problem, const SchemeConfig& config,
                   const TimeMarchConfig& tm,
                   const std::function<void(long, const State&)>& on_step = {}) {
    if (tm.n_steps < 1) throw config_error("march: n_steps must be >= 1");
    if (!(tm.dt > 0.0)) throw config_error("march: dt must be positive");
    if (problem.is_unsteady() &&
        std::abs(static_cast<double>(tm.n_steps) * tm.dt - problem.final_time) > 1e-12)
        throw config_error("march: n_steps * dt does not reach the final time");

    const auto rhs = [&](const State& s) { return spatial_rhs(s, problem, config); };
    State u = state0;
    if (on_step) on_step(0, u);
    for (long step = 1; step <= tm.n_steps; ++step) {
        u = ssp_rk3_step(u, rhs, tm.dt);
        if (!u.all_finite())
            throw numerical_error("march: non-finite solution at step " + std::to_string(step));
        if (on_step) on_step(step, u);
    }
    return u;
}

}  // namespace quickfv
