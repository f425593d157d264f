/// @file reconstruction.hpp
/// @brief Face values of the solution (or flux) from the kappa-interpolation
///        family, plus face derivatives of the quadratic interpolants.
#pragma once

#include "quickfv/core.hpp"

namespace quickfv {

/// Left/right interpolated traces and one-sided derivatives at face i+1/2.
/// On uniform grids the quadratic interpolants share the same derivative at
/// the face, so dudx_L == dudx_R always.
struct FaceData {
    double u_L;
    double u_R;
    double dudx_L;
    double dudx_R;
};

/// Left state at face i+1/2 from cells {i-1, i, i+1}.
/// kappa = 1/2 interpolates a quadratic exactly; kappa = 1 is the plain
/// two-point average.
inline double interp_left(double v_im1, double v_i, double v_ip1, double kappa) {
    return 0.5 * (v_i + v_ip1) - 0.25 * (1.0 - kappa) * (v_ip1 - 2.0 * v_i + v_im1);
}

/// Right state at face i+1/2 from cells {i, i+1, i+2}.
inline double interp_right(double v_i, double v_ip1, double v_ip2, double kappa) {
    return 0.5 * (v_ip1 + v_i) - 0.25 * (1.0 - kappa) * (v_ip2 - 2.0 * v_ip1 + v_i);
}

/// Interpolated traces and derivatives at face i+1/2 of the given state.
inline FaceData face_states(const State& state, int i, const SchemeConfig& config) {
    const Grid& g = state.grid;
    const double um1 = state.u(g.neighbor(i, -1));
    const double u0 = state.u(i);
    const double up1 = state.u(g.neighbor(i, +1));
    const double up2 = state.u(g.neighbor(i, +2));
    const double dudx = (up1 - u0) / g.h();
    return FaceData{interp_left(um1, u0, up1, config.kappa),
                    interp_right(u0, up1, up2, config.kappa), dudx, dudx};
}

/// Directly reconstructed flux traces at face i+1/2: the kappa interpolation
/// applied to pointwise flux samples f(u_j) rather than to the solution.
inline std::pair<double, double> face_flux_states(const State& state, const FluxFunction& flux,
                                                  int i, double kappa) {
    const Grid& g = state.grid;
    const double fm1 = flux.f(state.u(g.neighbor(i, -1)));
    const double f0 = flux.f(state.u(i));
    const double fp1 = flux.f(state.u(g.neighbor(i, +1)));
    const double fp2 = flux.f(state.u(g.neighbor(i, +2)));
    return {interp_left(fm1, f0, fp1, kappa), interp_right(f0, fp1, fp2, kappa)};
}

}  // namespace quickfv
