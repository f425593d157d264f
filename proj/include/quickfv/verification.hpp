/// @file verification.hpp
/// @brief Full acceptance suite: order-of-accuracy studies and the property
///        checks, each reported as one pass/fail line.
#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "quickfv/experiment.hpp"
#include "quickfv/metrics.hpp"
#include "quickfv/numerical_flux.hpp"
#include "quickfv/problems.hpp"
#include "quickfv/reconstruction.hpp"
#include "quickfv/residual.hpp"
#include "quickfv/steady_solver.hpp"
#include "quickfv/time_march.hpp"
#include "quickfv/tridiagonal.hpp"

namespace quickfv {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace verify_detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

inline bool in_band(double v, double center, double halfwidth) {
    return std::isfinite(v) && std::abs(v - center) <= halfwidth;
}

/// Observed order on the finest grid pair of a series.
inline double pair_order(const OrderTable& t) {
    return t.rows.empty() ? std::numeric_limits<double>::quiet_NaN()
                          : t.rows.back().observed_order;
}

/// Least-squares slope over the last three grids of a series.
inline double last3_order(const OrderTable& t) {
    const size_t n = t.h.size();
    if (n < 3) return std::numeric_limits<double>::quiet_NaN();
    const std::vector<double> h(t.h.end() - 3, t.h.end());
    const std::vector<double> e(t.error.end() - 3, t.error.end());
    return least_squares_order(h, e);
}

inline const OrderTable& table_for(const ExperimentResult& result, const std::string& norm,
                                   const std::string& label) {
    for (const OrderTable& t : result.tables_by_norm.at(norm))
        if (t.label == label) return t;
    throw config_error("verification: missing series " + label + " for " + norm);
}

inline SchemeConfig unsteady_config(double kappa, TimeTreatment t, ReconMode r) {
    SchemeConfig c;
    c.kappa = kappa;
    c.time_treatment = t;
    c.recon_mode = r;
    return c;
}

/// Dense Gaussian elimination with partial pivoting (oracle-grade, tiny n).
inline std::vector<double> dense_solve(std::vector<std::vector<double>> A,
                                       std::vector<double> b) {
    const size_t n = b.size();
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        for (size_t r = k + 1; r < n; ++r)
            if (std::abs(A[r][k]) > std::abs(A[piv][k])) piv = r;
        std::swap(A[k], A[piv]);
        std::swap(b[k], b[piv]);
        for (size_t r = k + 1; r < n; ++r) {
            const double m = A[r][k] / A[k][k];
            for (size_t c = k; c < n; ++c) A[r][c] -= m * A[k][c];
            b[r] -= m * b[k];
        }
    }
    std::vector<double> x(n);
    for (size_t k = n; k-- > 0;) {
        double acc = b[k];
        for (size_t c = k + 1; c < n; ++c) acc -= A[k][c] * x[c];
        x[k] = acc / A[k][k];
    }
    return x;
}

inline Problem zero_flux_problem(double nu) {
    Problem p;
    p.name = "diffusion_only";
    p.flux = {[](double) { return 0.0; }, [](double) { return 0.0; }};
    p.nu = nu;
    p.forcing_point = [](double) { return 0.0; };
    p.forcing_cell_avg = [](double, double) { return 0.0; };
    p.exact_point = [](double) { return 0.0; };
    p.exact_cell_avg = [](double, double) { return 0.0; };
    p.initial = p.exact_point;
    return p;
}

}  // namespace verify_detail

// ---------------------------------------------------------------------------
// Criteria 1-3: steady order studies
// ---------------------------------------------------------------------------

inline CriterionResult criterion_steady_burgers() {
    using namespace verify_detail;
    ExperimentSpec spec = preset("fig4", "");
    spec.output_dir.clear();
    const ExperimentResult r = run_experiment(spec);

    const double te_p_half = pair_order(table_for(r, "te_point", "k0.5"));
    const double de_p_half = pair_order(table_for(r, "de_point", "k0.5"));
    const double te_c_third = pair_order(table_for(r, "te_cellavg", "k0.3333"));
    const double de_c_third = pair_order(table_for(r, "de_cellavg", "k0.3333"));
    const double de_p_zero = pair_order(table_for(r, "de_point", "k0"));

    const bool ok = in_band(te_p_half, 3.0, 0.3) && in_band(de_p_half, 3.0, 0.3) &&
                    in_band(te_c_third, 3.0, 0.3) && in_band(de_c_third, 3.0, 0.3) &&
                    in_band(de_p_zero, 2.0, 0.3);
    std::string detail = "k=1/2 te_p " + fmt(te_p_half) + ", de_p " + fmt(de_p_half) +
                         "; k=1/3 te_c " + fmt(te_c_third) + ", de_c " + fmt(de_c_third) +
                         "; k=0 de_p " + fmt(de_p_zero);
    return {1, "steady Burgers orders (grids 15..127, finest pair)", ok, detail};
}

inline CriterionResult criterion_steady_viscous_auto() {
    using namespace verify_detail;
    ExperimentSpec spec = preset("fig5", "");
    spec.output_dir.clear();
    const ExperimentResult r = run_experiment(spec);

    bool ok = true;
    std::string detail;
    const struct { const char* label; double target; } cases[] = {
        {"k0.5", 3.0}, {"k0", 2.0}, {"k0.3333", 2.0}};
    for (const auto& c : cases) {
        const double te = pair_order(table_for(r, "te_point", c.label));
        const double de = pair_order(table_for(r, "de_point", c.label));
        const double dc = pair_order(table_for(r, "de_cellavg", c.label));
        ok = ok && in_band(te, c.target, 0.3) && in_band(de, c.target, 0.3) &&
             std::isfinite(dc) && dc <= 2.3;
        detail += std::string(c.label) + " te_p " + fmt(te) + " de_p " + fmt(de) + " de_c " +
                  fmt(dc) + "; ";
    }
    return {2, "steady viscous Burgers, derived alpha", ok, detail};
}

inline CriterionResult criterion_steady_viscous_alpha43() {
    using namespace verify_detail;
    ExperimentSpec spec = preset("fig6", "");
    spec.output_dir.clear();
    spec.schemes = {SchemeConfig{.kappa = 0.5, .alpha = 4.0 / 3.0}};
    const ExperimentResult r = run_experiment(spec);

    const double te = pair_order(table_for(r, "te_point", "k0.5_a1.333"));
    const double de = pair_order(table_for(r, "de_point", "k0.5_a1.333"));
    const bool ok = in_band(te, 2.0, 0.3) && in_band(de, 2.0, 0.3);
    return {3, "steady viscous Burgers, alpha = 4/3 (third order destroyed)", ok,
            "k=1/2 te_p " + fmt(te) + ", de_p " + fmt(de)};
}

// ---------------------------------------------------------------------------
// Criteria 4-7: unsteady order studies (slope over the last three grids)
// ---------------------------------------------------------------------------

namespace verify_detail {

inline ExperimentResult run_unsteady(ExperimentKind kind, std::vector<SchemeConfig> schemes) {
    ExperimentSpec spec;
    spec.experiment = kind;
    spec.name = "verify";
    spec.schemes = std::move(schemes);
    spec.grids = {512, 1024, 2048};
    spec.time = TimeMarchConfig{0.000125, 840};
    return run_experiment(spec);
}

}  // namespace verify_detail

inline CriterionResult criterion_unsteady_coupled() {
    using namespace verify_detail;
    const ExperimentResult r = run_unsteady(
        ExperimentKind::UnsteadyBurgers,
        {unsteady_config(0.5, TimeTreatment::CoupledMass, ReconMode::SolutionInterp),
         unsteady_config(0.5, TimeTreatment::LumpedMass, ReconMode::SolutionInterp)});
    const double de_p = last3_order(table_for(r, "de_point", "k0.5_coupled"));
    const double de_c = last3_order(table_for(r, "de_cellavg", "k0.5_coupled"));
    const double de_p_lumped = last3_order(table_for(r, "de_point", "k0.5_lumped"));
    const bool ok = in_band(de_p, 3.0, 0.3) && in_band(de_c, 2.0, 0.3) &&
                    in_band(de_p_lumped, 2.0, 0.3);
    return {4, "unsteady Burgers, coupled mass matrix (k=1/2)", ok,
            "coupled de_p " + fmt(de_p) + ", de_c " + fmt(de_c) + "; lumped de_p " +
                fmt(de_p_lumped)};
}

inline CriterionResult criterion_quickest_burgers() {
    using namespace verify_detail;
    const double third = 1.0 / 3.0;
    const ExperimentResult r = run_unsteady(
        ExperimentKind::UnsteadyBurgers,
        {unsteady_config(third, TimeTreatment::QuickestFD, ReconMode::SolutionInterp),
         unsteady_config(third, TimeTreatment::QuickestFD, ReconMode::FluxInterp)});
    const double de_sol = last3_order(table_for(r, "de_point", "k0.3333_quickest_sol"));
    const double de_flux = last3_order(table_for(r, "de_point", "k0.3333_quickest_flux"));
    const bool ok = in_band(de_sol, 2.0, 0.3) && in_band(de_flux, 3.0, 0.3);
    return {5, "QUICKEST on unsteady Burgers: solution vs flux reconstruction", ok,
            "solution de_p " + fmt(de_sol) + "; flux de_p " + fmt(de_flux)};
}

inline CriterionResult criterion_quickest_linear() {
    using namespace verify_detail;
    const double third = 1.0 / 3.0;
    const ExperimentResult r = run_unsteady(
        ExperimentKind::UnsteadyLinear,
        {unsteady_config(third, TimeTreatment::QuickestFD, ReconMode::SolutionInterp),
         unsteady_config(third, TimeTreatment::QuickestFD, ReconMode::FluxInterp)});
    const double de_sol = last3_order(table_for(r, "de_point", "k0.3333_quickest_sol"));
    const double de_flux = last3_order(table_for(r, "de_point", "k0.3333_quickest_flux"));

    // residual agreement of the two reconstruction modes on a linear flux
    const Problem p = unsteady_linear();
    const Grid grid = Grid::periodic(256);
    const State u = sample_cell_centers(grid, p.initial);
    SchemeConfig sol = unsteady_config(third, TimeTreatment::QuickestFD, ReconMode::SolutionInterp);
    sol.forcing_mode = ForcingMode::PointValue;
    SchemeConfig flux = sol;
    flux.recon_mode = ReconMode::FluxInterp;
    const ResidualVector rs = assemble_residual(u, p, sol);
    const ResidualVector rf = assemble_residual(u, p, flux);
    double max_diff = 0.0;
    for (size_t i = 0; i < rs.size(); ++i) max_diff = std::max(max_diff, std::abs(rs[i] - rf[i]));

    const bool ok = in_band(de_sol, 3.0, 0.3) && in_band(de_flux, 3.0, 0.3) && max_diff <= 1e-12;
    return {6, "QUICKEST on linear convection a = 0.75: both modes third order, residuals agree",
            ok,
            "solution de_p " + fmt(de_sol) + "; flux de_p " + fmt(de_flux) +
                "; max residual diff " + fmt(max_diff)};
}

inline CriterionResult criterion_vanleer() {
    using namespace verify_detail;
    const ExperimentResult r = run_unsteady(
        ExperimentKind::UnsteadyBurgers,
        {unsteady_config(0.5, TimeTreatment::VanLeerExplicit, ReconMode::SolutionInterp)});
    const double de_p = last3_order(table_for(r, "de_point", "k0.5_vanleer"));
    const double de_c = last3_order(table_for(r, "de_cellavg", "k0.5_vanleer"));
    const bool ok = in_band(de_p, 3.0, 0.3) && in_band(de_c, 2.0, 0.3);
    return {7, "explicit two-sweep correction (k=1/2)", ok,
            "de_p " + fmt(de_p) + ", de_c " + fmt(de_c)};
}

// ---------------------------------------------------------------------------
// Criterion 8: property suite
// ---------------------------------------------------------------------------

inline CriterionResult criterion_properties() {
    using namespace verify_detail;
    std::vector<std::string> failures;
    const auto check = [&](bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    };

    // quadratic exactness of the k=1/2 interpolation; cubic exactness of the
    // left/right average
    {
        std::mt19937 rng(12345);
        std::uniform_real_distribution<double> coef(-2.0, 2.0);
        bool quad_ok = true, cubic_ok = true;
        for (int trial = 0; trial < 50; ++trial) {
            const double c0 = coef(rng), c1 = coef(rng), c2 = coef(rng), c3 = coef(rng);
            const double x = coef(rng), h = 0.25 + 0.5 * std::abs(coef(rng));
            const auto q = [&](double xx) { return c0 + c1 * xx + c2 * xx * xx; };
            const auto cu = [&](double xx) { return q(xx) + c3 * xx * xx * xx; };
            const double xf = x + 0.5 * h;
            const double uL = interp_left(q(x - h), q(x), q(x + h), 0.5);
            const double uR = interp_right(q(x), q(x + h), q(x + 2 * h), 0.5);
            if (std::abs(uL - q(xf)) > 1e-12 || std::abs(uR - q(xf)) > 1e-12) quad_ok = false;
            const double cL = interp_left(cu(x - h), cu(x), cu(x + h), 0.5);
            const double cR = interp_right(cu(x), cu(x + h), cu(x + 2 * h), 0.5);
            if (std::abs(0.5 * (cL + cR) - cu(xf)) > 1e-11) cubic_ok = false;
        }
        check(quad_ok, "quadratic exactness of k=1/2 interpolation");
        check(cubic_ok, "cubic exactness of the averaged k=1/2 interpolation");
    }

    // assembled diffusion stencils
    {
        std::mt19937 rng(777);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        const int n = 16;
        const double h = 0.1;
        const Grid grid = Grid(n, h, 0.0, Topology::Periodic);
        State u(grid);
        for (double& v : u.values) v = dist(rng);
        const Problem p = zero_flux_problem(1.0);

        const auto stencil = [&](const std::array<double, 5>& c, double denom, int i) {
            double acc = 0.0;
            for (int k = -2; k <= 2; ++k) acc += c[k + 2] * u.u(grid.neighbor(i, k));
            return -acc / (denom * h * h);
        };
        bool auto_ok = true, a43_ok = true;
        for (double kappa : {0.0, 1.0 / 3.0, 0.5}) {
            SchemeConfig cfg;
            cfg.kappa = kappa;
            cfg.nu = 1.0;
            const ResidualVector res = assemble_residual(u, p, cfg);
            for (int i = 1; i <= n; ++i)
                if (std::abs(res[i - 1] - stencil({-1, 28, -54, 28, -1}, 24.0, i)) > 1e-11)
                    auto_ok = false;
        }
        {
            SchemeConfig cfg;
            cfg.kappa = 0.5;
            cfg.alpha = 4.0 / 3.0;
            cfg.nu = 1.0;
            const ResidualVector res = assemble_residual(u, p, cfg);
            for (int i = 1; i <= n; ++i)
                if (std::abs(res[i - 1] - stencil({-1, 16, -30, 16, -1}, 12.0, i)) > 1e-11)
                    a43_ok = false;
        }
        check(auto_ok, "derived-alpha diffusion equals (-1,28,-54,28,-1)/(24h^2)");
        check(a43_ok, "alpha=4/3 diffusion equals (-1,16,-30,16,-1)/(12h^2)");
    }

    // mass matrix row sums
    {
        const TridiagonalSystem m = mass_matrix(24, true);
        bool ok = true;
        for (size_t i = 0; i < m.size(); ++i)
            if ((m.lower[i] + m.upper[i]) + m.diag[i] != 1.0) ok = false;
        check(ok, "mass-matrix row sums equal 1");
    }

    // cyclic solve against a dense elimination oracle
    {
        std::mt19937 rng(4242);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        bool ok = true;
        for (int n : {4, 8, 17}) {
            TridiagonalSystem sys;
            sys.cyclic = true;
            sys.lower.resize(n);
            sys.diag.resize(n);
            sys.upper.resize(n);
            std::vector<std::vector<double>> A(n, std::vector<double>(n, 0.0));
            std::vector<double> rhs(n);
            for (int i = 0; i < n; ++i) {
                sys.lower[i] = dist(rng);
                sys.upper[i] = dist(rng);
                sys.diag[i] = 4.0 + dist(rng);
                rhs[i] = dist(rng);
            }
            for (int i = 0; i < n; ++i) {
                A[i][i] = sys.diag[i];
                if (i > 0) A[i][i - 1] = sys.lower[i];
                if (i + 1 < n) A[i][i + 1] = sys.upper[i];
            }
            A[0][n - 1] += sys.lower[0];
            A[n - 1][0] += sys.upper[n - 1];
            const std::vector<double> x = solve_tridiagonal(sys, rhs);
            const std::vector<double> xd = dense_solve(A, rhs);
            for (int i = 0; i < n; ++i)
                if (std::abs(x[i] - xd[i]) > 1e-12 * (1.0 + std::abs(xd[i]))) ok = false;
        }
        check(ok, "cyclic solve matches dense elimination to 1e-12");
    }

    // SSP RK3 linear amplification factor
    {
        const Grid grid = Grid::periodic(4);
        State u(grid, 1.0);
        const double lambda = -2.3, dt = 0.1, z = lambda * dt;
        const auto rhs = [lambda](const State& s) {
            std::vector<double> r(s.values.size());
            for (size_t i = 0; i < r.size(); ++i) r[i] = lambda * s.values[i];
            return r;
        };
        const State out = ssp_rk3_step(u, rhs, dt);
        const double expected = 1.0 + z + z * z / 2.0 + z * z * z / 6.0;
        bool ok = true;
        for (double v : out.values)
            if (std::abs(v - expected) > 1e-14) ok = false;
        check(ok, "SSP RK3 amplification 1 + z + z^2/2 + z^3/6");
    }

    // discrete conservation over 840 periodic steps, all four treatments
    {
        const Problem p = unsteady_burgers();
        const TimeMarchConfig tm{0.000125, 840};
        bool ok = true;
        for (TimeTreatment t : {TimeTreatment::CoupledMass, TimeTreatment::LumpedMass,
                                TimeTreatment::QuickestFD, TimeTreatment::VanLeerExplicit}) {
            const double kappa = t == TimeTreatment::QuickestFD ? 1.0 / 3.0 : 0.5;
            const SchemeConfig cfg = verify_detail::unsteady_config(
                kappa, t, ReconMode::SolutionInterp);
            const Grid grid = Grid::periodic(64);
            const State u0 = sample_cell_centers(grid, p.initial);
            const State uf = march(u0, p, cfg, tm);
            double s0 = 0.0, sf = 0.0;
            for (int i = 1; i <= 64; ++i) {
                s0 += u0.u(i);
                sf += uf.u(i);
            }
            if (std::abs(sf - s0) > 1e-10) ok = false;
        }
        check(ok, "sum(u) drift <= 1e-10 over 840 steps, all treatments");
    }

    // first-order Jacobian against finite differences of the frozen-D residual
    {
        bool ok = true;
        for (const Problem& p : {steady_burgers(), steady_viscous_burgers()}) {
            const Grid grid = Grid::dirichlet_padded(15);
            const State u = sample_cell_centers(grid, p.exact_point);
            SchemeConfig cfg;
            cfg.kappa = 0.5;
            cfg.nu = p.nu;
            const TridiagonalSystem J = first_order_jacobian(u, p, cfg);
            const std::vector<double> D = first_order_face_dissipation(u, p.flux);
            const double eps = 1e-7;
            double scale = 0.0;
            for (size_t i = 0; i < J.size(); ++i)
                scale = std::max({scale, std::abs(J.lower[i]), std::abs(J.diag[i]),
                                  std::abs(J.upper[i])});
            for (int j = 1; j <= 15; ++j) {
                State up = u, um = u;
                up.u(j) += eps;
                um.u(j) -= eps;
                const auto rp = first_order_residual(up, p, cfg, &D);
                const auto rm = first_order_residual(um, p, cfg, &D);
                for (int i = 3; i <= 13; ++i) {
                    const double fd = (rp[i - 1] - rm[i - 1]) / (2.0 * eps);
                    double entry = 0.0;
                    if (j == i - 1) entry = J.lower[i - 1];
                    else if (j == i) entry = J.diag[i - 1];
                    else if (j == i + 1) entry = J.upper[i - 1];
                    if (std::abs(fd - entry) > 1e-6 * scale) ok = false;
                }
            }
        }
        check(ok, "first-order Jacobian matches finite differences to 1e-6");
    }

    // closed-form cell averages against Gauss quadrature
    {
        bool ok = true;
        const Grid grid = Grid::dirichlet_padded(31);
        for (const Problem& p : {steady_burgers(), steady_viscous_burgers()}) {
            for (int i = 1; i <= 31; ++i) {
                const double x = grid.cell_center(i), h = grid.h();
                if (std::abs(p.forcing_cell_avg(x, h) -
                             detail::cell_average_quadrature(p.forcing_point, x, h)) > 1e-12)
                    ok = false;
                if (std::abs(p.exact_cell_avg(x, h) -
                             detail::cell_average_quadrature(p.exact_point, x, h)) > 1e-12)
                    ok = false;
            }
        }
        const Problem lin = unsteady_linear();
        const Grid pg = Grid::periodic(32);
        for (int i = 1; i <= 32; ++i) {
            const double x = pg.cell_center(i), h = pg.h();
            if (std::abs(lin.exact_cell_avg(x, h) -
                         detail::cell_average_quadrature(lin.exact_point, x, h)) > 1e-12)
                ok = false;
        }
        check(ok, "closed-form cell averages match Gauss quadrature to 1e-12");
    }

    std::string detail;
    if (failures.empty()) {
        detail = "all property checks passed";
    } else {
        detail = "failed: ";
        for (const std::string& f : failures) detail += f + "; ";
    }
    return {8, "property suite", failures.empty(), detail};
}

// ---------------------------------------------------------------------------
// Criterion 9: dissipation-term order
// ---------------------------------------------------------------------------

inline CriterionResult criterion_dissipation_order() {
    using namespace verify_detail;
    const FluxFunction flux = burgers_flux();
    const SchemeConfig cfg{.kappa = 0.5};
    std::vector<double> hs, norms;
    for (int n : {64, 128, 256, 512}) {
        const Grid grid = Grid::periodic(n);
        State u(grid);
        for (int i = 1; i <= n; ++i)
            u.u(i) = 1.5 + std::sin(2.0 * M_PI * grid.cell_center(i));
        std::vector<double> t(static_cast<size_t>(n));  // D (u_R - u_L) at face i+1/2
        for (int i = 1; i <= n; ++i) {
            const FaceData f = face_states(u, i, cfg);
            t[i - 1] = std::abs(flux.df(0.5 * (f.u_L + f.u_R))) * (f.u_R - f.u_L);
        }
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += std::abs(t[i] - t[(i + n - 1) % n]);
        hs.push_back(grid.h());
        norms.push_back(acc / n);
    }
    const double slope = observed_order(norms[norms.size() - 2], norms.back(),
                                        hs[hs.size() - 2], hs.back());
    const bool ok = std::isfinite(slope) && slope >= 3.7;
    return {9, "face-differenced dissipation term is fourth order", ok,
            "Richardson slope " + fmt(slope) + " (needs >= 3.7)"};
}

/// Run every acceptance criterion in order.
inline std::vector<CriterionResult> run_acceptance_criteria() {
    return {criterion_steady_burgers(),     criterion_steady_viscous_auto(),
            criterion_steady_viscous_alpha43(), criterion_unsteady_coupled(),
            criterion_quickest_burgers(),   criterion_quickest_linear(),
            criterion_vanleer(),            criterion_properties(),
            criterion_dissipation_order()};
}

inline std::string format_criterion_line(const CriterionResult& c) {
    std::string line = c.passed ? "[PASS] " : "[FAIL] ";
    line += "criterion " + std::to_string(c.id) + ": " + c.name;
    if (!c.detail.empty()) line += " — " + c.detail;
    return line;
}

}  // namespace quickfv
