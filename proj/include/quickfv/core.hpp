/// @file core.hpp
/// @brief Grid, solution state, and scheme configuration shared by all modules.
#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quickfv {

/// Invalid scheme/experiment configuration (CLI exit code 2).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical failure: NaN, singular pivot, non-convergence (CLI exit code 1).
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Topology { Periodic, DirichletPadded };

/// Uniform 1-D cell layout. Cells are 1-based: center i sits at
/// x_left + (i - 1/2) h. DirichletPadded grids hold two fixed cells on each
/// side; the solvable interior is i = 3 .. n-2.
class Grid {
public:
    Grid(int n_cells, double h, double x_left, Topology topology)
        : n_(n_cells), h_(h), x_left_(x_left), topology_(topology) {
        if (n_cells < 1) throw config_error("Grid: n_cells must be positive");
        if (!(h > 0.0)) throw config_error("Grid: h must be positive");
        if (topology == Topology::DirichletPadded && n_cells < 5)
            throw config_error("Grid: padded topology needs at least 5 cells");
    }

    static Grid periodic(int n_cells, double length = 1.0, double x_left = 0.0) {
        return Grid(n_cells, length / n_cells, x_left, Topology::Periodic);
    }
    static Grid dirichlet_padded(int n_cells, double length = 1.0, double x_left = 0.0) {
        return Grid(n_cells, length / n_cells, x_left, Topology::DirichletPadded);
    }

    int n_cells() const { return n_; }
    double h() const { return h_; }
    double x_left() const { return x_left_; }
    Topology topology() const { return topology_; }

    double cell_center(int i) const {
        if (i < 1 || i > n_)
            throw std::out_of_range("cell_center: index " + std::to_string(i) +
                                    " outside [1, " + std::to_string(n_) + "]");
        return x_left_ + (i - 0.5) * h_;
    }

    /// Stencil access. Periodic wraps modulo n; DirichletPadded returns the
    /// raw index and requires it to stay in [1, n].
    int neighbor(int i, int offset) const {
        if (offset < -2 || offset > 2)
            throw std::invalid_argument("neighbor: |offset| must be <= 2");
        if (topology_ == Topology::Periodic) {
            int k = (i - 1 + offset) % n_;
            if (k < 0) k += n_;
            return k + 1;
        }
        int raw = i + offset;
        if (raw < 1 || raw > n_)
            throw std::out_of_range("neighbor: padded index " + std::to_string(raw) +
                                    " outside [1, " + std::to_string(n_) + "]");
        return raw;
    }

    int interior_begin() const { return topology_ == Topology::Periodic ? 1 : 3; }
    int interior_end() const { return topology_ == Topology::Periodic ? n_ : n_ - 2; }
    int interior_count() const { return interior_end() - interior_begin() + 1; }
    bool is_padded_cell(int i) const {
        return topology_ == Topology::DirichletPadded && (i <= 2 || i >= n_ - 1);
    }

private:
    int n_;
    double h_;
    double x_left_;
    Topology topology_;
};

/// Point-valued numerical solution at cell centers.
struct State {
    Grid grid;
    std::vector<double> values;

    explicit State(const Grid& g, double fill = 0.0)
        : grid(g), values(static_cast<size_t>(g.n_cells()), fill) {}

    double u(int i) const { return values[static_cast<size_t>(i - 1)]; }
    double& u(int i) { return values[static_cast<size_t>(i - 1)]; }

    bool all_finite() const {
        for (double v : values)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

/// Sample a function of x at every cell center.
inline State sample_cell_centers(const Grid& grid, const std::function<double(double)>& fn) {
    State s(grid);
    for (int i = 1; i <= grid.n_cells(); ++i) s.u(i) = fn(grid.cell_center(i));
    return s;
}

/// Scalar flux f(u) with its analytic derivative.
struct FluxFunction {
    std::function<double(double)> f;
    std::function<double(double)> df;
};

enum class ReconMode { SolutionInterp, FluxInterp };
enum class TimeTreatment { CoupledMass, LumpedMass, QuickestFD, VanLeerExplicit };
enum class ForcingMode { CellAveraged, PointValue };

/// Discretization parameters. alpha == nullopt means the damping coefficient
/// is derived from kappa as 1/(3(1-kappa)); diffusion_kappa overrides the
/// interpolation parameter used for the diffusive damping jump only.
struct SchemeConfig {
    double kappa = 0.5;
    std::optional<double> alpha = std::nullopt;
    ReconMode recon_mode = ReconMode::SolutionInterp;
    bool dissipation = true;
    double nu = 0.0;
    TimeTreatment time_treatment = TimeTreatment::CoupledMass;
    ForcingMode forcing_mode = ForcingMode::CellAveraged;
    std::optional<double> diffusion_kappa = std::nullopt;
};

inline const char* to_string(ReconMode m) {
    return m == ReconMode::SolutionInterp ? "solution" : "flux";
}
inline const char* to_string(TimeTreatment t) {
    switch (t) {
        case TimeTreatment::CoupledMass: return "coupled";
        case TimeTreatment::LumpedMass: return "lumped";
        case TimeTreatment::QuickestFD: return "quickest";
        case TimeTreatment::VanLeerExplicit: return "vanleer";
    }
    return "?";
}
inline const char* to_string(ForcingMode m) {
    return m == ForcingMode::CellAveraged ? "cellavg" : "point";
}

}  // namespace quickfv
