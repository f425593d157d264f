/// @file tridiagonal.hpp
/// @brief Thomas solver with a Sherman-Morrison extension for cyclic systems.
#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "quickfv/core.hpp"

namespace quickfv {

/// Banded system. When cyclic, the corner entries a_{1,n} and a_{n,1} are
/// taken from lower.front() and upper.back().
struct TridiagonalSystem {
    std::vector<double> lower;
    std::vector<double> diag;
    std::vector<double> upper;
    bool cyclic = false;

    size_t size() const { return diag.size(); }
};

/// Time-derivative coupling matrix (1, 22, 1)/24: rows sum to 1.
inline TridiagonalSystem mass_matrix(int n, bool cyclic) {
    const double off = 1.0 / 24.0;
    TridiagonalSystem m;
    m.lower.assign(static_cast<size_t>(n), off);
    m.diag.assign(static_cast<size_t>(n), 1.0 - (off + off));
    m.upper.assign(static_cast<size_t>(n), off);
    m.cyclic = cyclic;
    return m;
}

inline std::vector<double> matvec(const TridiagonalSystem& sys, const std::vector<double>& x) {
    const size_t n = sys.size();
    if (x.size() != n) throw config_error("matvec: length mismatch");
    std::vector<double> y(n);
    for (size_t i = 0; i < n; ++i) {
        // off-diagonal contributions first: keeps M * constant exact for the
        // mass matrix, whose rows sum to 1 as (lower + upper) + diag
        double acc = 0.0;
        if (i > 0)
            acc += sys.lower[i] * x[i - 1];
        else if (sys.cyclic && n >= 2)
            acc += sys.lower[0] * x[n - 1];
        if (i + 1 < n)
            acc += sys.upper[i] * x[i + 1];
        else if (sys.cyclic && n >= 2)
            acc += sys.upper[n - 1] * x[0];
        y[i] = acc + sys.diag[i] * x[i];
    }
    return y;
}

namespace detail {

inline std::vector<double> thomas(const std::vector<double>& lower,
                                  const std::vector<double>& diag,
                                  const std::vector<double>& upper,
                                  const std::vector<double>& rhs) {
    const size_t n = diag.size();
    std::vector<double> c(n), d(n);
    if (diag[0] == 0.0) throw numerical_error("solve_tridiagonal: singular pivot at row 1");
    c[0] = upper[0] / diag[0];
    d[0] = rhs[0] / diag[0];
    for (size_t i = 1; i < n; ++i) {
        const double m = diag[i] - lower[i] * c[i - 1];
        if (m == 0.0)
            throw numerical_error("solve_tridiagonal: singular pivot at row " +
                                  std::to_string(i + 1));
        c[i] = upper[i] / m;
        d[i] = (rhs[i] - lower[i] * d[i - 1]) / m;
    }
    std::vector<double> x(n);
    x[n - 1] = d[n - 1];
    for (size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
    return x;
}

}  // namespace detail

/// Solve sys x = rhs. Cyclic systems use two Thomas sweeps plus a rank-one
/// Sherman-Morrison correction, keeping O(n) cost. No pivoting: all systems
/// in this library are diagonally dominant; a zero pivot still raises.
inline std::vector<double> solve_tridiagonal(const TridiagonalSystem& sys,
                                             const std::vector<double>& rhs) {
    const size_t n = sys.size();
    if (rhs.size() != n) throw config_error("solve_tridiagonal: length mismatch");
    if (n < 3) throw config_error("solve_tridiagonal: system too small (n >= 3)");

    if (!sys.cyclic) return detail::thomas(sys.lower, sys.diag, sys.upper, rhs);

    // A = A' + u v^T with u = (gamma, 0, ..., 0, c_n), v = (1, 0, ..., 0, a_1/gamma)
    const double a1 = sys.lower[0];
    const double cn = sys.upper[n - 1];
    const double gamma = -sys.diag[0];
    std::vector<double> diag = sys.diag;
    diag[0] -= gamma;
    diag[n - 1] -= cn * a1 / gamma;

    std::vector<double> uvec(n, 0.0);
    uvec[0] = gamma;
    uvec[n - 1] = cn;

    const std::vector<double> y = detail::thomas(sys.lower, diag, sys.upper, rhs);
    const std::vector<double> z = detail::thomas(sys.lower, diag, sys.upper, uvec);

    const double vy = y[0] + a1 / gamma * y[n - 1];
    const double vz = z[0] + a1 / gamma * z[n - 1];
    const double denom = 1.0 + vz;
    if (denom == 0.0) throw numerical_error("solve_tridiagonal: singular cyclic correction");
    const double factor = vy / denom;

    std::vector<double> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = y[i] - factor * z[i];
    return x;
}

}  // namespace quickfv
