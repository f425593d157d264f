#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "quickfv/problems.hpp"
#include "quickfv/reconstruction.hpp"

using namespace quickfv;
using Catch::Matchers::WithinAbs;

TEST_CASE("interpolation preserves constants", "[reconstruction]") {
    for (double kappa : {0.0, 1.0 / 3.0, 0.5, 1.0}) {
        CHECK(interp_left(3.7, 3.7, 3.7, kappa) == 3.7);
        CHECK(interp_right(3.7, 3.7, 3.7, kappa) == 3.7);
    }
}

TEST_CASE("interpolation point checks", "[reconstruction]") {
    // x^2 sampled at -1, 0, 1 with the face at x = 1/2
    CHECK_THAT(interp_left(1.0, 0.0, 1.0, 0.5), WithinAbs(0.25, 1e-15));
    // hand evaluation of the formula
    CHECK_THAT(interp_left(0.0, 1.0, 3.0, 1.0 / 3.0), WithinAbs(11.0 / 6.0, 1e-15));
    // x^2 sampled at 0, 1, 2 with the face at x = 1/2
    CHECK_THAT(interp_right(0.0, 1.0, 4.0, 0.5), WithinAbs(0.25, 1e-15));
    // kappa = 1 is the arithmetic mean
    CHECK_THAT(interp_right(0.0, 1.0, 4.0, 1.0), WithinAbs(0.5, 1e-15));
}

TEST_CASE("kappa = 1 collapses both interpolations to the two-point average",
          "[reconstruction]") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double a = dist(rng), b = dist(rng), c = dist(rng);
        CHECK(interp_left(a, b, c, 1.0) == 0.5 * (b + c));
        CHECK(interp_right(a, b, c, 1.0) == 0.5 * (b + a));
    }
}

TEST_CASE("kappa = 1/2 is exact on quadratics, its average exact on cubics",
          "[reconstruction]") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double c0 = dist(rng), c1 = dist(rng), c2 = dist(rng), c3 = dist(rng);
        const double x = dist(rng);
        const double h = 0.1 + std::abs(dist(rng));
        const auto quad = [&](double t) { return c0 + t * (c1 + t * c2); };
        const auto cubic = [&](double t) { return quad(t) + c3 * t * t * t; };
        const double xf = x + 0.5 * h;

        CHECK_THAT(interp_left(quad(x - h), quad(x), quad(x + h), 0.5),
                   WithinAbs(quad(xf), 1e-12));
        CHECK_THAT(interp_right(quad(x), quad(x + h), quad(x + 2 * h), 0.5),
                   WithinAbs(quad(xf), 1e-12));

        const double cL = interp_left(cubic(x - h), cubic(x), cubic(x + h), 0.5);
        const double cR = interp_right(cubic(x), cubic(x + h), cubic(x + 2 * h), 0.5);
        CHECK_THAT(0.5 * (cL + cR), WithinAbs(cubic(xf), 1e-11));
    }
}

TEST_CASE("face states on linear and quadratic data", "[reconstruction]") {
    SchemeConfig cfg;
    cfg.kappa = 0.5;

    const Grid g = Grid::periodic(8, 8.0);  // h = 1, centers at 0.5, 1.5, ...
    State lin = sample_cell_centers(g, [](double x) { return x; });
    const FaceData fl = face_states(lin, 3, cfg);  // face between cells 3 and 4, x = 3
    CHECK_THAT(fl.u_L, WithinAbs(3.0, 1e-14));
    CHECK_THAT(fl.u_R, WithinAbs(3.0, 1e-14));
    CHECK(fl.dudx_L == fl.dudx_R);
    CHECK_THAT(fl.dudx_L, WithinAbs(1.0, 1e-14));

    State quad = sample_cell_centers(g, [](double x) { return x * x; });
    const FaceData fq = face_states(quad, 3, cfg);
    const double x_face = g.cell_center(3) + 0.5 * g.h();
    CHECK_THAT(fq.dudx_L, WithinAbs(2.0 * x_face, 1e-13));
    CHECK(fq.dudx_L == fq.dudx_R);
}

TEST_CASE("face states reproduce the quadratic example", "[reconstruction]") {
    const Grid g(4, 1.0, 0.0, Topology::Periodic);
    State s(g);
    s.values = {1.0, 0.0, 1.0, 4.0};
    SchemeConfig cfg;
    cfg.kappa = 0.5;
    const FaceData f = face_states(s, 2, cfg);
    CHECK_THAT(f.u_L, WithinAbs(0.25, 1e-15));
    CHECK_THAT(f.u_R, WithinAbs(0.25, 1e-15));
}

TEST_CASE("face derivative continuity holds bitwise on random states",
          "[reconstruction]") {
    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const Grid g = Grid::periodic(12);
    State s(g);
    SchemeConfig cfg;
    for (int trial = 0; trial < 20; ++trial) {
        for (double& v : s.values) v = dist(rng);
        cfg.kappa = dist(rng);
        for (int i = 1; i <= 12; ++i) {
            const FaceData f = face_states(s, i, cfg);
            CHECK(f.dudx_L == f.dudx_R);
        }
    }
}

TEST_CASE("face states out of range on padded grids", "[reconstruction]") {
    const Grid g = Grid::dirichlet_padded(8);
    State s(g, 1.0);
    SchemeConfig cfg;
    CHECK_THROWS_AS(face_states(s, 1, cfg), std::out_of_range);
    CHECK_THROWS_AS(face_states(s, 7, cfg), std::out_of_range);
    CHECK_NOTHROW(face_states(s, 2, cfg));
    CHECK_NOTHROW(face_states(s, 6, cfg));
}

TEST_CASE("direct flux reconstruction", "[reconstruction]") {
    const Grid g(4, 1.0, 0.0, Topology::Periodic);

    SECTION("constant solution gives the constant flux") {
        State s(g, 2.0);
        const FluxFunction f = burgers_flux();
        const auto [fL, fR] = face_flux_states(s, f, 2, 0.5);
        CHECK(fL == 2.0);
        CHECK(fR == 2.0);
    }

    SECTION("linear flux commutes with the interpolation") {
        State s(g);
        s.values = {0.3, -1.2, 0.7, 2.1};
        const FluxFunction f = linear_flux(0.75);
        for (double kappa : {0.0, 1.0 / 3.0, 0.5}) {
            const auto [fL, fR] = face_flux_states(s, f, 2, kappa);
            SchemeConfig cfg;
            cfg.kappa = kappa;
            const FaceData fd = face_states(s, 2, cfg);
            CHECK_THAT(fL, WithinAbs(0.75 * fd.u_L, 1e-14));
            CHECK_THAT(fR, WithinAbs(0.75 * fd.u_R, 1e-14));
        }
    }

    SECTION("nonlinear gap: interpolated flux differs from flux of interpolant") {
        // u = (0, 1, 3) around face i+1/2 with kappa = 1/3: flux samples are
        // (0, 1/2, 9/2), interpolated to 23/12, while (11/6)^2/2 = 121/72
        State s(g);
        s.values = {0.0, 1.0, 3.0, 0.0};
        const FluxFunction f = burgers_flux();
        const auto [fL, fR] = face_flux_states(s, f, 2, 1.0 / 3.0);
        (void)fR;
        CHECK_THAT(fL, WithinAbs(23.0 / 12.0, 1e-14));
        const double uL = interp_left(0.0, 1.0, 3.0, 1.0 / 3.0);
        CHECK(std::abs(fL - f.f(uL)) > 0.2);
    }
}
