#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "quickfv/metrics.hpp"
#include "quickfv/time_march.hpp"

using namespace quickfv;
using Catch::Matchers::WithinAbs;

namespace {

Problem periodic_problem(FluxFunction flux, double forcing_const = 0.0) {
    Problem p;
    p.name = "test";
    p.flux = std::move(flux);
    p.forcing_point = [forcing_const](double) { return forcing_const; };
    p.forcing_cell_avg = [forcing_const](double, double) { return forcing_const; };
    p.exact_point = [](double) { return 0.0; };
    p.exact_cell_avg = [](double, double) { return 0.0; };
    p.initial = p.exact_point;
    return p;
}

State sine_state(const Grid& g) {
    return sample_cell_centers(g, [](double x) { return std::sin(2.0 * M_PI * x); });
}

}  // namespace

TEST_CASE("coupled rhs inverts the mass coupling", "[time_march]") {
    const Grid g = Grid::periodic(32);
    const Problem p = periodic_problem(burgers_flux());
    SchemeConfig cfg;
    cfg.kappa = 0.5;

    SECTION("constant state gives zero") {
        const State s(g, 0.7);
        for (double v : rhs_coupled(s, p, cfg)) CHECK(v == 0.0);
    }

    SECTION("multiplying back recovers the negated residual") {
        const State s = sine_state(g);
        const std::vector<double> rhs = rhs_coupled(s, p, cfg);
        const ResidualVector res = assemble_residual(s, p, cfg);
        const std::vector<double> back = matvec(mass_matrix(32, true), rhs);
        for (int i = 0; i < 32; ++i)
            CHECK_THAT(back[i], WithinAbs(-res[i], 1e-12 * (1.0 + std::abs(res[i]))));
    }

    SECTION("constant residual vector maps to its negation") {
        // zero flux and constant forcing c produce Res = -c in every cell
        const Problem pc = periodic_problem(linear_flux(0.0), 0.375);
        const State s(g, 0.0);
        for (double v : rhs_coupled(s, pc, cfg)) CHECK_THAT(v, WithinAbs(0.375, 1e-13));
    }

    SECTION("padded grids are rejected") {
        const State s(Grid::dirichlet_padded(16), 1.0);
        CHECK_THROWS_AS(rhs_coupled(s, p, cfg), config_error);
    }
}

TEST_CASE("lumped rhs is the negated residual, bitwise", "[time_march]") {
    const Grid g = Grid::periodic(24);
    const Problem p = periodic_problem(burgers_flux());
    SchemeConfig cfg;
    const State s = sine_state(g);
    const std::vector<double> rhs = rhs_lumped(s, p, cfg);
    const ResidualVector res = assemble_residual(s, p, cfg);
    for (int i = 0; i < 24; ++i) CHECK(rhs[i] == -res[i]);
}

TEST_CASE("quickest rhs validates its configuration", "[time_march]") {
    const Grid g = Grid::periodic(16);
    const Problem p = periodic_problem(linear_flux(0.75));
    const State s = sine_state(g);

    SchemeConfig bad;
    bad.kappa = 0.5;
    bad.time_treatment = TimeTreatment::QuickestFD;
    CHECK_THROWS_AS(rhs_quickest(s, p, bad), config_error);

    SchemeConfig diffusive;
    diffusive.kappa = 1.0 / 3.0;
    diffusive.nu = 0.1;
    CHECK_THROWS_AS(rhs_quickest(s, p, diffusive), config_error);
}

TEST_CASE("quickest rhs equals the lumped rhs at kappa = 1/3 with point forcing",
          "[time_march]") {
    const Grid g = Grid::periodic(16);
    const Problem p = periodic_problem(linear_flux(0.75));
    const State s = sine_state(g);
    SchemeConfig cfg;
    cfg.kappa = 1.0 / 3.0;
    cfg.time_treatment = TimeTreatment::QuickestFD;
    const std::vector<double> rq = rhs_quickest(s, p, cfg);
    SchemeConfig lumped = cfg;
    lumped.time_treatment = TimeTreatment::LumpedMass;
    lumped.forcing_mode = ForcingMode::PointValue;
    const std::vector<double> rl = rhs_lumped(s, p, lumped);
    for (int i = 0; i < 16; ++i) CHECK(rq[i] == rl[i]);
}

TEST_CASE("two-sweep correction", "[time_march]") {
    const Grid g = Grid::periodic(16);
    SchemeConfig cfg;
    cfg.kappa = 0.5;

    SECTION("vanishes on spatially constant first-sweep residuals") {
        // zero flux + constant forcing: Res1 = -c everywhere, second
        // difference exactly zero
        const Problem pc = periodic_problem(linear_flux(0.0), 0.25);
        const State s(g, 0.0);
        const std::vector<double> rhs = rhs_vanleer(s, pc, cfg);
        const std::vector<double> plain = rhs_lumped(s, pc, cfg);
        for (int i = 0; i < 16; ++i) CHECK(rhs[i] == plain[i]);
    }

    SECTION("zero residual maps to zero") {
        const Problem p0 = periodic_problem(burgers_flux());
        const State s(g, 1.0);
        for (double v : rhs_vanleer(s, p0, cfg)) CHECK(v == 0.0);
    }

    SECTION("applies the (-1, 2, -1)/24 correction") {
        const Problem p = periodic_problem(burgers_flux());
        const State s = sine_state(g);
        const ResidualVector r1 = assemble_residual(s, p, cfg);
        const std::vector<double> rhs = rhs_vanleer(s, p, cfg);
        for (int i = 0; i < 16; ++i) {
            const double corr =
                r1[i] - (r1[(i + 1) % 16] - 2.0 * r1[i] + r1[(i + 15) % 16]) / 24.0;
            CHECK_THAT(rhs[i], WithinAbs(-corr, 1e-15));
        }
    }
}

TEST_CASE("SSP RK3 stage algebra", "[time_march]") {
    const Grid g = Grid::periodic(4);

    SECTION("zero rhs leaves the state unchanged") {
        State s(g);
        s.values = {0.1, -0.2, 0.3, -0.4};
        const auto zero = [](const State& st) {
            return std::vector<double>(st.values.size(), 0.0);
        };
        const State out = ssp_rk3_step(s, zero, 0.25);
        for (int i = 1; i <= 4; ++i) CHECK_THAT(out.u(i), WithinAbs(s.u(i), 1e-16));
    }

    SECTION("unit rhs advances by dt") {
        State s(g, 2.0);
        const auto one = [](const State& st) {
            return std::vector<double>(st.values.size(), 1.0);
        };
        const State out = ssp_rk3_step(s, one, 0.125);
        for (int i = 1; i <= 4; ++i) CHECK_THAT(out.u(i), WithinAbs(2.125, 1e-15));
    }

    SECTION("linear amplification factor is 1 + z + z^2/2 + z^3/6") {
        for (double lambda : {-3.0, -0.7, 0.4}) {
            State s(g, 1.0);
            const auto rhs = [lambda](const State& st) {
                std::vector<double> r(st.values.size());
                for (size_t i = 0; i < r.size(); ++i) r[i] = lambda * st.values[i];
                return r;
            };
            const double dt = 0.21;
            const double z = lambda * dt;
            const State out = ssp_rk3_step(s, rhs, dt);
            const double expected = 1.0 + z + z * z / 2.0 + z * z * z / 6.0;
            for (int i = 1; i <= 4; ++i) CHECK_THAT(out.u(i), WithinAbs(expected, 1e-14));
        }
    }

    SECTION("nonpositive dt is rejected") {
        State s(g, 1.0);
        const auto zero = [](const State& st) {
            return std::vector<double>(st.values.size(), 0.0);
        };
        CHECK_THROWS_AS(ssp_rk3_step(s, zero, 0.0), config_error);
    }
}

TEST_CASE("march validates the step plan", "[time_march]") {
    const Problem p = unsteady_burgers();
    const Grid g = Grid::periodic(32);
    const State u0 = sample_cell_centers(g, p.initial);
    SchemeConfig cfg;
    cfg.kappa = 0.5;

    CHECK_THROWS_AS(march(u0, p, cfg, TimeMarchConfig{0.000125, 0}), config_error);
    CHECK_THROWS_AS(march(u0, p, cfg, TimeMarchConfig{0.000125, 100}), config_error);
    CHECK_NOTHROW(march(u0, p, cfg, TimeMarchConfig{0.000125, 840}));
}

TEST_CASE("march aborts on blow-up with the failing step", "[time_march]") {
    Problem p = periodic_problem(linear_flux(1.0));
    const Grid g = Grid::periodic(32);
    const State u0 = sine_state(g);
    SchemeConfig cfg;
    cfg.kappa = 0.5;
    cfg.time_treatment = TimeTreatment::LumpedMass;
    // CFL far beyond stability: the march must detect the overflow
    CHECK_THROWS_MATCHES(march(u0, p, cfg, TimeMarchConfig{10.0, 500}), numerical_error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("step")));
}

TEST_CASE("marching conserves the discrete total", "[time_march]") {
    const Problem p = unsteady_burgers();
    const Grid g = Grid::periodic(32);
    const State u0 = sample_cell_centers(g, p.initial);
    const TimeMarchConfig tm{0.000125, 120};

    for (TimeTreatment t : {TimeTreatment::CoupledMass, TimeTreatment::LumpedMass,
                            TimeTreatment::QuickestFD, TimeTreatment::VanLeerExplicit}) {
        SchemeConfig cfg;
        cfg.kappa = t == TimeTreatment::QuickestFD ? 1.0 / 3.0 : 0.5;
        cfg.time_treatment = t;
        Problem pt = p;
        pt.final_time = 0.000125 * 120;
        const State uf = march(u0, pt, cfg, tm);
        double s0 = 0.0, sf = 0.0;
        for (int i = 1; i <= 32; ++i) {
            s0 += u0.u(i);
            sf += uf.u(i);
        }
        CHECK_THAT(sf, WithinAbs(s0, 1e-11));
    }
}

TEST_CASE("coupled and lumped rhs agree at second order", "[time_march]") {
    const Problem p = periodic_problem(burgers_flux());
    SchemeConfig cfg;
    cfg.kappa = 0.5;
    double rel[2], hs[2];
    int k = 0;
    for (int n : {64, 128}) {
        const Grid g = Grid::periodic(n);
        const State s = sine_state(g);
        const std::vector<double> rc = rhs_coupled(s, p, cfg);
        const std::vector<double> rl = rhs_lumped(s, p, cfg);
        double diff = 0.0, scale = 0.0;
        for (int i = 0; i < n; ++i) {
            diff += std::abs(rc[i] - rl[i]);
            scale += std::abs(rl[i]);
        }
        rel[k] = diff / scale;
        hs[k] = g.h();
        ++k;
    }
    CHECK_THAT(observed_order(rel[0], rel[1], hs[0], hs[1]), WithinAbs(2.0, 0.3));
}

TEST_CASE("march reaches the final time of the reference study", "[time_march]") {
    // 840 steps of 0.000125 land on t = 0.105
    CHECK_THAT(840.0 * 0.000125, WithinAbs(0.105, 1e-12));
    const Problem p = unsteady_burgers();
    const Grid g = Grid::periodic(64);
    const State u0 = sample_cell_centers(g, p.initial);
    SchemeConfig cfg;
    cfg.kappa = 0.5;
    long seen = -1;
    const State uf = march(u0, p, cfg, TimeMarchConfig{0.000125, 840},
                           [&seen](long step, const State&) { seen = step; });
    CHECK(seen == 840);
    const auto [de_p, de_c] = discretization_error_norms(uf, p);
    (void)de_c;
    CHECK(de_p < 1e-3);  // third-order scheme on 64 cells is already accurate
}
