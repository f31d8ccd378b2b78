#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blochtherm/numerics.hpp"
#include "blochtherm/scenario.hpp"
#include "helpers.hpp"

#include <cmath>
#include <vector>

using namespace blochtherm;
namespace bt = blochtherm::testing;

TEST_CASE("central differences") {
    CHECK(central_difference([](double) { return 3.7; }, 1.0, 1e-3) == 0.0);
    // exact for quadratics
    CHECK(central_difference([](double t) { return t * t; }, 1.0, 1e-3) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(central_difference([](double t) { return std::sin(t); }, 0.6, 1e-5) ==
          doctest::Approx(std::cos(0.6)).epsilon(1e-10));
}

TEST_CASE("quadrature") {
    SUBCASE("zero series integrates to zero") {
        const std::vector<double> zeros(101, 0.0);
        CHECK(integrate_samples(zeros, 0.01) == 0.0);
    }
    SUBCASE("sine over a half period") {
        const std::size_t count = 2001;
        const double dt = M_PI / static_cast<double>(count - 1);
        std::vector<double> samples(count);
        for (std::size_t k = 0; k < count; ++k) samples[k] = std::sin(static_cast<double>(k) * dt);
        CHECK(integrate_samples(samples, dt) == doctest::Approx(2.0).epsilon(1e-10));
    }
    SUBCASE("even sample counts fall back to a trapezoid tail") {
        const std::size_t count = 1000;
        const double dt = 1.0 / static_cast<double>(count - 1);
        std::vector<double> samples(count);
        for (std::size_t k = 0; k < count; ++k) samples[k] = std::pow(static_cast<double>(k) * dt, 3);
        CHECK(integrate_samples(samples, dt) == doctest::Approx(0.25).epsilon(1e-8));
    }
    SUBCASE("grid violations are rejected") {
        const std::vector<double> two(2, 1.0);
        CHECK_THROWS_AS(integrate_samples(two, 0.1), std::invalid_argument);
        const std::vector<double> three(3, 1.0);
        CHECK_THROWS_AS(integrate_samples(three, 0.0), std::invalid_argument);
    }
}

TEST_CASE("dissipative integrator") {
    const ModelParams m = bt::baseline_params();
    const BathRates r = bt::baseline_rates();
    const BlochState start = bt::baseline_initial();
    const InitialState init(start, m);

    SUBCASE("no dissipation keeps the interaction-picture state constant") {
        IntegratorConfig cfg{1e-2, 5.0};
        const auto traj = integrate_lindblad(m, BathRates{}, start, cfg);
        CHECK((traj.states.back() - traj.states.front()).cwiseAbs().maxCoeff() < 1e-13);
    }
    SUBCASE("tracks the closed form") {
        IntegratorConfig cfg{1e-3, 10.0};
        const auto traj = integrate_lindblad(m, r, start, cfg);
        double worst = 0.0;
        for (std::size_t k = 0; k < traj.states.size(); ++k) {
            const double t = traj.time(k);
            const Matrix2c u = evolution_operator(m, t);
            const BlochState numeric =
                BlochState::from_density_matrix(u * traj.states[k] * u.adjoint());
            const BlochState exact = closed_form_state(m, r, init, t);
            worst = std::max(worst, (numeric.vec() - exact.vec()).cwiseAbs().maxCoeff());
        }
        CHECK(worst < 1e-6);
    }
    SUBCASE("trace, hermiticity and positivity hold along the way") {
        IntegratorConfig cfg{1e-3, 30.0};
        const auto traj = integrate_lindblad(m, r, start, cfg);
        for (const Matrix2c& rho : traj.states) {
            CHECK(std::abs((rho(0, 0) + rho(1, 1)).real() - 1.0) < 1e-10);
            CHECK(std::abs((rho(0, 0) + rho(1, 1)).imag()) < 1e-12);
            CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
            const BlochState s = BlochState::from_density_matrix(rho);
            CHECK(s.eigenvalue_minus() >= -1e-9);
        }
    }
    SUBCASE("long horizons land on the pumping balance") {
        IntegratorConfig cfg{5e-2, 400.0};
        const auto traj = integrate_lindblad(m, r, start, cfg);
        const Matrix2c b = floquet_basis(m);
        const Matrix2c dressed = b.adjoint() * traj.states.back() * b;
        CHECK(dressed(0, 0).real() == doctest::Approx(r.gamma_plus / r.Gamma1()).epsilon(1e-9));
        CHECK(dressed(1, 1).real() == doctest::Approx(r.gamma_minus / r.Gamma1()).epsilon(1e-9));
    }
    SUBCASE("halving the step shrinks the error at fourth order") {
        const auto max_error = [&](double dt) {
            IntegratorConfig cfg{dt, 30.0};
            const auto traj = integrate_lindblad(m, r, start, cfg);
            double worst = 0.0;
            for (std::size_t k = 0; k < traj.states.size(); ++k) {
                const double t = traj.time(k);
                const Matrix2c exact_floquet = floquet_basis(m) *
                                               interaction_picture_state(m, r, init, t) *
                                               floquet_basis(m).adjoint();
                worst = std::max(worst, (traj.states[k] - exact_floquet).cwiseAbs().maxCoeff());
            }
            return worst;
        };
        const double coarse = max_error(5e-2);
        const double fine = max_error(2.5e-2);
        CHECK(coarse / fine >= 8.0);
    }
    SUBCASE("stability guard rejects oversized steps") {
        IntegratorConfig cfg{0.2, 5.0};
        CHECK_THROWS_AS(integrate_lindblad(m, r, start, cfg), std::invalid_argument);
    }
}

TEST_CASE("rate quadrature closes against endpoint differences") {
    const ModelParams m = bt::baseline_params();
    const BathRates r = bt::baseline_rates();
    const InitialState init(bt::baseline_initial(), m);
    const double t_end = 30.0;
    const double dt = 1e-3;
    const auto count = static_cast<std::size_t>(std::llround(t_end / dt)) + 1;

    std::vector<double> ds(count), du(count), dw_wc(count), dq_wc(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double t = static_cast<double>(k) * dt;
        const TrajectoryPoint p = trajectory_point(m, r, init, t);
        ds[k] = entropy_rate(p);
        du[k] = energy_rate(p);
        const WorkHeat wc = conventional_rates(p);
        dw_wc[k] = wc.work;
        dq_wc[k] = wc.heat;
    }
    const BlochState end_state = closed_form_state(m, r, init, t_end);
    const double delta_s = von_neumann_entropy(end_state) - von_neumann_entropy(init.lab());
    const double delta_u =
        internal_energy(end_state, m.field(t_end)) - internal_energy(init.lab(), m.field(0.0));
    CHECK(integrate_samples(ds, dt) == doctest::Approx(delta_s).epsilon(1e-6));
    CHECK(integrate_samples(du, dt) == doctest::Approx(delta_u).epsilon(1e-6));
    // integrated split closes like the pointwise one
    CHECK(integrate_samples(du, dt) ==
          doctest::Approx(integrate_samples(dw_wc, dt) + integrate_samples(dq_wc, dt)).epsilon(1e-12));
}
