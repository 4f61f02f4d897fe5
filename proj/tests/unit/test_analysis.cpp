#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "nlf/analysis.hpp"
#include "nlf/error.hpp"

using namespace nlf;

namespace {

ConvergenceRow row(double dx, double g) { return {dx, std::nullopt, g, std::nullopt}; }

SimConfig lwr_config(GridSpec g, ScenarioSpec s, double t_end) {
    return SimConfig{g, FluxModel::lwr(), std::move(s), 0.5, t_end, {}, 1};
}

}  // namespace

TEST_SUITE("analysis") {
    TEST_CASE("mass and gradient") {
        const auto g = make_grid(0.0, 1.0, 0.5);
        CHECK(total_mass(Field(g, {1.0, 1.0, 1.0})) == doctest::Approx(1.0));
        CHECK(total_mass(Field(g, {0.0, 1.0, 0.0})) == doctest::Approx(0.5));
        CHECK(max_gradient(Field(g, {0.0, 1.0, 1.0})) == doctest::Approx(2.0));

        const auto gp = make_grid(0.0, 1.0, 0.5, Boundary::Periodic);
        CHECK(total_mass(Field(gp, {1.0, 1.0, 1.0})) == doctest::Approx(1.0));

        const auto big = make_grid(-15.0, 10.0, 0.01);
        const Field red = build_initial(ScenarioSpec::red_light(), big);
        // the trapezoid rule puts the box edges on nodes: 4.5 plus one cell of height 0.9
        CHECK(std::abs(total_mass(red) - 4.5) <= 0.01);
        CHECK(max_gradient(red) == doctest::Approx(90.0));
        CHECK(max_gradient(Field(g, {0.3, 0.3, 0.3})) == 0.0);
    }

    TEST_CASE("LWR Riemann solutions") {
        const RiemannState shock{0.2, 0.7, 0.0};  // speed 1 - 0.2 - 0.7 = 0.1
        CHECK(lwr_riemann_exact(shock, 0.09, 1.0) == 0.2);
        CHECK(lwr_riemann_exact(shock, 0.11, 1.0) == 0.7);
        CHECK(lwr_riemann_exact(shock, -1.0, 0.0) == 0.2);

        const RiemannState fan{0.8, 0.2, 0.0};
        CHECK(lwr_riemann_exact(fan, 0.0, 1.0) == doctest::Approx(0.5));
        CHECK(lwr_riemann_exact(fan, -0.7, 1.0) == 0.8);
        CHECK(lwr_riemann_exact(fan, 0.7, 1.0) == 0.2);
        CHECK(lwr_riemann_exact(fan, 0.3, 1.0) == doctest::Approx(0.35));
        CHECK(lwr_riemann_exact({0.4, 0.4, 0.0}, 5.0, 1.0) == 0.4);
    }

    TEST_CASE("Riemann solutions: jump condition and fan continuity") {
        std::mt19937 rng(3);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const auto f = [](double u) { return u * (1.0 - u); };
        for (int k = 0; k < 500; ++k) {
            double a = unit(rng), b = unit(rng);
            if (std::abs(a - b) < 1e-6) continue;
            const double t = 0.1 + unit(rng);
            if (a < b) {
                const double s = (f(b) - f(a)) / (b - a);
                CHECK(lwr_riemann_exact({a, b, 0.0}, (s - 1e-9) * t, t) == a);
                CHECK(lwr_riemann_exact({a, b, 0.0}, (s + 1e-9) * t, t) == b);
            } else {
                const RiemannState st{a, b, 0.0};
                for (double xi : {1.0 - 2.0 * a, 1.0 - 2.0 * b}) {
                    const double lo = lwr_riemann_exact(st, (xi - 1e-9) * t, t);
                    const double hi = lwr_riemann_exact(st, (xi + 1e-9) * t, t);
                    CHECK(std::abs(lo - hi) <= 1e-8);
                }
                double prev = 1.0;
                for (double x = -2.0 * t; x <= 2.0 * t; x += 0.01 * t) {
                    const double u = lwr_riemann_exact(st, x, t);
                    CHECK(u <= prev + 1e-15);
                    prev = u;
                }
            }
        }
    }

    TEST_CASE("L1 error") {
        const auto g = make_grid(0.0, 2.0, 1.0);
        CHECK(l1_error(Field(g, {1.0, 1.0, 1.0}), [](double) { return 0.0; }) == doctest::Approx(2.0));
        CHECK(l1_error(Field(g, {0.5, 0.5, 0.5}), [](double) { return 0.5; }) == 0.0);
    }

    TEST_CASE("exact references") {
        const auto g = make_grid(-15.0, 10.0, 0.05);
        CHECK(exact_reference(lwr_config(g, ScenarioSpec::red_light(), 1.0), 1.0).has_value());
        CHECK(!exact_reference(lwr_config(g, ScenarioSpec::red_light(), 10.0), 6.0).has_value());
        CHECK(!exact_reference(lwr_config(g, ScenarioSpec::two_plateaus(), 1.0), 1.0).has_value());
        auto c = lwr_config(g, ScenarioSpec::red_light(), 1.0);
        c.model = FluxModel::look_a({KernelShape::AheadConstant, 1.0});
        CHECK(!exact_reference(c, 1.0).has_value());

        // red light at t = 2: shock from -7 at speed 0.1, fan out of -2 between speeds -0.8 and 1
        const auto ref = *exact_reference(lwr_config(g, ScenarioSpec::red_light(), 2.0), 2.0);
        CHECK(ref(-6.9) == 0.0);
        CHECK(ref(-6.7) == 0.9);
        CHECK(ref(-3.7) == 0.9);
        CHECK(ref(-2.0) == doctest::Approx(0.5));
        CHECK(ref(0.1) == 0.0);
    }

    TEST_CASE("Riccati blow-up time") {
        CHECK(riccati_blowup_time(1.0) == 1.0);
        CHECK(riccati_blowup_time(0.5) == 2.0);
        CHECK(std::isinf(riccati_blowup_time(0.0)));
        CHECK(std::isinf(riccati_blowup_time(-1.0)));
        std::mt19937 rng(17);
        std::uniform_real_distribution<double> d(0.01, 100.0);
        for (int k = 0; k < 100; ++k) {
            const double d0 = d(rng), c = d(rng);
            CHECK(riccati_blowup_time(c * d0) == doctest::Approx(riccati_blowup_time(d0) / c));
        }
    }

    TEST_CASE("front positions") {
        const auto g = make_grid(0.0, 3.0, 1.0);
        const Field step(g, {1.0, 1.0, 0.0, 0.0});
        CHECK(front_position(step, 0.5, FrontSide::Leading) == doctest::Approx(1.5));
        CHECK(front_position(step, 0.5, FrontSide::Trailing) == doctest::Approx(1.5));

        const Field bump(g, {0.0, 1.0, 1.0, 0.0});
        CHECK(front_position(bump, 0.25, FrontSide::Trailing) == doctest::Approx(0.25));
        CHECK(front_position(bump, 0.25, FrontSide::Leading) == doctest::Approx(2.75));
        CHECK_THROWS_AS(front_position(bump, 2.0, FrontSide::Leading), AnalysisError);
    }

    TEST_CASE("classification of synthetic studies") {
        CHECK(classify({row(0.02, 1.0), row(0.01, 2.0), row(0.005, 4.0)}) == ShockClass::ShockSuspected);
        CHECK(classify({row(0.02, 1.0), row(0.01, 1.1), row(0.005, 1.15)}) == ShockClass::Smooth);
        CHECK(classify({row(0.02, 1.0), row(0.01, 1.5), row(0.005, 2.0)}) == ShockClass::Indeterminate);
        CHECK(classify({row(0.02, 1.0), row(0.01, 2.0), row(0.005, 2.1)}) == ShockClass::Indeterminate);
        CHECK(classify({row(0.04, 1.0), row(0.01, 3.3)}) == ShockClass::ShockSuspected);  // 1.82 per halving
        CHECK(classify({row(0.01, 1.0)}) == ShockClass::Indeterminate);
        CHECK(classify({row(0.02, 0.0), row(0.01, 0.0)}) == ShockClass::Smooth);
        auto bad = row(0.01, std::numeric_limits<double>::quiet_NaN());
        bad.error = "diverged";
        CHECK(classify({row(0.02, 1.0), bad}) == ShockClass::Indeterminate);
        CHECK(to_string(ShockClass::ShockSuspected) == "shock_suspected");
    }

    TEST_CASE("refinement study on constant data") {
        const auto g = make_grid(-5.0, 5.0, 0.1);
        const auto c = lwr_config(g, ScenarioSpec::profile({term::Constant{0.3}}), 1.0);
        const auto study = shock_refinement_study(c, {0.1, 0.05, 0.025}, 1.0);
        CHECK(study.classification == ShockClass::Smooth);
        for (const auto& r : study.rows) CHECK(r.max_grad == 0.0);
    }

    TEST_CASE("refinement study keeps going past a failing row") {
        const auto g = make_grid(-15.0, 10.0, 0.05);
        SimConfig c{g, FluxModel::look_a({KernelShape::AheadConstant, 1.0}), ScenarioSpec::two_plateaus(), 0.5, 0.5, {}, 1};
        const auto study = shock_refinement_study(c, {0.05, 0.03, 0.025}, 0.5, 2);
        REQUIRE(study.rows.size() == 3);
        CHECK(!study.rows[0].error);
        CHECK(study.rows[1].error);
        CHECK(std::isnan(study.rows[1].max_grad));
        CHECK(!study.rows[2].error);
        CHECK(study.classification == ShockClass::Indeterminate);
    }

    TEST_CASE("refinement study detects the LWR shock and records L1 errors") {
        const auto g = make_grid(-15.0, 10.0, 0.02);
        const auto c = lwr_config(g, ScenarioSpec::red_light(), 2.0);
        const auto study = shock_refinement_study(c, {1.0 / 25, 1.0 / 50, 1.0 / 100}, 2.0, 3);
        CHECK(study.classification == ShockClass::ShockSuspected);
        for (const auto& r : study.rows) CHECK(r.l1_error.has_value());
        CHECK(*study.rows[2].l1_error < *study.rows[0].l1_error);
    }

    TEST_CASE("refinement study input checks") {
        const auto c = lwr_config(make_grid(-5.0, 5.0, 0.1), ScenarioSpec::profile({term::Constant{0.3}}), 1.0);
        CHECK_THROWS_AS(shock_refinement_study(c, {}, 1.0), ConfigError);
        CHECK_THROWS_AS(shock_refinement_study(c, {0.05, 0.1}, 1.0), ConfigError);
        CHECK_THROWS_AS(shock_refinement_study(c, {0.1}, -1.0), ConfigError);
    }
}
