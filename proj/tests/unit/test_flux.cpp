#include <doctest.h>

#include <cmath>
#include <random>

#include "nlf/error.hpp"
#include "nlf/flux.hpp"

using namespace nlf;

namespace {
const KernelSpec kAhead{KernelShape::AheadConstant, 1.0};
const KernelSpec kBehind{KernelShape::BehindConstant, 0.5};
}  // namespace

TEST_SUITE("flux") {
    TEST_CASE("flux values") {
        const auto lwr = FluxModel::lwr();
        const auto la = FluxModel::look_a(kAhead);
        const auto lab = FluxModel::look_ab(kAhead, kBehind);
        CHECK(eval_flux(lwr, 0.0, 0.0, 0.0) == 0.0);
        CHECK(eval_flux(lwr, 1.0, 0.0, 0.0) == 0.0);
        CHECK(eval_flux(lab, 0.5, 0.3, 0.3) == doctest::Approx(0.25));
        CHECK(eval_flux(lab, 0.5, 0.8, 0.8) == doctest::Approx(0.25));
        CHECK(eval_flux(la, 0.5, 1.0, 0.0) == doctest::Approx(0.0919698602928606).epsilon(1e-12));

        const auto wh = FluxModel::whitham(2.0, 1.0);
        CHECK(eval_flux(wh, 0.5, 0.1, 0.0) == doctest::Approx(1.5 * 0.25 + 0.1));
        const auto su = FluxModel::suspension(0.5);
        CHECK(eval_flux(su, 0.4, 0.5, 0.0) == doctest::Approx(0.4 + 0.2));
    }

    TEST_CASE("wave speeds") {
        CHECK(local_wave_speed(FluxModel::lwr(), 0.5, 0.0, 0.0) == 0.0);
        CHECK(local_wave_speed(FluxModel::lwr(), 0.0, 0.0, 0.0) == 1.0);
        CHECK(local_wave_speed(FluxModel::look_ab(kAhead, kBehind), 0.0, 0.0, 1.0) ==
              doctest::Approx(2.718281828459045).epsilon(1e-14));
        CHECK(local_wave_speed(FluxModel::look_a(kAhead), 1.0, 1.0, 0.0) == doctest::Approx(std::exp(-1.0)));
        CHECK(local_wave_speed(FluxModel::whitham(2.0, 1.0), -0.5, 0.0, 0.0) == doctest::Approx(1.5));
        CHECK(local_wave_speed(FluxModel::suspension(1.0), 0.3, -3.0, 0.0) == doctest::Approx(2.0));
    }

    TEST_CASE("traffic flux identities on random samples") {
        std::mt19937 rng(5);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const auto lwr = FluxModel::lwr();
        const auto la = FluxModel::look_a(kAhead);
        const auto lab = FluxModel::look_ab(kAhead, kBehind);
        for (int k = 0; k < 2000; ++k) {
            const double u = unit(rng), ub = unit(rng), ut = unit(rng);
            CHECK(eval_flux(lab, u, ub, 0.0) == eval_flux(la, u, ub, 0.0));
            CHECK(eval_flux(lab, u, 0.0, 0.0) == eval_flux(lwr, u, 0.0, 0.0));
            CHECK(eval_flux(lab, u, ub, ut) <= 0.25 * std::exp(1.0));
            CHECK(local_wave_speed(lab, u, ub, ut) <= std::exp(1.0));
            for (const auto* m : {&lwr, &la, &lab}) {
                CHECK(eval_flux(*m, 0.0, ub, ut) == 0.0);
                CHECK(eval_flux(*m, 1.0, ub, ut) == 0.0);
            }
        }
    }

    TEST_CASE("model construction constraints") {
        CHECK_THROWS_AS(FluxModel::look_ab(kBehind, kAhead), ConfigError);
        CHECK_THROWS_AS(FluxModel::look_ab({KernelShape::AheadConstant, 0.5}, {KernelShape::BehindConstant, 1.0}), ConfigError);
        CHECK_THROWS_AS(FluxModel::look_a(kBehind), ConfigError);
        CHECK_THROWS_AS(FluxModel::whitham(1.0, 0.0), ConfigError);
        CHECK_THROWS_AS(FluxModel::suspension(-1.0), ConfigError);
        CHECK_NOTHROW(FluxModel::look_ab({KernelShape::AheadLinear, 1.0}, {KernelShape::BehindLinear, 1.0}));
    }

    TEST_CASE("labels and kernels") {
        CHECK(FluxModel::lwr().label() == "lwr");
        CHECK(FluxModel::look_a(kAhead).label() == "look_a_constant");
        CHECK(FluxModel::look_ab({KernelShape::AheadLinear, 1.0}, {KernelShape::BehindLinear, 0.5}).label() == "look_ab_linear");
        CHECK(!FluxModel::lwr().kernel());
        CHECK(FluxModel::look_ab(kAhead, kBehind).behind_kernel() == kBehind);
        CHECK(FluxModel::whitham(1.0, 1.0).kernel()->shape == KernelShape::WhithamExponential);
        CHECK(FluxModel::look_a(kAhead).is_traffic());
        CHECK(!FluxModel::suspension(1.0).is_traffic());
    }
}
