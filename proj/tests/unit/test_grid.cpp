#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "nlf/error.hpp"
#include "nlf/grid.hpp"

using namespace nlf;

TEST_SUITE("grid") {
    TEST_CASE("make_grid builds node positions") {
        const auto g = make_grid(0.0, 1.0, 0.5, Boundary::Periodic);
        CHECK(g.size() == 3);
        CHECK(g.node(0) == 0.0);
        CHECK(g.node(1) == 0.5);
        CHECK(g.node(2) == 1.0);
        CHECK(g.periodic());

        CHECK(make_grid(-10.0, 5.0, 1.0 / 100.0).size() == 1501);
        CHECK(make_grid(-15.0, 10.0, 0.01).boundary() == Boundary::ConstantExtension);
    }

    TEST_CASE("make_grid rejects bad domains") {
        try {
            make_grid(0.0, 1.0, 0.3);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("not commensurate") != std::string::npos);
            CHECK(msg.find("0.3") != std::string::npos);
        }
        CHECK_THROWS_AS(make_grid(1.0, 0.0, 0.1), ConfigError);
        CHECK_THROWS_AS(make_grid(0.0, 1.0, 0.0), ConfigError);
        CHECK_THROWS_AS(make_grid(0.0, 1.0, -0.5), ConfigError);
        CHECK_THROWS_AS(make_grid(0.0, 1.0, 1.0), ConfigError);  // 2 nodes
    }

    TEST_CASE("boundary names round trip") {
        for (auto b : {Boundary::Periodic, Boundary::ConstantExtension}) CHECK(boundary_from_string(to_string(b)) == b);
        CHECK_THROWS_AS(boundary_from_string("reflect"), ConfigError);
    }

    TEST_CASE("sample_at clamps or wraps") {
        const Field clamp(make_grid(0.0, 2.0, 1.0), {1.0, 2.0, 3.0});
        CHECK(clamp.sample_at(-2) == 1.0);
        CHECK(clamp.sample_at(5) == 3.0);

        const Field wrap(make_grid(0.0, 2.0, 1.0, Boundary::Periodic), {1.0, 2.0, 3.0});
        CHECK(wrap.sample_at(3) == 2.0);
        CHECK(wrap.sample_at(-1) == 2.0);
        CHECK(wrap.sample_at(2) == 3.0);
    }

    TEST_CASE("sample_at selects existing values and is the identity in range") {
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> val(0.0, 1.0);
        std::uniform_int_distribution<int> idx(-50, 50);
        for (auto b : {Boundary::Periodic, Boundary::ConstantExtension}) {
            for (int trial = 0; trial < 50; ++trial) {
                const auto g = make_grid(0.0, 1.0, 0.1, b);
                std::vector<double> v(g.size());
                for (auto& x : v) x = val(rng);
                const Field f(g, v);
                for (std::size_t i = 0; i < v.size(); ++i) CHECK(f.sample_at(static_cast<std::ptrdiff_t>(i)) == v[i]);
                for (int k = 0; k < 20; ++k) {
                    const double s = f.sample_at(idx(rng));
                    CHECK(std::find(v.begin(), v.end(), s) != v.end());
                }
            }
        }
    }

    TEST_CASE("Field validates its values") {
        const auto g = make_grid(0.0, 2.0, 1.0);
        CHECK_THROWS_AS(Field(g, {1.0, 2.0}), UsageError);
        CHECK_THROWS_AS(Field(g, {1.0, std::nan(""), 0.0}), UsageError);
        CHECK_THROWS_AS(Field(g, {1.0, INFINITY, 0.0}), UsageError);
    }
}
