#include <doctest.h>

#include <filesystem>
#include <string>

#include "nlf/config.hpp"
#include "nlf/error.hpp"

using namespace nlf;

namespace {

std::string message_of(std::string_view text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

bool contains(const std::string& hay, std::string_view needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("config") {
    TEST_CASE("minimal document takes preset defaults") {
        const auto c = parse_config(R"({"model": {"variant": "look_ab"},
                                        "scenario": {"kind": "steep_plateau"},
                                        "run": {"t_end": 1}})");
        CHECK(c.grid.x_min() == -15.0);
        CHECK(c.grid.x_max() == 12.0);
        CHECK(c.grid.dx() == 0.01);
        CHECK(c.grid.boundary() == Boundary::ConstantExtension);
        CHECK(c.model == FluxModel::look_ab({KernelShape::AheadConstant, 3.0}, {KernelShape::BehindConstant, 1.5}));
        CHECK(c.cfl == 0.5);
        CHECK(c.diag_every == 1);
    }

    TEST_CASE("every model variant and term type parses") {
        const auto c = parse_config(R"({
            "grid": {"x_min": -4, "x_max": 4, "dx": 0.05, "boundary": "periodic"},
            "model": {"variant": "look_ab", "gamma_a": 1, "gamma_b": 0.5, "kernel_a_shape": "constant", "kernel_b_shape": "linear"},
            "scenario": {"kind": "profile", "terms": [
                {"type": "constant", "c": 0.1},
                {"type": "gaussian", "a": 0.2, "c": 0.0},
                {"type": "quartic_bump", "a": 0.2, "c": 1.0, "k": 8},
                {"type": "box", "h": 0.1, "x_lo": -1, "x_hi": 1}]},
            "run": {"cfl": 0.25, "t_end": 1, "snapshots": [0, 0.5, 1], "diag_every": 5}})");
        CHECK(c.model.label() == "look_ab_constant_linear");
        CHECK(c.scenario.terms().size() == 4);
        CHECK(c.grid.periodic());
        CHECK(c.snapshot_times.size() == 3);

        CHECK(parse_config(R"({"model": {"variant": "whitham", "c0": 1, "h0": 2}, "scenario": {"kind": "two_plateaus"}, "run": {"t_end": 1}})")
                  .model == FluxModel::whitham(1.0, 2.0));
        CHECK(parse_config(R"({"model": {"variant": "suspension", "a": 0.5}, "scenario": {"kind": "two_plateaus"}, "run": {"t_end": 1}})")
                  .model == FluxModel::suspension(0.5));
        CHECK(parse_config(R"({"model": {"variant": "lwr"}, "scenario": {"kind": "riemann", "u_left": 0.2, "u_right": 0.7, "x0": 0}, "run": {"t_end": 1}})")
                  .scenario == ScenarioSpec::riemann(0.2, 0.7, 0.0));
    }

    TEST_CASE("to_json round trips") {
        int seen = 0;
        for (const auto& entry : std::filesystem::directory_iterator(NLF_CONFIG_DIR)) {
            if (entry.path().extension() != ".json") continue;
            const auto c = load_config(entry.path());
            CHECK(parse_config(to_json(c)) == c);
            ++seen;
        }
        CHECK(seen >= 12);

        const auto odd = parse_config(R"({
            "grid": {"x_min": -3, "x_max": 3, "dx": 0.1, "boundary": "periodic"},
            "model": {"variant": "look_a", "gamma_a": 0.7, "kernel_a_shape": "linear"},
            "scenario": {"kind": "profile", "terms": [{"type": "gaussian", "a": 0.123456789012345, "c": -0.1}]},
            "run": {"cfl": 0.3, "t_end": 0.7, "snapshots": [0.1, 0.7], "diag_every": 3}})");
        CHECK(parse_config(to_json(odd)) == odd);
    }

    TEST_CASE("malformed JSON names the line") {
        try {
            parse_config("{\n  \"grid\": {\n    \"dx\": 0.01,,\n  }\n}");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(contains(e.what(), "line 3"));
        }
    }

    TEST_CASE("field errors name the field") {
        const std::string base_tail = R"("scenario": {"kind": "two_plateaus"}, "run": {"t_end": 1}})";
        CHECK(contains(message_of(R"({"model": {"variant": "lwr", "gama_a": 1}, )" + base_tail), "model.gama_a"));
        CHECK(contains(message_of(R"({"model": {"variant": "look_c"}, )" + base_tail), "look_c"));
        CHECK(contains(message_of(R"({"model": {"variant": "lwr"}, "scenario": {"kind": "two_plateaus"}, "run": {}})"),
                       "run.t_end"));
        CHECK(contains(message_of(R"({"model": {"variant": "lwr"}, "scenario": {"kind": "two_plateaus"}, "run": {"t_end": "1"}})"),
                       "run.t_end"));
        CHECK(contains(message_of(R"({"model": {"variant": "lwr"}, "scenario": {"kind": "two_plateaus"}, "run": {"t_end": 1, "diag_every": 0}})"),
                       "diag_every"));
        CHECK(contains(message_of(R"({"grid": {"dx": 0.3}, "model": {"variant": "lwr"}, )" + base_tail), "commensurate"));
        CHECK(contains(message_of(R"({"model": {"variant": "look_ab", "kernel_a_shape": "cubic"}, )" + base_tail), "cubic"));
        CHECK(contains(message_of(R"({"extra": 1, "model": {"variant": "lwr"}, )" + base_tail), "extra"));
        CHECK(!message_of(R"({"model": {"variant": "look_ab", "gamma_a": 0.5, "gamma_b": 1}, )" + base_tail).empty());
    }

    TEST_CASE("missing files") { CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError); }
}
