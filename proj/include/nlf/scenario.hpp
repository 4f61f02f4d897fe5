#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "nlf/grid.hpp"

namespace nlf {

namespace term {
/// c
struct Constant {
    double c;
    friend bool operator==(const Constant&, const Constant&) = default;
};
/// a·exp(-(x-c)²)
struct Gaussian {
    double a;
    double c;
    friend bool operator==(const Gaussian&, const Gaussian&) = default;
};
/// a·exp(-k(x-c)⁴)
struct QuarticBump {
    double a;
    double c;
    double k;
    friend bool operator==(const QuarticBump&, const QuarticBump&) = default;
};
/// h on the closed interval [x_lo, x_hi], 0 elsewhere.
struct Box {
    double h;
    double x_lo;
    double x_hi;
    friend bool operator==(const Box&, const Box&) = default;
};
}  // namespace term

using ProfileTerm = std::variant<term::Constant, term::Gaussian, term::QuarticBump, term::Box>;

enum class ScenarioKind { TwoPlateaus, RedLight, ThreePlateaus, SteepPlateau, Riemann, Profile };

std::string_view to_string(ScenarioKind k);
ScenarioKind scenario_kind_from_string(std::string_view name);

struct RiemannData {
    double u_left;
    double u_right;
    double x0;
    friend bool operator==(const RiemannData&, const RiemannData&) = default;
};

/// Initial data: one of the four traffic presets, a Riemann step, or a sum of
/// profile terms.
class ScenarioSpec {
public:
    static ScenarioSpec two_plateaus();
    static ScenarioSpec red_light();
    static ScenarioSpec three_plateaus();
    static ScenarioSpec steep_plateau();
    static ScenarioSpec riemann(double u_left, double u_right, double x0);
    static ScenarioSpec profile(std::vector<ProfileTerm> terms);
    static ScenarioSpec preset(ScenarioKind kind);

    ScenarioKind kind() const noexcept { return kind_; }
    const RiemannData& riemann_data() const noexcept { return riemann_; }

    /// Terms the scenario sums; presets expand to their formulas. Empty for
    /// Riemann scenarios.
    const std::vector<ProfileTerm>& terms() const noexcept { return terms_; }

    double evaluate(double x) const noexcept;

    /// False when the data has jumps (boxes, Riemann steps).
    bool smooth() const noexcept;

    friend bool operator==(const ScenarioSpec&, const ScenarioSpec&) = default;

private:
    ScenarioSpec(ScenarioKind kind, std::vector<ProfileTerm> terms, RiemannData r = {})
        : kind_(kind), terms_(std::move(terms)), riemann_(r) {}

    ScenarioKind kind_;
    std::vector<ProfileTerm> terms_;
    RiemannData riemann_;
};

/// Samples the scenario at every node. Throws ConfigError listing the
/// offending positions when the profile leaves [0, 1] on a 10x-refined sample
/// of the domain.
Field build_initial(const ScenarioSpec& spec, const GridSpec& grid);

/// Analytic u0' for sums of constants, Gaussians and quartic bumps.
std::optional<std::function<double(double)>> closed_form_derivative(const ScenarioSpec& spec);

/// Default computational domain for a preset.
std::pair<double, double> default_domain(ScenarioKind kind);

/// Default (γ_a, γ_b) for a preset.
std::pair<double, double> default_reaches(ScenarioKind kind);

}  // namespace nlf
