#include "nlf/scenario.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "nlf/error.hpp"

namespace nlf {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

// Node positions carry rounding from x_min + i*dx; box edges absorb it.
constexpr double kEdgeTolerance = 1e-10;

double eval_term(const ProfileTerm& t, double x) noexcept {
    return std::visit(overloaded{
                          [](const term::Constant& c) { return c.c; },
                          [x](const term::Gaussian& g) {
                              const double s = x - g.c;
                              return g.a * std::exp(-s * s);
                          },
                          [x](const term::QuarticBump& q) {
                              const double s = x - q.c;
                              const double s2 = s * s;
                              return q.a * std::exp(-q.k * s2 * s2);
                          },
                          [x](const term::Box& b) {
                              return (x >= b.x_lo - kEdgeTolerance && x <= b.x_hi + kEdgeTolerance) ? b.h : 0.0;
                          },
                      },
                      t);
}

}  // namespace

std::string_view to_string(ScenarioKind k) {
    switch (k) {
        case ScenarioKind::TwoPlateaus: return "two_plateaus";
        case ScenarioKind::RedLight: return "red_light";
        case ScenarioKind::ThreePlateaus: return "three_plateaus";
        case ScenarioKind::SteepPlateau: return "steep_plateau";
        case ScenarioKind::Riemann: return "riemann";
        case ScenarioKind::Profile: return "profile";
    }
    return "?";
}

ScenarioKind scenario_kind_from_string(std::string_view name) {
    for (auto k : {ScenarioKind::TwoPlateaus, ScenarioKind::RedLight, ScenarioKind::ThreePlateaus,
                   ScenarioKind::SteepPlateau, ScenarioKind::Riemann, ScenarioKind::Profile}) {
        if (to_string(k) == name) return k;
    }
    throw ConfigError("unknown scenario kind '" + std::string(name) + "'");
}

ScenarioSpec ScenarioSpec::two_plateaus() {
    return {ScenarioKind::TwoPlateaus,
            {term::Constant{0.1}, term::Gaussian{0.35, -5.0}, term::Gaussian{0.55, -3.0}}};
}

ScenarioSpec ScenarioSpec::red_light() { return {ScenarioKind::RedLight, {term::Box{0.9, -7.0, -2.0}}}; }

ScenarioSpec ScenarioSpec::three_plateaus() {
    return {ScenarioKind::ThreePlateaus,
            {term::Gaussian{0.35, -5.0}, term::Gaussian{0.65, -2.0}, term::Gaussian{0.45, 0.0}}};
}

ScenarioSpec ScenarioSpec::steep_plateau() {
    return {ScenarioKind::SteepPlateau, {term::QuarticBump{0.80, -2.0, 8.0}}};
}

ScenarioSpec ScenarioSpec::riemann(double u_left, double u_right, double x0) {
    if (!std::isfinite(u_left) || !std::isfinite(u_right) || !std::isfinite(x0)) {
        throw ConfigError("riemann scenario needs finite u_left, u_right, x0");
    }
    return {ScenarioKind::Riemann, {}, RiemannData{u_left, u_right, x0}};
}

ScenarioSpec ScenarioSpec::profile(std::vector<ProfileTerm> terms) {
    if (terms.empty()) throw ConfigError("profile scenario needs at least one term");
    return {ScenarioKind::Profile, std::move(terms)};
}

ScenarioSpec ScenarioSpec::preset(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::TwoPlateaus: return two_plateaus();
        case ScenarioKind::RedLight: return red_light();
        case ScenarioKind::ThreePlateaus: return three_plateaus();
        case ScenarioKind::SteepPlateau: return steep_plateau();
        default: break;
    }
    throw ConfigError("scenario kind '" + std::string(to_string(kind)) + "' is not a preset");
}

double ScenarioSpec::evaluate(double x) const noexcept {
    if (kind_ == ScenarioKind::Riemann) return x < riemann_.x0 ? riemann_.u_left : riemann_.u_right;
    double sum = 0.0;
    for (const auto& t : terms_) sum += eval_term(t, x);
    return sum;
}

bool ScenarioSpec::smooth() const noexcept {
    if (kind_ == ScenarioKind::Riemann) return riemann_.u_left == riemann_.u_right;
    for (const auto& t : terms_) {
        if (const auto* b = std::get_if<term::Box>(&t); b && b->h != 0.0) return false;
    }
    return true;
}

Field build_initial(const ScenarioSpec& spec, const GridSpec& grid) {
    constexpr int kCheckRefine = 10;
    std::vector<double> bad;
    const std::size_t samples = (grid.size() - 1) * kCheckRefine + 1;
    const double h = grid.dx() / kCheckRefine;
    for (std::size_t k = 0; k < samples && bad.size() < 5; ++k) {
        const double x = grid.x_min() + static_cast<double>(k) * h;
        const double u = spec.evaluate(x);
        if (!(u >= 0.0 && u <= 1.0)) bad.push_back(x);
    }
    if (!bad.empty()) {
        std::ostringstream os;
        os << "initial profile leaves [0, 1] at x =";
        for (double x : bad) os << " " << x;
        throw ConfigError(os.str());
    }

    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = spec.evaluate(grid.node(i));
    if (grid.periodic()) values.back() = values.front();
    return Field(grid, std::move(values));
}

std::optional<std::function<double(double)>> closed_form_derivative(const ScenarioSpec& spec) {
    if (!spec.smooth() || spec.kind() == ScenarioKind::Riemann) {
        if (spec.kind() == ScenarioKind::Riemann && spec.smooth()) {
            return std::function<double(double)>([](double) { return 0.0; });
        }
        return std::nullopt;
    }
    std::vector<ProfileTerm> terms;
    for (const auto& t : spec.terms()) {
        if (!std::holds_alternative<term::Box>(t)) terms.push_back(t);
    }
    return std::function<double(double)>([terms = std::move(terms)](double x) {
        double sum = 0.0;
        for (const auto& t : terms) {
            sum += std::visit(overloaded{
                                  [](const term::Constant&) { return 0.0; },
                                  [x](const term::Gaussian& g) {
                                      const double s = x - g.c;
                                      return -2.0 * g.a * s * std::exp(-s * s);
                                  },
                                  [x](const term::QuarticBump& q) {
                                      const double s = x - q.c;
                                      const double s2 = s * s;
                                      return -4.0 * q.a * q.k * s * s2 * std::exp(-q.k * s2 * s2);
                                  },
                                  [](const term::Box&) { return 0.0; },
                              },
                              t);
        }
        return sum;
    });
}

std::pair<double, double> default_domain(ScenarioKind kind) {
    if (kind == ScenarioKind::SteepPlateau) return {-15.0, 12.0};
    return {-15.0, 10.0};
}

std::pair<double, double> default_reaches(ScenarioKind kind) {
    if (kind == ScenarioKind::SteepPlateau) return {3.0, 1.5};
    return {1.0, 0.5};
}

}  // namespace nlf
