#include "nlf/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include <boost/math/tools/minima.hpp>

#include "nlf/error.hpp"

namespace nlf {

namespace {

void check_pair(double gamma_a, double gamma_b) {
    if (!(gamma_b > 0.0) || !(gamma_a >= gamma_b) || !std::isfinite(gamma_a)) {
        std::ostringstream os;
        os << "thresholds require gamma_a >= gamma_b > 0, got gamma_a=" << gamma_a << ", gamma_b=" << gamma_b;
        throw ConfigError(os.str());
    }
}

// ½ + (√2/4)·√(3 - min{-1, scaled_inf})
double const_core(double scaled_inf) {
    if (std::isnan(scaled_inf)) throw ConfigError("inf u0' must be a number");
    return 0.5 + std::sqrt(2.0) / 4.0 * std::sqrt(3.0 - std::min(-1.0, scaled_inf));
}

}  // namespace

std::string_view to_string(ThresholdKind k) {
    switch (k) {
        case ThresholdKind::ConstAB: return "const_ab";
        case ThresholdKind::LinAB: return "lin_ab";
        case ThresholdKind::ConstA: return "const_a";
    }
    return "?";
}

std::string_view to_string(Verdict v) {
    return v == Verdict::BlowupGuaranteed ? "BlowupGuaranteed" : "Inconclusive";
}

ThresholdKind threshold_kind_from_string(std::string_view name) {
    for (auto k : {ThresholdKind::ConstAB, ThresholdKind::LinAB, ThresholdKind::ConstA}) {
        if (to_string(k) == name) return k;
    }
    throw ConfigError("unknown threshold kind '" + std::string(name) + "' (expected const_ab, lin_ab or const_a)");
}

double threshold_const_ab(double gamma_a, double gamma_b, double inf_d0) {
    check_pair(gamma_a, gamma_b);
    const double s = (gamma_a + gamma_b) / (gamma_a * gamma_b);
    return s * const_core(inf_d0 / s);
}

double threshold_lin_ab(double gamma_a, double gamma_b) {
    check_pair(gamma_a, gamma_b);
    const double s = (gamma_a + gamma_b) / (gamma_a * gamma_b);
    const double q = gamma_a / (2.0 * (gamma_a + gamma_b));
    return s * (1.0 + std::sqrt(1.5 + q * q));
}

double threshold_const_a(double gamma_a, double inf_d0) {
    if (!(gamma_a > 0.0) || !std::isfinite(gamma_a)) {
        std::ostringstream os;
        os << "threshold requires gamma_a > 0, got " << gamma_a;
        throw ConfigError(os.str());
    }
    return const_core(gamma_a * inf_d0) / gamma_a;
}

DerivativeExtremes derivative_extremes(const ScenarioSpec& scenario, const GridSpec& grid, int refine) {
    if (refine < 4) throw ConfigError("derivative refinement factor must be >= 4, got " + std::to_string(refine));
    const double h = grid.dx() / refine;
    const std::size_t samples = (grid.size() - 1) * static_cast<std::size_t>(refine) + 1;
    const double x0 = grid.x_min();
    const auto at = [&](std::size_t k) { return x0 + static_cast<double>(k) * h; };

    if (auto d = closed_form_derivative(scenario)) {
        const auto& du = *d;
        std::size_t k_hi = 0;
        std::size_t k_lo = 0;
        double v_hi = du(at(0));
        double v_lo = v_hi;
        for (std::size_t k = 1; k < samples; ++k) {
            const double v = du(at(k));
            if (v > v_hi) v_hi = v, k_hi = k;
            if (v < v_lo) v_lo = v, k_lo = k;
        }
        const auto polish = [&](std::size_t k, double sign, double sampled) {
            const double a = std::max(grid.x_min(), at(k) - h);
            const double b = std::min(grid.x_max(), at(k) + h);
            const auto r = boost::math::tools::brent_find_minima([&](double x) { return -sign * du(x); }, a, b, 52);
            return sign > 0 ? std::max(sampled, -r.second) : std::min(sampled, r.second);
        };
        return {polish(k_hi, 1.0, v_hi), polish(k_lo, -1.0, v_lo), true};
    }

    std::vector<double> u(samples);
    for (std::size_t k = 0; k < samples; ++k) u[k] = scenario.evaluate(at(k));
    double hi = 0.0;
    double lo = 0.0;
    for (std::size_t k = 1; k + 1 < samples; ++k) {
        const double d = (u[k + 1] - u[k - 1]) / (2.0 * h);
        hi = std::max(hi, d);
        lo = std::min(lo, d);
    }
    return {hi, lo, false};
}

ThresholdReport assess(const SimConfig& config, ThresholdKind kind, int refine) {
    const auto ahead = config.model.kernel();
    const auto behind = config.model.behind_kernel();
    const auto mismatch = [&](const char* need) {
        throw ConfigError(std::string("threshold kind ") + std::string(to_string(kind)) + " needs " + need +
                          ", config has model " + config.model.label());
    };

    switch (kind) {
        case ThresholdKind::ConstAB:
            if (config.model.kind() != ModelKind::LookAB || ahead->shape != KernelShape::AheadConstant ||
                behind->shape != KernelShape::BehindConstant) {
                mismatch("look_ab with constant kernels");
            }
            break;
        case ThresholdKind::LinAB:
            if (config.model.kind() != ModelKind::LookAB || ahead->shape != KernelShape::AheadLinear ||
                behind->shape != KernelShape::BehindLinear) {
                mismatch("look_ab with linear kernels");
            }
            break;
        case ThresholdKind::ConstA:
            if (config.model.kind() != ModelKind::LookA || ahead->shape != KernelShape::AheadConstant) {
                mismatch("look_a with a constant kernel");
            }
            break;
    }

    // bound check on the initial data; throws ConfigError outside [0, 1]
    build_initial(config.scenario, config.grid);
    const auto ext = derivative_extremes(config.scenario, config.grid, refine);

    ThresholdReport report{};
    report.kind = kind;
    report.gamma_a = ahead->reach;
    report.sup_d0 = ext.sup_d0;
    report.inf_d0 = ext.inf_d0;
    report.closed_form_derivative = ext.closed_form;
    report.hypotheses_met = config.scenario.smooth();
    switch (kind) {
        case ThresholdKind::ConstAB:
            report.gamma_b = behind->reach;
            report.rhs = threshold_const_ab(ahead->reach, behind->reach, ext.inf_d0);
            break;
        case ThresholdKind::LinAB:
            report.gamma_b = behind->reach;
            report.rhs = threshold_lin_ab(ahead->reach, behind->reach);
            break;
        case ThresholdKind::ConstA:
            report.rhs = threshold_const_a(ahead->reach, ext.inf_d0);
            break;
    }
    report.verdict = report.sup_d0 > report.rhs ? Verdict::BlowupGuaranteed : Verdict::Inconclusive;
    return report;
}

}  // namespace nlf
