#pragma once

#include <optional>
#include <string_view>

#include "nlf/grid.hpp"
#include "nlf/scenario.hpp"
#include "nlf/solver.hpp"

namespace nlf {

/// Which closed-form blow-up condition applies.
///   ConstAB: Look-AB with constant ahead and behind potentials.
///   LinAB:   Look-AB with linear ahead and behind potentials.
///   ConstA:  Look-A with a constant ahead potential.
enum class ThresholdKind { ConstAB, LinAB, ConstA };

enum class Verdict { BlowupGuaranteed, Inconclusive };

std::string_view to_string(ThresholdKind k);
std::string_view to_string(Verdict v);
ThresholdKind threshold_kind_from_string(std::string_view name);

struct ThresholdReport {
    ThresholdKind kind;
    double gamma_a;
    std::optional<double> gamma_b;
    double sup_d0;
    double inf_d0;
    double rhs;
    Verdict verdict;
    /// u0 continuous with values in [0, 1]; false for boxes and Riemann steps.
    bool hypotheses_met;
    bool closed_form_derivative;
};

double threshold_const_ab(double gamma_a, double gamma_b, double inf_d0);
double threshold_lin_ab(double gamma_a, double gamma_b);
double threshold_const_a(double gamma_a, double inf_d0);

struct DerivativeExtremes {
    double sup_d0;
    double inf_d0;
    bool closed_form;
};

/// sup and inf of u0' over the grid's domain, sampled on a grid `refine`
/// times finer. Uses the analytic derivative when the scenario has one and
/// polishes the sampled extremes with Brent's method.
DerivativeExtremes derivative_extremes(const ScenarioSpec& scenario, const GridSpec& grid,
                                       int refine = 10);

/// Throws ConfigError if the config's model does not match `kind`.
ThresholdReport assess(const SimConfig& config, ThresholdKind kind, int refine = 10);

}  // namespace nlf
