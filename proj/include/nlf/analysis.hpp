#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlf/grid.hpp"
#include "nlf/solver.hpp"

namespace nlf {

/// Trapezoidal mass; one period on periodic grids.
double total_mass(const Field& field);

/// max_i |u_{i+1} - u_i| / dx
double max_gradient(const Field& field);

struct RiemannState {
    double u_left;
    double u_right;
    double x0;
};

/// Entropy solution of u_t + (u(1-u))_x = 0 with a single jump at x0.
double lwr_riemann_exact(const RiemannState& state, double x, double t);

using Reference = std::function<double(double)>;

/// Σ_i |u_i - ref(x_i)|·dx with trapezoid end weights.
double l1_error(const Field& field, const Reference& reference);

/// Exact LWR solution for scenarios made of non-interacting Riemann problems
/// (Riemann steps; red light before its shock meets the fan). Empty otherwise.
std::optional<Reference> exact_reference(const SimConfig& config, double t);

/// Blow-up time of d' = d², d(0) = d0; +inf when d0 <= 0.
double riccati_blowup_time(double d0);

enum class FrontSide { Leading, Trailing };

/// Leading: largest x where u crosses `level`; Trailing: smallest. Linear
/// interpolation between the bracketing nodes. Throws AnalysisError when u
/// never crosses the level.
double front_position(const Field& field, double level, FrontSide side);

struct ConvergenceRow {
    double dx;
    std::optional<double> l1_error;
    double max_grad;
    /// Set when the run for this row failed; other fields are then NaN.
    std::optional<std::string> error;
};

enum class ShockClass { ShockSuspected, Smooth, Indeterminate };

std::string_view to_string(ShockClass c);

struct RefinementStudy {
    std::vector<ConvergenceRow> rows;
    ShockClass classification;
};

/// "shock suspected" if max_grad grows by ≥ 1.8 at every halving of dx,
/// "smooth" if by ≤ 1.2 at every halving.
ShockClass classify(const std::vector<ConvergenceRow>& rows);

/// Reruns `config` at each dx (sorted descending) up to t_probe and records
/// max_gradient and, when an exact solution exists, the L1 error. A failing
/// row is recorded and the remaining rows still run. `threads` caps
/// concurrency; 0 or 1 runs sequentially.
RefinementStudy shock_refinement_study(const SimConfig& config, const std::vector<double>& dx_list,
                                       double t_probe, unsigned threads = 0);

}  // namespace nlf
