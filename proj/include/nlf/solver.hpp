#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nlf/flux.hpp"
#include "nlf/grid.hpp"
#include "nlf/kernel.hpp"
#include "nlf/scenario.hpp"

namespace nlf {

struct SimConfig {
    GridSpec grid;
    FluxModel model;
    ScenarioSpec scenario;
    double cfl = 0.5;
    double t_end = 0.0;
    std::vector<double> snapshot_times;
    std::size_t diag_every = 1;

    /// Throws ConfigError on a violated invariant.
    void validate() const;

    /// Same run on a different grid spacing.
    SimConfig with_dx(double dx) const;

    friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

struct Diagnostics {
    std::size_t step;
    double t;
    double mass;
    double u_min;
    double u_max;
    double max_grad;
};

struct Snapshot {
    double t;
    Field field;
    double mass;
    double u_min;
    double u_max;
    double max_grad;
};

Snapshot make_snapshot(double t, Field field);

struct SimResult {
    std::vector<Snapshot> snapshots;
    std::vector<Diagnostics> diagnostics;
    std::size_t steps_taken = 0;
    double dt_min = 0.0;
    double dt_max = 0.0;
};

/// A flux model bound to one grid: kernels discretized once, nonlocal terms
/// evaluated once per step and frozen for that step.
class LaxFriedrichs {
public:
    LaxFriedrichs(const GridSpec& grid, FluxModel model);

    struct Nonlocal {
        std::vector<double> u_bar;
        std::vector<double> u_tilde;
    };

    /// ū and ũ of the current state; zero where the model has no such term.
    Nonlocal nonlocal_terms(const Field& field) const;

    double max_wave_speed(const Field& field, const Nonlocal& terms) const;

    /// One conservative step. Returns the raw update; non-finite values are
    /// left for the caller to detect.
    std::vector<double> step(const Field& field, const Nonlocal& terms, double dt) const;

    const GridSpec& grid() const noexcept { return grid_; }
    const FluxModel& model() const noexcept { return model_; }

private:
    GridSpec grid_;
    FluxModel model_;
    std::optional<DiscreteKernel> kernel_;
    std::optional<DiscreteKernel> behind_;
};

/// u_i' = (u_{i-1} + u_{i+1})/2 - dt/(2dx)·(F_{i+1} - F_{i-1}).
/// Throws SimulationDiverged if the update is not finite.
Field lf_step(const Field& field, const FluxModel& model, double dt);

/// min(cfl·dx/α, t_next_event - t_now) with α the largest local wave speed
/// over the grid, floored at 1e-10.
double choose_dt(const Field& field, const FluxModel& model, double cfl, double t_now,
                 double t_next_event);

SimResult run(const SimConfig& config);

}  // namespace nlf
