#include "nlf/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "flux_detail.hpp"
#include "nlf/analysis.hpp"
#include "nlf/error.hpp"

namespace nlf {

namespace {

constexpr double kMinWaveSpeed = 1e-10;

}  // namespace

void SimConfig::validate() const {
    if (!(cfl > 0.0 && cfl <= 1.0)) {
        std::ostringstream os;
        os << "cfl must lie in (0, 1], got " << cfl;
        throw ConfigError(os.str());
    }
    if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
        std::ostringstream os;
        os << "t_end must be finite and >= 0, got " << t_end;
        throw ConfigError(os.str());
    }
    if (diag_every == 0) throw ConfigError("diag_every must be >= 1");
    if (!std::is_sorted(snapshot_times.begin(), snapshot_times.end())) {
        throw ConfigError("snapshot times must be sorted");
    }
    for (double s : snapshot_times) {
        if (!(s >= 0.0 && s <= t_end)) {
            std::ostringstream os;
            os << "snapshot time " << s << " outside [0, t_end=" << t_end << "]";
            throw ConfigError(os.str());
        }
    }
    if (auto k = model.kernel()) discretize(*k, grid.dx());
    if (auto k = model.behind_kernel()) discretize(*k, grid.dx());
}

SimConfig SimConfig::with_dx(double dx) const {
    SimConfig c = *this;
    c.grid = make_grid(grid.x_min(), grid.x_max(), dx, grid.boundary());
    return c;
}

Snapshot make_snapshot(double t, Field field) {
    const auto v = field.values();
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    Snapshot s{t, field, total_mass(field), *lo, *hi, max_gradient(field)};
    return s;
}

LaxFriedrichs::LaxFriedrichs(const GridSpec& grid, FluxModel model) : grid_(grid), model_(std::move(model)) {
    if (auto k = model_.kernel()) kernel_ = discretize(*k, grid_.dx());
    if (auto k = model_.behind_kernel()) behind_ = discretize(*k, grid_.dx());
}

LaxFriedrichs::Nonlocal LaxFriedrichs::nonlocal_terms(const Field& field) const {
    Nonlocal t{std::vector<double>(field.size(), 0.0), std::vector<double>(field.size(), 0.0)};
    if (kernel_) convolve_into(field, *kernel_, t.u_bar);
    if (behind_) convolve_into(field, *behind_, t.u_tilde);
    return t;
}

double LaxFriedrichs::max_wave_speed(const Field& field, const Nonlocal& terms) const {
    const auto u = field.values();
    return std::visit(
        [&](const auto& m) {
            double alpha = 0.0;
            for (std::size_t i = 0; i < u.size(); ++i) {
                alpha = std::max(alpha, detail::speed(m, u[i], terms.u_bar[i], terms.u_tilde[i]));
            }
            return alpha;
        },
        model_.variant());
}

std::vector<double> LaxFriedrichs::step(const Field& field, const Nonlocal& terms, double dt) const {
    const auto u = field.values();
    const std::size_t n = u.size();
    std::vector<double> f(n);
    std::visit(
        [&](const auto& m) {
            for (std::size_t i = 0; i < n; ++i) f[i] = detail::flux(m, u[i], terms.u_bar[i], terms.u_tilde[i]);
        },
        model_.variant());

    const double lambda = dt / (2.0 * grid_.dx());
    const std::size_t last = grid_.periodic() ? n - 1 : n;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < last; ++i) {
        const auto ip = static_cast<std::ptrdiff_t>(i);
        const std::size_t l = resolve_index(grid_, ip - 1);
        const std::size_t r = resolve_index(grid_, ip + 1);
        out[i] = 0.5 * (u[l] + u[r]) - lambda * (f[r] - f[l]);
    }
    if (grid_.periodic()) out[n - 1] = out[0];
    return out;
}

namespace {

std::size_t first_non_finite(const std::vector<double>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i])) return i;
    }
    return v.size();
}

}  // namespace

Field lf_step(const Field& field, const FluxModel& model, double dt) {
    const LaxFriedrichs lf(field.grid(), model);
    auto next = lf.step(field, lf.nonlocal_terms(field), dt);
    if (const auto bad = first_non_finite(next); bad != next.size()) throw SimulationDiverged(dt, 1, bad);
    return Field(field.grid(), std::move(next));
}

double choose_dt(const Field& field, const FluxModel& model, double cfl, double t_now, double t_next_event) {
    if (!(t_next_event > t_now)) throw UsageError("choose_dt needs t_next_event > t_now");
    const LaxFriedrichs lf(field.grid(), model);
    const double alpha = std::max(lf.max_wave_speed(field, lf.nonlocal_terms(field)), kMinWaveSpeed);
    return std::min(cfl * field.grid().dx() / alpha, t_next_event - t_now);
}

SimResult run(const SimConfig& config) {
    config.validate();
    Field u = build_initial(config.scenario, config.grid);
    const LaxFriedrichs lf(config.grid, config.model);

    std::vector<double> events;
    for (double s : config.snapshot_times) {
        if (s > 0.0) events.push_back(s);
    }
    events.push_back(config.t_end);
    events.erase(std::unique(events.begin(), events.end()), events.end());
    std::erase_if(events, [](double e) { return !(e > 0.0); });

    SimResult result;
    result.snapshots.push_back(make_snapshot(0.0, u));
    const auto record = [&](std::size_t step, double t, const Snapshot& s) {
        result.diagnostics.push_back({step, t, s.mass, s.u_min, s.u_max, s.max_grad});
    };
    record(0, 0.0, result.snapshots.front());

    double t = 0.0;
    std::size_t step = 0;
    std::size_t last_diag = 0;
    double dt_min = std::numeric_limits<double>::infinity();
    double dt_max = 0.0;
    const double dx = config.grid.dx();

    for (double next : events) {
        while (t < next) {
            const auto terms = lf.nonlocal_terms(u);
            const double alpha = std::max(lf.max_wave_speed(u, terms), kMinWaveSpeed);
            double dt = config.cfl * dx / alpha;
            // a remainder below 1e-9·dt is folded into this step
            const bool lands = t + dt * (1.0 + 1e-9) >= next;
            if (lands) dt = next - t;

            auto raw = lf.step(u, terms, dt);
            ++step;
            const double t_new = lands ? next : t + dt;
            if (const auto bad = first_non_finite(raw); bad != raw.size()) {
                throw SimulationDiverged(t_new, step, bad);
            }
            u = Field(config.grid, std::move(raw));
            t = t_new;
            dt_min = std::min(dt_min, dt);
            dt_max = std::max(dt_max, dt);

            if (step % config.diag_every == 0) {
                record(step, t, make_snapshot(t, u));
                last_diag = step;
            }
        }
        result.snapshots.push_back(make_snapshot(t, u));
    }
    if (last_diag != step) record(step, t, result.snapshots.back());

    result.steps_taken = step;
    result.dt_min = step > 0 ? dt_min : 0.0;
    result.dt_max = dt_max;
    return result;
}

}  // namespace nlf
